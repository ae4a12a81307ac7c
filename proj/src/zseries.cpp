#include "qloop/zseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qloop {

ZSeries ZSeries::operator+(const ZSeries& o) const {
    ZSeries r(std::min(order(), o.order()));
    for (int m = 0; m <= r.order(); ++m) r.set_coeff(m, coeff(m) + o.coeff(m));
    return r;
}

ZSeries ZSeries::operator-(const ZSeries& o) const {
    ZSeries r(std::min(order(), o.order()));
    for (int m = 0; m <= r.order(); ++m) r.set_coeff(m, coeff(m) - o.coeff(m));
    return r;
}

ZSeries ZSeries::operator*(const ZSeries& o) const {
    ZSeries r(std::min(order(), o.order()));
    for (int m = 0; m <= r.order(); ++m) {
        QRat acc;
        for (int l = 0; l <= m; ++l) acc += coeff(l) * o.coeff(m - l);
        r.set_coeff(m, acc);
    }
    return r;
}

ZSeries ZSeries::scaled(const QRat& v) const {
    ZSeries r(order());
    for (int m = 0; m <= order(); ++m) r.set_coeff(m, coeff(m) * v);
    return r;
}

ZSeries series_inverse(const ZSeries& s) {
    if (s.coeff(0).is_zero()) throw std::domain_error("non-unit series");
    ZSeries r(s.order());
    QRat c0_inv = s.coeff(0).inverse();
    r.set_coeff(0, c0_inv);
    for (int m = 1; m <= s.order(); ++m) {
        QRat acc;
        for (int l = 1; l <= m; ++l) acc += s.coeff(l) * r.coeff(m - l);
        r.set_coeff(m, -(c0_inv * acc));
    }
    return r;
}

}  // namespace qloop
