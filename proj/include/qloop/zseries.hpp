#pragma once

#include <vector>

#include "qloop/qrat.hpp"

namespace qloop {

/// Truncated power series in z over QRat. A series of order N stores exactly
/// N+1 coefficients; arithmetic on two series truncates to the smaller order.
class ZSeries {
public:
    explicit ZSeries(int order) : c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("ZSeries: negative order");
    }
    ZSeries(int order, const QRat& constant) : ZSeries(order) { c_[0] = constant; }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const QRat& coeff(int m) const { return c_.at(static_cast<size_t>(m)); }
    void set_coeff(int m, const QRat& v) { c_.at(static_cast<size_t>(m)) = v; }

    ZSeries operator+(const ZSeries& o) const;
    ZSeries operator-(const ZSeries& o) const;
    ZSeries operator*(const ZSeries& o) const;
    ZSeries scaled(const QRat& v) const;

    bool operator==(const ZSeries& o) const { return c_ == o.c_; }

private:
    std::vector<QRat> c_;
};

/// Multiplicative inverse up to the truncation order.
/// Throws "non-unit series" when the constant coefficient vanishes.
ZSeries series_inverse(const ZSeries& s);

}  // namespace qloop
