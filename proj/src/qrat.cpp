#include "qloop/qrat.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace qloop {

namespace {

// Dense plain polynomial in q: coeff[i] is the coefficient of q^i.
// No trailing zero; empty vector is the zero polynomial.
using Dense = std::vector<BigInt>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    if (p.min_exp() < 0) throw std::logic_error("to_dense: negative exponent");
    d.resize(static_cast<size_t>(p.max_exp()) + 1);
    for (const auto& [e, c] : p.terms()) d[static_cast<size_t>(e)] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d) {
    LaurentPoly p;
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) p.set_coeff(static_cast<int>(i), d[i]);
    return p;
}

BigInt content(const Dense& p) {
    BigInt g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

Dense scaled(const Dense& p, const BigInt& c) {
    Dense r = p;
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}

Dense divided(const Dense& p, const BigInt& c) {
    Dense r = p;
    for (auto& x : r) {
        BigInt Q = x / c;
        if (Q * c != x) throw std::logic_error("divided: not divisible");
        x = Q;
    }
    return r;
}

Dense mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Remainder of lead(b)^k * a modulo b (fraction-free pseudo-division).
Dense pseudo_rem(Dense a, const Dense& b) {
    trim(a);
    if (b.empty()) throw std::logic_error("pseudo_rem by zero");
    const BigInt& lb = b.back();
    while (a.size() >= b.size()) {
        BigInt la = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

// Primitive gcd with positive leading coefficient.
Dense poly_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    auto prim = [](Dense p) {
        BigInt c = content(p);
        if (c > 1) p = divided(p, c);
        if (!p.empty() && p.back() < 0) p = scaled(p, -1);
        return p;
    };
    a = prim(a);
    b = prim(b);
    while (!b.empty()) {
        Dense r = prim(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact division: a / b, throws if not exact.
Dense poly_div_exact(Dense a, const Dense& b) {
    trim(a);
    if (b.empty()) throw std::logic_error("poly_div_exact by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::logic_error("poly_div_exact: not divisible");
    Dense quot(a.size() - b.size() + 1);
    const BigInt& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        BigInt qc = a.back() / lb;
        if (qc * lb != a.back()) throw std::logic_error("poly_div_exact: not divisible");
        size_t shift = a.size() - b.size();
        quot[shift] = qc;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= qc * b[i];
        trim(a);
    }
    if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    trim(quot);
    return quot;
}

}  // namespace

QRat::QRat(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    reduce();
}

QRat QRat::q_power(int e) {
    QRat r;
    r.num_ = LaurentPoly::q_power(e);
    return r;
}

QRat QRat::from_poly(const LaurentPoly& p) {
    QRat r;
    r.num_ = p;
    return r;
}

void QRat::reduce() {
    if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(BigInt(1));
        return;
    }
    // Pull all q-power units out of the denominator into the numerator.
    int w = den_.min_exp();
    if (w != 0) {
        den_ = den_.shifted(-w);
        num_ = num_.shifted(-w);
    }
    int v = num_.min_exp();
    Dense n = to_dense(num_.shifted(-v));
    Dense d = to_dense(den_);
    Dense g = poly_gcd(n, d);
    if (g.size() > 1) {
        n = poly_div_exact(n, g);
        d = poly_div_exact(d, g);
    }
    BigInt c = boost::multiprecision::gcd(content(n), content(d));
    if (d.back() < 0) c = -c;
    if (c != 1) {
        n = divided(n, c);
        d = divided(d, c);
    }
    num_ = from_dense(n).shifted(v);
    den_ = from_dense(d);
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::operator+(const QRat& o) const {
    QRat r;
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.reduce();
    return r;
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
    QRat r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.reduce();
    return r;
}

QRat QRat::operator/(const QRat& o) const { return *this * o.inverse(); }

QRat QRat::inverse() const {
    if (num_.is_zero()) throw std::domain_error("QRat: division by zero");
    QRat r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
}

QRat QRat::pow(int e) const {
    if (e == 0) return one();
    if (e < 0) return inverse().pow(-e);
    QRat base = *this;
    QRat acc = one();
    int k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

QRat QRat::bar() const {
    QRat r;
    r.num_ = num_.bar();
    r.den_ = den_.bar();
    r.reduce();
    return r;
}

std::optional<int> QRat::as_q_power() const {
    if (!den_.is_one()) return std::nullopt;
    if (num_.terms().size() != 1) return std::nullopt;
    const auto& [e, c] = *num_.terms().begin();
    if (c != 1) return std::nullopt;
    return e;
}

std::strong_ordering QRat::operator<=>(const QRat& o) const {
    if (auto c = num_ <=> o.num_; c != 0) return c;
    return den_ <=> o.den_;
}

std::string QRat::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream out;
    out << "(" << num_.str() << ") / (" << den_.str() << ")";
    return out.str();
}

QRat qint(int m, int d) {
    if (d <= 0) throw std::invalid_argument("qint: d must be positive");
    LaurentPoly num = LaurentPoly::q_power(d * m) - LaurentPoly::q_power(-d * m);
    LaurentPoly den = LaurentPoly::q_power(d) - LaurentPoly::q_power(-d);
    return QRat(num, den);
}

QRat qfact(int m, int d) {
    if (m < 0) throw std::invalid_argument("qfact: m must be nonnegative");
    QRat r = QRat::one();
    for (int j = 1; j <= m; ++j) r *= qint(j, d);
    return r;
}

QRat qbinom(int s, int r, int d) {
    if (r < 0 || r > s) throw std::invalid_argument("qbinom: need 0 <= r <= s");
    return qfact(s, d) / (qfact(r, d) * qfact(s - r, d));
}

BigInt gbinom(long long a, long long b) {
    if (b < 0) throw std::invalid_argument("gbinom: b must be nonnegative");
    BigInt num = 1;
    for (long long s = 1; s <= b; ++s) num *= BigInt(a - b + s);
    BigInt fact = 1;
    for (long long s = 2; s <= b; ++s) fact *= s;
    BigInt q = num / fact;
    if (q * fact != num) throw std::logic_error("gbinom: non-integer result");
    return q;
}

}  // namespace qloop
