#pragma once

#include <compare>
#include <optional>
#include <string>

#include "qloop/laurent.hpp"

namespace qloop {

/// Exact rational function of q over the integers: the universal coefficient
/// field of the library.
///
/// Canonical form (unique, so equal values compare equal structurally):
///   - denominator is a plain polynomial with nonzero constant term and
///     positive leading coefficient; all q-power units sit in the numerator;
///   - the polynomial parts of numerator and denominator are coprime;
///   - the joint integer content of numerator and denominator is 1.
class QRat {
public:
    QRat() = default;  // zero
    explicit QRat(const BigInt& c) : num_(c), den_(BigInt(1)) {}
    explicit QRat(long long c) : QRat(BigInt(c)) {}
    QRat(const LaurentPoly& num, const LaurentPoly& den);

    static QRat zero() { return QRat(); }
    static QRat one() { return QRat(BigInt(1)); }
    static QRat q_power(int e);
    static QRat from_poly(const LaurentPoly& p);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    QRat operator-() const;
    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    QRat inverse() const;
    QRat pow(int e) const;
    QRat bar() const;  // substitute q -> q^{-1}

    /// Exponent e when the value is exactly q^e; nullopt otherwise.
    std::optional<int> as_q_power() const;

    bool operator==(const QRat& o) const = default;
    std::strong_ordering operator<=>(const QRat& o) const;

    std::string str() const;

private:
    void reduce();

    LaurentPoly num_;                  // Laurent polynomial
    LaurentPoly den_{BigInt(1)};       // plain polynomial, den(0) != 0, lead > 0
};

/// q-integer [m] in the variable q^d: (q^{dm} - q^{-dm}) / (q^d - q^{-d}).
QRat qint(int m, int d);

/// [m]_{q^d}! .
QRat qfact(int m, int d);

/// Balanced Gaussian binomial [s r] in the variable q^d. Requires 0 <= r <= s.
QRat qbinom(int s, int r, int d);

/// Generalized binomial: falling factorial prod_{s=1..b}(a-b+s) / b!.
/// Defined for any integer a and b >= 0; always an integer.
BigInt gbinom(long long a, long long b);

}  // namespace qloop
