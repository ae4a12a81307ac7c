#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>

namespace qloop {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in the formal parameter q, with big-integer
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const BigInt& c);
    explicit LaurentPoly(long long c) : LaurentPoly(BigInt(c)) {}

    static LaurentPoly monomial(const BigInt& c, int exp);
    static LaurentPoly q_power(int exp) { return monomial(1, exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    // Exponent range; both throw on the zero polynomial.
    int min_exp() const;
    int max_exp() const;

    BigInt coeff(int exp) const;
    const std::map<int, BigInt>& terms() const { return terms_; }

    void set_coeff(int exp, const BigInt& c);

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const BigInt& c) const;
    LaurentPoly shifted(int exp) const;   // multiply by q^exp
    LaurentPoly bar() const;              // substitute q -> q^{-1}

    BigInt content() const;               // gcd of coefficients, >= 0

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    std::strong_ordering operator<=>(const LaurentPoly& o) const;

    std::string str() const;              // e.g. "q^2 + 1 - 2*q^-2"

private:
    std::map<int, BigInt> terms_;
};

}  // namespace qloop
