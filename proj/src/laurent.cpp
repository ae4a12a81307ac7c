#include "qloop/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qloop {

LaurentPoly::LaurentPoly(const BigInt& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exp) {
    LaurentPoly p;
    if (c != 0) p.terms_[exp] = c;
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

BigInt LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::set_coeff(int exp, const BigInt& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        BigInt s = r.coeff(e) + c;
        r.set_coeff(e, s);
    }
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            BigInt s = r.coeff(e1 + e2) + c1 * c2;
            r.set_coeff(e1 + e2, s);
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int exp) const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_) r.terms_[e + exp] = v;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, v] : terms_) r.terms_[-e] = v;
    return r;
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, v] : terms_) g = boost::multiprecision::gcd(g, v);
    return g;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& o) const {
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first <=> b->first;
        if (a->second != b->second) return a->second < b->second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a != terms_.end()) return std::strong_ordering::greater;
    if (b != o.terms_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // print from highest exponent down
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BigInt c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (e == 0) {
            out << c;
        } else {
            if (c != 1) out << c << "*";
            out << "q^" << e;
        }
    }
    return out.str();
}

}  // namespace qloop
