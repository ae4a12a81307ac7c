#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qloop/laurent.hpp"

namespace qloop {

/// Multiplicative weight restricted to q-power values: omega(j) = q^{m_j}.
/// The group law is componentwise addition of the exponent vectors.
struct Weight {
    std::vector<int> m;

    Weight() = default;
    explicit Weight(std::vector<int> v) : m(std::move(v)) {}
    static Weight zero(int n) { return Weight(std::vector<int>(n, 0)); }

    int size() const { return static_cast<int>(m.size()); }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(int k) const;

    bool is_zero() const;
    bool operator==(const Weight& o) const = default;
    auto operator<=>(const Weight& o) const = default;

    std::string str() const;
};

/// Finite Cartan type A_n..G_2. Node numbering and the choice of long/short
/// nodes follow Kac: B_n has d = (2,..,2,1), C_n has d = (1,..,1,2),
/// F_4 has d = (2,2,1,1) and G_2 has d = (3,1).
struct CartanType {
    char series = 'A';
    int rank = 1;

    static CartanType parse(const std::string& label);
    std::string str() const { return series + std::to_string(rank); }
    bool operator==(const CartanType& o) const = default;
};

struct CartanData {
    CartanType type;
    int n = 0;
    std::vector<std::vector<int>> C;              // finite Cartan matrix
    std::vector<int> d;                           // symmetrizers, diag(d)C symmetric
    std::vector<std::vector<int>> positive_roots; // alpha-basis coefficient vectors

    // Derived data.
    std::vector<std::vector<int>> B;              // B = diag(d) C (symmetric)
    std::vector<int> marks;                       // coefficients of the highest root
    int d0 = 1;                                   // symmetrizer of the affine node
    std::vector<int> affine_row0;                 // C_{0,j}, j = 1..n
    std::vector<int> affine_col0;                 // C_{j,0}, j = 1..n

    /// Affine Cartan entry C_{i,j} with 0-extended indices i,j in 0..n.
    int affine_C(int i, int j) const;
    /// Symmetrizer d_i with i in 0..n (i = 0 gives d0).
    int affine_d(int i) const;
};

/// Builds and validates the Cartan datum for a supported finite type.
CartanData build_cartan(CartanType type);
CartanData build_cartan(const std::string& label);

/// The weight of the simple root: alpha_i(j) = q_i^{C_{i,j}}. i is 1-based.
Weight simple_root_weight(const CartanData& cd, int i);

/// Partial order on weights: returns the unique nonnegative integer vector c
/// with lambda - omega = sum_i c_i * (d_i C_{i,.}), or nullopt when omega and
/// lambda are not comparable in that direction.
std::optional<std::vector<int>> weight_leq(const Weight& omega, const Weight& lambda,
                                           const CartanData& cd);

/// Height of omega below lambda: the coordinate sum of the weight_leq
/// certificate; nullopt when not comparable.
std::optional<int> height_below(const Weight& omega, const Weight& lambda,
                                const CartanData& cd);

}  // namespace qloop
