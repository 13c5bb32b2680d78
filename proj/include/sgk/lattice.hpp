#pragma once

// Type-A root and weight lattice of SL(n) in epsilon-coordinates, the symmetric
// group acting on it, and the pairing with the fundamental coweights lambda_j.
//
// Conventions:
//   * alpha_i = eps_i - eps_{i+1};  <alpha_i, lambda_j> = delta_ij.
//   * <mu, lambda_j> is the partial sum of the first j coordinates of mu
//     (sum-zero normalization makes this well defined on weights).
//   * A permutation acts by w(eps_k) = eps_{w(k)}.
//   * A word (a_1, ..., a_k) denotes s_{a_1} s_{a_2} ... s_{a_k} composed as
//     maps; s_a exchanges a and a+1.

#include <gmpxx.h>
#include <span>
#include <string>
#include <vector>

namespace sgk {

class WeightVector {
public:
    /// Zero weight of SL(n).
    explicit WeightVector(int n);
    /// Throws std::invalid_argument unless the coordinates sum to zero.
    explicit WeightVector(std::vector<mpq_class> coords);

    static WeightVector from_ints(std::span<const long long> coords);

    int rank() const { return static_cast<int>(coords_.size()); }
    const mpq_class& operator[](int pos) const { return coords_.at(pos - 1); } // 1-based
    std::span<const mpq_class> coords() const { return coords_; }

    bool is_integral() const;

    /// Coefficients c_1..c_{n-1} with mu = sum c_i alpha_i (valid for any
    /// sum-zero vector; integral exactly on the root lattice).
    std::vector<mpq_class> simple_root_coefficients() const;

    std::string to_string() const;

    WeightVector& operator+=(const WeightVector& o);
    WeightVector& operator-=(const WeightVector& o);
    WeightVector& operator*=(const mpq_class& c);
    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    friend WeightVector operator*(const mpq_class& c, WeightVector a) { return a *= c; }
    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.coords_ == b.coords_;
    }

private:
    std::vector<mpq_class> coords_;
};

class Permutation {
public:
    static Permutation identity(int n);
    /// One-line notation w(1), ..., w(n). Throws unless a bijection of {1..n}.
    explicit Permutation(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_.at(k - 1); }
    const std::vector<int>& one_line() const { return images_; }

    Permutation inverse() const;
    /// Number of inversions, i.e. the Coxeter length.
    int length() const;
    /// Membership in W^{S \ {alpha_r}}: increasing on 1..r and on r+1..n.
    bool is_grassmannian(int r) const;

    friend Permutation operator*(const Permutation& a, const Permutation& b); // a after b
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

struct ReducedWord {
    int n = 0;
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
};

/// alpha_i in SL(n). Throws std::out_of_range unless 1 <= i <= n-1.
WeightVector simple_root(int i, int n);

/// omega_r in SL(n): (1 - r/n) on the first r coordinates, -r/n elsewhere.
WeightVector fundamental_weight(int r, int n);

/// eps_a - eps_b.
WeightVector root(int a, int b, int n);

/// <mu, lambda_j>: sum of the first j coordinates. Throws for j outside 1..n-1.
mpq_class coweight_pair(const WeightVector& mu, int j);

/// Weyl action: output coordinate at w(k) equals input coordinate at k.
WeightVector apply(const Permutation& w, const WeightVector& mu);

/// Product of simple transpositions in the order written.
Permutation word_to_permutation(const ReducedWord& word);

/// True when the word's permutation has as many inversions as letters.
bool is_reduced(const ReducedWord& word);

/// R^+(w^{-1}): positive roots eps_a - eps_b (a < b) with w^{-1}(a) > w^{-1}(b),
/// ordered by (a, b).
std::vector<WeightVector> inversion_roots(const Permutation& w);

} // namespace sgk
