#pragma once

// Monomials in the coordinate functions X_{beta_{i,j}} of the cell whose
// products with the extremal Pluecker coordinate are T_{J_r}-invariant.
//
// Naming: the variable attached to column c of a witness tuple J is
// X_{beta_{i_c, c}}; "gamma_sum" (peak_recursion) is the weight of a chain of
// such variables. Roots of the smaller group appear only via restrict().

#include "sgk/peak_recursion.hpp"
#include "sgk/schubert_cell.hpp"

#include <map>
#include <vector>

namespace sgk {

/// A product of Pluecker-degree-1 factors, each a product of distinct-column
/// X variables, raised to a power.
struct PlueckerFactor {
    std::vector<Cell> cells;
    int power = 1;
};

class BetaMonomial {
public:
    /// The constant monomial 1 of degree 0.
    explicit BetaMonomial(DatumPtr datum) : datum_(std::move(datum)) {}

    const MinimalSchubertDatum& datum() const { return *datum_; }
    const std::vector<PlueckerFactor>& factors() const { return factors_; }

    /// Appends a factor. Throws std::invalid_argument for a cell outside the chart.
    void add_factor(PlueckerFactor f);
    /// Concatenates the factors of another monomial over the same datum.
    void multiply(const BetaMonomial& other);

    /// (i, j) -> total exponent, zero exponents omitted.
    std::map<Cell, int> exponents() const;
    /// Sum of factor powers.
    int degree() const;

    /// True when no factor repeats a column index.
    bool columns_distinct() const;

private:
    DatumPtr datum_;
    std::vector<PlueckerFactor> factors_;
};

/// k_1 = least k with i_start <= kq; k_{t+1} = least k with i_{k_t - 1} <= kq;
/// stops at 1.
std::vector<int> chain(const WitnessTuple& J, int start, int q);

/// (X_{gamma_r} X_{gamma_{k_1 - 1}} ... X_{gamma_{k_{l-1} - 1}})^{n-r} along chain(J, r).
BetaMonomial monomial_Mr(const WitnessTuple& J, DatumPtr datum);

/// X_{gamma_j} X_{gamma_{k_1 - 1}} ... along chain(J, j), degree 1. Requires 1 <= j <= r-1.
BetaMonomial monomial_Mprime(const WitnessTuple& J, int j, DatumPtr datum);

/// M_r times M'_1 ... M'_{r-1}.
BetaMonomial assemble_invariant(const WitnessTuple& J, DatumPtr datum);

/// -sum e(i,j) beta_{i,j}.
WeightVector weight(const BetaMonomial& m);

/// prod a_{i,j}^{e(i,j)}.
Scalar evaluate(const BetaMonomial& m, const CellPoint& p);

} // namespace sgk
