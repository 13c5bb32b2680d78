#pragma once

// Affine charts of the quotient Y_r of X(w_{r,n})^ss by T_{J_r}, each of the
// form (open set of Y_{r-1}) x P^{r(q-1)} and indexed by a witness tuple J
// with r-1 columns, together with their b-functions and transition data.

#include "sgk/git_engine.hpp"
#include "sgk/peak_recursion.hpp"
#include "sgk/schubert_cell.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace sgk {

/// A zero b-factor: the point lies outside the requested chart.
class ChartError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Homogeneous coordinates indexed by C_r in ascending order.
using FiberVector = std::vector<Scalar>;

struct ChartPoint {
    /// The (r, q) datum whose quotient this chart covers.
    DatumPtr datum;
    /// A representative over (r-1, q); absent when r = 1.
    std::optional<CellPoint> base;
    FiberVector fiber;
};

/// b(J(j))(y) = prod_{k<m} y_{i_{e^k}, e^k}; b(J(0)) = 1. Requires
/// J.columns() == y.datum().r() and 0 <= j <= J.columns(). Throws ChartError
/// on a vanishing factor.
Scalar b_value(const WitnessTuple& J, int j, const CellPoint& y);
Scalar b_value(const WitnessTuple& J, int j, const CellPoint& y, ESequenceCache& cache);

/// b(J1(j))(y) / b(J2(j))(y).
Scalar transition(const WitnessTuple& J1, const WitnessTuple& J2, int j, const CellPoint& y);

struct CocycleReport {
    bool passed = true;
    int samples = 0;
    /// Index of the first failing sample and the law it broke.
    std::optional<int> failing_sample;
    std::string failing_law;
};

/// Identity, inverse, and triple-product laws for b_{J1,J2}(j) on seeded points
/// of the triple overlap. Base tuples have r-1 columns; datum is the (r-1, q) base.
CocycleReport cocycle_check(const WitnessTuple& J1, const WitnessTuple& J2,
                            const WitnessTuple& J3, int j, DatumPtr base_datum, const Field& field,
                            int samples, std::uint64_t seed);

/// h_J(x): base = restrict(x), fiber_k = b(J(d(k,r) - 1))(base) a_{k,r}.
/// Throws ChartError when x is outside the chart or the fiber vanishes.
ChartPoint chart_map(const WitnessTuple& J, const CellPoint& x);

/// Column r entries a_{k,r} = c_k / b(J(d(k,r) - 1))(base); other columns copied.
CellPoint chart_inverse(const WitnessTuple& J, const ChartPoint& cp);

struct TransitionBlocks {
    /// b_{J1,J2}(p-1) for p = 1..r.
    std::vector<Scalar> scalars;
    /// Rows k of C_r in block p.
    std::vector<std::vector<int>> rows;

    std::vector<int> sizes() const;
};

/// Block-diagonal g_{J1,J2} at a base point. base is absent exactly when r = 1.
TransitionBlocks transition_matrix(const WitnessTuple& J1, const WitnessTuple& J2,
                                   const MinimalSchubertDatum& datum,
                                   const std::optional<CellPoint>& base);

/// Scales each fiber component by its block scalar.
FiberVector apply_blocks(const TransitionBlocks& g, const MinimalSchubertDatum& datum,
                         const FiberVector& fiber);

/// a ~ b in projective space; false when either vector is zero.
bool projectively_equal(const FiberVector& a, const FiberVector& b);

/// Equal images in the quotient chart: bases orbit-equivalent, fibers proportional.
bool same_quotient_point(const ChartPoint& a, const ChartPoint& b);

/// dim Y_k for k = 0..r via the recurrence dim Y_k = dim Y_{k-1} + k(q-1).
std::vector<long long> tower_dimensions(int r, int q);

/// dim Y_k = l(w_{k, kq+1}) - k, from the reduced word length.
long long tower_dimension_from_word(int k, int q);

} // namespace sgk
