#pragma once

// Semistability of cell points for the subtorus T_{J_r} generated by the
// peak coweights lambda_q, lambda_{2q}, ..., lambda_{rq}, and the torus action.

#include "sgk/lattice.hpp"
#include "sgk/peak_recursion.hpp"
#include "sgk/schubert_cell.hpp"
#include "sgk/smith_normal_form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sgk {

/// t = prod_l lambda_{lq}(t_l); components t_1..t_r, all nonzero.
class TorusElement {
public:
    /// Throws std::invalid_argument on a zero component or mixed fields.
    explicit TorusElement(std::vector<Scalar> components);
    static TorusElement identity(int r, const Field& f);

    int rank() const { return static_cast<int>(t_.size()); }
    const Scalar& operator[](int l) const { return t_.at(static_cast<std::size_t>(l - 1)); }
    const std::vector<Scalar>& components() const { return t_; }
    const Field& field() const { return t_.front().field(); }

    /// The first k components, acting on the (k, q) datum.
    TorusElement truncate(int k) const;

    friend bool operator==(const TorusElement&, const TorusElement&) = default;

private:
    std::vector<Scalar> t_;
};

/// mu^{L(chi)}(x, lambda_j) at a point of the cell: -<w(chi), lambda_j>.
mpq_class hm_pairing(const Permutation& w, const WeightVector& chi, int j);

struct SemistabilityReport {
    bool semistable = false;
    /// Per column, the largest row index with a nonzero entry (0 if none).
    std::vector<int> witnesses;
    /// First column with no nonzero entry, or 0.
    int failing_column = 0;
};

SemistabilityReport semistability_report(const CellPoint& p);
bool is_semistable(const CellPoint& p);

/// a_{i,j} -> (t_{d(i,j)} ... t_j) a_{i,j}.
CellPoint torus_act(const TorusElement& t, const CellPoint& p);

struct OrbitResult {
    enum class Status { Equivalent, ZeroPatternMismatch, RatioMismatch };
    Status status = Status::RatioMismatch;
    std::optional<TorusElement> t;
    /// The first coordinate at which the verdict was decided against, if any.
    std::optional<Cell> offending;

    bool equivalent() const { return status == Status::Equivalent; }
};

std::string to_string(OrbitResult::Status s);

/// Decides whether b = t a for some t in T_{J_r} and returns that t.
/// Requires both points semistable over the same datum and field.
OrbitResult orbit_solve(const CellPoint& a, const CellPoint& b);

/// Rows beta_{i_j, j} (j = 1..r) together with alpha_k for k not a multiple of q,
/// as integer vectors of simple-root coefficients.
IntMatrix stabilizer_lattice(const WitnessTuple& J, const MinimalSchubertDatum& datum);

/// True when the lattice above has every Smith invariant factor equal to 1.
bool stabilizer_trivial(const WitnessTuple& J, const MinimalSchubertDatum& datum);

/// floor(jqr / n) == j - 1 for every 1 <= j <= r, n = rq + 1.
bool minimality_floor_check(int r, int q);

} // namespace sgk
