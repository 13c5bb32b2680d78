#pragma once

// The minimal Schubert variety X(w_{r,n}), n = rq + 1, in the Grassmannian of
// r-planes: its reduced word, the index sets C_j, the roots beta_{i,j}, and the
// matrix chart of the open cell.

#include "sgk/lattice.hpp"
#include "sgk/scalar.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace sgk {

/// A coordinate position (i, j): row i of column j, with i in C_j.
struct Cell {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Raised when a matrix does not have the pinned/zero shape of the cell chart.
class PatternError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MinimalSchubertDatum {
public:
    int r() const { return r_; }
    int q() const { return q_; }
    int n() const { return r_ * q_ + 1; }

    const ReducedWord& word() const { return word_; }
    /// The full permutation; its first r values are q+1, 2q+1, ..., rq+1.
    const Permutation& permutation() const { return perm_; }
    /// (w(1), ..., w(r)).
    std::vector<int> one_line() const;

    /// C_j = {1..jq+1} minus {iq+1 : 1 <= i <= j}, ascending.
    const std::vector<int>& c_set(int j) const { return c_sets_.at(j - 1); }
    bool in_c_set(int i, int j) const { return slot_or_none(i, j) >= 0; }

    /// All coordinate positions ordered by column, then row.
    const std::vector<Cell>& cells() const { return cells_; }
    int dimension() const { return static_cast<int>(cells_.size()); }

    /// Position of (i, j) in cells(). Throws std::out_of_range for i not in C_j.
    int slot(int i, int j) const;
    int slot_or_none(int i, int j) const;

    /// beta_{i,j} = alpha_i + ... + alpha_{jq}.
    const WeightVector& beta(int i, int j) const { return betas_[slot(i, j)]; }

    /// <beta_{i,j}, lambda_{lq}> for l = 1..r, computed from the lattice pairing.
    const std::vector<int>& beta_peak_pairings(int i, int j) const { return peak_pairings_[slot(i, j)]; }

private:
    friend std::shared_ptr<const MinimalSchubertDatum> build_datum(int r, int q);
    MinimalSchubertDatum() = default;

    int r_ = 0;
    int q_ = 0;
    ReducedWord word_;
    Permutation perm_ = Permutation::identity(1);
    std::vector<std::vector<int>> c_sets_;
    std::vector<Cell> cells_;
    std::vector<int> slot_table_; // n * r, -1 where not a coordinate
    std::vector<WeightVector> betas_;
    std::vector<std::vector<int>> peak_pairings_;
};

using DatumPtr = std::shared_ptr<const MinimalSchubertDatum>;

/// (s_q ... s_1)(s_{2q} ... s_2) ... (s_{rq} ... s_r) in SL(rq + 1).
ReducedWord minimal_word(int r, int q);

/// Builds and eagerly validates the datum. Requires r >= 1 and q >= 2.
/// Results are shared: repeated calls with the same (r, q) return one instance.
DatumPtr build_datum(int r, int q);

/// Dense n x r matrix of scalars, row-major; used only for I/O and display.
using Matrix = std::vector<std::vector<Scalar>>;

/// A point u w P/P of the open cell, stored as the coordinates a_{i,j}.
class CellPoint {
public:
    /// All coordinates zero.
    CellPoint(DatumPtr datum, Field field);

    const MinimalSchubertDatum& datum() const { return *datum_; }
    const DatumPtr& datum_ptr() const { return datum_; }
    const Field& field() const { return field_; }

    const Scalar& at(int i, int j) const { return values_[datum_->slot(i, j)]; }
    void set(int i, int j, Scalar v);

    /// Values aligned with datum().cells().
    const std::vector<Scalar>& values() const { return values_; }
    const Scalar& value_at_slot(int s) const { return values_[s]; }
    void set_slot(int s, Scalar v);

    friend bool operator==(const CellPoint& a, const CellPoint& b);

private:
    DatumPtr datum_;
    Field field_;
    std::vector<Scalar> values_;
};

/// Matrix form: unit rows jq+1, zeros below row jq+1 outside the last column.
Matrix to_matrix(const CellPoint& p);

/// Inverse of to_matrix. Throws PatternError naming the first offending entry.
CellPoint from_matrix(DatumPtr datum, const Field& field, const Matrix& a);

/// Drops column r: the coordinates a_{i,j}, j <= r-1, as a point for (r-1, q).
/// Throws std::invalid_argument when r = 1.
CellPoint restrict(const CellPoint& p);

} // namespace sgk
