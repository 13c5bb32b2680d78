#pragma once

// Block structure of the columns C_j under the peaks alpha_{q}, ..., alpha_{rq}:
// the partition C_j x {j} = J_{1,j} u ... u J_{j,j}, the block index d(i,j),
// the descending recursion e^k, and the gamma sums built from it.

#include "sgk/lattice.hpp"
#include "sgk/schubert_cell.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace sgk {

/// J = (i_1, ..., i_m) with i_j in C_j; selects one coordinate per column.
class WitnessTuple {
public:
    WitnessTuple() = default;
    explicit WitnessTuple(std::vector<int> indices) : indices_(std::move(indices)) {}

    int columns() const { return static_cast<int>(indices_.size()); }
    /// i_j, 1-based.
    int operator[](int j) const { return indices_.at(static_cast<std::size_t>(j - 1)); }
    const std::vector<int>& indices() const { return indices_; }

    /// J(j) = (i_1, ..., i_j); J(0) is empty.
    WitnessTuple prefix(int j) const;

    /// Throws std::invalid_argument unless i_j is in C_j for every column.
    void validate(int q) const;

    friend auto operator<=>(const WitnessTuple&, const WitnessTuple&) = default;

private:
    std::vector<int> indices_;
};

/// [e^0, e^1, ..., e^m] with e^0 = j, strictly decreasing, e^m = 0.
using ESequence = std::vector<int>;

/// The rows of block J_{p,j}: {1..q} for p = 1, {(p-1)q+2 .. pq} for p >= 2.
std::vector<int> block_rows(int p, int q);

/// The unique p in 1..j with (i, j) in J_{p,j}, found by interval membership.
/// Throws std::invalid_argument when i is not in C_j.
int d_index(int i, int j, int q);

/// e^0 = j, e^k = d(i_{e^{k-1}}, e^{k-1}) - 1, iterated until 0.
ESequence e_sequence(const WitnessTuple& J, int j, int q);

/// Read-through memo of e_sequence keyed by (J(j), q). Safe for concurrent use.
class ESequenceCache {
public:
    const ESequence& get(const WitnessTuple& J, int j, int q);

private:
    std::mutex mu_;
    std::map<std::pair<WitnessTuple, int>, ESequence> memo_;
};

/// gamma_j = sum over k < m of beta_{i_{e^k}, e^k}.
WeightVector gamma_sum(const WitnessTuple& J, int j, const MinimalSchubertDatum& datum);

/// Rows follow datum.cells(); entry [s][l-1] = <beta_s, lambda_{lq}>.
std::vector<std::vector<int>> beta_pair_table(const MinimalSchubertDatum& datum);

/// Every J in C_1 x ... x C_m, in lexicographic order.
std::vector<WitnessTuple> all_witness_tuples(int m, int q);

} // namespace sgk
