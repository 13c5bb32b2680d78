#pragma once

// Seeded sampling. Every sample draws from its own generator, seeded from
// (run seed, check label, sample index), so results do not depend on the order
// in which samples are evaluated.

#include "sgk/git_engine.hpp"
#include "sgk/peak_recursion.hpp"
#include "sgk/schubert_cell.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace sgk {

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for sample `index` of the check named `label`.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view label, std::uint64_t index);

class Sampler {
public:
    Sampler(std::uint64_t stream, Field field) : rng_(stream), field_(field) {}

    const Field& field() const { return field_; }

    /// Uniform integer in [lo, hi].
    long long uniform(long long lo, long long hi);
    /// Uniform in [-10, 10] minus {0}.
    Scalar nonzero();
    /// Zero with probability 1/3, otherwise nonzero().
    Scalar sparse();

    /// Every coordinate sparse(), then the listed cells forced nonzero.
    CellPoint point(DatumPtr datum, const std::vector<Cell>& forced = {});
    /// A point with one random nonzero witness per column.
    CellPoint semistable_point(DatumPtr datum);
    /// A point nonzero at (J[j], j) for every tuple and column, plus one random
    /// witness per column. Tuples may have fewer columns than the datum.
    CellPoint overlap_point(DatumPtr datum, const std::vector<WitnessTuple>& charts);

    TorusElement torus(int r);
    WitnessTuple witness_tuple(int m, int q);

private:
    std::mt19937_64 rng_;
    Field field_;
};

} // namespace sgk
