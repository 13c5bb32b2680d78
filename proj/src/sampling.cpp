#include "sgk/sampling.hpp"

namespace sgk {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ull; // FNV-1a
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return splitmix64(splitmix64(seed ^ h) + index);
}

long long Sampler::uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng_);
}

Scalar Sampler::nonzero() {
    long long v = uniform(-10, 9);
    return Scalar::from_int(field_, v >= 0 ? v + 1 : v);
}

Scalar Sampler::sparse() {
    if (uniform(0, 2) == 0) return Scalar::zero(field_);
    return nonzero();
}

CellPoint Sampler::point(DatumPtr datum, const std::vector<Cell>& forced) {
    CellPoint p(datum, field_);
    for (int s = 0; s < datum->dimension(); ++s) p.set_slot(s, sparse());
    for (const Cell& c : forced)
        if (p.at(c.i, c.j).is_zero()) p.set(c.i, c.j, nonzero());
    return p;
}

CellPoint Sampler::semistable_point(DatumPtr datum) {
    std::vector<Cell> forced;
    for (int j = 1; j <= datum->r(); ++j) {
        const auto& c = datum->c_set(j);
        forced.push_back({c[static_cast<std::size_t>(uniform(0, static_cast<long long>(c.size()) - 1))], j});
    }
    return point(datum, forced);
}

CellPoint Sampler::overlap_point(DatumPtr datum, const std::vector<WitnessTuple>& charts) {
    CellPoint p = semistable_point(datum);
    for (const auto& J : charts)
        for (int j = 1; j <= J.columns(); ++j)
            if (p.at(J[j], j).is_zero()) p.set(J[j], j, nonzero());
    return p;
}

TorusElement Sampler::torus(int r) {
    std::vector<Scalar> t;
    for (int l = 0; l < r; ++l) t.push_back(nonzero());
    return TorusElement(std::move(t));
}

WitnessTuple Sampler::witness_tuple(int m, int q) {
    std::vector<int> idx;
    for (int j = 1; j <= m; ++j) {
        // C_j has jq - j + 1 elements; skip the pinned rows kq + 1.
        long long pick = uniform(0, j * q - j);
        int i = 0;
        for (int cand = 1;; ++cand) {
            if (cand > 1 && (cand - 1) % q == 0) continue;
            if (pick-- == 0) {
                i = cand;
                break;
            }
        }
        idx.push_back(i);
    }
    return WitnessTuple(std::move(idx));
}

} // namespace sgk
