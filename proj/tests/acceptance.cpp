// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes.

#include "sgk/bundle_charts.hpp"
#include "sgk/git_engine.hpp"
#include "sgk/invariant_sections.hpp"
#include "sgk/sampling.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace sgk;

namespace {

const Field Q = Field::rational();
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
    bool pass = true;
    long long checked = 0;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string at(int r, int q) { return "(r,q)=(" + std::to_string(r) + "," + std::to_string(q) + ")"; }

std::string tuple_str(const WitnessTuple& J) {
    std::ostringstream os;
    os << '(';
    for (int j = 1; j <= J.columns(); ++j) os << (j > 1 ? "," : "") << J[j];
    os << ')';
    return os.str();
}

// Makes x nonzero at (J[j], j) for each column of J.
void force_chart(CellPoint& x, const WitnessTuple& J, Sampler& rng) {
    for (int j = 1; j <= J.columns(); ++j)
        if (x.at(J[j], j).is_zero()) x.set(J[j], j, rng.nonzero());
}

Outcome ac1() {
    Outcome o;
    for (int r = 1; r <= 6; ++r)
        for (int q = 2; q <= 6; ++q) {
            const auto d = build_datum(r, q);
            const int n = d->n();
            const WeightVector moved = apply(d->permutation(), mpq_class(n) * fundamental_weight(r, n));
            for (int i = 1; i <= r; ++i)
                o.expect(coweight_pair(moved, i * q) == -(n - i), at(r, q) + " i=" + std::to_string(i));
        }
    return o;
}

Outcome ac2() {
    Outcome o;
    for (int r = 1; r <= 4; ++r)
        for (int q = 2; q <= 4; ++q) {
            const auto d = build_datum(r, q);
            const int n = d->n();
            const Permutation w = word_to_permutation(minimal_word(r, q));
            std::vector<int> head(w.one_line().begin(), w.one_line().begin() + r), expected;
            for (int k = 1; k <= r; ++k) expected.push_back(k * q + 1);
            o.expect(head == expected, at(r, q) + " one-line form");

            std::set<std::string> inv, betas;
            for (const auto& b : inversion_roots(w)) inv.insert(b.to_string());
            long long size = 0;
            for (int j = 1; j <= r; ++j) {
                size += j * q - j + 1;
                for (int i : d->c_set(j)) betas.insert(root(i, j * q + 1, n).to_string());
            }
            o.expect(inv == betas, at(r, q) + " inversion set");
            o.expect(static_cast<long long>(inversion_roots(w).size()) == size, at(r, q) + " cardinality");
            o.expect(w.length() == size, at(r, q) + " length");
        }
    return o;
}

Outcome ac3() {
    Outcome o;
    const auto d = build_datum(3, 3);
    for (int mask = 0; mask < 8; ++mask)
        for (int rep = 0; rep < 25; ++rep) {
            Sampler rng(stream_seed(kSeed, "ac3", static_cast<std::uint64_t>(mask * 100 + rep)), Q);
            CellPoint p(d, Q);
            for (int j = 1; j <= 3; ++j) {
                if (!(mask >> (j - 1) & 1)) continue;
                for (int i : d->c_set(j)) p.set(i, j, rng.sparse());
                const auto& rows = d->c_set(j);
                const int k = rows[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(rows.size()) - 1))];
                p.set(k, j, rng.nonzero());
            }
            const bool expected = mask == 7;
            o.expect(is_semistable(p) == expected, "mask " + std::to_string(mask));
        }
    return o;
}

Outcome ac4() {
    Outcome o;
    for (int r = 1; r <= 3; ++r)
        for (int q = 2; q <= 3; ++q) {
            const auto d = build_datum(r, q);
            for (const Cell& c : d->cells())
                for (int l = 1; l <= r; ++l) {
                    const int expected = (d_index(c.i, c.j, q) <= l && l <= c.j) ? 1 : 0;
                    o.expect(coweight_pair(d->beta(c.i, c.j), l * q) == expected,
                             at(r, q) + " beta pairing at (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
                }
            for (const auto& J : all_witness_tuples(r, q))
                for (int j = 1; j <= r; ++j) {
                    const WeightVector g = gamma_sum(J, j, *d);
                    for (int l = 1; l <= r; ++l)
                        o.expect(coweight_pair(g, l * q) == (l <= j ? 1 : 0),
                                 at(r, q) + " gamma J=" + tuple_str(J) + " j=" + std::to_string(j));
                }
        }
    o.expect(all_witness_tuples(3, 3).size() == 105, "105 tuples at (3,3)");
    return o;
}

Outcome ac5() {
    Outcome o;
    for (int r = 1; r <= 4; ++r)
        for (int q = 2; q <= 4; ++q) {
            const auto d = build_datum(r, q);
            for (int j = 1; j <= r; ++j) {
                std::multiset<int> covered;
                for (int p = 1; p <= j; ++p)
                    for (int i : block_rows(p, q)) {
                        covered.insert(i);
                        o.expect(d_index(i, j, q) == p, at(r, q) + " d_index");
                    }
                const auto& cj = d->c_set(j);
                o.expect(covered == std::multiset<int>(cj.begin(), cj.end()), at(r, q) + " partition j=" + std::to_string(j));
            }
            for (const auto& J : all_witness_tuples(r, q))
                for (int j = 1; j <= r; ++j) {
                    const ESequence e = e_sequence(J, j, q);
                    bool ok = e.front() == j && e.back() == 0;
                    for (std::size_t k = 1; k < e.size(); ++k) ok = ok && e[k] < e[k - 1];
                    o.expect(ok, at(r, q) + " e-sequence J=" + tuple_str(J));
                }
        }
    return o;
}

Outcome ac6() {
    Outcome o;
    for (int r = 1; r <= 3; ++r)
        for (int q = 2; q <= 3; ++q) {
            const auto d = build_datum(r, q);
            const int n = d->n();
            std::uint64_t ji = 0;
            for (const auto& J : all_witness_tuples(r, q)) {
                const BetaMonomial m1 = assemble_invariant(J, d);
                const WeightVector mu = weight(m1);
                for (int j = 1; j <= r; ++j)
                    o.expect(coweight_pair(mu, j * q) == -(n - j), at(r, q) + " weight J=" + tuple_str(J));
                for (int s = 0; s < 100; ++s) {
                    Sampler rng(stream_seed(kSeed, "ac6:" + std::to_string(r * 10 + q), ji * 100 + static_cast<std::uint64_t>(s)), Q);
                    const CellPoint x = rng.point(d);
                    const TorusElement t = rng.torus(r);
                    Scalar chi = Scalar::one(Q);
                    for (int l = 1; l <= r; ++l) chi *= t[l].pow(n - l);
                    o.expect(evaluate(m1, torus_act(t, x)) == chi * evaluate(m1, x),
                             at(r, q) + " equivariance J=" + tuple_str(J) + " sample " + std::to_string(s));
                }
                ++ji;
            }
        }
    return o;
}

Outcome ac7() {
    Outcome o;
    for (int r = 1; r <= 3; ++r)
        for (int q = 2; q <= 3; ++q) {
            const auto d = build_datum(r, q);
            for (const auto& J : all_witness_tuples(r, q)) {
                const auto factors = smith_invariant_factors(stabilizer_lattice(J, *d));
                bool ones = static_cast<int>(factors.size()) == d->n() - 1;
                for (const auto& f : factors) ones = ones && f == 1;
                o.expect(ones, at(r, q) + " SNF J=" + tuple_str(J));
            }
        }
    for (auto [r, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        const auto d = build_datum(r, q);
        for (int s = 0; s < 100; ++s) {
            Sampler rng(stream_seed(kSeed, "ac7:" + std::to_string(r * 10 + q), static_cast<std::uint64_t>(s)), Q);
            const CellPoint a = rng.semistable_point(d);
            const TorusElement t = rng.torus(r);
            const OrbitResult res = orbit_solve(a, torus_act(t, a));
            o.expect(res.equivalent() && *res.t == t, at(r, q) + " round trip sample " + std::to_string(s));
        }
    }
    return o;
}

Outcome ac8() {
    Outcome o;
    struct Setting { int r, q; bool all_triples; };
    for (const Setting st : {Setting{2, 2, true}, {2, 3, true}, {3, 2, true}, {3, 3, false}}) {
        const auto d = build_datum(st.r, st.q);
        const int m = st.r - 1;
        const DatumPtr base = build_datum(m, st.q);
        std::vector<std::array<WitnessTuple, 3>> triples;
        const auto all = all_witness_tuples(m, st.q);
        if (st.all_triples) {
            for (const auto& a : all)
                for (const auto& b : all)
                    for (const auto& c : all) triples.push_back({a, b, c});
        } else {
            for (int s = 0; s < 20; ++s) {
                Sampler rng(stream_seed(kSeed, "ac8:triples", static_cast<std::uint64_t>(s)), Q);
                triples.push_back({rng.witness_tuple(m, st.q), rng.witness_tuple(m, st.q), rng.witness_tuple(m, st.q)});
            }
        }
        std::vector<int> sizes{st.q};
        for (int p = 2; p <= st.r; ++p) sizes.push_back(st.q - 1);

        for (std::size_t t = 0; t < triples.size(); ++t) {
            const auto& [J1, J2, J3] = triples[t];
            for (int j = 0; j <= m; ++j) {
                const auto rep = cocycle_check(J1, J2, J3, j, base, Q, 100,
                                               stream_seed(kSeed, "ac8:cocycle", t * 16 + static_cast<std::uint64_t>(j)));
                o.expect(rep.passed && rep.samples == 100,
                         at(st.r, st.q) + " " + rep.failing_law + " law J=" + tuple_str(J1) + tuple_str(J2) + tuple_str(J3));
            }
            // Two-chart compatibility of the fibers on each pair of the triple.
            for (const auto& [A, B] : {std::pair{J1, J2}, {J2, J3}, {J1, J3}})
                for (int s = 0; s < 100; ++s) {
                    Sampler rng(stream_seed(kSeed, "ac8:fiber", t * 1000 + static_cast<std::uint64_t>(s)), Q);
                    CellPoint x = rng.semistable_point(d);
                    force_chart(x, A, rng);
                    force_chart(x, B, rng);
                    const ChartPoint ha = chart_map(A, x), hb = chart_map(B, x);
                    const TransitionBlocks g = transition_matrix(A, B, *d, hb.base);
                    o.expect(g.sizes() == sizes, at(st.r, st.q) + " block sizes");
                    o.expect(apply_blocks(g, *d, hb.fiber) == ha.fiber,
                             at(st.r, st.q) + " fiber compatibility " + tuple_str(A) + tuple_str(B));
                }
        }
    }
    return o;
}

Outcome ac9() {
    Outcome o;
    for (int r = 1; r <= 3; ++r)
        for (int q = 2; q <= 3; ++q) {
            const auto d = build_datum(r, q);
            std::uint64_t ci = 0;
            for (const auto& J : all_witness_tuples(r - 1, q)) {
                for (int s = 0; s < 100; ++s) {
                    Sampler rng(stream_seed(kSeed, "ac9:" + std::to_string(r * 10 + q), ci * 100 + static_cast<std::uint64_t>(s)), Q);
                    const std::string where = at(r, q) + " J=" + tuple_str(J) + " sample " + std::to_string(s);
                    CellPoint x = rng.semistable_point(d);
                    force_chart(x, J, rng);
                    const ChartPoint h = chart_map(J, x);
                    o.expect(chart_inverse(J, h) == x, where + " inverse after map");

                    // A random chart point: inverse then map returns it.
                    ChartPoint c{d, std::nullopt, {}};
                    if (r >= 2) {
                        CellPoint b = rng.semistable_point(build_datum(r - 1, q));
                        force_chart(b, J, rng);
                        c.base = b;
                    }
                    for (std::size_t k = 0; k < d->c_set(r).size(); ++k) c.fiber.push_back(rng.sparse());
                    c.fiber[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(c.fiber.size()) - 1))] = rng.nonzero();
                    const ChartPoint back = chart_map(J, chart_inverse(J, c));
                    o.expect(back.fiber == c.fiber && back.base.has_value() == c.base.has_value() &&
                                 (!c.base || *back.base == *c.base),
                             where + " map after inverse");

                    // Separation against orbit equivalence.
                    std::vector<CellPoint> partners{torus_act(rng.torus(r), x), rng.overlap_point(d, {J})};
                    if (r >= 2) {
                        CellPoint changed = x;
                        changed.set(J[1], 1, x.at(J[1], 1) + Scalar::one(Q));
                        if (!changed.at(J[1], 1).is_zero()) partners.push_back(changed);
                    }
                    CellPoint fiber_changed = x;
                    const int k = d->c_set(r).back();
                    fiber_changed.set(k, r, x.at(k, r) + Scalar::one(Q));
                    if (is_semistable(fiber_changed)) partners.push_back(fiber_changed);
                    for (std::size_t pi = 0; pi < partners.size(); ++pi) {
                        const bool orbit = orbit_solve(x, partners[pi]).equivalent();
                        const bool chart = same_quotient_point(h, chart_map(J, partners[pi]));
                        o.expect(orbit == chart && (pi != 0 || orbit), where + " separation partner " + std::to_string(pi));
                    }
                }
                ++ci;
            }
        }
    return o;
}

Outcome ac10() {
    Outcome o;
    for (int r = 1; r <= 6; ++r)
        for (int q = 2; q <= 6; ++q) {
            const auto dims = tower_dimensions(r, q);
            o.expect(static_cast<int>(dims.size()) == r + 1, at(r, q) + " stages");
            for (int k = 0; k <= r; ++k) {
                const long long from_word = k == 0 ? 0 : build_datum(k, q)->word().length() - k;
                o.expect(dims[k] == from_word, at(r, q) + " k=" + std::to_string(k));
            }
            o.expect(dims[r] - dims[r - 1] == r * (q - 1), at(r, q) + " fiber dimension");
            o.expect(static_cast<long long>(build_datum(r, q)->c_set(r).size()) - 1 == r * (q - 1),
                     at(r, q) + " fiber coordinates");
        }
    o.expect(tower_dimensions(3, 3) == std::vector<long long>{0, 2, 6, 12}, "(3,3) tower");
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"AC1 HM pairing at peaks", ac1},
        {"AC2 word and inversion set", ac2},
        {"AC3 semistable column patterns at (3,3)", ac3},
        {"AC4 beta and gamma peak pairings", ac4},
        {"AC5 block partition and e-sequences", ac5},
        {"AC6 invariant weight and equivariance", ac6},
        {"AC7 trivial stabilizer and orbit round trip", ac7},
        {"AC8 cocycle laws and fiber compatibility", ac8},
        {"AC9 chart bijection and separation", ac9},
        {"AC10 tower dimensions", ac10},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %s (%lld checks, %.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", name, o.checked, secs,
                    o.pass ? "" : ": ", o.detail.c_str());
        if (!o.pass) ++failed;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
