#include "sgk/verify.hpp"

#include "sgk/bundle_charts.hpp"
#include "sgk/git_engine.hpp"
#include "sgk/invariant_sections.hpp"
#include "sgk/peak_recursion.hpp"
#include "sgk/sampling.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace sgk {

namespace {

// Above this many witness tuples (or chart triples) a check samples instead of
// enumerating.
constexpr long double kExhaustiveTuples = 20000;
constexpr long double kExhaustiveTriples = 1000;
constexpr int kSeededTriples = 20;

struct Check {
    std::string name;
    bool pass = true;
    long long samples = 0;
    Json values = Json::object();
    Json evidence = Json::object();

    void fail(Json counterexample) {
        if (pass) evidence = std::move(counterexample);
        pass = false;
    }
};

struct Context {
    const SuiteConfig& cfg;
    DatumPtr datum;
    std::vector<Check> out;

    Sampler sampler(const std::string& label, std::uint64_t index) const {
        return Sampler(stream_seed(cfg.seed, label, index), cfg.field);
    }
};

Json tuple_json(const WitnessTuple& J) { return J.indices(); }

std::vector<std::string> strings(const std::vector<mpq_class>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(x.get_str());
    return s;
}

long double tuple_count(int m, int q) {
    long double c = 1;
    for (int j = 1; j <= m; ++j) c *= j * q - j + 1;
    return c;
}

// All tuples with m columns when feasible, else `samples` seeded ones.
std::vector<WitnessTuple> tuples_for(const Context& ctx, int m, const std::string& label,
                                     bool& exhaustive) {
    exhaustive = tuple_count(m, ctx.cfg.q) <= kExhaustiveTuples;
    if (exhaustive) return all_witness_tuples(m, ctx.cfg.q);
    std::vector<WitnessTuple> out;
    for (int s = 0; s < ctx.cfg.samples; ++s)
        out.push_back(ctx.sampler(label + ":tuple", static_cast<std::uint64_t>(s)).witness_tuple(m, ctx.cfg.q));
    return out;
}

// ---------------------------------------------------------------- lemmas

void check_hm_pairing(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"hm_pairing"};
    const int n = d.n();
    const WeightVector chi = mpq_class(n) * fundamental_weight(d.r(), n);
    std::vector<mpq_class> pairings, hm;
    for (int j = 1; j <= d.r(); ++j) {
        const mpq_class v = coweight_pair(apply(d.permutation(), chi), j * d.q());
        pairings.push_back(v);
        hm.push_back(hm_pairing(d.permutation(), chi, j * d.q()));
        ++c.samples;
        if (v != -(n - j) || hm.back() <= 0)
            c.fail({{"j", j}, {"pairing", v.get_str()}, {"expected", std::to_string(-(n - j))}});
        // The dominant weight itself pairs to r(n - jq) at lambda_{jq} once r <= jq.
        if (d.r() <= j * d.q() && coweight_pair(chi, j * d.q()) != d.r() * (n - j * d.q()))
            c.fail({{"j", j}, {"dominant_pairing", coweight_pair(chi, j * d.q()).get_str()}});
    }
    c.values = {{"pairings", strings(pairings)}, {"hm", strings(hm)}};
    ctx.out.push_back(std::move(c));
}

void check_word(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"word_permutation"};
    c.samples = 1;
    std::vector<int> expected;
    for (int k = 1; k <= d.r(); ++k) expected.push_back(k * d.q() + 1);
    if (d.one_line() != expected) c.fail({{"one_line", d.one_line()}, {"expected", expected}});
    if (!is_reduced(d.word())) c.fail({{"word", d.word().letters}, {"reason", "not reduced"}});

    const auto inv = inversion_roots(d.permutation());
    std::set<std::string> lhs, rhs;
    for (const auto& b : inv) lhs.insert(b.to_string());
    for (const Cell& cell : d.cells()) rhs.insert(d.beta(cell.i, cell.j).to_string());
    long long expected_size = 0;
    for (int j = 1; j <= d.r(); ++j) expected_size += j * d.q() - j + 1;
    if (lhs != rhs) c.fail({{"reason", "inversion set differs from the beta roots"}});
    if (static_cast<long long>(inv.size()) != expected_size)
        c.fail({{"inversions", inv.size()}, {"expected", expected_size}});
    c.values = {{"one_line", d.one_line()}, {"word", d.word().letters}, {"inversions", inv.size()}};
    ctx.out.push_back(std::move(c));
}

void check_floor(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"minimality_floor"};
    std::vector<long long> floors;
    for (long long j = 1; j <= d.r(); ++j) floors.push_back(j * d.q() * d.r() / d.n());
    c.samples = d.r();
    if (!minimality_floor_check(d.r(), d.q())) c.fail({{"floors", floors}});
    c.values = {{"floors", floors}};
    ctx.out.push_back(std::move(c));
}

void check_partition(Context& ctx) {
    const auto& d = *ctx.datum;
    const int q = d.q();
    Check c{"partition"};
    for (int j = 1; j <= d.r(); ++j) {
        std::vector<int> merged;
        for (int p = 1; p <= j; ++p)
            for (int i : block_rows(p, q)) merged.push_back(i);
        std::vector<int> sorted = merged;
        std::sort(sorted.begin(), sorted.end());
        const bool disjoint = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        if (!disjoint || sorted != d.c_set(j)) c.fail({{"j", j}, {"union", sorted}, {"c_set", d.c_set(j)}});
        for (int i : d.c_set(j)) {
            ++c.samples;
            if (d_index(i, j, q) != (i + q - 1) / q)
                c.fail({{"i", i}, {"j", j}, {"d", d_index(i, j, q)}, {"ceil", (i + q - 1) / q}});
        }
    }
    ctx.out.push_back(std::move(c));
}

void check_e_sequence(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"e_sequence"};
    bool exhaustive = false;
    for (const auto& J : tuples_for(ctx, d.r(), c.name, exhaustive)) {
        for (int j = 1; j <= d.r() && c.pass; ++j) {
            const ESequence e = e_sequence(J, j, d.q());
            ++c.samples;
            bool ok = e.front() == j && e.back() == 0;
            for (std::size_t k = 1; k < e.size(); ++k) ok = ok && e[k] < e[k - 1];
            if (!ok) c.fail({{"J", tuple_json(J)}, {"j", j}, {"e", e}});
        }
    }
    c.values = {{"exhaustive", exhaustive}};
    ctx.out.push_back(std::move(c));
}

void check_beta_pairings(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"beta_peak_pairings"};
    const auto table = beta_pair_table(d);
    for (std::size_t s = 0; s < d.cells().size(); ++s) {
        const Cell cell = d.cells()[s];
        const int dd = d_index(cell.i, cell.j, d.q());
        for (int l = 1; l <= d.r(); ++l) {
            ++c.samples;
            const int expected = (dd <= l && l <= cell.j) ? 1 : 0;
            if (table[s][l - 1] != expected || d.beta_peak_pairings(cell.i, cell.j)[l - 1] != expected)
                c.fail({{"i", cell.i}, {"j", cell.j}, {"l", l}, {"pairing", table[s][l - 1]}, {"expected", expected}});
        }
    }
    ctx.out.push_back(std::move(c));
}

void check_gamma_pairings(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"gamma_peak_pairings"};
    bool exhaustive = false;
    for (const auto& J : tuples_for(ctx, d.r(), c.name, exhaustive)) {
        for (int j = 1; j <= d.r() && c.pass; ++j) {
            const WeightVector g = gamma_sum(J, j, d);
            for (int l = 1; l <= d.r(); ++l) {
                ++c.samples;
                const mpq_class v = coweight_pair(g, l * d.q());
                if (v != (l <= j ? 1 : 0))
                    c.fail({{"J", tuple_json(J)}, {"j", j}, {"l", l}, {"pairing", v.get_str()}});
            }
        }
    }
    c.values = {{"exhaustive", exhaustive}};
    ctx.out.push_back(std::move(c));
}

void check_stabilizer(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"stabilizer_snf"};
    bool exhaustive = false;
    for (const auto& J : tuples_for(ctx, d.r(), c.name, exhaustive)) {
        ++c.samples;
        const IntMatrix m = stabilizer_lattice(J, d);
        const mpz_class det = bareiss_determinant(m);
        if (!stabilizer_trivial(J, d) || abs(det) != 1) {
            std::vector<std::string> f;
            for (const auto& x : smith_invariant_factors(m)) f.push_back(x.get_str());
            c.fail({{"J", tuple_json(J)}, {"invariant_factors", f}, {"det", det.get_str()}});
            break;
        }
    }
    c.values = {{"exhaustive", exhaustive}, {"matrix_size", d.n() - 1}};
    ctx.out.push_back(std::move(c));
}

void check_semistability_patterns(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"semistability_patterns"};
    const int r = std::min(d.r(), 12);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
        Sampler rng = ctx.sampler(c.name, mask);
        CellPoint p = rng.semistable_point(ctx.datum);
        int first_zero = 0;
        for (int j = 1; j <= r; ++j) {
            if (mask >> (j - 1) & 1) continue;
            if (!first_zero) first_zero = j;
            for (int i : d.c_set(j)) p.set(i, j, Scalar::zero(p.field()));
        }
        ++c.samples;
        const auto rep = semistability_report(p);
        if (rep.semistable != (first_zero == 0) || rep.failing_column != first_zero)
            c.fail({{"mask", mask}, {"point", to_json(p)}, {"verdict", rep.semistable}, {"failing_column", rep.failing_column}});
    }
    c.values = {{"patterns", c.samples}};
    ctx.out.push_back(std::move(c));
}

void check_commutation(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"commutation"};
    std::set<std::string> roots;
    for (const Cell& cell : d.cells()) roots.insert(d.beta(cell.i, cell.j).to_string());
    for (const Cell& a : d.cells())
        for (const Cell& b : d.cells()) {
            if (!(a < b)) continue;
            ++c.samples;
            if (roots.count((d.beta(a.i, a.j) + d.beta(b.i, b.j)).to_string()))
                c.fail({{"first", {a.i, a.j}}, {"second", {b.i, b.j}}});
        }
    ctx.out.push_back(std::move(c));
}

// ---------------------------------------------------------------- orbits

void check_torus_invariance(Context& ctx) {
    Check c{"torus_invariance"};
    for (int s = 0; s < ctx.cfg.samples; ++s) {
        Sampler rng = ctx.sampler(c.name, static_cast<std::uint64_t>(s));
        const CellPoint p = rng.point(ctx.datum);
        const TorusElement t = rng.torus(ctx.datum->r());
        const CellPoint tp = torus_act(t, p);
        ++c.samples;
        bool pattern = true;
        for (int k = 0; k < ctx.datum->dimension(); ++k)
            pattern = pattern && p.value_at_slot(k).is_zero() == tp.value_at_slot(k).is_zero();
        if (!pattern || is_semistable(p) != is_semistable(tp)) {
            c.fail({{"sample", s}, {"point", to_json(p)}});
            break;
        }
    }
    ctx.out.push_back(std::move(c));
}

void check_orbit_roundtrip(Context& ctx) {
    Check c{"orbit_roundtrip"};
    for (int s = 0; s < ctx.cfg.samples && c.pass; ++s) {
        Sampler rng = ctx.sampler(c.name, static_cast<std::uint64_t>(s));
        const CellPoint a = rng.semistable_point(ctx.datum);
        const TorusElement t = rng.torus(ctx.datum->r());
        ++c.samples;
        const OrbitResult res = orbit_solve(a, torus_act(t, a));
        if (!res.equivalent() || !(*res.t == t)) c.fail({{"sample", s}, {"point", to_json(a)}, {"status", to_string(res.status)}});
        const OrbitResult self = orbit_solve(a, a);
        if (!self.equivalent() || !(*self.t == TorusElement::identity(ctx.datum->r(), ctx.cfg.field)))
            c.fail({{"sample", s}, {"reason", "a is not equivalent to itself via the identity"}});
    }
    ctx.out.push_back(std::move(c));
}

void check_orbit_separation(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"orbit_separation"};
    for (int s = 0; s < ctx.cfg.samples && c.pass; ++s) {
        Sampler rng = ctx.sampler(c.name, static_cast<std::uint64_t>(s));
        CellPoint a = rng.semistable_point(ctx.datum);
        // Rows 1 and 2 of a column share the character of block J_{1,j}, so their
        // ratio is an orbit invariant.
        const int j = static_cast<int>(rng.uniform(1, d.r()));
        a.set(1, j, rng.nonzero());
        a.set(2, j, rng.nonzero());

        CellPoint ratio = a;
        ratio.set(1, j, a.at(1, j) * Scalar::from_int(ctx.cfg.field, 2));
        CellPoint pattern = a;
        pattern.set(2, j, Scalar::zero(ctx.cfg.field));
        ++c.samples;
        const auto r1 = orbit_solve(a, ratio), r2 = orbit_solve(a, pattern);
        if (r1.status != OrbitResult::Status::RatioMismatch || r2.status != OrbitResult::Status::ZeroPatternMismatch)
            c.fail({{"sample", s}, {"point", to_json(a)}, {"ratio_status", to_string(r1.status)}, {"pattern_status", to_string(r2.status)}});
    }
    ctx.out.push_back(std::move(c));
}

void check_restrict_semistable(Context& ctx) {
    Check c{"restrict_semistable"};
    if (ctx.datum->r() >= 2) {
        for (int s = 0; s < ctx.cfg.samples && c.pass; ++s) {
            Sampler rng = ctx.sampler(c.name, static_cast<std::uint64_t>(s));
            const CellPoint p = rng.semistable_point(ctx.datum);
            ++c.samples;
            if (!is_semistable(restrict(p))) c.fail({{"sample", s}, {"point", to_json(p)}});
        }
    }
    c.values = {{"applicable", ctx.datum->r() >= 2}};
    ctx.out.push_back(std::move(c));
}

// ---------------------------------------------------------------- sections

void check_sections(Context& ctx) {
    const auto& d = *ctx.datum;
    const int n = d.n(), r = d.r(), q = d.q();
    Check mr{"section_Mr_weight"}, mp{"section_Mprime_weight"}, inv{"section_invariant_weight"},
        cols{"section_columns_distinct"}, eq{"section_equivariance"};
    bool exhaustive = false;
    const auto tuples = tuples_for(ctx, r, "sections", exhaustive);
    std::uint64_t tuple_index = 0;
    for (const auto& J : tuples) {
        const std::uint64_t ti = tuple_index++;
        const BetaMonomial Mr = monomial_Mr(J, ctx.datum);
        const WeightVector wr = weight(Mr);
        ++mr.samples;
        for (int l = 1; l <= r; ++l)
            if (coweight_pair(wr, l * q) != -(n - r))
                mr.fail({{"J", tuple_json(J)}, {"l", l}, {"pairing", coweight_pair(wr, l * q).get_str()}});

        for (int j = 1; j < r; ++j) {
            const BetaMonomial Mp = monomial_Mprime(J, j, ctx.datum);
            const WeightVector wp = weight(Mp);
            ++mp.samples;
            for (int l = 1; l <= r; ++l)
                if (coweight_pair(wp, l * q) != (l <= j ? -1 : 0))
                    mp.fail({{"J", tuple_json(J)}, {"j", j}, {"l", l}, {"pairing", coweight_pair(wp, l * q).get_str()}});
            if (!(wp == mpq_class(-1) * gamma_sum(J, j, d)))
                mp.fail({{"J", tuple_json(J)}, {"j", j}, {"weight", wp.to_string()}, {"gamma", gamma_sum(J, j, d).to_string()}});
            ++cols.samples;
            if (!Mp.columns_distinct()) cols.fail({{"J", tuple_json(J)}, {"monomial", to_json(Mp)}});
        }

        const BetaMonomial M1 = assemble_invariant(J, ctx.datum);
        const WeightVector mu = weight(M1);
        ++inv.samples;
        ++cols.samples;
        if (!M1.columns_distinct() || !Mr.columns_distinct())
            cols.fail({{"J", tuple_json(J)}, {"monomial", to_json(M1)}});
        if (M1.degree() != n - 1) inv.fail({{"J", tuple_json(J)}, {"degree", M1.degree()}});
        const WeightVector chi = mpq_class(n) * fundamental_weight(r, n);
        for (int l = 1; l <= r; ++l) {
            const mpq_class v = coweight_pair(mu, l * q);
            // Cancels the Hilbert-Mumford value of the extremal Pluecker coordinate.
            if (v != -(n - l) || v + hm_pairing(d.permutation(), chi, l * q) != 0)
                inv.fail({{"J", tuple_json(J)}, {"l", l}, {"pairing", v.get_str()}});
        }

        for (int s = 0; s < ctx.cfg.samples && eq.pass; ++s) {
            Sampler rng = ctx.sampler("section_equivariance:" + std::to_string(ti), static_cast<std::uint64_t>(s));
            const CellPoint p = rng.overlap_point(ctx.datum, {J});
            const TorusElement t = rng.torus(r);
            ++eq.samples;
            const Scalar base = evaluate(M1, p);
            Scalar character = Scalar::one(ctx.cfg.field);
            for (int l = 1; l <= r; ++l) character *= t[l].pow(n - l);
            if (base.is_zero() || !(evaluate(M1, torus_act(t, p)) == character * base))
                eq.fail({{"J", tuple_json(J)}, {"sample", s}, {"point", to_json(p)}});
        }
    }
    for (Check* c : {&mr, &mp, &inv, &cols, &eq}) {
        c->values = {{"exhaustive", exhaustive}, {"tuples", tuples.size()}};
        ctx.out.push_back(std::move(*c));
    }
}

// ---------------------------------------------------------------- charts

std::vector<std::array<WitnessTuple, 3>> chart_triples(const Context& ctx, bool& exhaustive) {
    const int m = ctx.datum->r() - 1;
    const auto all = all_witness_tuples(m, ctx.cfg.q);
    const long double count = static_cast<long double>(all.size()) * all.size() * all.size();
    exhaustive = count <= kExhaustiveTriples;
    std::vector<std::array<WitnessTuple, 3>> out;
    if (exhaustive) {
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all) out.push_back({a, b, c});
        return out;
    }
    for (int s = 0; s < kSeededTriples; ++s) {
        Sampler rng = ctx.sampler("chart_triples", static_cast<std::uint64_t>(s));
        out.push_back({rng.witness_tuple(m, ctx.cfg.q), rng.witness_tuple(m, ctx.cfg.q),
                       rng.witness_tuple(m, ctx.cfg.q)});
    }
    return out;
}

void check_cocycle(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"cocycle"};
    bool exhaustive = true;
    if (d.r() >= 2) {
        const DatumPtr base = build_datum(d.r() - 1, d.q());
        const auto triples = chart_triples(ctx, exhaustive);
        for (std::size_t t = 0; t < triples.size() && c.pass; ++t) {
            const auto& [J1, J2, J3] = triples[t];
            for (int j = 0; j <= d.r() - 1 && c.pass; ++j) {
                const std::uint64_t sub = splitmix64(ctx.cfg.seed ^ (t * 64 + static_cast<std::uint64_t>(j)));
                const auto rep = cocycle_check(J1, J2, J3, j, base, ctx.cfg.field, ctx.cfg.samples, sub);
                c.samples += rep.samples;
                if (!rep.passed)
                    c.fail({{"J1", tuple_json(J1)}, {"J2", tuple_json(J2)}, {"J3", tuple_json(J3)},
                            {"j", j}, {"sample", *rep.failing_sample}, {"law", rep.failing_law}});
            }
        }
        c.values = {{"exhaustive", exhaustive}, {"triples", triples.size()}};
    } else {
        c.values = {{"exhaustive", true}, {"triples", 1}, {"note", "single chart"}};
    }
    ctx.out.push_back(std::move(c));
}

void check_transition(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"transition"};
    std::vector<int> expected_sizes{d.q()};
    for (int p = 2; p <= d.r(); ++p) expected_sizes.push_back(d.q() - 1);
    bool exhaustive = true;
    const auto triples = d.r() >= 2 ? chart_triples(ctx, exhaustive)
                                    : std::vector<std::array<WitnessTuple, 3>>{{WitnessTuple{}, WitnessTuple{}, WitnessTuple{}}};
    std::set<std::pair<WitnessTuple, WitnessTuple>> pairs;
    for (const auto& tr : triples) {
        pairs.insert({tr[0], tr[1]});
        pairs.insert({tr[1], tr[2]});
        pairs.insert({tr[0], tr[2]});
    }
    std::uint64_t pair_index = 0;
    for (const auto& [J1, J2] : pairs) {
        const std::uint64_t pi = pair_index++;
        for (int s = 0; s < ctx.cfg.samples && c.pass; ++s) {
            Sampler rng = ctx.sampler("transition:" + std::to_string(pi), static_cast<std::uint64_t>(s));
            CellPoint x = rng.semistable_point(ctx.datum);
            for (const auto& J : {J1, J2})
                for (int j = 1; j <= J.columns(); ++j)
                    if (x.at(J[j], j).is_zero()) x.set(J[j], j, rng.nonzero());
            const ChartPoint h1 = chart_map(J1, x), h2 = chart_map(J2, x);
            const TransitionBlocks g = transition_matrix(J1, J2, d, h2.base);
            ++c.samples;
            int total = 0;
            for (int sz : g.sizes()) total += sz;
            if (g.sizes() != expected_sizes || total != d.r() * (d.q() - 1) + 1)
                c.fail({{"sizes", g.sizes()}, {"expected", expected_sizes}});
            const FiberVector moved = apply_blocks(g, d, h2.fiber);
            if (moved != h1.fiber || !projectively_equal(moved, h1.fiber))
                c.fail({{"J1", tuple_json(J1)}, {"J2", tuple_json(J2)}, {"sample", s}, {"point", to_json(x)}});
        }
    }
    c.values = {{"block_sizes", expected_sizes}, {"pairs", pairs.size()}, {"exhaustive", exhaustive}};
    ctx.out.push_back(std::move(c));
}

void check_b_equivariance(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"b_equivariance"};
    if (d.r() >= 2) {
        const DatumPtr base = build_datum(d.r() - 1, d.q());
        ESequenceCache cache;
        for (int s = 0; s < ctx.cfg.samples && c.pass; ++s) {
            Sampler rng = ctx.sampler(c.name, static_cast<std::uint64_t>(s));
            const WitnessTuple J1 = rng.witness_tuple(d.r() - 1, d.q());
            const WitnessTuple J2 = rng.witness_tuple(d.r() - 1, d.q());
            const CellPoint y = rng.overlap_point(base, {J1, J2});
            const TorusElement t = rng.torus(d.r() - 1);
            const CellPoint ty = torus_act(t, y);
            for (int j = 0; j <= d.r() - 1; ++j) {
                ++c.samples;
                Scalar delta = Scalar::one(ctx.cfg.field);
                for (int l = 1; l <= j; ++l) delta *= t[l];
                const bool equivariant = b_value(J1, j, ty, cache) == delta * b_value(J1, j, y);
                const bool constant = transition(J1, J2, j, ty) == transition(J1, J2, j, y);
                if (!equivariant || !constant)
                    c.fail({{"J1", tuple_json(J1)}, {"J2", tuple_json(J2)}, {"j", j}, {"sample", s},
                            {"equivariant", equivariant}, {"orbit_constant", constant}});
            }
        }
    }
    c.values = {{"applicable", d.r() >= 2}};
    ctx.out.push_back(std::move(c));
}

void check_chart_bijection(Context& ctx) {
    const auto& d = *ctx.datum;
    const int r = d.r();
    Check c{"chart_bijection"};
    bool exhaustive = false;
    const auto charts = tuples_for(ctx, r - 1, c.name, exhaustive);
    std::uint64_t chart_index = 0;
    for (const auto& J : charts) {
        const std::uint64_t ci = chart_index++;
        for (int s = 0; s < ctx.cfg.samples && c.pass; ++s) {
            Sampler rng = ctx.sampler("chart_bijection:" + std::to_string(ci), static_cast<std::uint64_t>(s));
            const CellPoint x = rng.semistable_point(ctx.datum);
            CellPoint xj = x;
            for (int j = 1; j <= J.columns(); ++j)
                if (xj.at(J[j], j).is_zero()) xj.set(J[j], j, rng.nonzero());
            const ChartPoint h = chart_map(J, xj);
            ++c.samples;
            auto bad = [&](const char* what, const Json& extra = Json::object()) {
                Json ce = {{"J", tuple_json(J)}, {"sample", s}, {"point", to_json(xj)}, {"failed", what}};
                for (auto it = extra.begin(); it != extra.end(); ++it) ce[it.key()] = it.value();
                c.fail(ce);
            };

            // chart_map after chart_inverse returns the same chart point.
            const CellPoint back = chart_inverse(J, h);
            const ChartPoint h_back = chart_map(J, back);
            if (!(h_back.fiber == h.fiber) || !(h_back.base.has_value() == h.base.has_value()) ||
                (h.base && !(*h_back.base == *h.base)))
                bad("map_after_inverse");
            // chart_inverse after chart_map recovers x up to the torus.
            if (!orbit_solve(xj, back).equivalent()) bad("inverse_after_map");

            // A moved base and a rescaled fiber name the same quotient point.
            ChartPoint moved = h;
            if (moved.base) moved.base = torus_act(rng.torus(r - 1), *moved.base);
            const Scalar scale = rng.nonzero();
            for (auto& v : moved.fiber) v *= scale;
            const CellPoint x_moved = chart_inverse(J, moved);
            if (!orbit_solve(xj, x_moved).equivalent() || !same_quotient_point(h, chart_map(J, x_moved)))
                bad("moved_representative");

            // Separation: equal chart images exactly when the points are orbit-equivalent.
            const TorusElement t = rng.torus(r);
            std::vector<std::pair<const char*, CellPoint>> partners{{"torus_image", torus_act(t, xj)}};
            CellPoint y = rng.overlap_point(ctx.datum, {J});
            partners.push_back({"random", y});
            if (r >= 2) {
                CellPoint base_changed = xj;
                base_changed.set(J[1], 1, xj.at(J[1], 1) + Scalar::one(ctx.cfg.field));
                if (!base_changed.at(J[1], 1).is_zero()) partners.push_back({"base_changed", base_changed});
            }
            for (const auto& [label, other] : partners) {
                const bool orbit = orbit_solve(xj, other).equivalent();
                const bool chart = same_quotient_point(h, chart_map(J, other));
                if (orbit != chart || (std::string(label) == "torus_image" && !orbit))
                    bad("separation", {{"partner", label}, {"orbit", orbit}, {"chart", chart}});
            }
        }
    }
    c.values = {{"exhaustive", exhaustive}, {"charts", charts.size()}};
    ctx.out.push_back(std::move(c));
}

// ---------------------------------------------------------------- tower

void check_tower(Context& ctx) {
    const auto& d = *ctx.datum;
    Check c{"tower"};
    const auto dims = tower_dimensions(d.r(), d.q());
    std::vector<long long> from_word;
    for (int k = 0; k <= d.r(); ++k) {
        from_word.push_back(tower_dimension_from_word(k, d.q()));
        ++c.samples;
        if (dims[k] != from_word.back()) c.fail({{"k", k}, {"recurrence", dims[k]}, {"word", from_word.back()}});
    }
    const long long fiber_dim = dims[d.r()] - dims[d.r() - 1];
    if (fiber_dim != static_cast<long long>(d.r()) * (d.q() - 1) ||
        static_cast<long long>(d.c_set(d.r()).size()) != fiber_dim + 1)
        c.fail({{"fiber_dimension", fiber_dim}});
    c.values = {{"dims", dims}, {"fiber_dimension", fiber_dim}};
    ctx.out.push_back(std::move(c));
}

Json record(const SuiteConfig& cfg, const Check& c) {
    Json rec = {{"check", c.name},
                {"params", {{"r", cfg.r}, {"q", cfg.q}, {"field", cfg.field.to_string()}}},
                {"status", c.pass ? "pass" : "fail"},
                {"samples", c.samples},
                {"seed", std::to_string(cfg.seed)}};
    rec[c.pass ? "witness" : "counterexample"] = c.evidence;
    rec["values"] = c.values;
    return rec;
}

} // namespace

void SuiteConfig::validate() const {
    if (r < 1) throw ConfigError("r must be at least 1");
    if (q < 2) throw ConfigError("q must be at least 2");
    if (samples < 1) throw ConfigError("samples must be at least 1");
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw ConfigError("unknown suite: " + suite);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemmas", "orbits", "sections", "charts", "tower"};
    return names;
}

std::string VerifyReport::to_jsonl() const {
    std::ostringstream os;
    for (const auto& r : records) os << r.dump() << '\n';
    return os.str();
}

VerifyReport run_verify(const SuiteConfig& cfg) {
    cfg.validate();
    Context ctx{cfg, build_datum(cfg.r, cfg.q), {}};
    auto want = [&](const char* s) { return cfg.suite == "all" || cfg.suite == s; };

    if (want("lemmas")) {
        check_hm_pairing(ctx);
        check_word(ctx);
        check_floor(ctx);
        check_partition(ctx);
        check_e_sequence(ctx);
        check_beta_pairings(ctx);
        check_gamma_pairings(ctx);
        check_stabilizer(ctx);
        check_semistability_patterns(ctx);
        check_commutation(ctx);
    }
    if (want("orbits")) {
        check_torus_invariance(ctx);
        check_orbit_roundtrip(ctx);
        check_orbit_separation(ctx);
        check_restrict_semistable(ctx);
    }
    if (want("sections")) check_sections(ctx);
    if (want("charts")) {
        check_cocycle(ctx);
        check_transition(ctx);
        check_b_equivariance(ctx);
        check_chart_bijection(ctx);
    }
    if (want("tower")) check_tower(ctx);

    std::sort(ctx.out.begin(), ctx.out.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    VerifyReport rep;
    int passed = 0, failed = 0;
    for (const auto& c : ctx.out) {
        rep.records.push_back(record(cfg, c));
        (c.pass ? passed : failed)++;
    }
    rep.passed = failed == 0;
    rep.records.push_back({{"check", "summary"},
                           {"params", {{"r", cfg.r}, {"q", cfg.q}, {"field", cfg.field.to_string()}}},
                           {"suite", cfg.suite},
                           {"status", rep.passed ? "pass" : "fail"},
                           {"passed", passed},
                           {"failed", failed},
                           {"seed", std::to_string(cfg.seed)}});
    return rep;
}

} // namespace sgk
