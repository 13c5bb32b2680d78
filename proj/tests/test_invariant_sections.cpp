#include <doctest.h>

#include "sgk/git_engine.hpp"
#include "sgk/invariant_sections.hpp"
#include "sgk/sampling.hpp"

using namespace sgk;

namespace {

std::vector<mpq_class> peak_pairings(const WeightVector& w, const MinimalSchubertDatum& d) {
    std::vector<mpq_class> v;
    for (int l = 1; l <= d.r(); ++l) v.push_back(coweight_pair(w, l * d.q()));
    return v;
}

std::vector<mpq_class> q_vec(std::initializer_list<long> v) {
    std::vector<mpq_class> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("chains") {
    CHECK(chain(WitnessTuple({1, 4}), 2, 2) == std::vector<int>{2, 1});
    CHECK(chain(WitnessTuple({1, 1}), 2, 2) == std::vector<int>{1});
    CHECK(chain(WitnessTuple({1, 5, 8}), 2, 3) == std::vector<int>{2, 1});
    CHECK(chain(WitnessTuple({2, 5, 3}), 3, 3) == std::vector<int>{1});
    // k_t = e^t + 1 along the e-sequence.
    for (int r = 1; r <= 3; ++r)
        for (int q = 2; q <= 3; ++q)
            for (const auto& J : all_witness_tuples(r, q))
                for (int j = 1; j <= r; ++j) {
                    const auto ks = chain(J, j, q);
                    const auto e = e_sequence(J, j, q);
                    REQUIRE(ks.size() + 1 == e.size());
                    for (std::size_t t = 0; t < ks.size(); ++t) CHECK(ks[t] == e[t + 1] + 1);
                }
}

TEST_CASE("M_r examples") {
    const auto d22 = build_datum(2, 2);
    const BetaMonomial m = monomial_Mr(WitnessTuple({1, 4}), d22);
    const std::map<Cell, int> expected{{{1, 1}, 3}, {{4, 2}, 3}};
    CHECK(m.exponents() == expected);
    CHECK(m.degree() == 3);
    CHECK(peak_pairings(weight(m), *d22) == q_vec({-3, -3}));

    const BetaMonomial m11 = monomial_Mr(WitnessTuple({1, 1}), d22);
    CHECK(m11.exponents() == std::map<Cell, int>{{{1, 2}, 3}});

    const auto d12 = build_datum(1, 2);
    for (int i : {1, 2}) {
        const BetaMonomial m1 = monomial_Mr(WitnessTuple({i}), d12);
        CHECK(m1.exponents() == std::map<Cell, int>{{{i, 1}, 2}});
        CHECK(peak_pairings(weight(m1), *d12) == q_vec({-2}));
    }
}

TEST_CASE("M'_j examples") {
    const auto d33 = build_datum(3, 3);
    const BetaMonomial m = monomial_Mprime(WitnessTuple({1, 5, 8}), 2, d33);
    CHECK(m.exponents() == std::map<Cell, int>{{{1, 1}, 1}, {{5, 2}, 1}});
    CHECK(peak_pairings(weight(m), *d33) == q_vec({-1, -1, 0}));
    const BetaMonomial m1 = monomial_Mprime(WitnessTuple({3, 5, 8}), 1, d33);
    CHECK(m1.exponents() == std::map<Cell, int>{{{3, 1}, 1}});
    CHECK(peak_pairings(weight(m1), *d33) == q_vec({-1, 0, 0}));
    CHECK_THROWS_AS(monomial_Mprime(WitnessTuple({3, 5, 8}), 3, d33), std::out_of_range);
    CHECK_THROWS_AS(monomial_Mr(WitnessTuple({3, 5}), d33), std::invalid_argument);
}

TEST_CASE("assembled invariant examples") {
    const auto d22 = build_datum(2, 2);
    const BetaMonomial m = assemble_invariant(WitnessTuple({1, 4}), d22);
    CHECK(peak_pairings(weight(m), *d22) == q_vec({-4, -3}));
    CHECK(m.degree() == 4);
    const auto d12 = build_datum(1, 2);
    CHECK(peak_pairings(weight(assemble_invariant(WitnessTuple({2}), d12)), *d12) == q_vec({-2}));
}

TEST_CASE("weights of every constructed monomial") {
    for (int r = 1; r <= 3; ++r)
        for (int q = 2; q <= 3; ++q) {
            const auto d = build_datum(r, q);
            const int n = d->n();
            for (const auto& J : all_witness_tuples(r, q)) {
                const BetaMonomial mr = monomial_Mr(J, d);
                CHECK(mr.columns_distinct());
                for (const auto& v : peak_pairings(weight(mr), *d)) CHECK(v == -(n - r));
                for (int j = 1; j < r; ++j) {
                    const BetaMonomial mp = monomial_Mprime(J, j, d);
                    CHECK(mp.columns_distinct());
                    const auto v = peak_pairings(weight(mp), *d);
                    for (int l = 1; l <= r; ++l) CHECK(v[l - 1] == (l <= j ? -1 : 0));
                    // Independent route: the negated gamma sum.
                    CHECK(weight(mp) == mpq_class(-1) * gamma_sum(J, j, *d));
                }
                const BetaMonomial m1 = assemble_invariant(J, d);
                CHECK(m1.columns_distinct());
                CHECK(m1.degree() == n - 1);
                const WeightVector chi = mpq_class(n) * fundamental_weight(r, n);
                const auto v = peak_pairings(weight(m1), *d);
                for (int l = 1; l <= r; ++l) {
                    CHECK(v[l - 1] == -(n - l));
                    CHECK(v[l - 1] + hm_pairing(d->permutation(), chi, l * q) == 0);
                }
            }
        }
}

TEST_CASE("evaluation and torus equivariance") {
    const auto d = build_datum(2, 2);
    CellPoint p(d, Field::rational());
    CHECK(evaluate(BetaMonomial(d), p) == Scalar::one(Field::rational()));
    p.set(1, 1, Scalar::from_int(Field::rational(), 2));
    p.set(4, 2, Scalar::from_int(Field::rational(), -3));
    CHECK(evaluate(monomial_Mr(WitnessTuple({1, 4}), d), p).to_string() == "-216");

    for (const Field& f : {Field::rational(), Field::prime(2305843009213693951ull)})
        for (int r = 1; r <= 3; ++r)
            for (int q = 2; q <= 3; ++q) {
                const auto dd = build_datum(r, q);
                const int n = dd->n();
                for (int s = 0; s < 30; ++s) {
                    Sampler rng(stream_seed(8, "equivariance", static_cast<std::uint64_t>(s)), f);
                    const WitnessTuple J = rng.witness_tuple(r, q);
                    const CellPoint x = rng.overlap_point(dd, {J});
                    const TorusElement t = rng.torus(r);
                    const BetaMonomial m1 = assemble_invariant(J, dd);
                    Scalar chi = Scalar::one(f);
                    for (int l = 1; l <= r; ++l) chi *= t[l].pow(n - l);
                    CHECK_FALSE(evaluate(m1, x).is_zero());
                    CHECK(evaluate(m1, torus_act(t, x)) == chi * evaluate(m1, x));
                }
            }
}

TEST_CASE("monomial guards") {
    const auto d = build_datum(2, 2);
    BetaMonomial m(d);
    CHECK_THROWS_AS(m.add_factor({{{3, 1}}, 1}), std::invalid_argument);
    m.add_factor({{{1, 1}, {1, 2}}, 2});
    CHECK(m.columns_distinct());
    m.add_factor({{{1, 2}, {2, 2}}, 1});
    CHECK_FALSE(m.columns_distinct());
    CHECK(m.exponents().at({1, 2}) == 3);
}
