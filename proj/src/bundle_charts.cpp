#include "sgk/bundle_charts.hpp"

#include "sgk/sampling.hpp"

#include <string>

namespace sgk {

namespace {

Scalar b_from_sequence(const WitnessTuple& J, const ESequence& e, const CellPoint& y) {
    Scalar b = Scalar::one(y.field());
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
        const Scalar& v = y.at(J[e[k]], e[k]);
        if (v.is_zero())
            throw ChartError("point outside chart: coordinate (" + std::to_string(J[e[k]]) + "," +
                             std::to_string(e[k]) + ") vanishes");
        b *= v;
    }
    return b;
}

void require_base_shape(const WitnessTuple& J, int j, const CellPoint& y) {
    if (J.columns() != y.datum().r())
        throw std::invalid_argument("witness tuple and base point have different column counts");
    if (j < 0 || j > J.columns()) throw std::out_of_range("b-function level out of range");
}

void require_chart_tuple(const WitnessTuple& J, const MinimalSchubertDatum& d) {
    if (J.columns() != d.r() - 1)
        throw std::invalid_argument("chart tuple must have r-1 columns");
    J.validate(d.q());
}

// b(J(p-1))(base) for every block p = 1..r; base is absent only when r = 1.
std::vector<Scalar> block_b_values(const WitnessTuple& J, const MinimalSchubertDatum& d,
                                   const std::optional<CellPoint>& base, const Field& f) {
    std::vector<Scalar> out{Scalar::one(f)};
    for (int p = 2; p <= d.r(); ++p) out.push_back(b_value(J, p - 1, *base));
    return out;
}

} // namespace

Scalar b_value(const WitnessTuple& J, int j, const CellPoint& y) {
    require_base_shape(J, j, y);
    if (j == 0) return Scalar::one(y.field());
    return b_from_sequence(J, e_sequence(J, j, y.datum().q()), y);
}

Scalar b_value(const WitnessTuple& J, int j, const CellPoint& y, ESequenceCache& cache) {
    require_base_shape(J, j, y);
    if (j == 0) return Scalar::one(y.field());
    return b_from_sequence(J, cache.get(J, j, y.datum().q()), y);
}

Scalar transition(const WitnessTuple& J1, const WitnessTuple& J2, int j, const CellPoint& y) {
    return b_value(J1, j, y) / b_value(J2, j, y);
}

CocycleReport cocycle_check(const WitnessTuple& J1, const WitnessTuple& J2,
                            const WitnessTuple& J3, int j, DatumPtr base_datum, const Field& field,
                            int samples, std::uint64_t seed) {
    CocycleReport rep;
    const std::string label = "cocycle";
    for (int s = 0; s < samples; ++s) {
        Sampler rng(stream_seed(seed, label, static_cast<std::uint64_t>(s)), field);
        const CellPoint z = rng.overlap_point(base_datum, {J1, J2, J3});
        const Scalar b12 = transition(J1, J2, j, z), b23 = transition(J2, J3, j, z),
                     b13 = transition(J1, J3, j, z), b21 = transition(J2, J1, j, z),
                     b11 = transition(J1, J1, j, z);
        ++rep.samples;
        const char* broken = nullptr;
        if (!(b11 == Scalar::one(field))) broken = "identity";
        else if (!(b12.inverse() == b21)) broken = "inverse";
        else if (!(b12 * b23 == b13)) broken = "cocycle";
        if (broken) {
            rep.passed = false;
            rep.failing_sample = s;
            rep.failing_law = broken;
            return rep;
        }
    }
    return rep;
}

ChartPoint chart_map(const WitnessTuple& J, const CellPoint& x) {
    const auto& d = x.datum();
    require_chart_tuple(J, d);
    ChartPoint cp{x.datum_ptr(), std::nullopt, {}};
    if (d.r() >= 2) cp.base = restrict(x);
    const auto b = block_b_values(J, d, cp.base, x.field());

    bool nonzero = false;
    for (int k : d.c_set(d.r())) {
        const int p = d_index(k, d.r(), d.q());
        cp.fiber.push_back(b[p - 1] * x.at(k, d.r()));
        nonzero = nonzero || !cp.fiber.back().is_zero();
    }
    if (!nonzero) throw ChartError("fiber vanishes: column r has no nonzero entry");
    return cp;
}

CellPoint chart_inverse(const WitnessTuple& J, const ChartPoint& cp) {
    const auto& d = *cp.datum;
    require_chart_tuple(J, d);
    if (cp.base.has_value() != (d.r() >= 2))
        throw std::invalid_argument("chart point base must be present exactly when r >= 2");
    const auto& cr = d.c_set(d.r());
    if (cp.fiber.size() != cr.size())
        throw std::invalid_argument("fiber length must be " + std::to_string(cr.size()));
    const Field f = cp.fiber.front().field();
    if (cp.base && !(cp.base->field() == f)) throw std::invalid_argument("base and fiber fields differ");

    CellPoint x(cp.datum, f);
    if (cp.base)
        for (int s = 0; s < cp.base->datum().dimension(); ++s) x.set_slot(s, cp.base->value_at_slot(s));
    const auto b = block_b_values(J, d, cp.base, f);
    for (std::size_t idx = 0; idx < cr.size(); ++idx) {
        const int k = cr[idx];
        const int p = d_index(k, d.r(), d.q());
        x.set(k, d.r(), cp.fiber[idx] / b[p - 1]);
    }
    return x;
}

std::vector<int> TransitionBlocks::sizes() const {
    std::vector<int> out;
    for (const auto& r : rows) out.push_back(static_cast<int>(r.size()));
    return out;
}

TransitionBlocks transition_matrix(const WitnessTuple& J1, const WitnessTuple& J2,
                                   const MinimalSchubertDatum& datum,
                                   const std::optional<CellPoint>& base) {
    require_chart_tuple(J1, datum);
    require_chart_tuple(J2, datum);
    if (base.has_value() != (datum.r() >= 2))
        throw std::invalid_argument("base must be present exactly when r >= 2");
    const Field f = base ? base->field() : Field::rational();
    TransitionBlocks g;
    const auto b1 = block_b_values(J1, datum, base, f), b2 = block_b_values(J2, datum, base, f);
    for (int p = 1; p <= datum.r(); ++p) {
        g.scalars.push_back(b1[p - 1] / b2[p - 1]);
        g.rows.push_back(block_rows(p, datum.q()));
    }
    return g;
}

FiberVector apply_blocks(const TransitionBlocks& g, const MinimalSchubertDatum& datum,
                         const FiberVector& fiber) {
    const auto& cr = datum.c_set(datum.r());
    if (fiber.size() != cr.size()) throw std::invalid_argument("fiber length mismatch");
    FiberVector out;
    for (std::size_t idx = 0; idx < cr.size(); ++idx) {
        const int p = d_index(cr[idx], datum.r(), datum.q());
        Scalar s = g.scalars.at(static_cast<std::size_t>(p - 1));
        if (!(s.field() == fiber[idx].field())) s = Scalar::from_rational(fiber[idx].field(), s.rational());
        out.push_back(s * fiber[idx]);
    }
    return out;
}

bool projectively_equal(const FiberVector& a, const FiberVector& b) {
    if (a.size() != b.size()) return false;
    std::size_t k = 0;
    while (k < a.size() && a[k].is_zero()) ++k;
    if (k == a.size() || b[k].is_zero()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] * b[k] == b[i] * a[k])) return false;
    return true;
}

bool same_quotient_point(const ChartPoint& a, const ChartPoint& b) {
    if (a.datum->r() != b.datum->r() || a.datum->q() != b.datum->q()) return false;
    if (a.base.has_value() != b.base.has_value()) return false;
    if (a.base) {
        if (!is_semistable(*a.base) || !is_semistable(*b.base))
            throw std::invalid_argument("chart bases must be semistable");
        if (!orbit_solve(*a.base, *b.base).equivalent()) return false;
    }
    return projectively_equal(a.fiber, b.fiber);
}

std::vector<long long> tower_dimensions(int r, int q) {
    if (r < 0 || q < 2) throw std::invalid_argument("need r >= 0 and q >= 2");
    std::vector<long long> dims{0};
    for (long long k = 1; k <= r; ++k) dims.push_back(dims.back() + k * (q - 1));
    return dims;
}

long long tower_dimension_from_word(int k, int q) {
    if (k == 0) return 0;
    return minimal_word(k, q).length() - k;
}

} // namespace sgk
