#include "sgk/git_engine.hpp"

#include <stdexcept>

namespace sgk {

TorusElement::TorusElement(std::vector<Scalar> components) : t_(std::move(components)) {
    if (t_.empty()) throw std::invalid_argument("torus element needs at least one component");
    for (const auto& c : t_) {
        if (!(c.field() == t_.front().field()))
            throw std::invalid_argument("torus components over different fields");
        if (c.is_zero()) throw std::invalid_argument("torus component must be nonzero");
    }
}

TorusElement TorusElement::identity(int r, const Field& f) {
    return TorusElement(std::vector<Scalar>(static_cast<std::size_t>(r), Scalar::one(f)));
}

TorusElement TorusElement::truncate(int k) const {
    if (k < 1 || k > rank()) throw std::out_of_range("truncation out of range");
    return TorusElement(std::vector<Scalar>(t_.begin(), t_.begin() + k));
}

mpq_class hm_pairing(const Permutation& w, const WeightVector& chi, int j) {
    return -coweight_pair(apply(w, chi), j);
}

SemistabilityReport semistability_report(const CellPoint& p) {
    const auto& d = p.datum();
    SemistabilityReport rep;
    rep.witnesses.assign(static_cast<std::size_t>(d.r()), 0);
    for (int j = 1; j <= d.r(); ++j) {
        for (int i : d.c_set(j))
            if (!p.at(i, j).is_zero()) rep.witnesses[j - 1] = i;
        if (rep.witnesses[j - 1] == 0 && rep.failing_column == 0) rep.failing_column = j;
    }
    rep.semistable = rep.failing_column == 0;
    return rep;
}

bool is_semistable(const CellPoint& p) { return semistability_report(p).semistable; }

namespace {

// prod_{l=lo}^{hi} t_l
Scalar interval_product(const TorusElement& t, int lo, int hi) {
    Scalar s = Scalar::one(t.field());
    for (int l = lo; l <= hi; ++l) s *= t[l];
    return s;
}

} // namespace

CellPoint torus_act(const TorusElement& t, const CellPoint& p) {
    const auto& d = p.datum();
    if (t.rank() != d.r()) throw std::invalid_argument("torus rank does not match the datum");
    if (!(t.field() == p.field())) throw std::invalid_argument("torus and point fields differ");
    CellPoint out(p.datum_ptr(), p.field());
    for (int s = 0; s < d.dimension(); ++s) {
        const Cell c = d.cells()[s];
        out.set_slot(s, interval_product(t, d_index(c.i, c.j, d.q()), c.j) * p.value_at_slot(s));
    }
    return out;
}

std::string to_string(OrbitResult::Status s) {
    switch (s) {
    case OrbitResult::Status::Equivalent: return "equivalent";
    case OrbitResult::Status::ZeroPatternMismatch: return "zero_pattern_mismatch";
    case OrbitResult::Status::RatioMismatch: return "ratio_mismatch";
    }
    return "unknown";
}

OrbitResult orbit_solve(const CellPoint& a, const CellPoint& b) {
    const auto& d = a.datum();
    if (d.r() != b.datum().r() || d.q() != b.datum().q())
        throw std::invalid_argument("orbit_solve needs points of the same datum");
    if (!(a.field() == b.field())) throw std::invalid_argument("orbit_solve needs a common field");

    OrbitResult res;
    for (int s = 0; s < d.dimension(); ++s) {
        if (a.value_at_slot(s).is_zero() != b.value_at_slot(s).is_zero()) {
            res.status = OrbitResult::Status::ZeroPatternMismatch;
            res.offending = d.cells()[s];
            return res;
        }
    }
    const auto rep = semistability_report(a);
    if (!rep.semistable) throw std::invalid_argument("orbit_solve needs semistable points");

    // The witness exponents are 1 on [d(i_j, j), j]: lower unitriangular in j.
    std::vector<Scalar> t;
    for (int j = 1; j <= d.r(); ++j) {
        const int i = rep.witnesses[j - 1];
        Scalar rho = b.at(i, j) / a.at(i, j);
        for (int l = d_index(i, j, d.q()); l < j; ++l) rho /= t[l - 1];
        t.push_back(std::move(rho));
    }
    TorusElement te(std::move(t));

    const CellPoint image = torus_act(te, a);
    for (int s = 0; s < d.dimension(); ++s) {
        if (!(image.value_at_slot(s) == b.value_at_slot(s))) {
            res.status = OrbitResult::Status::RatioMismatch;
            res.offending = d.cells()[s];
            return res;
        }
    }
    res.status = OrbitResult::Status::Equivalent;
    res.t = std::move(te);
    return res;
}

IntMatrix stabilizer_lattice(const WitnessTuple& J, const MinimalSchubertDatum& datum) {
    const int n = datum.n(), q = datum.q();
    if (J.columns() != datum.r()) throw std::invalid_argument("witness tuple must have r columns");
    J.validate(q);

    auto coefficients = [&](const WeightVector& v) {
        std::vector<mpz_class> row;
        for (const auto& c : v.simple_root_coefficients()) {
            if (c.get_den() != 1) throw std::logic_error("root with non-integral coefficients");
            row.push_back(c.get_num());
        }
        return row;
    };

    IntMatrix m;
    for (int j = 1; j <= datum.r(); ++j) m.push_back(coefficients(datum.beta(J[j], j)));
    for (int k = 1; k <= n - 1; ++k)
        if (k % q != 0) m.push_back(coefficients(simple_root(k, n)));
    return m;
}

bool stabilizer_trivial(const WitnessTuple& J, const MinimalSchubertDatum& datum) {
    const IntMatrix m = stabilizer_lattice(J, datum);
    const auto factors = smith_invariant_factors(m);
    if (factors.size() != m.size()) return false;
    for (const auto& f : factors)
        if (f != 1) return false;
    return true;
}

bool minimality_floor_check(int r, int q) {
    if (r < 1 || q < 2) throw std::invalid_argument("need r >= 1 and q >= 2");
    const long long n = static_cast<long long>(r) * q + 1;
    for (long long j = 1; j <= r; ++j)
        if ((j * q * r) / n != j - 1) return false;
    return true;
}

} // namespace sgk
