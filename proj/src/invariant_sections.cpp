#include "sgk/invariant_sections.hpp"

#include <set>
#include <stdexcept>

namespace sgk {

void BetaMonomial::add_factor(PlueckerFactor f) {
    if (f.power < 0) throw std::invalid_argument("negative factor power");
    for (const Cell& c : f.cells)
        if (!datum_->in_c_set(c.i, c.j))
            throw std::invalid_argument("(" + std::to_string(c.i) + "," + std::to_string(c.j) +
                                        ") is not a cell coordinate");
    factors_.push_back(std::move(f));
}

void BetaMonomial::multiply(const BetaMonomial& other) {
    if (other.datum_->r() != datum_->r() || other.datum_->q() != datum_->q())
        throw std::invalid_argument("monomials over different data");
    for (const auto& f : other.factors_) factors_.push_back(f);
}

std::map<Cell, int> BetaMonomial::exponents() const {
    std::map<Cell, int> e;
    for (const auto& f : factors_)
        for (const Cell& c : f.cells) e[c] += f.power;
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    return e;
}

int BetaMonomial::degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.power;
    return d;
}

bool BetaMonomial::columns_distinct() const {
    for (const auto& f : factors_) {
        std::set<int> seen;
        for (const Cell& c : f.cells)
            if (!seen.insert(c.j).second) return false;
    }
    return true;
}

std::vector<int> chain(const WitnessTuple& J, int start, int q) {
    if (start < 1 || start > J.columns()) throw std::out_of_range("chain start out of range");
    auto least_k = [q](int i) {
        int k = 1;
        while (i > k * q) ++k;
        return k;
    };
    std::vector<int> ks{least_k(J[start])};
    while (ks.back() != 1) {
        const int next = least_k(J[ks.back() - 1]);
        if (next >= ks.back()) throw std::logic_error("chain failed to decrease");
        ks.push_back(next);
    }
    return ks;
}

namespace {

PlueckerFactor chain_factor(const WitnessTuple& J, int start, int q, int power) {
    PlueckerFactor f;
    f.power = power;
    f.cells.push_back({J[start], start});
    for (int k : chain(J, start, q))
        if (k > 1) f.cells.push_back({J[k - 1], k - 1});
    return f;
}

void require_full(const WitnessTuple& J, const MinimalSchubertDatum& d) {
    if (J.columns() != d.r()) throw std::invalid_argument("witness tuple must have r columns");
    J.validate(d.q());
}

} // namespace

BetaMonomial monomial_Mr(const WitnessTuple& J, DatumPtr datum) {
    const auto& d = *datum;
    require_full(J, d);
    BetaMonomial m(datum);
    m.add_factor(chain_factor(J, d.r(), d.q(), d.n() - d.r()));
    return m;
}

BetaMonomial monomial_Mprime(const WitnessTuple& J, int j, DatumPtr datum) {
    const auto& d = *datum;
    require_full(J, d);
    if (j < 1 || j > d.r() - 1) throw std::out_of_range("M' index must lie in 1..r-1");
    BetaMonomial m(datum);
    m.add_factor(chain_factor(J, j, d.q(), 1));
    return m;
}

BetaMonomial assemble_invariant(const WitnessTuple& J, DatumPtr datum) {
    BetaMonomial m = monomial_Mr(J, datum);
    for (int j = 1; j < datum->r(); ++j) m.multiply(monomial_Mprime(J, j, datum));
    return m;
}

WeightVector weight(const BetaMonomial& m) {
    const auto& d = m.datum();
    WeightVector w(d.n());
    for (const auto& [cell, e] : m.exponents()) w -= mpq_class(e) * d.beta(cell.i, cell.j);
    return w;
}

Scalar evaluate(const BetaMonomial& m, const CellPoint& p) {
    if (p.datum().r() != m.datum().r() || p.datum().q() != m.datum().q())
        throw std::invalid_argument("monomial and point over different data");
    Scalar v = Scalar::one(p.field());
    for (const auto& [cell, e] : m.exponents()) v *= p.at(cell.i, cell.j).pow(e);
    return v;
}

} // namespace sgk
