#include "sgk/schubert_cell.hpp"

#include <map>
#include <mutex>
#include <set>
#include <string>

namespace sgk {

std::vector<int> MinimalSchubertDatum::one_line() const {
    std::vector<int> out;
    for (int k = 1; k <= r_; ++k) out.push_back(perm_(k));
    return out;
}

int MinimalSchubertDatum::slot_or_none(int i, int j) const {
    if (j < 1 || j > r_ || i < 1 || i > n()) return -1;
    return slot_table_[static_cast<std::size_t>((i - 1) * r_ + (j - 1))];
}

int MinimalSchubertDatum::slot(int i, int j) const {
    int s = slot_or_none(i, j);
    if (s < 0)
        throw std::out_of_range("(" + std::to_string(i) + "," + std::to_string(j) +
                                ") is not a cell coordinate");
    return s;
}

ReducedWord minimal_word(int r, int q) {
    ReducedWord w{r * q + 1, {}};
    for (int j = 1; j <= r; ++j)
        for (int a = j * q; a >= j; --a) w.letters.push_back(a);
    return w;
}

DatumPtr build_datum(int r, int q) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (q < 2) throw std::invalid_argument("q must be at least 2");

    static std::mutex mu;
    static std::map<std::pair<int, int>, DatumPtr> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find({r, q}); it != cache.end()) return it->second;
    }

    auto d = std::shared_ptr<MinimalSchubertDatum>(new MinimalSchubertDatum());
    d->r_ = r;
    d->q_ = q;
    const int n = d->n();
    d->word_ = minimal_word(r, q);
    d->perm_ = word_to_permutation(d->word_);

    if (!is_reduced(d->word_)) throw std::logic_error("minimal word is not reduced");
    for (int k = 1; k <= r; ++k)
        if (d->perm_(k) != k * q + 1)
            throw std::logic_error("permutation convention self-check failed: w(" +
                                   std::to_string(k) + ") = " + std::to_string(d->perm_(k)));
    if (!d->perm_.is_grassmannian(r))
        throw std::logic_error("w_{r,n} is not a minimal coset representative");

    d->slot_table_.assign(static_cast<std::size_t>(n * r), -1);
    for (int j = 1; j <= r; ++j) {
        std::vector<int> c;
        for (int i = 1; i <= j * q + 1; ++i) {
            bool pinned = false;
            for (int k = 1; k <= j; ++k) pinned = pinned || i == k * q + 1;
            if (!pinned) c.push_back(i);
        }
        for (int i : c) {
            d->slot_table_[static_cast<std::size_t>((i - 1) * r + (j - 1))] =
                static_cast<int>(d->cells_.size());
            d->cells_.push_back({i, j});
            WeightVector beta(n);
            for (int k = i; k <= j * q; ++k) beta += simple_root(k, n);
            std::vector<int> pairs;
            for (int l = 1; l <= r; ++l) {
                mpq_class v = coweight_pair(beta, l * q);
                pairs.push_back(static_cast<int>(v.get_num().get_si()));
            }
            d->betas_.push_back(std::move(beta));
            d->peak_pairings_.push_back(std::move(pairs));
        }
        d->c_sets_.push_back(std::move(c));
    }

    // The betas must be exactly the inversion set of w.
    auto inv = inversion_roots(d->perm_);
    std::set<std::string> lhs, rhs;
    for (const auto& b : d->betas_) lhs.insert(b.to_string());
    for (const auto& b : inv) rhs.insert(b.to_string());
    if (lhs != rhs || inv.size() != d->betas_.size())
        throw std::logic_error("beta roots disagree with the inversion set of w");

    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(std::pair{r, q}, d);
    return it->second;
}

CellPoint::CellPoint(DatumPtr datum, Field field)
    : datum_(std::move(datum)), field_(field),
      values_(static_cast<std::size_t>(datum_->dimension()), Scalar::zero(field)) {}

void CellPoint::set(int i, int j, Scalar v) { set_slot(datum_->slot(i, j), std::move(v)); }

void CellPoint::set_slot(int s, Scalar v) {
    if (!(v.field() == field_)) throw std::invalid_argument("field mismatch in cell point");
    values_.at(static_cast<std::size_t>(s)) = std::move(v);
}

bool operator==(const CellPoint& a, const CellPoint& b) {
    return a.datum_->r() == b.datum_->r() && a.datum_->q() == b.datum_->q() &&
           a.field_ == b.field_ && a.values_ == b.values_;
}

Matrix to_matrix(const CellPoint& p) {
    const auto& d = p.datum();
    const Field& f = p.field();
    Matrix m(static_cast<std::size_t>(d.n()),
             std::vector<Scalar>(static_cast<std::size_t>(d.r()), Scalar::zero(f)));
    for (int j = 1; j <= d.r(); ++j) m[j * d.q()][j - 1] = Scalar::one(f);
    for (std::size_t s = 0; s < d.cells().size(); ++s) {
        const Cell c = d.cells()[s];
        m[c.i - 1][c.j - 1] = p.value_at_slot(static_cast<int>(s));
    }
    return m;
}

CellPoint from_matrix(DatumPtr datum, const Field& field, const Matrix& a) {
    const auto& d = *datum;
    if (static_cast<int>(a.size()) != d.n())
        throw PatternError("matrix must have " + std::to_string(d.n()) + " rows");
    CellPoint p(datum, field);
    for (int i = 1; i <= d.n(); ++i) {
        const auto& row = a[i - 1];
        if (static_cast<int>(row.size()) != d.r())
            throw PatternError("row " + std::to_string(i) + " must have " + std::to_string(d.r()) +
                               " entries");
        for (int j = 1; j <= d.r(); ++j) {
            const Scalar& v = row[j - 1];
            if (!(v.field() == field)) throw std::invalid_argument("field mismatch in matrix");
            if (int s = d.slot_or_none(i, j); s >= 0) {
                p.set_slot(s, v);
                continue;
            }
            const bool unit = (i - 1) % d.q() == 0 && (i - 1) / d.q() == j;
            const Scalar expected = unit ? Scalar::one(field) : Scalar::zero(field);
            if (!(v == expected))
                throw PatternError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") must be " + expected.to_string() + ", found " + v.to_string());
        }
    }
    return p;
}

CellPoint restrict(const CellPoint& p) {
    const auto& d = p.datum();
    if (d.r() < 2) throw std::invalid_argument("cannot restrict a point with r = 1");
    CellPoint out(build_datum(d.r() - 1, d.q()), p.field());
    // Columns 1..r-1 are a prefix of the column-major cell order.
    for (int s = 0; s < out.datum().dimension(); ++s) out.set_slot(s, p.value_at_slot(s));
    return out;
}

} // namespace sgk
