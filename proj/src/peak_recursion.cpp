#include "sgk/peak_recursion.hpp"

#include <stdexcept>
#include <string>

namespace sgk {

WitnessTuple WitnessTuple::prefix(int j) const {
    if (j < 0 || j > columns()) throw std::out_of_range("prefix length out of range");
    return WitnessTuple(std::vector<int>(indices_.begin(), indices_.begin() + j));
}

void WitnessTuple::validate(int q) const {
    for (int j = 1; j <= columns(); ++j) {
        int i = (*this)[j];
        bool pinned = false;
        for (int k = 1; k <= j; ++k) pinned = pinned || i == k * q + 1;
        if (i < 1 || i > j * q || pinned)
            throw std::invalid_argument("witness index " + std::to_string(i) + " is not in C_" +
                                        std::to_string(j));
    }
}

std::vector<int> block_rows(int p, int q) {
    std::vector<int> rows;
    const int lo = p == 1 ? 1 : (p - 1) * q + 2;
    for (int i = lo; i <= p * q; ++i) rows.push_back(i);
    return rows;
}

int d_index(int i, int j, int q) {
    for (int p = 1; p <= j; ++p) {
        const int lo = p == 1 ? 1 : (p - 1) * q + 2;
        if (lo <= i && i <= p * q) return p;
    }
    throw std::invalid_argument(std::to_string(i) + " is not in C_" + std::to_string(j));
}

ESequence e_sequence(const WitnessTuple& J, int j, int q) {
    if (j < 1 || j > J.columns()) throw std::out_of_range("column out of range");
    ESequence e{j};
    while (e.back() != 0) {
        const int prev = e.back();
        const int next = d_index(J[prev], prev, q) - 1;
        if (next >= prev) throw std::logic_error("e-sequence failed to decrease");
        e.push_back(next);
    }
    return e;
}

const ESequence& ESequenceCache::get(const WitnessTuple& J, int j, int q) {
    auto key = std::pair{J.prefix(j), q};
    std::lock_guard lock(mu_);
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(key, e_sequence(J, j, q)).first;
    return it->second;
}

WeightVector gamma_sum(const WitnessTuple& J, int j, const MinimalSchubertDatum& datum) {
    const ESequence e = e_sequence(J, j, datum.q());
    WeightVector g(datum.n());
    for (std::size_t k = 0; k + 1 < e.size(); ++k) g += datum.beta(J[e[k]], e[k]);
    return g;
}

std::vector<std::vector<int>> beta_pair_table(const MinimalSchubertDatum& datum) {
    std::vector<std::vector<int>> table;
    for (const Cell& c : datum.cells()) {
        std::vector<int> row;
        for (int l = 1; l <= datum.r(); ++l) {
            mpq_class v = coweight_pair(datum.beta(c.i, c.j), l * datum.q());
            row.push_back(static_cast<int>(v.get_num().get_si()));
        }
        table.push_back(std::move(row));
    }
    return table;
}

std::vector<WitnessTuple> all_witness_tuples(int m, int q) {
    std::vector<std::vector<int>> out{{}};
    for (int j = 1; j <= m; ++j) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : out) {
            for (int i = 1; i <= j * q; ++i) {
                if (i > 1 && (i - 1) % q == 0) continue; // i = kq + 1
                auto t = prefix;
                t.push_back(i);
                next.push_back(std::move(t));
            }
        }
        out = std::move(next);
    }
    std::vector<WitnessTuple> tuples;
    tuples.reserve(out.size());
    for (auto& v : out) tuples.emplace_back(std::move(v));
    return tuples;
}

} // namespace sgk
