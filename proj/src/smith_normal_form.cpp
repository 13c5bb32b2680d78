#include "sgk/smith_normal_form.hpp"

#include <stdexcept>
#include <utility>

namespace sgk {

namespace {

std::size_t cols_of(const IntMatrix& a) { return a.empty() ? 0 : a[0].size(); }

} // namespace

std::vector<mpz_class> smith_invariant_factors(IntMatrix a) {
    const std::size_t rows = a.size(), cols = cols_of(a);
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");

    std::vector<mpz_class> factors;
    for (std::size_t t = 0; t < rows && t < cols; ++t) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        auto find_pivot = [&](std::size_t& pi, std::size_t& pj) {
            bool found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
            return found;
        };
        std::size_t pi = t, pj = t;
        if (!find_pivot(pi, pj)) break;

        for (;;) {
            std::swap(a[t], a[pi]);
            for (auto& row : a) std::swap(row[t], row[pj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                mpz_class f;
                mpz_fdiv_q(f.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= f * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                mpz_class f;
                mpz_fdiv_q(f.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                for (std::size_t i = t; i < rows; ++i) a[i][j] -= f * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (clean) {
                // Divisibility: fold any entry not divisible by the pivot into row t.
                bool divides = true;
                for (std::size_t i = t + 1; i < rows && divides; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                            divides = false;
                            break;
                        }
                if (divides) break;
            }
            pi = t;
            pj = t;
            find_pivot(pi, pj);
        }
        factors.push_back(abs(a[t][t]));
    }
    return factors;
}

mpz_class bareiss_determinant(IntMatrix a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
    if (n == 0) return 1;

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace sgk
