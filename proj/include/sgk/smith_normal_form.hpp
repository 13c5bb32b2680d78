#pragma once

#include <gmpxx.h>
#include <vector>

namespace sgk {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Invariant factors d_1 | d_2 | ... of an integer matrix, all positive, one per
/// unit of rank. Zero rows/columns contribute nothing.
std::vector<mpz_class> smith_invariant_factors(IntMatrix a);

/// Determinant of a square integer matrix by fraction-free elimination.
mpz_class bareiss_determinant(IntMatrix a);

} // namespace sgk
