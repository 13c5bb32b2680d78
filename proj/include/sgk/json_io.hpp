#pragma once

// JSON forms of cell points, monomials, chart points and data. Scalars are
// always strings ("n", "n/d" or a decimal); integers that index things are
// plain JSON integers.

#include "sgk/bundle_charts.hpp"
#include "sgk/invariant_sections.hpp"
#include "sgk/schubert_cell.hpp"

#include <json.hpp>
#include <stdexcept>

namespace sgk {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"r","q","field","entries":[{"i","j","value"}]}, entries in cell order.
Json to_json(const CellPoint& p);

/// Accepts "entries" (unlisted coordinates are zero) or "matrix" (n rows of r
/// scalars in the pinned pattern), not both. Throws FormatError.
CellPoint cell_point_from_json(const Json& doc);

/// {"exponents":[{"i","j","e"}],"degree"}.
Json to_json(const BetaMonomial& m);

/// {"point": CellPoint-or-null, "fiber": [...]} plus r and q.
Json to_json(const ChartPoint& cp);

/// Word, one-line form, C_j, betas with their alpha supports, and the
/// <beta, lambda_{lq}> table.
Json datum_to_json(const MinimalSchubertDatum& d);

/// Row-major strings.
Json to_json(const Matrix& m);

} // namespace sgk
