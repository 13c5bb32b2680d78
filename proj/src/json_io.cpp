#include "sgk/json_io.hpp"

#include <set>
#include <string>

namespace sgk {

namespace {

int require_int(const Json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw FormatError(std::string("missing or non-integer field \"") + key + "\"");
    return doc[key].get<int>();
}

Scalar parse_scalar(const Field& f, const Json& v) {
    if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
    if (v.is_number_integer()) return Scalar::from_int(f, v.get<long long>());
    throw FormatError("scalar values must be strings or integers, got " + v.dump());
}

} // namespace

Json to_json(const CellPoint& p) {
    const auto& d = p.datum();
    Json entries = Json::array();
    for (std::size_t s = 0; s < d.cells().size(); ++s) {
        const Cell c = d.cells()[s];
        entries.push_back({{"i", c.i}, {"j", c.j}, {"value", p.value_at_slot(static_cast<int>(s)).to_string()}});
    }
    return {{"r", d.r()}, {"q", d.q()}, {"field", p.field().to_string()}, {"entries", entries}};
}

CellPoint cell_point_from_json(const Json& doc) {
    if (!doc.is_object()) throw FormatError("cell point must be a JSON object");
    const int r = require_int(doc, "r"), q = require_int(doc, "q");
    try {
        const Field f = doc.contains("field") ? Field::parse(doc["field"].get<std::string>())
                                              : Field::rational();
        const DatumPtr datum = build_datum(r, q);
        const bool has_entries = doc.contains("entries"), has_matrix = doc.contains("matrix");
        if (has_entries == has_matrix)
            throw FormatError("cell point needs exactly one of \"entries\" and \"matrix\"");

        if (has_matrix) {
            const Json& rows = doc["matrix"];
            if (!rows.is_array()) throw FormatError("\"matrix\" must be an array of rows");
            Matrix m;
            for (const Json& row : rows) {
                if (!row.is_array()) throw FormatError("matrix rows must be arrays");
                std::vector<Scalar> out;
                for (const Json& v : row) out.push_back(parse_scalar(f, v));
                m.push_back(std::move(out));
            }
            return from_matrix(datum, f, m);
        }

        const Json& entries = doc["entries"];
        if (!entries.is_array()) throw FormatError("\"entries\" must be an array");
        CellPoint p(datum, f);
        std::set<Cell> seen;
        for (const Json& e : entries) {
            if (!e.is_object() || !e.contains("value"))
                throw FormatError("each entry needs \"i\", \"j\" and \"value\"");
            const Cell c{require_int(e, "i"), require_int(e, "j")};
            if (!datum->in_c_set(c.i, c.j))
                throw FormatError("(" + std::to_string(c.i) + "," + std::to_string(c.j) +
                                  ") is not a coordinate of the cell");
            if (!seen.insert(c).second)
                throw FormatError("duplicate entry (" + std::to_string(c.i) + "," +
                                  std::to_string(c.j) + ")");
            p.set(c.i, c.j, parse_scalar(f, e["value"]));
        }
        return p;
    } catch (const FormatError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(e.what());
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
}

Json to_json(const BetaMonomial& m) {
    Json exps = Json::array();
    for (const auto& [c, e] : m.exponents()) exps.push_back({{"i", c.i}, {"j", c.j}, {"e", e}});
    return {{"exponents", exps}, {"degree", m.degree()}};
}

Json to_json(const ChartPoint& cp) {
    Json fiber = Json::array();
    for (const auto& s : cp.fiber) fiber.push_back(s.to_string());
    return {{"r", cp.datum->r()},
            {"q", cp.datum->q()},
            {"point", cp.base ? to_json(*cp.base) : Json(nullptr)},
            {"fiber", fiber}};
}

Json datum_to_json(const MinimalSchubertDatum& d) {
    Json c_sets = Json::array(), betas = Json::array(), table = Json::array();
    for (int j = 1; j <= d.r(); ++j) c_sets.push_back(d.c_set(j));
    for (const Cell& c : d.cells()) {
        betas.push_back({{"i", c.i},
                         {"j", c.j},
                         {"alpha_support", {c.i, c.j * d.q()}},
                         {"eps", d.beta(c.i, c.j).to_string()}});
        table.push_back({{"i", c.i}, {"j", c.j}, {"pairings", d.beta_peak_pairings(c.i, c.j)}});
    }
    return {{"r", d.r()},
            {"q", d.q()},
            {"n", d.n()},
            {"word", d.word().letters},
            {"one_line", d.one_line()},
            {"length", d.word().length()},
            {"dimension", d.dimension()},
            {"c_sets", c_sets},
            {"betas", betas},
            {"peak_pairings", table}};
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json out = Json::array();
        for (const auto& s : row) out.push_back(s.to_string());
        rows.push_back(out);
    }
    return rows;
}

} // namespace sgk
