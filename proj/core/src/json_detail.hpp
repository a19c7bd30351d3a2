#pragma once

// Internal helpers shared by the .cpp files that serialize to JSON. The
// public headers deliberately do not depend on the vendored json header.

#include "enhadhm/errors.hpp"
#include "enhadhm/matrix.hpp"

#include <json.hpp>

namespace enhadhm::detail {

using json = nlohmann::json;

inline json parse_json(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        fail(Errc::bad_json, "invalid JSON");
    return j;
}

inline const json& get_field(const json& j, const char* name)
{
    auto it = j.find(name);
    if (it == j.end())
        fail(Errc::missing_field, std::string("missing field '") + name + "'");
    return *it;
}

inline std::size_t get_count(const json& j, const char* name)
{
    const json& f = get_field(j, name);
    if (!f.is_number_unsigned())
        fail(Errc::bad_dims, std::string("field '") + name + "' must be a nonnegative integer");
    return f.get<std::size_t>();
}

inline json matrix_to_json_obj(const RatMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(format_rational(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline RatMatrix matrix_from_json_obj(const json& j)
{
    if (!j.is_object())
        fail(Errc::bad_json, "matrix must be a JSON object");
    std::size_t rows = get_count(j, "rows");
    std::size_t cols = get_count(j, "cols");
    const json& entries = get_field(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        fail(Errc::shape_mismatch, "shape mismatch: entries row count");
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            fail(Errc::shape_mismatch, "shape mismatch: entries column count");
        for (std::size_t jcol = 0; jcol < cols; ++jcol) {
            if (!row[jcol].is_string())
                fail(Errc::malformed_rational, "matrix entries must be rational strings");
            m.at(i, jcol) = parse_rational(row[jcol].get<std::string>());
        }
    }
    return m;
}

} // namespace enhadhm::detail
