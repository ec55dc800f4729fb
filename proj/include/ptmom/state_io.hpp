#pragma once

#include <istream>
#include <ostream>

#include <json.hpp>

#include "ptmom/errors.hpp"
#include "ptmom/qmat.hpp"

namespace ptmom {

/// State file format: {"matrix": [[[re, im], ...x4], ...x4]}, row-major,
/// basis order |00>,|01>,|10>,|11>. Validation runs on load, so a file that
/// parses but does not hold a state still fails loudly.

inline mat4 matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("matrix"))
        throw input_error("expected an object with a \"matrix\" field");
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != 4)
        throw input_error("\"matrix\" must be an array of 4 rows");
    mat4 m;
    for (int r = 0; r < 4; ++r) {
        const auto& row = rows.at(r);
        if (!row.is_array() || row.size() != 4)
            throw input_error("row " + std::to_string(r) + " must hold 4 entries");
        for (int c = 0; c < 4; ++c) {
            const auto& entry = row.at(c);
            if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
                !entry.at(1).is_number())
                throw input_error("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") must be an [re, im] pair");
            m(r, c) = cplx(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
    }
    return m;
}

inline nlohmann::json matrix_to_json(const mat4& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 0; r < 4; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < 4; ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(row);
    }
    return nlohmann::json{{"matrix", rows}};
}

inline density_matrix read_state(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw input_error(std::string("invalid JSON: ") + ex.what());
    }
    return density_matrix::from_elements(matrix_from_json(j));
}

inline void write_state(std::ostream& out, const density_matrix& rho) {
    out << matrix_to_json(rho.matrix()).dump(2) << '\n';
}

} // namespace ptmom
