#include "qalg/algebra_json.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qalg {

namespace {

using ordered_json = nlohmann::ordered_json;

Rational parse_rational_field(const ordered_json& j, const std::string& where) {
    if (!j.is_string()) {
        throw AlgebraParseError(where + ": expected a rational as a string");
    }
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw AlgebraParseError(where + ": " + e.what());
    }
}

}  // namespace

std::string algebra_to_json_string(const Algebra& a) {
    const std::size_t n = a.dim();
    ordered_json j;
    j["name"] = a.name();
    j["dim"] = n;
    j["basis"] = a.basis_names();
    ordered_json unit = ordered_json::array();
    for (const Rational& c : a.unit_coords()) unit.push_back(c.str());
    j["unit"] = std::move(unit);
    ordered_json mult = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t jj = 0; jj < n; ++jj) {
            ordered_json cell = ordered_json::array();
            for (std::size_t k = 0; k < n; ++k) cell.push_back(a.structure(i, jj, k).str());
            row.push_back(std::move(cell));
        }
        mult.push_back(std::move(row));
    }
    j["mult"] = std::move(mult);
    return j.dump(2);
}

AlgebraPtr algebra_from_json_string(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw AlgebraParseError(std::string("algebra JSON: ") + e.what());
    }
    if (!j.is_object()) throw AlgebraParseError("algebra JSON: top level must be an object");
    for (const char* key : {"name", "dim", "basis", "unit", "mult"}) {
        if (!j.contains(key)) {
            throw AlgebraParseError(std::string("algebra JSON: missing key \"") + key + "\"");
        }
    }
    if (!j["name"].is_string()) throw AlgebraParseError("\"name\": expected a string");
    if (!j["dim"].is_number_unsigned()) {
        throw AlgebraParseError("\"dim\": expected a non-negative integer");
    }
    const std::size_t n = j["dim"].get<std::size_t>();
    if (n == 0 || n > kMaxAlgebraDim) {
        throw AlgebraParseError("\"dim\": must be between 1 and " +
                                std::to_string(kMaxAlgebraDim));
    }
    if (!j["basis"].is_array() || j["basis"].size() != n) {
        throw AlgebraParseError("\"basis\": expected an array of " + std::to_string(n) +
                                " names");
    }
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j["basis"][i].is_string()) {
            throw AlgebraParseError("\"basis\"[" + std::to_string(i) + "]: expected a string");
        }
        names.push_back(j["basis"][i].get<std::string>());
    }
    if (!j["unit"].is_array() || j["unit"].size() != n) {
        throw AlgebraParseError("\"unit\": expected an array of " + std::to_string(n) +
                                " rationals");
    }
    Vec unit(n);
    for (std::size_t i = 0; i < n; ++i) {
        unit[i] = parse_rational_field(j["unit"][i], "\"unit\"[" + std::to_string(i) + "]");
    }
    if (!j["mult"].is_array() || j["mult"].size() != n) {
        throw AlgebraParseError("\"mult\": expected an n x n x n array");
    }
    std::vector<Rational> mult(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const ordered_json& row = j["mult"][i];
        if (!row.is_array() || row.size() != n) {
            throw AlgebraParseError("\"mult\"[" + std::to_string(i) + "]: expected " +
                                    std::to_string(n) + " entries");
        }
        for (std::size_t jj = 0; jj < n; ++jj) {
            const ordered_json& cell = row[jj];
            if (!cell.is_array() || cell.size() != n) {
                throw AlgebraParseError("\"mult\"[" + std::to_string(i) + "][" +
                                        std::to_string(jj) + "]: expected " + std::to_string(n) +
                                        " rationals");
            }
            for (std::size_t k = 0; k < n; ++k) {
                mult[(i * n + jj) * n + k] = parse_rational_field(
                    cell[k], "\"mult\"[" + std::to_string(i) + "][" + std::to_string(jj) + "][" +
                                 std::to_string(k) + "]");
            }
        }
    }
    return Algebra::make(j["name"].get<std::string>(), std::move(names), std::move(unit),
                         std::move(mult));
}

AlgebraPtr load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AlgebraParseError("could not open \"" + path + "\" for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return algebra_from_json_string(buf.str());
}

void save_algebra_file(const Algebra& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw AlgebraParseError("could not open \"" + path + "\" for writing");
    out << algebra_to_json_string(a) << "\n";
    if (!out) throw AlgebraParseError("write to \"" + path + "\" failed");
}

}  // namespace qalg
