#pragma once

#include "holotype/acs.hpp"
#include "holotype/symplectic.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace holotype {

using Json = nlohmann::json;

inline constexpr const char* kAcsConvention = "column i holds the coordinates of J(e_i)";

inline Json rat_to_json(const Rat& r) { return to_string(r); }

inline Rat rat_from_json(const Json& j)
{
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw Error("rational must be a \"p/q\" string or an integer");
}

inline Json vector_to_json(const Vec& v)
{
    Json out = Json::array();
    for (const auto& x : v) out.push_back(rat_to_json(x));
    return out;
}

inline Json matrix_to_json(const Mat& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row_vector(r)));
    return out;
}

inline Mat matrix_from_json(const Json& j)
{
    if (!j.is_array()) throw Error("matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j.front().size() : 0;
    Mat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw Error("matrix rows must be arrays of equal length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rat_from_json(j[r][c]);
    }
    return m;
}

/// { "dim": d, "brackets": [ { "i": i, "j": j, "coeffs": { "k": "p/q" } } ] },
/// 1-based, i < j, zero coefficients omitted.
inline Json algebra_to_json(const LieAlgebra& L)
{
    Json brackets = Json::array();
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            Json coeffs = Json::object();
            for (std::size_t k = 0; k < L.dim(); ++k)
                if (!is_zero(L.c(i, j, k))) coeffs[std::to_string(k + 1)] = rat_to_json(L.c(i, j, k));
            if (!coeffs.empty()) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
        }
    return {{"dim", L.dim()}, {"brackets", brackets}};
}

namespace detail {
inline std::size_t index_from_json(const Json& j, const char* what, std::size_t dim)
{
    if (!j.is_number_integer()) throw Error(std::string(what) + " must be an integer");
    const auto v = j.get<long long>();
    if (v < 1 || static_cast<unsigned long long>(v) > dim)
        throw Error(std::string(what) + " = " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
    return static_cast<std::size_t>(v - 1);
}

inline std::size_t dim_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("dim")) throw Error("document must be an object with \"dim\"");
    const auto& d = doc["dim"];
    if (!d.is_number_integer() || d.get<long long>() < 0) throw Error("\"dim\" must be a non-negative integer");
    return d.get<std::size_t>();
}
} // namespace detail

/// Parses and validates; Jacobi failures are reported with their indices.
inline LieAlgebra algebra_from_json(const Json& doc)
{
    const std::size_t dim = detail::dim_from_json(doc);
    std::vector<LieAlgebra::Term> terms;
    if (doc.contains("brackets")) {
        const auto& brackets = doc["brackets"];
        if (!brackets.is_array()) throw Error("\"brackets\" must be an array");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& entry : brackets) {
            if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") || !entry.contains("coeffs"))
                throw Error("bracket entries need \"i\", \"j\" and \"coeffs\"");
            const auto i = detail::index_from_json(entry["i"], "i", dim);
            const auto j = detail::index_from_json(entry["j"], "j", dim);
            if (i >= j) throw Error("bracket entries must have i < j");
            if (!seen.emplace(i, j).second) throw Error("duplicate bracket entry for (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            const auto& coeffs = entry["coeffs"];
            if (!coeffs.is_object()) throw Error("\"coeffs\" must be an object");
            for (const auto& [key, value] : coeffs.items()) {
                std::size_t k = 0;
                try {
                    std::size_t used = 0;
                    const long long parsed = std::stoll(key, &used);
                    if (used != key.size() || parsed < 1 || static_cast<unsigned long long>(parsed) > dim) throw Error("");
                    k = static_cast<std::size_t>(parsed - 1);
                } catch (const std::exception&) {
                    throw Error("coefficient key \"" + key + "\" is not an index in 1.." + std::to_string(dim));
                }
                terms.push_back({i, j, k, rat_from_json(value)});
            }
        }
    }
    auto L = LieAlgebra::from_upper_terms(dim, terms);
    if (auto v = validate(L); !v) throw Error("invalid Lie algebra: " + v.describe());
    return L;
}

inline Json acs_to_json(const AlmostComplexStructure& J)
{
    return {{"dim", J.dim()}, {"convention", kAcsConvention}, {"matrix", matrix_to_json(J.matrix())}};
}

inline AlmostComplexStructure acs_from_json(const Json& doc)
{
    const std::size_t dim = detail::dim_from_json(doc);
    if (!doc.contains("matrix")) throw Error("almost complex structure needs \"matrix\"");
    Mat m = matrix_from_json(doc["matrix"]);
    if (m.rows() != dim || m.cols() != dim) throw Error("\"matrix\" must be dim x dim");
    return AlmostComplexStructure(std::move(m));
}

inline Json subspace_to_json(const Subspace& s)
{
    return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"basis", matrix_to_json(s.basis())}};
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline void write_json_file(const std::string& path, const Json& doc)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
}

} // namespace holotype
