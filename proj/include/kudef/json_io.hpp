#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kudef/complex_matrix.hpp"
#include "kudef/errors.hpp"
#include "kudef/graded_group.hpp"
#include "kudef/invariants.hpp"
#include "kudef/ku_module.hpp"
#include "kudef/reports.hpp"
#include "kudef/torus_moduli.hpp"

namespace kudef {

using nlohmann::json;

inline json to_json(const FinAbGroup& g) {
    return json{{"free_rank", g.free_rank()}, {"torsion", g.torsion()}};
}

inline FinAbGroup fin_ab_group_from_json(const json& j) {
    return FinAbGroup(j.at("free_rank").get<int>(),
                      j.at("torsion").get<std::vector<std::int64_t>>());
}

// {"grading": "integer"|"mod2", "groups": [{degree, free_rank, torsion}...]}
// with the groups array sorted by degree.
inline json to_json(const GradedGroup& g) {
    json groups = json::array();
    for (const auto& [degree, component] : g.components()) {
        json entry = to_json(component);
        entry["degree"] = degree;
        groups.push_back(std::move(entry));
    }
    return json{{"grading", g.grading() == Grading::mod2 ? "mod2" : "integer"},
                {"groups", std::move(groups)}};
}

inline GradedGroup graded_group_from_json(const json& j) {
    const std::string grading = j.at("grading").get<std::string>();
    if (grading != "integer" && grading != "mod2")
        throw ParseError("graded group: unknown grading '" + grading + "'");
    GradedGroup g(grading == "mod2" ? Grading::mod2 : Grading::integer);
    for (const auto& entry : j.at("groups"))
        g.add(entry.at("degree").get<int>(), fin_ab_group_from_json(entry));
    return g;
}

// Array of {"degree": d, "kind": "free"} and {"degree": d, "kind": "mod",
// "modulus": n} objects, in normal-form order.
inline json to_json(const KuModule& m) {
    json summands = json::array();
    for (const auto& s : m.summands()) {
        json entry{{"degree", s.degree()}, {"kind", s.is_free() ? "free" : "mod"}};
        if (!s.is_free()) entry["modulus"] = s.modulus();
        summands.push_back(std::move(entry));
    }
    return summands;
}

inline KuModule ku_module_from_json(const json& j) {
    std::vector<KuSummand> summands;
    for (const auto& entry : j) {
        const int degree = entry.at("degree").get<int>();
        const std::string kind = entry.at("kind").get<std::string>();
        if (kind == "free")
            summands.push_back(KuSummand::free(degree));
        else if (kind == "mod")
            summands.push_back(KuSummand::mod(entry.at("modulus").get<std::int64_t>(), degree));
        else
            throw ParseError("ku module: unknown summand kind '" + kind + "'");
    }
    return KuModule(std::move(summands));
}

// {"n": dimension, "entries": [[[re, im], ...], ...]} row-major.
inline json to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j)
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.dim()}, {"entries", std::move(rows)}};
}

inline ComplexMatrix matrix_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("matrix: dimension must be at least 1");
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != n)
        throw ParseError("matrix: expected " + std::to_string(n) + " rows");
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = entries.at(i);
        if (static_cast<int>(row.size()) != n)
            throw ParseError("matrix: row " + std::to_string(i) + " has wrong length");
        for (int k = 0; k < n; ++k) {
            const auto& cell = row.at(k);
            if (!cell.is_array() || cell.size() != 2)
                throw ParseError("matrix: entry must be a [re, im] pair");
            m(i, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
    }
    if (!m.all_finite()) throw ParseError("matrix: non-finite entry");
    return m;
}

// {"a": matrix, "b": matrix}
inline std::pair<ComplexMatrix, ComplexMatrix> matrix_pair_from_json(const json& j) {
    return {matrix_from_json(j.at("a")), matrix_from_json(j.at("b"))};
}

inline json to_json(const EigenPairMultiset& point) {
    json pairs = json::array();
    for (const auto& [theta, phi] : point.pairs()) pairs.push_back(json::array({theta, phi}));
    return pairs;
}

inline json to_json(const CompareReport& report) {
    json degrees = json::array();
    for (const auto& row : report.degrees) {
        degrees.push_back(json{{"degree", row.degree},
                               {"deformation", to_json(row.deformation)},
                               {"topological", to_json(row.topological)},
                               {"isomorphic", row.isomorphic}});
    }
    json out{{"expression", report.expression},
             {"qcd", report.qcd_value},
             {"degrees", std::move(degrees)},
             {"isomorphic_above_bound", report.iso_above_bound},
             {"passed", report.passed()}};
    if (report.non_iso_at_bound)
        out["non_isomorphic_at_bound"] = *report.non_iso_at_bound;
    return out;
}

inline json to_json(const SuiteReport& report) {
    json items = json::array();
    for (const auto& item : report.items)
        items.push_back(json{{"name", item.name}, {"passed", item.passed},
                             {"detail", item.detail}});
    return json{{"expression", report.expression},
                {"qcd", report.qcd_value},
                {"items", std::move(items)},
                {"passed", report.passed()}};
}

inline json to_json(const ConnectivityBounds& bounds) {
    json out{{"orientable", bounds.orientable}, {"genus", bounds.genus}, {"n", bounds.n}};
    if (bounds.flat_space_connectivity)
        out["flat_space_connectivity"] = *bounds.flat_space_connectivity;
    if (bounds.map_connectivity)
        out["map_connectivity"] = json::array(
            {bounds.map_connectivity->first, bounds.map_connectivity->second});
    if (bounds.flat_space_connectivity_at_least)
        out["flat_space_connectivity_at_least"] = *bounds.flat_space_connectivity_at_least;
    if (bounds.map_connectivity_at_least)
        out["map_connectivity_at_least"] = *bounds.map_connectivity_at_least;
    if (bounds.flat_space_connectivity_sharp)
        out["flat_space_connectivity_sharp"] = *bounds.flat_space_connectivity_sharp;
    return out;
}

}  // namespace kudef
