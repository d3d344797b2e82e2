// Command-line front end: parse a group expression, dispatch to the
// engines, print tables or JSON.
//
// Exit codes: 0 ok, 2 parse error (including malformed input files),
// 3 semantic error, 4 verification failure, 5 numeric failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "kudef/kudef.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitVerification = 4;
constexpr int kExitNumeric = 5;

struct DegreeRange {
    int lo = 0;
    int hi = 0;
};

DegreeRange parse_degree_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        throw kudef::ParseError("degree range must look like a..b");
    DegreeRange range;
    try {
        range.lo = std::stoi(text.substr(0, dots));
        range.hi = std::stoi(text.substr(dots + 2));
    } catch (const std::exception&) {
        throw kudef::ParseError("degree range must look like a..b");
    }
    if (range.lo < 0 || range.hi < range.lo)
        throw kudef::SemanticError("degree range bounds must satisfy 0 <= lower <= upper");
    return range;
}

kudef::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw kudef::ParseError("cannot open input file: " + path);
    try {
        return kudef::json::parse(in);
    } catch (const kudef::json::parse_error& e) {
        throw kudef::ParseError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
}

void print_graded_table(const std::map<int, kudef::FinAbGroup>& rows) {
    for (const auto& [d, g] : rows) std::cout << "  pi_" << d << " = " << g.to_string() << "\n";
}

struct Options {
    std::string expression;
    std::string input_file;
    std::optional<std::string> degrees;
    bool json_output = false;
    std::uint64_t seed = 0x6b75646566ULL;
    double tol = kudef::kDefaultInputTol;
    int samples = 64;
};

int run_graded(const Options& opt, bool moduli_convention) {
    const kudef::GroupExpr expr = kudef::parse_expr(opt.expression);
    DegreeRange range{0, kudef::qcd(expr) + 2};
    if (opt.degrees) range = parse_degree_range(*opt.degrees);

    std::map<int, kudef::FinAbGroup> rows;
    for (int d = range.lo; d <= range.hi; ++d)
        rows[d] = moduli_convention ? kudef::moduli_homotopy(expr, d)
                                    : kudef::rdef_homotopy(expr, d);

    const char* convention = moduli_convention
                                 ? "moduli (dimension Z removed in degree 0)"
                                 : "rdef (degree 0 contains the dimension Z)";
    if (opt.json_output) {
        kudef::json groups = kudef::json::array();
        for (const auto& [d, g] : rows) {
            kudef::json entry = kudef::to_json(g);
            entry["degree"] = d;
            groups.push_back(std::move(entry));
        }
        std::cout << kudef::json{{"expression", expr.to_string()},
                                 {"degree_zero_convention",
                                  moduli_convention ? "moduli" : "rdef"},
                                 {"grading", "integer"},
                                 {"groups", std::move(groups)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << (moduli_convention ? "moduli homotopy of " : "rdef homotopy of ")
                  << expr.to_string() << "  [degree-0 convention: " << convention << "]\n";
        print_graded_table(rows);
    }
    return kExitOk;
}

int run_check(const Options& opt) {
    const kudef::GroupExpr expr = kudef::parse_expr(opt.expression);
    const kudef::SuiteReport report = kudef::consistency_suite(expr);
    if (opt.json_output) {
        std::cout << kudef::to_json(report).dump(2) << "\n";
    } else {
        std::cout << "consistency suite for " << report.expression
                  << " (qcd = " << report.qcd_value << ")\n";
        for (const auto& item : report.items)
            std::cout << "  [" << (item.passed ? "pass" : "FAIL") << "] " << item.name << ": "
                      << item.detail << "\n";
    }
    return report.passed() ? kExitOk : kExitVerification;
}

int run_compare(const Options& opt) {
    const kudef::GroupExpr expr = kudef::parse_expr(opt.expression);
    const kudef::CompareReport report = kudef::atiyah_segal_compare(expr);
    if (opt.json_output) {
        std::cout << kudef::to_json(report).dump(2) << "\n";
    } else {
        std::cout << "deformation vs topological K-theory for " << report.expression
                  << " (qcd = " << report.qcd_value << ", expected bound at qcd-2)\n";
        for (const auto& row : report.degrees)
            std::cout << "  d = " << row.degree << ": " << row.deformation.to_string()
                      << (row.isomorphic ? "  ==  " : "  !=  ")
                      << row.topological.to_string() << "\n";
        std::cout << (report.passed() ? "bounds verified\n" : "BOUND VIOLATION\n");
    }
    return report.passed() ? kExitOk : kExitVerification;
}

int run_torus_map(const Options& opt) {
    const kudef::json input = load_json_file(opt.input_file);
    auto [a, b] = kudef::matrix_pair_from_json(input);
    const kudef::TorusModuliResult result = kudef::torus_moduli_map(a, b, opt.tol, opt.seed);
    if (opt.json_output) {
        std::cout << kudef::json{{"pairs", kudef::to_json(result.point)},
                                 {"unitarity_residual", result.diag.unitarity_residual},
                                 {"diag_residual_a", result.diag.diag_residual_a},
                                 {"diag_residual_b", result.diag.diag_residual_b},
                                 {"seed", result.diag.seed},
                                 {"tolerance", opt.tol}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "eigenvalue pairs (angles in [0, 2pi)): " << result.point.to_string()
                  << "\n";
        std::cout << "residuals: unitarity " << result.diag.unitarity_residual << ", diag a "
                  << result.diag.diag_residual_a << ", diag b " << result.diag.diag_residual_b
                  << " (seed " << result.diag.seed << ", tol " << opt.tol << ")\n";
    }
    return kExitOk;
}

int run_characters(const Options& opt) {
    const kudef::GroupExpr expr = kudef::parse_expr(opt.expression);
    if (expr.kind() != kudef::GroupExpr::Kind::non_orientable)
        throw kudef::SemanticError("characters: expression must be a single N(q) surface");
    const auto samples = kudef::u1_characters(expr.param(), opt.samples, opt.seed);
    int plus = 0, minus = 0;
    for (const auto& s : samples) (s.label > 0 ? plus : minus)++;
    if (opt.json_output) {
        kudef::json points = kudef::json::array();
        for (const auto& s : samples) {
            kudef::json values = kudef::json::array();
            for (const auto& x : s.point.values())
                values.push_back(kudef::json::array({x.real(), x.imag()}));
            points.push_back(kudef::json{{"values", std::move(values)}, {"label", s.label}});
        }
        std::cout << kudef::json{{"crosscaps", expr.param()},
                                 {"samples", std::move(points)},
                                 {"label_counts", {{"+1", plus}, {"-1", minus}}},
                                 {"free_parameters_per_component", expr.param() - 1},
                                 {"seed", opt.seed}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "U(1) characters of N(" << expr.param() << "): " << samples.size()
                  << " samples, labels +1: " << plus << ", -1: " << minus
                  << " (two components, each a " << expr.param() - 1 << "-torus; seed "
                  << opt.seed << ")\n";
    }
    return kExitOk;
}

int run_connectivity(const Options& opt) {
    const kudef::GroupExpr expr = kudef::parse_expr(opt.expression);
    DegreeRange range{1, 10};
    if (opt.degrees) {
        range = parse_degree_range(*opt.degrees);
        if (range.lo < 1) throw kudef::SemanticError("connectivity: rank range starts at 1");
    }
    if (opt.json_output) {
        kudef::json rows = kudef::json::array();
        for (int n = range.lo; n <= range.hi; ++n)
            rows.push_back(kudef::to_json(kudef::connectivity_bounds(expr, n)));
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "connectivity bounds for " << expr.to_string() << "\n";
        for (int n = range.lo; n <= range.hi; ++n) {
            const auto bounds = kudef::connectivity_bounds(expr, n);
            std::cout << "  n = " << n << ": ";
            if (bounds.orientable) {
                std::cout << "flat connection space exactly " << *bounds.flat_space_connectivity
                          << "-connected; map exactly (" << bounds.map_connectivity->first
                          << ", " << bounds.map_connectivity->second << ")-connected";
            } else {
                std::cout << "flat connection space at least "
                          << *bounds.flat_space_connectivity_at_least << "-connected; map at least "
                          << *bounds.map_connectivity_at_least << "-connected";
                if (bounds.flat_space_connectivity_sharp)
                    std::cout << "; sharp value " << *bounds.flat_space_connectivity_sharp;
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kudef: deformation K-theory and stable moduli calculator for surface groups"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_expr) {
        if (with_expr)
            cmd->add_option("expression", opt.expression, "group expression, e.g. \"M(2) x N(3)\"")
                ->required();
        cmd->add_flag("--json", opt.json_output, "emit JSON instead of text");
        return cmd;
    };

    auto* cmd_kdef = add_common(app.add_subcommand("kdef", "deformation K-theory module"), true);
    auto* cmd_rdef =
        add_common(app.add_subcommand("rdef", "homotopy of the representation-ring spectrum"),
                   true);
    cmd_rdef->add_option("--degrees", opt.degrees, "degree range a..b (default 0..qcd+2)");
    auto* cmd_moduli = add_common(
        app.add_subcommand("moduli", "homotopy of the stable moduli space of flat connections"),
        true);
    cmd_moduli->add_option("--degrees", opt.degrees, "degree range a..b (default 0..qcd+2)");
    auto* cmd_cohomology =
        add_common(app.add_subcommand("cohomology", "integral cohomology"), true);
    auto* cmd_ktheory =
        add_common(app.add_subcommand("ktheory", "complex K-theory, mod-2 graded"), true);
    auto* cmd_compare = add_common(
        app.add_subcommand("compare", "compare deformation and topological K-theory"), true);
    auto* cmd_check =
        add_common(app.add_subcommand("check", "run the consistency suite"), true);
    auto* cmd_torus =
        add_common(app.add_subcommand("torus-map", "eigenvalue multiset of a commuting pair"),
                   false);
    cmd_torus->add_option("file", opt.input_file, "JSON file with a matrix pair {\"a\":..,\"b\":..}")
        ->required();
    cmd_torus->add_option("--tol", opt.tol, "tolerance override");
    cmd_torus->add_option("--seed", opt.seed, "random seed");
    auto* cmd_characters =
        add_common(app.add_subcommand("characters", "sample the U(1) character variety"), true);
    cmd_characters->add_option("--samples", opt.samples, "number of samples");
    cmd_characters->add_option("--seed", opt.seed, "random seed");
    auto* cmd_connectivity = add_common(
        app.add_subcommand("connectivity", "connectivity bounds table for a surface"), true);
    cmd_connectivity->add_option("--degrees", opt.degrees, "rank range a..b (default 1..10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (cmd_kdef->parsed()) {
            const kudef::GroupExpr expr = kudef::parse_expr(opt.expression);
            const kudef::KuModule module = kudef::kdef(expr);
            if (opt.json_output)
                std::cout << kudef::to_json(module).dump(2) << "\n";
            else
                std::cout << module.to_string() << "\n";
            return kExitOk;
        }
        if (cmd_rdef->parsed()) return run_graded(opt, /*moduli_convention=*/false);
        if (cmd_moduli->parsed()) return run_graded(opt, /*moduli_convention=*/true);
        if (cmd_cohomology->parsed() || cmd_ktheory->parsed()) {
            const kudef::GroupExpr expr = kudef::parse_expr(opt.expression);
            const kudef::GradedGroup g = cmd_cohomology->parsed() ? kudef::cohomology(expr)
                                                                  : kudef::ktheory(expr);
            if (opt.json_output)
                std::cout << kudef::to_json(g).dump(2) << "\n";
            else
                std::cout << g.to_string() << "\n";
            return kExitOk;
        }
        if (cmd_compare->parsed()) return run_compare(opt);
        if (cmd_check->parsed()) return run_check(opt);
        if (cmd_torus->parsed()) return run_torus_map(opt);
        if (cmd_characters->parsed()) return run_characters(opt);
        if (cmd_connectivity->parsed()) return run_connectivity(opt);
        std::cerr << "no subcommand\n";
        return kExitParse;
    } catch (const kudef::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const kudef::SemanticError& e) {
        std::cerr << "semantic error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const kudef::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const kudef::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    }
}
