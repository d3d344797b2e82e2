#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kudef/invariants.hpp"

namespace kudef {

// Degree-by-degree comparison of deformation K-theory with topological
// K-theory. The two agree above degree qcd - 2 and disagree exactly
// there: the summand of top suspension degree is free and contributes to
// the periodic theory but not yet to the connective side.
struct DegreeComparison {
    int degree = 0;
    FinAbGroup deformation;   // pi_degree of the kdef module
    FinAbGroup topological;   // K-theory in degree mod 2
    bool isomorphic = false;
};

struct CompareReport {
    std::string expression;
    int qcd_value = 0;
    std::vector<DegreeComparison> degrees;  // max(0, qcd-2) .. qcd+4
    bool iso_above_bound = false;           // isomorphism for all d > qcd - 2
    std::optional<bool> non_iso_at_bound;   // set when qcd - 2 >= 0

    bool passed() const {
        return iso_above_bound && non_iso_at_bound.value_or(true);
    }
};

inline CompareReport atiyah_segal_compare(const GroupExpr& e) {
    if (e.contains_free_factor())
        throw SemanticError(
            "comparison with topological K-theory is stated for products of "
            "surfaces and circles; free group factors are not supported");

    CompareReport report;
    report.expression = e.to_string();
    report.qcd_value = qcd(e);
    const KuModule module = kdef(e);
    const GradedGroup k = ktheory(e);
    const int bound = report.qcd_value - 2;

    report.iso_above_bound = true;
    for (int d = std::max(0, bound); d <= report.qcd_value + 4; ++d) {
        DegreeComparison row;
        row.degree = d;
        row.deformation = homotopy(module, d);
        row.topological = k.at(d % 2);
        row.isomorphic = row.deformation == row.topological;
        if (d > bound && !row.isomorphic) report.iso_above_bound = false;
        if (d == bound) report.non_iso_at_bound = !row.isomorphic;
        report.degrees.push_back(std::move(row));
    }
    return report;
}

struct SuiteItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteReport {
    std::string expression;
    int qcd_value = 0;
    std::vector<SuiteItem> items;

    bool passed() const {
        return std::all_of(items.begin(), items.end(),
                           [](const SuiteItem& item) { return item.passed; });
    }
};

namespace detail {

// Moduli homotopy collected into an integer-graded group over 0..top.
inline GradedGroup moduli_graded(const GroupExpr& e, int top) {
    GradedGroup out(Grading::integer);
    for (int d = 0; d <= top; ++d) out.add(d, moduli_homotopy(e, d));
    return out;
}

// Every split of the atom multiset into two nonempty halves (by index
// subset; the first atom is pinned to the left half to kill mirror
// duplicates).
inline std::vector<std::pair<GroupExpr, GroupExpr>> binary_splits(const GroupExpr& e) {
    const std::vector<GroupExpr> atoms = e.atoms();
    std::vector<std::pair<GroupExpr, GroupExpr>> splits;
    const std::size_t n = atoms.size();
    if (n < 2) return splits;
    for (std::size_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
        std::vector<GroupExpr> left{atoms[0]}, right;
        for (std::size_t i = 1; i < n; ++i)
            ((mask >> (i - 1)) & 1 ? left : right).push_back(atoms[i]);
        splits.emplace_back(GroupExpr::product(left), GroupExpr::product(right));
    }
    return splits;
}

}  // namespace detail

// Internal consistency checks tying the smash-calculus side to the
// Kunneth side:
//   (a) degreewise rational ranks of the moduli homotopy match reduced
//       cohomology for d >= 1
//   (b) torsion summand counts match by parity
//   (c) orientable-only products: torsion-free moduli homotopy matching
//       cohomology ranks in positive degrees, vanishing above qcd
//   (d) summand counts obey the product recurrences for every split of
//       the factor multiset
//   (e) moduli homotopy vanishes above qcd
inline SuiteReport consistency_suite(const GroupExpr& e) {
    if (e.contains_free_factor())
        throw SemanticError(
            "consistency suite is stated for products of surfaces and circles; "
            "free group factors are not supported");

    SuiteReport report;
    report.expression = e.to_string();
    const int top = qcd(e);
    report.qcd_value = top;
    const GradedGroup cohom = cohomology(e);
    const GradedGroup reduced = cohom.with_one_free_summand_removed(0);
    const GradedGroup moduli = detail::moduli_graded(e, top);

    {
        SuiteItem item{"rational ranks", true, ""};
        std::ostringstream detail;
        for (int d = 1; d <= top + 2; ++d) {
            const int moduli_rank = (d <= top) ? moduli.at(d).free_rank() : 0;
            const int cohom_rank = cohom.at(d).free_rank();
            if (moduli_rank != cohom_rank) {
                item.passed = false;
                detail << "degree " << d << ": " << moduli_rank << " vs " << cohom_rank << "; ";
            }
        }
        item.detail = item.passed ? "moduli ranks = cohomology ranks for d >= 1"
                                  : detail.str();
        report.items.push_back(std::move(item));
    }
    {
        SuiteItem item;
        item.name = "torsion parity";
        const auto moduli_parity = moduli.torsion_f2_rank_by_parity();
        const auto cohom_parity = reduced.torsion_f2_rank_by_parity();
        item.passed = moduli_parity == cohom_parity;
        std::ostringstream detail;
        detail << "moduli even/odd " << moduli_parity.even << "/" << moduli_parity.odd
               << ", reduced cohomology even/odd " << cohom_parity.even << "/"
               << cohom_parity.odd;
        item.detail = detail.str();
        report.items.push_back(std::move(item));
    }
    if (!e.contains_non_orientable_factor()) {
        SuiteItem item{"orientable product", true, ""};
        std::ostringstream detail;
        for (int d = 0; d <= top + 2; ++d) {
            const FinAbGroup group = moduli_homotopy(e, d);
            if (!group.is_torsion_free()) {
                item.passed = false;
                detail << "torsion in degree " << d << "; ";
            }
            if (d >= 1 && group.free_rank() != cohom.at(d).free_rank()) {
                item.passed = false;
                detail << "rank mismatch in degree " << d << "; ";
            }
        }
        if (item.passed)
            detail << "torsion-free, ranks match reduced homology of the symmetric product";
        item.detail = detail.str();
        report.items.push_back(std::move(item));
    }
    {
        SuiteItem item{"summand count recurrences", true, ""};
        const SummandCounts whole = summand_counts(kdef(e));
        const auto splits = detail::binary_splits(e);
        for (const auto& [left, right] : splits) {
            const SummandCounts predicted =
                recurrence_counts(summand_counts(kdef(left)), summand_counts(kdef(right)));
            if (!(predicted == whole)) {
                item.passed = false;
                item.detail += "split " + left.to_string() + " | " + right.to_string() +
                               " disagrees; ";
            }
        }
        if (item.passed) {
            std::ostringstream detail;
            detail << "(r0,r1,t0,t1) = (" << whole.r0 << "," << whole.r1 << "," << whole.t0
                   << "," << whole.t1 << ")";
            detail << (splits.empty() ? ", single factor" :
                       ", stable under all " + std::to_string(splits.size()) + " splits");
            item.detail = detail.str();
        }
        report.items.push_back(std::move(item));
    }
    {
        SuiteItem item{"vanishing above qcd", true, ""};
        for (int d = top + 1; d <= top + 4; ++d) {
            if (!moduli_homotopy(e, d).is_zero()) {
                item.passed = false;
                item.detail += "nonzero in degree " + std::to_string(d) + "; ";
            }
        }
        if (item.passed) item.detail = "zero in degrees " + std::to_string(top + 1) + "..";
        report.items.push_back(std::move(item));
    }
    return report;
}

}  // namespace kudef
