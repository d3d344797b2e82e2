#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "kudef/fin_ab_group.hpp"

namespace kudef {

enum class Grading { integer, mod2 };

// Degree-indexed family of FinAbGroup. Zero components are never stored,
// so sparse supports cost nothing and absent degrees read as 0. Mod-2
// graded instances live on degrees {0, 1}; adding at degree d folds d
// into its parity class.
class GradedGroup {
public:
    explicit GradedGroup(Grading grading = Grading::integer) : grading_(grading) {}

    static GradedGroup integer_graded(std::initializer_list<FinAbGroup> by_degree) {
        GradedGroup g(Grading::integer);
        int d = 0;
        for (const auto& component : by_degree) g.add(d++, component);
        return g;
    }

    static GradedGroup mod2_graded(FinAbGroup even, FinAbGroup odd) {
        GradedGroup g(Grading::mod2);
        g.add(0, even);
        g.add(1, odd);
        return g;
    }

    Grading grading() const { return grading_; }
    bool is_zero() const { return components_.empty(); }
    const std::map<int, FinAbGroup>& components() const { return components_; }

    const FinAbGroup& at(int degree) const {
        static const FinAbGroup kZero;
        auto it = components_.find(normalize_degree(degree));
        return it == components_.end() ? kZero : it->second;
    }

    void add(int degree, const FinAbGroup& component) {
        if (component.is_zero()) return;
        if (degree < 0) throw std::invalid_argument("GradedGroup: negative degree");
        auto& slot = components_[normalize_degree(degree)];
        slot = direct_sum(slot, component);
    }

    // Largest supported degree, -1 when zero.
    int max_degree() const {
        return components_.empty() ? -1 : components_.rbegin()->first;
    }

    bool operator==(const GradedGroup&) const = default;

    // Free rank per degree; degrees of rank 0 are omitted.
    std::map<int, int> rational_ranks() const {
        std::map<int, int> ranks;
        for (const auto& [d, g] : components_)
            if (g.free_rank() > 0) ranks[d] = g.free_rank();
        return ranks;
    }

    struct TorsionParity {
        int even = 0;
        int odd = 0;
        bool operator==(const TorsionParity&) const = default;
    };

    // Number of cyclic torsion summands in even and in odd degrees.
    TorsionParity torsion_f2_rank_by_parity() const {
        TorsionParity parity;
        for (const auto& [d, g] : components_)
            (d % 2 == 0 ? parity.even : parity.odd) += g.torsion_count();
        return parity;
    }

    // Copy with one Z removed from the given degree; throws if that
    // component has no free part.
    GradedGroup with_one_free_summand_removed(int degree) const {
        const FinAbGroup& g = at(degree);
        if (g.free_rank() == 0)
            throw std::invalid_argument("GradedGroup: no free summand to remove in degree " +
                                        std::to_string(degree));
        GradedGroup result(grading_);
        for (const auto& [d, component] : components_) {
            if (d == normalize_degree(degree))
                result.add(d, FinAbGroup(component.free_rank() - 1, component.torsion()));
            else
                result.add(d, component);
        }
        return result;
    }

    std::string to_string() const {
        if (components_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [d, g] : components_) {
            if (!first) out << ", ";
            first = false;
            out << d << ": " << g.to_string();
        }
        return out.str();
    }

private:
    int normalize_degree(int degree) const {
        return grading_ == Grading::mod2 ? ((degree % 2) + 2) % 2 : degree;
    }

    Grading grading_;
    std::map<int, FinAbGroup> components_;
};

// Integral Kunneth formula: degree n of the product collects the tensor
// terms with p + q = n and the Tor terms with p + q = n + 1.
inline GradedGroup kunneth_integer(const GradedGroup& g, const GradedGroup& h) {
    if (g.grading() != Grading::integer || h.grading() != Grading::integer)
        throw std::invalid_argument("kunneth_integer: both factors must be integer-graded");
    GradedGroup result(Grading::integer);
    for (const auto& [p, gp] : g.components()) {
        for (const auto& [q, hq] : h.components()) {
            result.add(p + q, tensor(gp, hq));
            result.add(p + q - 1, tor(gp, hq));  // no-op when the Tor group vanishes
        }
    }
    return result;
}

// Mod-2 graded Kunneth: tensor terms keep the parity p + q, Tor terms
// land in the opposite parity.
inline GradedGroup kunneth_mod2(const GradedGroup& g, const GradedGroup& h) {
    if (g.grading() != Grading::mod2 || h.grading() != Grading::mod2)
        throw std::invalid_argument("kunneth_mod2: both factors must be mod2-graded");
    GradedGroup result(Grading::mod2);
    for (const auto& [p, gp] : g.components()) {
        for (const auto& [q, hq] : h.components()) {
            result.add(p + q, tensor(gp, hq));
            result.add(p + q + 1, tor(gp, hq));
        }
    }
    return result;
}

}  // namespace kudef
