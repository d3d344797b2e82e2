#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kudef/errors.hpp"
#include "kudef/graded_group.hpp"
#include "kudef/group_expr.hpp"
#include "kudef/ku_module.hpp"

namespace kudef {

namespace detail {

// Building blocks of the deformation K-theory module, one per atom:
//   Z               ku v S ku
//   F(k)            ku v k*(S ku)
//   M(g)            ku v 2g*(S ku) v S^2 ku
//   N(q)            ku v (q-1)*(S ku) v ku/2
inline KuModule kdef_block(const GroupExpr& atom) {
    std::vector<KuSummand> summands{KuSummand::free(0)};
    switch (atom.kind()) {
        case GroupExpr::Kind::integers:
            summands.push_back(KuSummand::free(1));
            break;
        case GroupExpr::Kind::free_group:
            summands.insert(summands.end(), atom.param(), KuSummand::free(1));
            break;
        case GroupExpr::Kind::orientable:
            summands.insert(summands.end(), 2 * atom.param(), KuSummand::free(1));
            summands.push_back(KuSummand::free(2));
            break;
        case GroupExpr::Kind::non_orientable:
            summands.insert(summands.end(), atom.param() - 1, KuSummand::free(1));
            summands.push_back(KuSummand::mod(2, 0));
            break;
        case GroupExpr::Kind::product:
            throw std::invalid_argument("kdef_block: expected an atom");
    }
    return KuModule(std::move(summands));
}

inline GradedGroup cohomology_block(const GroupExpr& atom) {
    const FinAbGroup z = FinAbGroup::free(1);
    switch (atom.kind()) {
        case GroupExpr::Kind::integers:
            return GradedGroup::integer_graded({z, z});
        case GroupExpr::Kind::free_group:  // wedge of circles
            return GradedGroup::integer_graded({z, FinAbGroup::free(atom.param())});
        case GroupExpr::Kind::orientable:
            return GradedGroup::integer_graded({z, FinAbGroup::free(2 * atom.param()), z});
        case GroupExpr::Kind::non_orientable:
            return GradedGroup::integer_graded(
                {z, FinAbGroup::free(atom.param() - 1), FinAbGroup::cyclic(2)});
        case GroupExpr::Kind::product:
            break;
    }
    throw std::invalid_argument("cohomology_block: expected an atom");
}

inline GradedGroup ktheory_block(const GroupExpr& atom) {
    switch (atom.kind()) {
        case GroupExpr::Kind::integers:
            return GradedGroup::mod2_graded(FinAbGroup::free(1), FinAbGroup::free(1));
        case GroupExpr::Kind::free_group:
            return GradedGroup::mod2_graded(FinAbGroup::free(1), FinAbGroup::free(atom.param()));
        case GroupExpr::Kind::orientable:
            return GradedGroup::mod2_graded(FinAbGroup::free(2),
                                            FinAbGroup::free(2 * atom.param()));
        case GroupExpr::Kind::non_orientable:
            return GradedGroup::mod2_graded(FinAbGroup(1, {2}),
                                            FinAbGroup::free(atom.param() - 1));
        case GroupExpr::Kind::product:
            break;
    }
    throw std::invalid_argument("ktheory_block: expected an atom");
}

inline int qcd_block(const GroupExpr& atom) {
    switch (atom.kind()) {
        case GroupExpr::Kind::integers: return 1;
        case GroupExpr::Kind::free_group: return 1;   // wedge of circles
        case GroupExpr::Kind::orientable: return 2;
        case GroupExpr::Kind::non_orientable: return 1;  // top cohomology is torsion
        case GroupExpr::Kind::product: break;
    }
    throw std::invalid_argument("qcd_block: expected an atom");
}

}  // namespace detail

// Deformation K-theory of the group as a wedge of suspended free and mod-2
// summands; products become iterated smash products. Memoized on the
// canonical rendering; the cache is shared and idempotent, correctness
// never depends on it.
inline KuModule kdef(const GroupExpr& e) {
    static std::mutex cache_mutex;
    static std::map<std::string, KuModule> cache;

    const std::string key = e.to_string();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }

    KuModule result = KuModule::ku();
    for (const auto& atom : e.atoms()) result = smash(result, detail::kdef_block(atom));

    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(result)).first->second;
}

// Integral cohomology, assembled by the Kunneth formula over the factors.
inline GradedGroup cohomology(const GroupExpr& e) {
    GradedGroup result = GradedGroup::integer_graded({FinAbGroup::free(1)});
    for (const auto& atom : e.atoms())
        result = kunneth_integer(result, detail::cohomology_block(atom));
    return result;
}

// Complex K-theory, mod-2 graded, assembled by the split Kunneth sequence.
inline GradedGroup ktheory(const GroupExpr& e) {
    GradedGroup result = GradedGroup::mod2_graded(FinAbGroup::free(1), FinAbGroup::zero());
    for (const auto& atom : e.atoms()) result = kunneth_mod2(result, detail::ktheory_block(atom));
    return result;
}

// Rational cohomological dimension: top degree with nonzero rational
// cohomology. Additive over product factors.
inline int qcd(const GroupExpr& e) {
    int total = 0;
    for (const auto& atom : e.atoms()) total += detail::qcd_block(atom);
    return total;
}

// Homotopy of the representation-ring spectrum, read off the Bott cofiber.
inline FinAbGroup rdef_homotopy(const GroupExpr& e, int d) {
    if (d < 0) throw std::invalid_argument("rdef_homotopy: negative degree");
    return bott_cofiber_homotopy(kdef(e), d);
}

// Homotopy of the stable moduli space of flat connections. The zeroth
// space of the representation-ring spectrum is Z x (moduli space); in
// degree 0 exactly that dimension coordinate Z is removed.
inline FinAbGroup moduli_homotopy(const GroupExpr& e, int d) {
    if (d < 0) throw std::invalid_argument("moduli_homotopy: negative degree");
    if (e.contains_free_factor())
        throw SemanticError(
            "moduli space is defined for products of surfaces and circles; "
            "free group factors are not supported");
    FinAbGroup group = rdef_homotopy(e, d);
    if (d > 0) return group;
    if (group.free_rank() < 1)
        throw std::logic_error("moduli_homotopy: degree 0 lacks the dimension summand");
    return FinAbGroup(group.free_rank() - 1, group.torsion());
}

// Predicted summand counts of a smash product from the counts of its two
// factors. Free summands multiply with degree parity; a pair of mod
// summands contributes one summand of each parity. When the right factor
// is a single non-orientable surface block (r0 = 1, t0 = 1, t1 = 0,
// r1 = k) these reduce to
//   r0' = r0 + k r1,  r1' = r1 + k r0,
//   t0' = 2 t0 + (k+1) t1 + r0,  t1' = 2 t1 + (k+1) t0 + r1.
// Valid whenever all moduli share a nontrivial gcd (here everything is
// mod 2, so no smash term ever cancels).
inline SummandCounts recurrence_counts(const SummandCounts& y, const SummandCounts& z) {
    const int cross = (y.t0 + y.t1) * (z.t0 + z.t1);
    SummandCounts out;
    out.r0 = y.r0 * z.r0 + y.r1 * z.r1;
    out.r1 = y.r0 * z.r1 + y.r1 * z.r0;
    out.t0 = y.r0 * z.t0 + y.r1 * z.t1 + y.t0 * z.r0 + y.t1 * z.r1 + cross;
    out.t1 = y.r0 * z.t1 + y.r1 * z.t0 + y.t1 * z.r0 + y.t0 * z.r1 + cross;
    return out;
}

// Connectivity statements for the space of flat connections on rank-n
// bundles over a single surface and for the map from the representation
// space to the mapping space of classifying spaces.
//
// Orientable genus g:   connection space exactly 2g(n-1)-connected,
//                       map exactly (1, 2g(n-1)+1)-connected.
// Non-orientable, double-cover genus gt = crosscaps - 1:
//                       connection space at least (gt(n-1) - 1)-connected,
//                       map at least gt(n-1)-connected,
//                       sharp connection-space value 2n*gt - 3gt - 1
//                       reported only for gt > 1 and n >= 9.
struct ConnectivityBounds {
    bool orientable = false;
    int genus = 0;  // g, or the double-cover genus for non-orientable input
    int n = 0;
    std::optional<int> flat_space_connectivity;              // exact, orientable
    std::optional<std::pair<int, int>> map_connectivity;     // exact, orientable
    std::optional<int> flat_space_connectivity_at_least;     // non-orientable
    std::optional<int> map_connectivity_at_least;            // non-orientable
    std::optional<int> flat_space_connectivity_sharp;        // guarded, non-orientable
};

inline ConnectivityBounds connectivity_bounds(const GroupExpr& surface, int n) {
    if (!surface.is_surface())
        throw SemanticError("connectivity bounds are stated for single surfaces");
    if (n < 1) throw std::invalid_argument("connectivity_bounds: rank must be at least 1");

    ConnectivityBounds out;
    out.n = n;
    if (surface.kind() == GroupExpr::Kind::orientable) {
        const int g = surface.param();
        out.orientable = true;
        out.genus = g;
        out.flat_space_connectivity = 2 * g * (n - 1);
        out.map_connectivity = std::pair{1, 2 * g * (n - 1) + 1};
    } else {
        const int gt = surface.param() - 1;  // genus of the orientation double cover
        out.orientable = false;
        out.genus = gt;
        out.flat_space_connectivity_at_least = gt * (n - 1) - 1;
        out.map_connectivity_at_least = gt * (n - 1);
        if (gt > 1 && n >= 9)
            out.flat_space_connectivity_sharp = 2 * n * gt - 3 * gt - 1;
    }
    return out;
}

}  // namespace kudef
