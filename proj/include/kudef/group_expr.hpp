#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kudef/errors.hpp"

namespace kudef {

// Syntax tree for the groups the calculator understands: Z (the circle's
// fundamental group), free groups, fundamental groups of aspherical
// surfaces, and finite products of those. Products are flattened and
// order-normalized on construction; every invariant computed from an
// expression is symmetric in the factors, so the normalized form doubles
// as a cache key.
//
// The sphere and the projective plane are rejected outright: they are the
// only compact surfaces that are not aspherical, and nothing here applies
// to them.
class GroupExpr {
public:
    enum class Kind { integers, free_group, orientable, non_orientable, product };

    static GroupExpr integers() { return GroupExpr(Kind::integers, 0); }

    static GroupExpr free_group(int rank) {
        if (rank < 1)
            throw SemanticError("free group rank must be at least 1");
        return GroupExpr(Kind::free_group, rank);
    }

    static GroupExpr orientable(int genus) {
        if (genus < 1)
            throw SemanticError("the sphere is not aspherical: orientable genus must be at least 1");
        return GroupExpr(Kind::orientable, genus);
    }

    static GroupExpr non_orientable(int crosscaps) {
        if (crosscaps < 2)
            throw SemanticError(
                "the projective plane is not aspherical: a non-orientable surface "
                "needs at least 2 crosscaps");
        return GroupExpr(Kind::non_orientable, crosscaps);
    }

    static GroupExpr product(std::vector<GroupExpr> factors) {
        if (factors.empty())
            throw SemanticError("empty product");
        std::vector<GroupExpr> atoms;
        for (auto& f : factors) {
            if (f.kind() == Kind::product)
                atoms.insert(atoms.end(), f.factors_.begin(), f.factors_.end());
            else
                atoms.push_back(std::move(f));
        }
        if (atoms.size() == 1) return std::move(atoms.front());
        std::sort(atoms.begin(), atoms.end(), [](const GroupExpr& a, const GroupExpr& b) {
            return std::tuple(a.kind_, a.param_) < std::tuple(b.kind_, b.param_);
        });
        GroupExpr e(Kind::product, 0);
        e.factors_ = std::move(atoms);
        return e;
    }

    static GroupExpr power(const GroupExpr& base, int exponent) {
        if (exponent < 1)
            throw SemanticError("exponent must be at least 1");
        return product(std::vector<GroupExpr>(exponent, base));
    }

    Kind kind() const { return kind_; }

    // Free rank, genus, or crosscap count, depending on kind.
    int param() const { return param_; }

    // Flattened factor list; a non-product expression is its own single atom.
    std::vector<GroupExpr> atoms() const {
        if (kind_ == Kind::product) return factors_;
        return {*this};
    }

    bool contains_free_factor() const {
        if (kind_ == Kind::free_group) return true;
        for (const auto& f : factors_)
            if (f.contains_free_factor()) return true;
        return false;
    }

    bool contains_non_orientable_factor() const {
        if (kind_ == Kind::non_orientable) return true;
        for (const auto& f : factors_)
            if (f.contains_non_orientable_factor()) return true;
        return false;
    }

    bool is_surface() const {
        return kind_ == Kind::orientable || kind_ == Kind::non_orientable;
    }

    // Rank of H^1 of an atom: 1 for the circle, k for a free group, 2g for
    // the orientable surface, q - 1 for the non-orientable one (its
    // orientation double cover has genus q - 1 as well).
    int first_betti_number() const {
        switch (kind_) {
            case Kind::integers: return 1;
            case Kind::free_group: return param_;
            case Kind::orientable: return 2 * param_;
            case Kind::non_orientable: return param_ - 1;
            case Kind::product: break;
        }
        throw std::invalid_argument("first_betti_number: expected an atom");
    }

    bool operator==(const GroupExpr& other) const {
        return kind_ == other.kind_ && param_ == other.param_ && factors_ == other.factors_;
    }

    // Canonical rendering; reparses to an equal expression.
    std::string to_string() const {
        switch (kind_) {
            case Kind::integers: return "Z";
            case Kind::free_group: return "F(" + std::to_string(param_) + ")";
            case Kind::orientable: return "M(" + std::to_string(param_) + ")";
            case Kind::non_orientable: return "N(" + std::to_string(param_) + ")";
            case Kind::product: break;
        }
        std::ostringstream out;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i > 0) out << " x ";
            out << factors_[i].to_string();
        }
        return out.str();
    }

private:
    GroupExpr(Kind kind, int param) : kind_(kind), param_(param) {}

    Kind kind_;
    int param_;
    std::vector<GroupExpr> factors_;  // nonempty only for products
};

}  // namespace kudef
