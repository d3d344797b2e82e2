#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "kudef/complex_matrix.hpp"
#include "kudef/errors.hpp"
#include "kudef/group_expr.hpp"
#include "kudef/simultaneous_diag.hpp"
#include "kudef/torus_moduli.hpp"

namespace kudef {

// A multiplicative character of a non-orientable surface group: q unit
// complex values, one per crosscap generator, subject to the single
// relation (x_1 ... x_q)^2 = 1. The sign s = x_1 ... x_q in {+1, -1} is
// the component invariant of the character variety.
class CharacterPoint {
public:
    CharacterPoint(std::vector<Complex> values, double tol = kDefaultInputTol)
        : values_(std::move(values)) {
        if (values_.size() < 2)
            throw SemanticError("CharacterPoint: need at least 2 crosscap generators");
        Complex product = 1.0;
        for (const auto& x : values_) {
            if (std::abs(std::abs(x) - 1.0) > tol)
                throw NumericError("CharacterPoint: value is not on the unit circle");
            product *= x;
        }
        if (std::abs(product * product - 1.0) > tol)
            throw NumericError("CharacterPoint: relation (x_1...x_q)^2 = 1 fails");
        component_ = product.real() >= 0 ? 1 : -1;
    }

    const std::vector<Complex>& values() const { return values_; }
    int crosscaps() const { return static_cast<int>(values_.size()); }
    int component() const { return component_; }

private:
    std::vector<Complex> values_;
    int component_;
};

// Residual of the defining relation at a unitary tuple:
//   orientable genus g:      || [A_1,B_1] ... [A_g,B_g] - I ||_F   (2g matrices)
//   non-orientable q:        || X_1^2 ... X_q^2 - I ||_F           (q matrices)
// Group inverses are taken as adjoints, which is what unitarity buys.
inline double relation_defect(const std::vector<ComplexMatrix>& matrices,
                              const GroupExpr& presentation,
                              double tol = kDefaultInputTol) {
    if (!presentation.is_surface())
        throw SemanticError("relation_defect: presentation must be a single surface");
    const bool orientable = presentation.kind() == GroupExpr::Kind::orientable;
    const std::size_t expected =
        orientable ? 2 * static_cast<std::size_t>(presentation.param())
                   : static_cast<std::size_t>(presentation.param());
    if (matrices.size() != expected)
        throw std::invalid_argument("relation_defect: expected " + std::to_string(expected) +
                                    " matrices, got " + std::to_string(matrices.size()));
    const int n = matrices.front().dim();
    for (const auto& m : matrices) {
        if (m.dim() != n) throw std::invalid_argument("relation_defect: dimension mismatch");
        if (unitarity_residual(m) > tol)
            throw NumericError("relation_defect: input is not unitary within tolerance");
    }
    ComplexMatrix word = ComplexMatrix::identity(n);
    if (orientable) {
        for (int i = 0; i < presentation.param(); ++i) {
            const ComplexMatrix& a = matrices[2 * i];
            const ComplexMatrix& b = matrices[2 * i + 1];
            word = word * (a * b * a.adjoint() * b.adjoint());
        }
    } else {
        for (const auto& x : matrices) word = word * (x * x);
    }
    return (word - ComplexMatrix::identity(n)).frobenius_norm();
}

struct CharacterSample {
    CharacterPoint point;
    int label;  // the component sign, +1 or -1
};

// Samples of the U(1) character variety of the non-orientable surface
// with q crosscaps: draw the first q-1 values uniformly on the circle,
// solve the relation for the last one up to the +-1 branch, and label by
// the resulting component sign. The solution set is two disjoint
// (q-1)-tori, one per label.
inline std::vector<CharacterSample> u1_characters(int q, int samples, std::uint64_t seed) {
    if (q < 2)
        throw SemanticError(
            "u1_characters: need at least 2 crosscaps (the projective plane is not "
            "aspherical)");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::bernoulli_distribution branch(0.5);
    std::vector<CharacterSample> out;
    out.reserve(samples);
    for (int s = 0; s < samples; ++s) {
        std::vector<Complex> values;
        values.reserve(q);
        Complex partial = 1.0;
        for (int i = 0; i < q - 1; ++i) {
            values.push_back(std::polar(1.0, angle(rng)));
            partial *= values.back();
        }
        const double sign = branch(rng) ? 1.0 : -1.0;
        values.push_back(sign / partial);
        CharacterPoint point(std::move(values));
        const int label = point.component();
        out.push_back({std::move(point), label});
    }
    return out;
}

struct StableEigenvalues {
    std::optional<int> component;            // +-1 for U(1) non-orientable input
    std::vector<std::vector<double>> spectra;  // per generator, sorted angles in [0, 2pi)
    double relation_residual = 0;
    std::uint64_t seed = 0;
};

// The stable eigenvalue map: each generator image goes to its unordered
// eigenvalue multiset on the circle. For rank-1 representations of a
// non-orientable surface group the component sign is prepended; for
// higher rank the component invariant is a bundle-theoretic class with no
// algorithm here, so it is omitted.
inline StableEigenvalues stable_eigenvalue_map(const std::vector<ComplexMatrix>& rho,
                                               const GroupExpr& presentation,
                                               double tol = kDefaultInputTol,
                                               std::uint64_t seed = 0x6b75646566ULL) {
    if (rho.empty()) throw std::invalid_argument("stable_eigenvalue_map: empty tuple");
    StableEigenvalues out;
    out.seed = seed;

    if (presentation.is_surface()) {
        out.relation_residual = relation_defect(rho, presentation, tol);
        if (out.relation_residual > tol)
            throw NumericError("stable_eigenvalue_map: relation defect above tolerance");
    } else {
        // free group or Z: generators are unconstrained, only arity is checked
        std::size_t expected = 1;
        if (presentation.kind() == GroupExpr::Kind::free_group)
            expected = static_cast<std::size_t>(presentation.param());
        else if (presentation.kind() != GroupExpr::Kind::integers)
            throw SemanticError("stable_eigenvalue_map: unsupported presentation");
        if (rho.size() != expected)
            throw std::invalid_argument("stable_eigenvalue_map: wrong tuple length");
        for (const auto& m : rho)
            if (unitarity_residual(m) > tol)
                throw NumericError("stable_eigenvalue_map: input is not unitary");
    }

    const int n = rho.front().dim();
    if (presentation.kind() == GroupExpr::Kind::non_orientable && n == 1) {
        Complex product = 1.0;
        for (const auto& m : rho) product *= m(0, 0);
        out.component = product.real() >= 0 ? 1 : -1;
    }

    for (const auto& m : rho) {
        std::vector<double> spectrum;
        if (n == 1) {
            spectrum.push_back(canonical_angle(m(0, 0)));
        } else {
            for (const auto& z : unitary_eigenvalues(m, tol, seed))
                spectrum.push_back(canonical_angle(z));
        }
        std::sort(spectrum.begin(), spectrum.end());
        out.spectra.push_back(std::move(spectrum));
    }
    return out;
}

inline StableEigenvalues stable_eigenvalue_map(const CharacterPoint& chi,
                                               double tol = kDefaultInputTol) {
    std::vector<ComplexMatrix> rho;
    rho.reserve(chi.values().size());
    for (const auto& x : chi.values()) {
        ComplexMatrix m(1);
        m(0, 0) = x;
        rho.push_back(std::move(m));
    }
    return stable_eigenvalue_map(rho, GroupExpr::non_orientable(chi.crosscaps()), tol);
}

}  // namespace kudef
