#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kudef/assignment.hpp"
#include "kudef/complex_matrix.hpp"
#include "kudef/simultaneous_diag.hpp"

namespace kudef {

// Angle in [0, 2pi); the branch cut is unobservable because all distances
// below use the circular metric.
inline double canonical_angle(Complex z) {
    double theta = std::arg(z);
    if (theta < 0) theta += 2 * std::numbers::pi;
    if (theta >= 2 * std::numbers::pi) theta = 0;
    return theta;
}

inline double circle_distance(double x, double y) {
    double d = std::fmod(std::abs(x - y), 2 * std::numbers::pi);
    return std::min(d, 2 * std::numbers::pi - d);
}

// Unordered multiset of eigenvalue pairs on the 2-torus: a point of the
// n-th symmetric product of S^1 x S^1. Pairs keep the shared-eigenvector
// pairing produced by the moduli map; equality is tolerance-based under
// the optimal matching.
class EigenPairMultiset {
public:
    EigenPairMultiset() = default;
    explicit EigenPairMultiset(std::vector<std::pair<double, double>> pairs)
        : pairs_(std::move(pairs)) {}

    static EigenPairMultiset from_eigenvalues(const std::vector<Complex>& alpha,
                                              const std::vector<Complex>& beta) {
        if (alpha.size() != beta.size())
            throw std::invalid_argument("EigenPairMultiset: length mismatch");
        std::vector<std::pair<double, double>> pairs;
        pairs.reserve(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i)
            pairs.emplace_back(canonical_angle(alpha[i]), canonical_angle(beta[i]));
        return EigenPairMultiset(std::move(pairs));
    }

    const std::vector<std::pair<double, double>>& pairs() const { return pairs_; }
    int size() const { return static_cast<int>(pairs_.size()); }

    std::string to_string() const {
        std::ostringstream out;
        out << "{";
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if (i > 0) out << ", ";
            out << "(" << pairs_[i].first << ", " << pairs_[i].second << ")";
        }
        out << "}";
        return out.str();
    }

private:
    std::vector<std::pair<double, double>> pairs_;
};

// Minimal total cost over perfect matchings, with the product circle
// metric sqrt(d(theta)^2 + d(phi)^2) on each matched pair.
inline double multiset_distance(const EigenPairMultiset& x, const EigenPairMultiset& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("multiset_distance: size mismatch");
    const int n = x.size();
    if (n == 0) return 0;
    std::vector<std::vector<double>> cost(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double dt = circle_distance(x.pairs()[i].first, y.pairs()[j].first);
            const double dp = circle_distance(x.pairs()[i].second, y.pairs()[j].second);
            cost[i][j] = std::sqrt(dt * dt + dp * dp);
        }
    return solve_assignment(cost).cost;
}

struct TorusModuliResult {
    EigenPairMultiset point;
    SimultaneousDiag diag;  // residuals and seed of the underlying diagonalization
};

// The moduli map for the torus: a commuting unitary pair goes to the
// multiset of its joint eigenvalue pairs. Pairs are read off a shared
// eigenbasis, never by sorting the two spectra independently, so the map
// descends to conjugation classes.
inline TorusModuliResult torus_moduli_map(const ComplexMatrix& a, const ComplexMatrix& b,
                                          double tol = kDefaultInputTol,
                                          std::uint64_t seed = 0x6b75646566ULL) {
    TorusModuliResult out;
    out.diag = simultaneous_diag(a, b, tol, seed);
    const ComplexMatrix da = detail::conjugate(out.diag.u, a);
    const ComplexMatrix db = detail::conjugate(out.diag.u, b);
    std::vector<Complex> alpha, beta;
    alpha.reserve(a.dim());
    beta.reserve(a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        alpha.push_back(da(i, i));
        beta.push_back(db(i, i));
    }
    out.point = EigenPairMultiset::from_eigenvalues(alpha, beta);
    return out;
}

}  // namespace kudef
