#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "kudef/complex_matrix.hpp"
#include "kudef/errors.hpp"
#include "kudef/jacobi.hpp"

namespace kudef {

inline constexpr int kDegeneracyRecursionCap = 5;

struct SimultaneousDiag {
    ComplexMatrix u;            // joint diagonalizer: u* a u and u* b u diagonal
    double unitarity_residual = 0;
    double diag_residual_a = 0;  // off-diagonal norm of u* a u
    double diag_residual_b = 0;
    std::uint64_t seed = 0;
    int refinement_depth = 0;   // deepest degeneracy recursion actually used
};

namespace detail {

inline ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& a) {
    return u.adjoint() * a * u;
}

inline ComplexMatrix extract_block(const ComplexMatrix& a, const std::vector<int>& idx) {
    ComplexMatrix block(static_cast<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            block(static_cast<int>(i), static_cast<int>(j)) = a(idx[i], idx[j]);
    return block;
}

// u <- u * (identity with w embedded on the rows/columns in idx)
inline void embed_block(ComplexMatrix& u, const ComplexMatrix& w, const std::vector<int>& idx) {
    const int n = u.dim();
    for (int row = 0; row < n; ++row) {
        std::vector<Complex> updated(idx.size(), 0.0);
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t k = 0; k < idx.size(); ++k)
                updated[j] += u(row, idx[k]) * w(static_cast<int>(k), static_cast<int>(j));
        for (std::size_t j = 0; j < idx.size(); ++j) u(row, idx[j]) = updated[j];
    }
}

// Joint diagonalizer of a commuting pair: diagonalize a random real
// combination of the four commuting Hermitian parts; eigenvalue clusters
// of the combination that fail to separate the pair are refined
// recursively with a fresh combination.
inline ComplexMatrix joint_diagonalizer(const ComplexMatrix& a, const ComplexMatrix& b,
                                        std::mt19937_64& rng, double tol, int depth,
                                        int& depth_used) {
    const int n = a.dim();
    if (n == 1) return ComplexMatrix::identity(1);
    if (depth > kDegeneracyRecursionCap)
        throw NumericError(
            "simultaneous_diag: degenerate eigenspaces failed to split within the "
            "recursion cap");
    depth_used = std::max(depth_used, depth);

    std::normal_distribution<double> gauss(0.0, 1.0);
    const ComplexMatrix combo =
        Complex(gauss(rng)) * hermitian_part(a) + Complex(gauss(rng)) * skew_part_over_i(a) +
        Complex(gauss(rng)) * hermitian_part(b) + Complex(gauss(rng)) * skew_part_over_i(b);

    HermitianEigen eig = hermitian_eigen(combo, kDefaultJacobiTol, /*hermiticity_tol=*/1.0);

    // Sort columns by eigenvalue so degenerate clusters are contiguous.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return eig.eigenvalues[static_cast<std::size_t>(i)] <
                                         eig.eigenvalues[static_cast<std::size_t>(j)]; });
    ComplexMatrix u(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u(i, j) = eig.u(i, order[static_cast<std::size_t>(j)]);

    const double spread = std::abs(eig.eigenvalues[static_cast<std::size_t>(order.back())] -
                                   eig.eigenvalues[static_cast<std::size_t>(order.front())]);
    const double cluster_gap = 1e-7 * std::max(1.0, spread);

    const ComplexMatrix a1 = conjugate(u, a);
    const ComplexMatrix b1 = conjugate(u, b);

    int begin = 0;
    while (begin < n) {
        int end = begin + 1;
        while (end < n &&
               std::abs(eig.eigenvalues[static_cast<std::size_t>(order[end])] -
                        eig.eigenvalues[static_cast<std::size_t>(order[end - 1])]) <= cluster_gap)
            ++end;
        if (end - begin > 1) {
            std::vector<int> idx(static_cast<std::size_t>(end - begin));
            std::iota(idx.begin(), idx.end(), begin);
            const ComplexMatrix block_a = extract_block(a1, idx);
            const ComplexMatrix block_b = extract_block(b1, idx);
            if (off_diagonal_norm(block_a) > tol || off_diagonal_norm(block_b) > tol) {
                const ComplexMatrix w =
                    joint_diagonalizer(block_a, block_b, rng, tol, depth + 1, depth_used);
                embed_block(u, w, idx);
            }
        }
        begin = end;
    }
    return u;
}

}  // namespace detail

// Unitary that simultaneously diagonalizes a commuting pair of unitary
// matrices. Preconditions are checked against tol; the returned residuals
// report how diagonal the conjugated pair actually is. Deterministic for
// a fixed seed.
inline SimultaneousDiag simultaneous_diag(const ComplexMatrix& a, const ComplexMatrix& b,
                                          double tol = kDefaultInputTol,
                                          std::uint64_t seed = 0x6b75646566ULL) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("simultaneous_diag: dimension mismatch");
    if (!a.all_finite() || !b.all_finite())
        throw NumericError("simultaneous_diag: non-finite entry");
    if (unitarity_residual(a) > tol || unitarity_residual(b) > tol)
        throw NumericError("simultaneous_diag: input is not unitary within tolerance");
    if (commutator_residual(a, b) > tol)
        throw NumericError("simultaneous_diag: matrices do not commute within tolerance");

    std::mt19937_64 rng(seed);
    SimultaneousDiag out;
    out.seed = seed;
    out.u = detail::joint_diagonalizer(a, b, rng, std::max(tol, 10 * kDefaultJacobiTol), 0,
                                       out.refinement_depth);
    out.unitarity_residual = unitarity_residual(out.u);
    out.diag_residual_a = off_diagonal_norm(detail::conjugate(out.u, a));
    out.diag_residual_b = off_diagonal_norm(detail::conjugate(out.u, b));
    if (out.diag_residual_a > tol || out.diag_residual_b > tol)
        throw NumericError("simultaneous_diag: conjugated pair is not diagonal within tolerance");
    return out;
}

// Eigenvalues of a single unitary matrix via the same machinery (a
// matrix always commutes with itself). Order matches the diagonal of the
// conjugated matrix, not sorted.
inline std::vector<Complex> unitary_eigenvalues(const ComplexMatrix& m,
                                                double tol = kDefaultInputTol,
                                                std::uint64_t seed = 0x6b75646566ULL) {
    const SimultaneousDiag diag = simultaneous_diag(m, m, tol, seed);
    const ComplexMatrix d = detail::conjugate(diag.u, m);
    std::vector<Complex> eigenvalues(static_cast<std::size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i) eigenvalues[static_cast<std::size_t>(i)] = d(i, i);
    return eigenvalues;
}

}  // namespace kudef
