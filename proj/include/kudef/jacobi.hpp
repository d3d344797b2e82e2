#pragma once

#include <cmath>
#include <vector>

#include "kudef/complex_matrix.hpp"
#include "kudef/errors.hpp"

namespace kudef {

inline constexpr double kDefaultInputTol = 1e-8;
inline constexpr double kDefaultJacobiTol = 1e-12;
inline constexpr int kJacobiSweepCap = 64;

struct HermitianEigen {
    std::vector<double> eigenvalues;  // indexed like the columns of u
    ComplexMatrix u;                  // unitary; u* h u = diag(eigenvalues) up to residual
    int sweeps = 0;
    double off_norm = 0;  // final off-diagonal Frobenius norm of u* h u
};

// Cyclic Jacobi for complex Hermitian matrices. Each step zeroes one
// off-diagonal entry with the 2x2 unitary obtained by phasing the entry
// real and applying the classical symmetric rotation; sweeps repeat until
// the off-diagonal Frobenius norm drops below tol * ||h||_F or the sweep
// cap (kJacobiSweepCap) is hit. The returned residual satisfies
// ||u* h u - diag|| <= c * tol * ||h||_F with c = 4, covering the
// re-accumulation error of the rotations.
inline HermitianEigen hermitian_eigen(const ComplexMatrix& h, double tol = kDefaultJacobiTol,
                                      double hermiticity_tol = kDefaultInputTol) {
    const int n = h.dim();
    const double scale = h.frobenius_norm();
    if (!h.all_finite()) throw NumericError("hermitian_eigen: non-finite entry");
    if (hermiticity_residual(h) > hermiticity_tol * std::max(1.0, scale))
        throw NumericError("hermitian_eigen: input is not Hermitian within tolerance");

    ComplexMatrix a = hermitian_part(h);  // symmetrize tolerance-level noise away
    ComplexMatrix u = ComplexMatrix::identity(n);
    const double target = tol * std::max(scale, 1e-300);

    HermitianEigen out;
    for (out.sweeps = 0; out.sweeps < kJacobiSweepCap; ++out.sweeps) {
        if (off_diagonal_norm(a) <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r <= target / (n * n)) continue;
                const Complex phase = a(p, q) / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2 * r);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // columns p, q of a and u: right-multiply by the rotation
                //   [ c            s          ]
                //   [ -s conj(ph)  c conj(ph) ]
                for (int i = 0; i < n; ++i) {
                    const Complex aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - s * std::conj(phase) * aiq;
                    a(i, q) = s * aip + c * std::conj(phase) * aiq;
                    const Complex uip = u(i, p), uiq = u(i, q);
                    u(i, p) = c * uip - s * std::conj(phase) * uiq;
                    u(i, q) = s * uip + c * std::conj(phase) * uiq;
                }
                // rows p, q of a: left-multiply by the adjoint rotation
                for (int j = 0; j < n; ++j) {
                    const Complex apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - s * phase * aqj;
                    a(q, j) = s * apj + c * phase * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    out.off_norm = off_diagonal_norm(a);
    if (out.off_norm > target && out.sweeps >= kJacobiSweepCap)
        throw NumericError("hermitian_eigen: no convergence within the sweep cap");
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.eigenvalues[static_cast<std::size_t>(i)] = a(i, i).real();
    out.u = std::move(u);
    return out;
}

}  // namespace kudef
