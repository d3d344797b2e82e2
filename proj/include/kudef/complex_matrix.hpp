#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace kudef {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major, value semantics.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {
        if (n < 1) throw std::invalid_argument("ComplexMatrix: dimension must be at least 1");
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<Complex>& d) {
        ComplexMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    int dim() const { return n_; }

    Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    double frobenius_norm() const {
        double sum = 0;
        for (const auto& z : entries_) sum += std::norm(z);
        return std::sqrt(sum);
    }

    bool all_finite() const {
        for (const auto& z : entries_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix product: dimension mismatch");
        ComplexMatrix c(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const Complex aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix sum: dimension mismatch");
        ComplexMatrix c = a;
        for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
        return c;
    }

    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("matrix difference: dimension mismatch");
        ComplexMatrix c = a;
        for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
        return c;
    }

    friend ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
        ComplexMatrix c = a;
        for (auto& z : c.entries_) z *= scale;
        return c;
    }

private:
    int n_ = 0;
    std::vector<Complex> entries_;
};

inline double unitarity_residual(const ComplexMatrix& u) {
    return (u.adjoint() * u - ComplexMatrix::identity(u.dim())).frobenius_norm();
}

inline double commutator_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a * b - b * a).frobenius_norm();
}

inline double hermiticity_residual(const ComplexMatrix& h) {
    return (h - h.adjoint()).frobenius_norm();
}

inline double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
    return 0.5 * (a + a.adjoint());
}

inline ComplexMatrix skew_part_over_i(const ComplexMatrix& a) {
    return Complex(0, -0.5) * (a - a.adjoint());
}

// Haar-ish random unitary: modified Gram-Schmidt on a complex Gaussian
// matrix. Good enough for test conjugations; no distribution claims.
inline ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            Complex dot = 0;
            for (int i = 0; i < n; ++i) dot += std::conj(m(i, k)) * m(i, j);
            for (int i = 0; i < n; ++i) m(i, j) -= dot * m(i, k);
        }
        double norm = 0;
        for (int i = 0; i < n; ++i) norm += std::norm(m(i, j));
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) m(i, j) /= norm;
    }
    return m;
}

}  // namespace kudef
