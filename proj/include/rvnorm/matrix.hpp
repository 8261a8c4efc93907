#pragma once

#include <complex>
#include <vector>

#include "rvnorm/rng.hpp"

namespace rvnorm {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major, value semantics. Entries are
/// validated finite when built from user data.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n);  // zero matrix

    /// Builds from row-major entries; rejects non-square sizes and
    /// non-finite values.
    static ComplexMatrix from_entries(int n, std::vector<Complex> entries);

    int dim() const { return n_; }
    Complex& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    static ComplexMatrix identity(int n);

private:
    int n_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& m);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& z);
Complex trace(const ComplexMatrix& z);
double frobenius_norm(const ComplexMatrix& z);

/// Self-adjoint matrix. Construction checks A = A* entrywise within absolute
/// tolerance 1e-12 and stores the exact symmetrization (A + A*)/2; anything
/// beyond the tolerance is rejected rather than silently repaired.
class HermitianMatrix {
public:
    explicit HermitianMatrix(const ComplexMatrix& z);

    int dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    const Complex& at(int i, int j) const { return m_.at(i, j); }

private:
    ComplexMatrix m_;
};

/// Real eigenvalues sorted descending, with multiplicity.
struct Spectrum {
    std::vector<double> values;
};

struct EigenDecomposition {
    Spectrum spectrum;
    ComplexMatrix vectors;  // unitary; column j pairs with values[j]
};

/// All eigenvalues of A via cyclic complex Jacobi rotations. Converged when
/// the off-diagonal Frobenius mass drops to 1e-12 * ||A||_F; more than 50
/// sweeps raises NumericalError.
Spectrum eigenvalues(const HermitianMatrix& a);

/// Eigenvalues plus accumulated rotation matrix (A = V diag(lambda) V*).
EigenDecomposition eigh(const HermitianMatrix& a);

/// e^{it} Z + e^{-it} Z*, exactly Hermitian by construction.
HermitianMatrix rotate(const ComplexMatrix& z, double t);

double frobenius_norm(const HermitianMatrix& a);

/// Schatten alpha-norm (sum |lambda_j|^alpha)^{1/alpha}; alpha in (1, 2].
/// Coincides with the Frobenius norm at alpha = 2.
double schatten_norm(const HermitianMatrix& a, double alpha);

/// Schatten norm of a general square matrix through its singular values
/// (eigenvalues of Z* Z).
double schatten_norm(const ComplexMatrix& z, double alpha);

/// Gaussian Hermitian: iid standard-normal real/imaginary parts, then
/// symmetrized as (G + G*)/2.
HermitianMatrix random_hermitian(int n, RngStream& rng);

/// Ginibre-style square matrix with iid standard-normal parts.
ComplexMatrix random_complex(int n, RngStream& rng);

/// J_n - I_n: all ones off the diagonal, zeros on it.
HermitianMatrix ones_minus_identity(int n);

} // namespace rvnorm
