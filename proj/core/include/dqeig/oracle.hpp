#pragma once

/**
 * @file oracle.hpp
 * @brief Independent reference eigenvalues for verification.
 *
 * A quaternion matrix Q maps to the 2n×2n complex matrix χ(Q) by replacing
 * each entry w + xi + yj + zk with the block
 *
 *     [ w + xi    y + zi ]
 *     [ -y + zi   w - xi ]
 *
 * χ is an algebra homomorphism, χ(Q*) = χ(Q)ᴴ, and the spectrum of χ(Q) for
 * Hermitian Q is the quaternion spectrum with each eigenvalue doubled. The
 * complex eigensolver here is a classical cyclic Jacobi method that shares no
 * code with the dual quaternion solvers.
 */

#include <complex>
#include <cstddef>
#include <vector>

#include "dqeig/matrix.hpp"

namespace dqeig::oracle {

using Complex = std::complex<double>;

/// Dense row-major complex square matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_{n}, data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_hermitian(double tol = 1e-12) const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// χ(Q) for any square quaternion matrix.
ComplexMatrix embed(const QMatrix& q);

/// χ(Q) for Hermitian Q. Throws NotHermitian.
ComplexMatrix complex_adjoint(const QMatrix& q);

struct ComplexEigen {
  std::vector<double> values;  ///< descending
  ComplexMatrix vectors;       ///< column j belongs to values[j]
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi for a complex Hermitian matrix.
ComplexEigen hermitian_eigen(ComplexMatrix a, double tol = 1e-15, std::size_t max_sweeps = 100);

/// Eigenvalues of a quaternion Hermitian matrix, descending, length n.
/// Throws NotHermitian or PairingFailure.
std::vector<double> standard_eigs_oracle(const QMatrix& q);

struct QuaternionEigen {
  std::vector<double> values;  ///< descending
  QMatrix vectors;             ///< unit columns, phase-fixed
};

/// Quaternion eigenpairs Q v = v μ via the embedding; requires a simple spectrum
/// (min gap above min_gap) so every eigenvector is unique up to phase.
QuaternionEigen quaternion_eigen(const QMatrix& q, double min_gap = 1e-6);

/// μ_i + (v_i* Q_I v_i) ε for each simple standard eigenvalue, sorted descending.
/// Throws DegenerateSpectrum when the standard gap is at most min_gap.
std::vector<DualNumber> dual_eigs_oracle(const DQMatrix& q, double min_gap = 1e-6);

}  // namespace dqeig::oracle
