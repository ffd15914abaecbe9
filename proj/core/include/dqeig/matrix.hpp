#pragma once

/**
 * @file matrix.hpp
 * @brief Dense quaternion and dual quaternion matrices.
 *
 * Storage is row-major. A DQMatrix is a pair of QMatrix values of the same
 * shape: the standard part and the dual (infinitesimal) part.
 */

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dqeig/dual_number.hpp"
#include "dqeig/dual_quaternion.hpp"
#include "dqeig/quaternion.hpp"

namespace dqeig {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_{rows}, cols_{cols}, data_(rows * cols) {}
  explicit QMatrix(std::size_t n) : QMatrix(n, n) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Quaternion& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Quaternion& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Quaternion> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Quaternion> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const Quaternion> data() const noexcept { return data_; }

  bool operator==(const QMatrix&) const = default;

  QMatrix adjoint() const;
  double frobenius_sq() const;
  double frobenius() const;
  bool is_zero(double tol = kZeroTol) const;

  /// q_ji = conj(q_ij) within tol·max(1, ‖Q‖_F).
  bool is_hermitian(double rel_tol = 1e-10) const;
  /// Q*Q = I within tol·max(1, ‖Q‖_F).
  bool is_unitary(double rel_tol = 1e-10) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator*(double s, const QMatrix& a);

/// sc(tr(A* B)) = Σ dot(a_ij, b_ij).
double trace_inner(const QMatrix& a, const QMatrix& b);

struct DQMatrix {
  QMatrix st;
  QMatrix du;

  DQMatrix() = default;
  explicit DQMatrix(std::size_t n) : st(n), du(n) {}
  DQMatrix(std::size_t rows, std::size_t cols) : st(rows, cols), du(rows, cols) {}
  DQMatrix(QMatrix st_, QMatrix du_);

  static DQMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return st.rows(); }
  std::size_t cols() const noexcept { return st.cols(); }
  std::size_t size() const noexcept { return st.rows(); }

  DualQuaternion at(std::size_t i, std::size_t j) const { return {st(i, j), du(i, j)}; }
  void set(std::size_t i, std::size_t j, const DualQuaternion& v) {
    st(i, j) = v.st;
    du(i, j) = v.du;
  }

  bool operator==(const DQMatrix&) const = default;

  DQMatrix adjoint() const { return {st.adjoint(), du.adjoint()}; }
  bool is_appreciable() const { return !st.is_zero(); }
  bool is_hermitian(double rel_tol = 1e-10) const;
  /// Û*Û = I as dual quaternion matrices, tolerance relative to ‖Û‖_Fᴿ.
  bool is_unitary(double rel_tol = 1e-10) const;
};

DQMatrix mat_mul(const DQMatrix& a, const DQMatrix& b);
inline DQMatrix adjoint(const DQMatrix& a) { return a.adjoint(); }
DQMatrix operator*(const DQMatrix& a, const DQMatrix& b);
DQMatrix operator+(const DQMatrix& a, const DQMatrix& b);
DQMatrix operator-(const DQMatrix& a, const DQMatrix& b);
DQMatrix operator*(double s, const DQMatrix& a);

/// Throws NotHermitian unless the matrix is square and Hermitian.
void require_hermitian(const DQMatrix& q, const char* who);

struct DQVector {
  std::vector<DualQuaternion> entries;

  DQVector() = default;
  explicit DQVector(std::size_t n) : entries(n) {}
  explicit DQVector(std::vector<DualQuaternion> e) : entries(std::move(e)) {}

  std::size_t size() const noexcept { return entries.size(); }
  DualQuaternion& operator[](std::size_t i) { return entries[i]; }
  const DualQuaternion& operator[](std::size_t i) const { return entries[i]; }
};

DQVector column(const DQMatrix& m, std::size_t j);
DQVector operator*(const DQMatrix& a, const DQVector& x);
/// x·λ for a dual number λ.
DQVector operator*(const DQVector& x, DualNumber lambda);
DQVector operator-(const DQVector& a, const DQVector& b);

struct VectorNorms {
  DualNumber two;    ///< ‖x‖₂
  double two_r;      ///< ‖x‖₂ᴿ
};

struct MatrixNorms {
  DualNumber frobenius;  ///< ‖Q‖_F
  double frobenius_r;    ///< ‖Q‖_Fᴿ
};

VectorNorms vec_norms(const DQVector& x);
MatrixNorms mat_norms(const DQMatrix& q);

double norm_2r(const DQVector& x);
double norm_fr(const DQMatrix& q);

/// Squared dual F-norm ‖Q‖_F² as a dual number: ‖Q_st‖² + 2 sc(tr(Q_st* Q_I)) ε.
DualNumber frobenius_sq_dual(const DQMatrix& q);

/// N(P) = ‖P‖_F² − Σ|p_ii|².
double offdiag_measure(const QMatrix& p);

struct OffdiagMeasure {
  double st;
  double du;
};

/// (N(Q_st), N(Q_I)). Throws ShapeMismatch for non-square input.
OffdiagMeasure offdiag_measure(const DQMatrix& q);

/// Dual-number off-diagonal measure N(Q̂) = ‖Q̂‖_F² − Σ|q̂_ii|².
DualNumber offdiag_measure_dual(const DQMatrix& q);

/// max_{i≠j} |p_ij|.
double max_offdiag(const QMatrix& p);

/// Hoffman–Wielandt check on standard parts:
/// ‖λ(Q1_st) − λ(Q2_st)‖₂ ≤ ‖Q1_st − Q2_st‖_F (+ abs_tol). Throws NotHermitian.
bool hw_check(const DQMatrix& q1, const DQMatrix& q2, double abs_tol = 1e-9);

}  // namespace dqeig
