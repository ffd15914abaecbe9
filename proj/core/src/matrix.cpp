#include "dqeig/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dqeig {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, std::string(who) + ": operand shapes differ");
  }
}

}  // namespace

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion::identity();
  return m;
}

QMatrix QMatrix::adjoint() const {
  QMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

double QMatrix::frobenius_sq() const {
  double s = 0.0;
  for (const auto& q : data_) s += q.norm_sq();
  return s;
}

double QMatrix::frobenius() const { return std::sqrt(frobenius_sq()); }

bool QMatrix::is_zero(double tol) const {
  return std::all_of(data_.begin(), data_.end(), [tol](const Quaternion& q) { return q.is_zero(tol); });
}

bool QMatrix::is_hermitian(double rel_tol) const {
  if (!is_square()) return false;
  const double tol = rel_tol * std::max(1.0, frobenius());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (((*this)(j, i) - (*this)(i, j).conj()).norm() > tol) return false;
  return true;
}

bool QMatrix::is_unitary(double rel_tol) const {
  if (!is_square()) return false;
  const double tol = rel_tol * std::max(1.0, frobenius());
  const QMatrix a = adjoint();
  const QMatrix id = QMatrix::identity(rows_);
  return (a * *this - id).frobenius() <= tol && (*this * a - id).frobenius() <= tol;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "matrix product: inner dimensions differ");
  QMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Quaternion aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "matrix sum");
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "matrix difference");
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

QMatrix operator*(double s, const QMatrix& a) {
  QMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * s;
  return out;
}

double trace_inner(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "trace inner product");
  const auto da = a.data();
  const auto db = b.data();
  double s = 0.0;
  for (std::size_t i = 0; i < da.size(); ++i) s += dot(da[i], db[i]);
  return s;
}

DQMatrix::DQMatrix(QMatrix st_, QMatrix du_) : st(std::move(st_)), du(std::move(du_)) {
  require_same_shape(st, du, "DQMatrix");
}

DQMatrix DQMatrix::identity(std::size_t n) { return {QMatrix::identity(n), QMatrix(n)}; }

bool DQMatrix::is_hermitian(double rel_tol) const {
  if (!st.is_square()) return false;
  const double scale = std::max(1.0, norm_fr(*this));
  const double tol = rel_tol * scale;
  const std::size_t n = rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if ((st(j, i) - st(i, j).conj()).norm() > tol) return false;
      if ((du(j, i) - du(i, j).conj()).norm() > tol) return false;
    }
  return true;
}

bool DQMatrix::is_unitary(double rel_tol) const {
  if (!st.is_square()) return false;
  const double tol = rel_tol * std::max(1.0, norm_fr(*this));
  const DQMatrix a = adjoint();
  const DQMatrix id = DQMatrix::identity(rows());
  return norm_fr(a * *this - id) <= tol && norm_fr(*this * a - id) <= tol;
}

DQMatrix mat_mul(const DQMatrix& a, const DQMatrix& b) {
  return {a.st * b.st, a.st * b.du + a.du * b.st};
}

DQMatrix operator*(const DQMatrix& a, const DQMatrix& b) { return mat_mul(a, b); }
DQMatrix operator+(const DQMatrix& a, const DQMatrix& b) { return {a.st + b.st, a.du + b.du}; }
DQMatrix operator-(const DQMatrix& a, const DQMatrix& b) { return {a.st - b.st, a.du - b.du}; }
DQMatrix operator*(double s, const DQMatrix& a) { return {s * a.st, s * a.du}; }

void require_hermitian(const DQMatrix& q, const char* who) {
  if (!q.st.is_square()) throw Error(ErrorCode::NotHermitian, std::string(who) + ": matrix is not square");
  if (!q.is_hermitian()) throw Error(ErrorCode::NotHermitian, std::string(who) + ": matrix is not Hermitian");
}

DQVector column(const DQMatrix& m, std::size_t j) {
  if (j >= m.cols()) throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
  DQVector v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

DQVector operator*(const DQMatrix& a, const DQVector& x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::ShapeMismatch, "matrix-vector product: sizes differ");
  DQVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    DualQuaternion acc;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a.at(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

DQVector operator*(const DQVector& x, DualNumber lambda) {
  DQVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * lambda;
  return out;
}

DQVector operator-(const DQVector& a, const DQVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "vector difference: sizes differ");
  DQVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

VectorNorms vec_norms(const DQVector& x) {
  double st_sq = 0.0;
  double du_sq = 0.0;
  double cross = 0.0;
  for (const auto& e : x.entries) {
    st_sq += e.st.norm_sq();
    du_sq += e.du.norm_sq();
    cross += dot(e.st, e.du);
  }
  const double two_r = std::sqrt(st_sq + du_sq);
  // Σ|x_i|² = ‖x_st‖² + 2 Σ sc(x_st,i* x_I,i) ε
  if (std::sqrt(st_sq) > kZeroTol) {
    const double s = std::sqrt(st_sq);
    return {{s, cross / s}, two_r};
  }
  return {{0.0, std::sqrt(du_sq)}, two_r};
}

double norm_2r(const DQVector& x) { return vec_norms(x).two_r; }

MatrixNorms mat_norms(const DQMatrix& q) {
  const double fst = q.st.frobenius();
  const double fdu = q.du.frobenius();
  const double fr = std::sqrt(fst * fst + fdu * fdu);
  if (fst > kZeroTol) return {{fst, trace_inner(q.st, q.du) / fst}, fr};
  return {{0.0, fdu}, fr};
}

double norm_fr(const DQMatrix& q) { return std::sqrt(q.st.frobenius_sq() + q.du.frobenius_sq()); }

DualNumber frobenius_sq_dual(const DQMatrix& q) {
  return {q.st.frobenius_sq(), 2.0 * trace_inner(q.st, q.du)};
}

double offdiag_measure(const QMatrix& p) {
  if (!p.is_square()) throw Error(ErrorCode::ShapeMismatch, "offdiag_measure: matrix is not square");
  double s = 0.0;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (i != j) s += p(i, j).norm_sq();
  return s;
}

OffdiagMeasure offdiag_measure(const DQMatrix& q) { return {offdiag_measure(q.st), offdiag_measure(q.du)}; }

DualNumber offdiag_measure_dual(const DQMatrix& q) {
  if (!q.st.is_square()) throw Error(ErrorCode::ShapeMismatch, "offdiag_measure: matrix is not square");
  DualNumber s;
  const std::size_t n = q.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s = s + DualNumber{q.st(i, j).norm_sq(), 2.0 * dot(q.st(i, j), q.du(i, j))};
  return s;
}

double max_offdiag(const QMatrix& p) {
  double m = 0.0;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (i != j) m = std::max(m, p(i, j).norm());
  return m;
}

}  // namespace dqeig
