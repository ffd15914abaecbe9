#include "dqeig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace dqeig::oracle {

namespace {

constexpr double kPairTol = 1e-8;

struct Rot2 {
  Complex g00, g01, g10, g11;
};

// A <- Gᴴ A G on rows/cols p,q; V <- V G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, const Rot2& g) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * g.g00 + akq * g.g10;
    a(k, q) = akp * g.g01 + akq * g.g11;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(g.g00) * apk + std::conj(g.g10) * aqk;
    a(q, k) = std::conj(g.g01) * apk + std::conj(g.g11) * aqk;
  }
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
  a(q, p) = std::conj(a(p, q));
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * g.g00 + vkq * g.g10;
    v(k, q) = vkp * g.g01 + vkq * g.g11;
  }
}

double off_norm_sq(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

Quaternion to_quaternion(Complex a, Complex b) { return {a.real(), a.imag(), b.real(), b.imag()}; }

void require_square_hermitian(const QMatrix& q, const char* who) {
  if (!q.is_square() || !q.is_hermitian()) {
    throw Error(ErrorCode::NotHermitian, std::string(who) + ": matrix is not Hermitian");
  }
}

// Pairs up the doubled spectrum of χ(Q); returns the index of the first member of each pair.
std::vector<double> pair_spectrum(const std::vector<double>& doubled) {
  std::vector<double> out;
  out.reserve(doubled.size() / 2);
  for (std::size_t k = 0; k + 1 < doubled.size(); k += 2) {
    const double a = doubled[k];
    const double b = doubled[k + 1];
    if (std::fabs(a - b) > kPairTol * std::max(1.0, std::fabs(a))) {
      throw Error(ErrorCode::PairingFailure,
                  "embedded eigenvalues " + std::to_string(a) + " and " + std::to_string(b) + " do not pair");
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

}  // namespace

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (std::abs((*this)(j, i) - std::conj((*this)(i, j))) > tol) return false;
  return true;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::ShapeMismatch, "complex product: sizes differ");
  const std::size_t n = a.size();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

ComplexMatrix embed(const QMatrix& q) {
  if (!q.is_square()) throw Error(ErrorCode::ShapeMismatch, "embed: matrix is not square");
  const std::size_t n = q.rows();
  ComplexMatrix c(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Quaternion& e = q(i, j);
      c(2 * i, 2 * j) = {e.w, e.x};
      c(2 * i, 2 * j + 1) = {e.y, e.z};
      c(2 * i + 1, 2 * j) = {-e.y, e.z};
      c(2 * i + 1, 2 * j + 1) = {e.w, -e.x};
    }
  return c;
}

ComplexMatrix complex_adjoint(const QMatrix& q) {
  require_square_hermitian(q, "complex_adjoint");
  return embed(q);
}

ComplexEigen hermitian_eigen(ComplexMatrix a, double tol, std::size_t max_sweeps) {
  const std::size_t n = a.size();
  ComplexMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += std::norm(a(i, j));
  const double scale = std::sqrt(total);

  std::size_t sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (std::sqrt(off_norm_sq(a)) <= tol * std::max(scale, 1e-300)) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= 1e-300) continue;
        const Complex phase = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = diag(1, conj(phase)) · [[c, s], [-s, c]]
        const Rot2 rot{c, s, -s * std::conj(phase), c * std::conj(phase)};
        rotate(a, v, p, q, rot);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  ComplexEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  out.sweeps = sweep;
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> standard_eigs_oracle(const QMatrix& q) {
  require_square_hermitian(q, "standard_eigs_oracle");
  return pair_spectrum(hermitian_eigen(embed(q)).values);
}

QuaternionEigen quaternion_eigen(const QMatrix& q, double min_gap) {
  require_square_hermitian(q, "quaternion_eigen");
  const std::size_t n = q.rows();
  const ComplexEigen ce = hermitian_eigen(embed(q));
  QuaternionEigen out;
  out.values = pair_spectrum(ce.values);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (out.values[k] - out.values[k + 1] <= min_gap) {
      throw Error(ErrorCode::DegenerateSpectrum, "standard eigenvalues " + std::to_string(out.values[k]) + " and " +
                                                     std::to_string(out.values[k + 1]) + " are not separated");
    }
  }

  out.vectors = QMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    // A column (a, -conj(b)) of χ(x) encodes the quaternion vector x = a + b j.
    const std::size_t col = 2 * k;
    std::vector<Quaternion> x(n);
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = to_quaternion(ce.vectors(2 * i, col), -std::conj(ce.vectors(2 * i + 1, col)));
      nrm += x[i].norm_sq();
    }
    nrm = std::sqrt(nrm);
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (x[i].norm() > x[pivot].norm() * (1.0 + 1e-9)) pivot = i;
    const Quaternion phase = x[pivot].conj() / (x[pivot].norm() * nrm);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = x[i] * phase;
  }
  return out;
}

std::vector<DualNumber> dual_eigs_oracle(const DQMatrix& q, double min_gap) {
  require_square_hermitian(q.st, "dual_eigs_oracle");
  if (!q.du.is_hermitian()) throw Error(ErrorCode::NotHermitian, "dual_eigs_oracle: dual part is not Hermitian");
  const std::size_t n = q.rows();
  const QuaternionEigen qe = quaternion_eigen(q.st, min_gap);
  std::vector<DualNumber> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Quaternion acc;
    for (std::size_t i = 0; i < n; ++i) {
      Quaternion row;
      for (std::size_t j = 0; j < n; ++j) row += q.du(i, j) * qe.vectors(j, k);
      acc += qe.vectors(i, k).conj() * row;
    }
    out[k] = {qe.values[k], acc.scalar()};
  }
  std::stable_sort(out.begin(), out.end(), [](DualNumber a, DualNumber b) { return dual_cmp(a, b) > 0; });
  return out;
}

}  // namespace dqeig::oracle
