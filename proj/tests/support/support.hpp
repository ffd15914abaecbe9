#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "dqeig/dqeig.hpp"

namespace dqeig::testing {

inline Quaternion random_quaternion(Rng& rng) {
  const double w = rng.normal();
  const double x = rng.normal();
  const double y = rng.normal();
  const double z = rng.normal();
  return {w, x, y, z};
}

inline DualQuaternion random_dq(Rng& rng) {
  const Quaternion st = random_quaternion(rng);
  return {st, random_quaternion(rng)};
}

inline DualNumber random_dual(Rng& rng) {
  const double st = rng.normal();
  return {st, rng.normal()};
}

inline QMatrix random_qmatrix(std::size_t r, std::size_t c, Rng& rng) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_quaternion(rng);
  return m;
}

inline DQMatrix random_dqmatrix(std::size_t r, std::size_t c, Rng& rng) {
  QMatrix st = random_qmatrix(r, c, rng);
  return {std::move(st), random_qmatrix(r, c, rng)};
}

inline DQVector random_dqvector(std::size_t n, Rng& rng) {
  DQVector v(n);
  for (auto& e : v.entries) e = random_dq(rng);
  return v;
}

/// Left-multiplication matrix of q acting on (w, x, y, z) column vectors.
inline std::array<std::array<double, 4>, 4> left_matrix(const Quaternion& q) {
  return {{{q.w, -q.x, -q.y, -q.z}, {q.x, q.w, -q.z, q.y}, {q.y, q.z, q.w, -q.x}, {q.z, -q.y, q.x, q.w}}};
}

inline Quaternion matrix_product(const Quaternion& p, const Quaternion& q) {
  const auto m = left_matrix(p);
  const double v[4] = {q.w, q.x, q.y, q.z};
  double o[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) o[i] += m[i][j] * v[j];
  return {o[0], o[1], o[2], o[3]};
}

inline double qdist(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

inline double dqdist(const DualQuaternion& a, const DualQuaternion& b) {
  return std::hypot((a.st - b.st).norm(), (a.du - b.du).norm());
}

/// Random unitary dual quaternion matrix U(I + Wε) with U from the oracle's
/// eigenvectors and W anti-Hermitian. Shares no code with the Givens kernels.
inline DQMatrix random_unitary(std::size_t n, Rng& rng) {
  const DQMatrix h = gen_random_hermitian(n, rng.below(1u << 30));
  const QMatrix u = oracle::quaternion_eigen(h.st).vectors;
  const QMatrix b = random_qmatrix(n, n, rng);
  const QMatrix w = 0.5 * (b - b.adjoint());
  return {u, u * w};
}

}  // namespace dqeig::testing
