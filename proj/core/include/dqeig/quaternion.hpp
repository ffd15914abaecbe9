#pragma once

/**
 * @file quaternion.hpp
 * @brief Real quaternions q = w + xi + yj + zk.
 *
 * Multiplication follows the Hamilton rules i² = j² = k² = ijk = -1 and is
 * not commutative. All operations are pure and constexpr where the standard
 * library allows it.
 */

#include <cmath>

#include "dqeig/error.hpp"

namespace dqeig {

/// Absolute tolerance used wherever a quaternion or real must be "nonzero".
inline constexpr double kZeroTol = 1e-14;

struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w{w_}, x{x_}, y{y_}, z{z_} {}
  /// Embeds a real number as [r, 0, 0, 0].
  constexpr explicit Quaternion(double r) : w{r} {}

  static constexpr Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
  constexpr Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }

  // [p0 q0 - p.q, p0 q + q0 p + p x q]
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  constexpr Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
  constexpr Quaternion operator/(double s) const { return {w / s, x / s, y / s, z / s}; }

  constexpr Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
  constexpr Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }
  constexpr Quaternion& operator*=(double s) { return *this = *this * s; }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }

  /// Scalar part sc(q) = (q + q*)/2.
  constexpr double scalar() const { return w; }
  constexpr Quaternion vector_part() const { return {0.0, x, y, z}; }

  bool is_zero(double tol = kZeroTol) const { return norm() <= tol; }

  /// q* / |q|². Throws ZeroQuaternion when |q| is below kZeroTol.
  Quaternion inverse() const {
    const double n2 = norm_sq();
    if (std::sqrt(n2) <= kZeroTol) {
      throw Error(ErrorCode::ZeroQuaternion, "cannot invert a zero quaternion");
    }
    return conj() / n2;
  }
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// 4-vector dot product; equals sc(p* q).
constexpr double dot(const Quaternion& p, const Quaternion& q) {
  return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z;
}

struct QuaternionParts {
  Quaternion conj;
  double magnitude;
  Quaternion inverse;
};

/// Conjugate, magnitude and inverse in one call.
inline QuaternionParts qconj_mag_inv(const Quaternion& p) {
  return {p.conj(), p.norm(), p.inverse()};
}

}  // namespace dqeig
