#pragma once

/**
 * @file dual_quaternion.hpp
 * @brief Dual quaternions p = st + du·ε with quaternion parts.
 *
 * Division is right division, p / q = p q⁻¹. When both standard parts vanish
 * the quotient is du_p du_q⁻¹ with a zero dual part.
 */

#include "dqeig/dual_number.hpp"
#include "dqeig/quaternion.hpp"

namespace dqeig {

struct DualQuaternion {
  Quaternion st;
  Quaternion du;

  constexpr DualQuaternion() = default;
  constexpr DualQuaternion(const Quaternion& st_, const Quaternion& du_ = {}) : st{st_}, du{du_} {}
  constexpr explicit DualQuaternion(DualNumber a) : st{a.st}, du{a.du} {}

  static constexpr DualQuaternion identity() { return {Quaternion::identity(), {}}; }

  constexpr bool operator==(const DualQuaternion&) const = default;

  constexpr DualQuaternion operator-() const { return {-st, -du}; }
  constexpr DualQuaternion operator+(const DualQuaternion& o) const { return {st + o.st, du + o.du}; }
  constexpr DualQuaternion operator-(const DualQuaternion& o) const { return {st - o.st, du - o.du}; }

  constexpr DualQuaternion operator*(const DualQuaternion& o) const {
    return {st * o.st, st * o.du + du * o.st};
  }

  /// Right multiplication by a dual number (commutes with everything).
  constexpr DualQuaternion operator*(DualNumber a) const { return {st * a.st, st * a.du + du * a.st}; }

  constexpr DualQuaternion& operator+=(const DualQuaternion& o) { return *this = *this + o; }
  constexpr DualQuaternion& operator-=(const DualQuaternion& o) { return *this = *this - o; }

  constexpr DualQuaternion conj() const { return {st.conj(), du.conj()}; }

  bool is_appreciable(double tol = kZeroTol) const { return !st.is_zero(tol); }
};

inline DualQuaternion dq_mul(const DualQuaternion& p, const DualQuaternion& q) { return p * q; }

/// |p| = |st| + sc(st* du)/|st| ε if appreciable, else |du| ε.
inline DualNumber dq_magnitude(const DualQuaternion& p) {
  const double s = p.st.norm();
  if (s > kZeroTol) return {s, dot(p.st, p.du) / s};
  return {0.0, p.du.norm()};
}

/// Right division p q⁻¹. Throws DivisionUndefined when q has a zero standard
/// part and p does not, or when q is zero.
inline DualQuaternion dq_div(const DualQuaternion& p, const DualQuaternion& q) {
  if (!q.st.is_zero()) {
    const Quaternion qi = q.st.inverse();
    const Quaternion st = p.st * qi;
    return {st, p.du * qi - st * q.du * qi};
  }
  if (!p.st.is_zero() || q.du.is_zero()) {
    throw Error(ErrorCode::DivisionUndefined, "divisor has zero standard part");
  }
  return {p.du * q.du.inverse(), {}};
}

/// A unit dual quaternion has |st| = 1 and sc(st* du) = 0.
inline bool is_unit(const DualQuaternion& p, double tol = 1e-12) {
  const DualNumber m = dq_magnitude(p);
  return std::fabs(m.st - 1.0) <= tol && std::fabs(m.du) <= tol;
}

}  // namespace dqeig
