#pragma once

/**
 * @file dual_number.hpp
 * @brief Dual numbers a = st + du·ε with ε² = 0.
 *
 * Eigenvalues of dual quaternion Hermitian matrices are dual numbers. The
 * total order is lexicographic: the standard part dominates and the dual
 * part breaks ties.
 */

#include <cmath>
#include <compare>

#include "dqeig/quaternion.hpp"

namespace dqeig {

struct DualNumber {
  double st = 0.0;
  double du = 0.0;

  constexpr DualNumber() = default;
  constexpr DualNumber(double st_, double du_ = 0.0) : st{st_}, du{du_} {}

  constexpr bool operator==(const DualNumber&) const = default;

  constexpr DualNumber operator-() const { return {-st, -du}; }
  constexpr DualNumber operator+(DualNumber o) const { return {st + o.st, du + o.du}; }
  constexpr DualNumber operator-(DualNumber o) const { return {st - o.st, du - o.du}; }
  constexpr DualNumber operator*(DualNumber o) const { return {st * o.st, st * o.du + du * o.st}; }

  constexpr bool is_appreciable(double tol = kZeroTol) const { return st > tol || st < -tol; }
};

/// Lexicographic comparison on (st, du).
constexpr std::weak_ordering dual_cmp(DualNumber a, DualNumber b) {
  if (a.st < b.st) return std::weak_ordering::less;
  if (a.st > b.st) return std::weak_ordering::greater;
  if (a.du < b.du) return std::weak_ordering::less;
  if (a.du > b.du) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

constexpr std::weak_ordering operator<=>(DualNumber a, DualNumber b) { return dual_cmp(a, b); }

/// |a| = |st| + sgn(st)·du·ε when st ≠ 0, otherwise |du|·ε.
constexpr DualNumber dual_abs(DualNumber a) {
  if (a.st > kZeroTol) return {a.st, a.du};
  if (a.st < -kZeroTol) return {-a.st, -a.du};
  return {0.0, a.du < 0 ? -a.du : a.du};
}

/// Square root of a nonnegative dual number; sqrt(0 + bε) is taken as 0 + sqrt(|b|)ε
/// to match the degenerate branches of the vector and matrix norms.
inline DualNumber dual_sqrt(DualNumber a) {
  if (a.st > kZeroTol) {
    const double s = std::sqrt(a.st);
    return {s, a.du / (2.0 * s)};
  }
  return {0.0, std::sqrt(std::fabs(a.du))};
}

}  // namespace dqeig
