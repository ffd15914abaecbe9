#pragma once

/**
 * @file givens.hpp
 * @brief 2×2 Hermitian diagonalizers and their n×n rotation updates.
 *
 * A real-diagonal quaternion Hermitian block [[a, c], [c*, b]] with c ≠ 0 is
 * diagonalized by a 2×2 unitary U whose columns are (−c, a − λ)ᵀ normalized.
 * For dual quaternion blocks a second factor V = I + Wε with anti-Hermitian W
 * removes the remaining dual off-diagonal. All updates touch only rows and
 * columns k and l.
 */

#include <cstddef>
#include <optional>

#include "dqeig/matrix.hpp"

namespace dqeig {

/// 2×2 quaternion matrix [[u00, u01], [u10, u11]].
struct Unitary2 {
  Quaternion u00, u01, u10, u11;

  static constexpr Unitary2 identity() {
    return {Quaternion::identity(), {}, {}, Quaternion::identity()};
  }
};

/// Dual parts of the off-diagonal entries of V = I + Wε.
struct DualCorrection {
  Quaternion w_kl;
  Quaternion w_lk;
};

struct GivensPlan {
  std::size_t k = 0;
  std::size_t l = 1;
  Unitary2 U = Unitary2::identity();
  double lambda1 = 0.0;  ///< larger eigenvalue of the standard block
  double lambda2 = 0.0;
  std::optional<DualCorrection> correction;
  double x = 0.0;  ///< dual part of the (k,k) entry after the update
  double y = 0.0;  ///< dual part of the (l,l) entry after the update
};

/// Off-diagonal magnitudes at or below this are treated as zero.
inline constexpr double kOffdiagTol = 1e-14;

/// Diagonalizes [[a, c], [c*, b]]. Throws DegenerateOffdiag when |c| ≤ kOffdiagTol.
GivensPlan diag2_standard(double a, double b, const Quaternion& c);

/// Diagonalizes a 2×2 dual quaternion Hermitian matrix. Throws DegenerateOffdiag.
GivensPlan diag2_dual(const DQMatrix& q);

/// diag2_dual on the (k,l) principal submatrix of Q, with k and l recorded in the plan.
GivensPlan plan_dual_at(const DQMatrix& q, std::size_t k, std::size_t l);

/// diag2_standard on the (k,l) block of Q_st.
GivensPlan plan_standard_at(const DQMatrix& q, std::size_t k, std::size_t l);

/// diag2_standard on the (k,l) block of Q_I. Used inside clusters of equal standard eigenvalues.
GivensPlan plan_dual_block_at(const DQMatrix& q, std::size_t k, std::size_t l);

/// Q ← L*QL for the embedded U on both parts; acc ← acc·L. Throws IndexOutOfRange.
void apply_standard_rotation(DQMatrix& q, const GivensPlan& plan, DQMatrix* acc = nullptr);

/// Q ← J*QJ with J = L·V. Throws IndexOutOfRange, DegenerateOffdiag if the plan has no correction.
void apply_dual_givens(DQMatrix& q, const GivensPlan& plan, DQMatrix* acc = nullptr);

/// Removes the dual (k,l) entry with V = I + Wε, W_kl = Q_I[k,l]/(d_l − d_k),
/// using the current standard diagonal d. The standard part is left untouched.
/// Returns |W_kl|. Throws IndexOutOfRange, RepeatedDiagonal when d_k = d_l.
double apply_dual_decoupling(DQMatrix& q, std::size_t k, std::size_t l, DQMatrix* acc = nullptr);

/// The n×n dual quaternion matrix J with the plan's U·V embedded at (k,l).
DQMatrix embed_plan(const GivensPlan& plan, std::size_t n);

}  // namespace dqeig
