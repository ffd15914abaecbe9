#include "dqeig/givens.hpp"

#include <cmath>
#include <string>

namespace dqeig {

namespace {

void require_pair(const DQMatrix& q, std::size_t k, std::size_t l, const char* who) {
  if (k >= q.rows() || l >= q.rows() || k == l) {
    throw Error(ErrorCode::IndexOutOfRange, std::string(who) + ": bad index pair (" + std::to_string(k) + ", " +
                                                std::to_string(l) + ") for n = " + std::to_string(q.rows()));
  }
}

// Columns k,l of one part: m ← m·U.
void rotate_cols(QMatrix& m, std::size_t k, std::size_t l, const Unitary2& u) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Quaternion a = m(r, k);
    const Quaternion b = m(r, l);
    m(r, k) = a * u.u00 + b * u.u10;
    m(r, l) = a * u.u01 + b * u.u11;
  }
}

// Rows k,l of one part: m ← U*·m.
void rotate_rows(QMatrix& m, std::size_t k, std::size_t l, const Unitary2& u) {
  const Quaternion c00 = u.u00.conj(), c01 = u.u01.conj(), c10 = u.u10.conj(), c11 = u.u11.conj();
  auto rk = m.row(k);
  auto rl = m.row(l);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Quaternion a = rk[c];
    const Quaternion b = rl[c];
    rk[c] = c00 * a + c10 * b;
    rl[c] = c01 * a + c11 * b;
  }
}

void tidy(QMatrix& m, std::size_t k, std::size_t l) {
  m(l, k) = m(k, l).conj();
  m(k, k) = Quaternion(m(k, k).w);
  m(l, l) = Quaternion(m(l, l).w);
}

// Q_I ← Q_I + Q_st W + W* Q_st and acc_du ← acc_du + acc_st W for W supported on (k,l),(l,k).
void apply_correction(DQMatrix& q, std::size_t k, std::size_t l, const DualCorrection& w, DQMatrix* acc) {
  const std::size_t n = q.rows();
  const QMatrix& s = q.st;
  QMatrix& d = q.du;
  for (std::size_t r = 0; r < n; ++r) {
    d(r, l) += s(r, k) * w.w_kl;
    d(r, k) += s(r, l) * w.w_lk;
  }
  const Quaternion ck = w.w_lk.conj();
  const Quaternion cl = w.w_kl.conj();
  for (std::size_t c = 0; c < n; ++c) {
    d(k, c) += ck * s(l, c);
    d(l, c) += cl * s(k, c);
  }
  tidy(d, k, l);
  if (acc != nullptr) {
    for (std::size_t r = 0; r < acc->rows(); ++r) {
      const Quaternion jk = acc->st(r, k);
      const Quaternion jl = acc->st(r, l);
      acc->du(r, l) += jk * w.w_kl;
      acc->du(r, k) += jl * w.w_lk;
    }
  }
}

}  // namespace

GivensPlan diag2_standard(double a, double b, const Quaternion& c) {
  const double cn = c.norm();
  if (cn <= kOffdiagTol) throw Error(ErrorCode::DegenerateOffdiag, "off-diagonal entry is zero");
  const double c2 = cn * cn;
  const double half_diff = 0.5 * (a - b);
  const double r = std::hypot(half_diff, cn);
  const double mid = 0.5 * (a + b);

  // a − λ1 = d − r and a − λ2 = d + r; take the cancellation-free form of each.
  double a_l1, a_l2;
  if (half_diff >= 0.0) {
    a_l2 = half_diff + r;
    a_l1 = -c2 / a_l2;
  } else {
    a_l1 = half_diff - r;
    a_l2 = c2 / (r - half_diff);
  }

  GivensPlan p;
  p.lambda1 = mid + r;
  p.lambda2 = mid - r;
  const double n1 = std::sqrt(a_l1 * a_l1 + c2);
  const double n2 = std::sqrt(a_l2 * a_l2 + c2);
  p.U.u00 = -c / n1;
  p.U.u10 = Quaternion(a_l1 / n1);
  p.U.u01 = -c / n2;
  p.U.u11 = Quaternion(a_l2 / n2);
  return p;
}

GivensPlan diag2_dual(const DQMatrix& q) {
  if (q.rows() != 2 || q.cols() != 2) throw Error(ErrorCode::ShapeMismatch, "diag2_dual: expected a 2x2 matrix");
  GivensPlan p = diag2_standard(q.st(0, 0).w, q.st(1, 1).w, q.st(0, 1));
  // U* Q_I U
  QMatrix m = q.du;
  rotate_cols(m, 0, 1, p.U);
  rotate_rows(m, 0, 1, p.U);
  p.x = m(0, 0).w;
  p.y = m(1, 1).w;
  const Quaternion z = m(0, 1);
  const Quaternion w_kl = z / (p.lambda2 - p.lambda1);
  p.correction = DualCorrection{w_kl, -w_kl.conj()};
  return p;
}

namespace {

DQMatrix principal(const DQMatrix& q, std::size_t k, std::size_t l) {
  DQMatrix b(2);
  const std::size_t idx[2] = {k, l};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b.set(i, j, q.at(idx[i], idx[j]));
  return b;
}

}  // namespace

GivensPlan plan_dual_at(const DQMatrix& q, std::size_t k, std::size_t l) {
  require_pair(q, k, l, "plan_dual_at");
  GivensPlan p = diag2_dual(principal(q, k, l));
  p.k = k;
  p.l = l;
  return p;
}

GivensPlan plan_standard_at(const DQMatrix& q, std::size_t k, std::size_t l) {
  require_pair(q, k, l, "plan_standard_at");
  GivensPlan p = diag2_standard(q.st(k, k).w, q.st(l, l).w, q.st(k, l));
  p.k = k;
  p.l = l;
  return p;
}

GivensPlan plan_dual_block_at(const DQMatrix& q, std::size_t k, std::size_t l) {
  require_pair(q, k, l, "plan_dual_block_at");
  GivensPlan p = diag2_standard(q.du(k, k).w, q.du(l, l).w, q.du(k, l));
  p.k = k;
  p.l = l;
  return p;
}

void apply_standard_rotation(DQMatrix& q, const GivensPlan& plan, DQMatrix* acc) {
  require_pair(q, plan.k, plan.l, "apply_standard_rotation");
  const std::size_t k = plan.k, l = plan.l;
  for (QMatrix* m : {&q.st, &q.du}) {
    rotate_cols(*m, k, l, plan.U);
    rotate_rows(*m, k, l, plan.U);
    tidy(*m, k, l);
  }
  if (acc != nullptr) {
    require_pair(*acc, k, l, "apply_standard_rotation");
    rotate_cols(acc->st, k, l, plan.U);
    rotate_cols(acc->du, k, l, plan.U);
  }
}

void apply_dual_givens(DQMatrix& q, const GivensPlan& plan, DQMatrix* acc) {
  if (!plan.correction) throw Error(ErrorCode::DegenerateOffdiag, "apply_dual_givens: plan has no dual correction");
  apply_standard_rotation(q, plan, acc);
  apply_correction(q, plan.k, plan.l, *plan.correction, acc);
}

double apply_dual_decoupling(DQMatrix& q, std::size_t k, std::size_t l, DQMatrix* acc) {
  require_pair(q, k, l, "apply_dual_decoupling");
  const double gap = q.st(l, l).w - q.st(k, k).w;
  if (std::fabs(gap) <= kZeroTol) {
    throw Error(ErrorCode::RepeatedDiagonal, "apply_dual_decoupling: equal standard diagonal entries");
  }
  const Quaternion w_kl = q.du(k, l) / gap;
  apply_correction(q, k, l, DualCorrection{w_kl, -w_kl.conj()}, acc);
  return w_kl.norm();
}

DQMatrix embed_plan(const GivensPlan& plan, std::size_t n) {
  DQMatrix j = DQMatrix::identity(n);
  require_pair(j, plan.k, plan.l, "embed_plan");
  const std::size_t k = plan.k, l = plan.l;
  j.st(k, k) = plan.U.u00;
  j.st(k, l) = plan.U.u01;
  j.st(l, k) = plan.U.u10;
  j.st(l, l) = plan.U.u11;
  if (plan.correction) {
    j.du(k, l) = plan.U.u00 * plan.correction->w_kl;
    j.du(l, l) = plan.U.u10 * plan.correction->w_kl;
    j.du(k, k) = plan.U.u01 * plan.correction->w_lk;
    j.du(l, k) = plan.U.u11 * plan.correction->w_lk;
  }
  return j;
}

}  // namespace dqeig
