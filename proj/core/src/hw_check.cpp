#include <cmath>

#include "dqeig/matrix.hpp"
#include "dqeig/oracle.hpp"

namespace dqeig {

bool hw_check(const DQMatrix& q1, const DQMatrix& q2, double abs_tol) {
  require_hermitian(q1, "hw_check");
  require_hermitian(q2, "hw_check");
  if (q1.rows() != q2.rows()) throw Error(ErrorCode::ShapeMismatch, "hw_check: sizes differ");
  const auto l1 = oracle::standard_eigs_oracle(q1.st);
  const auto l2 = oracle::standard_eigs_oracle(q2.st);
  double lhs = 0.0;
  for (std::size_t i = 0; i < l1.size(); ++i) lhs += (l1[i] - l2[i]) * (l1[i] - l2[i]);
  return std::sqrt(lhs) <= (q1.st - q2.st).frobenius() + abs_tol;
}

}  // namespace dqeig
