#include "dqeig/metrics.hpp"

#include <cmath>

namespace dqeig {

double metric_R(const DQMatrix& q, double d) {
  if (!(d > 0.0)) throw Error(ErrorCode::ZeroNorm, "metric_R: reference norm must be positive");
  const OffdiagMeasure m = offdiag_measure(q);
  return std::sqrt(m.st + m.du) / d;
}

double metric_elambda(const DQMatrix& q, const std::vector<DualNumber>& values, const DQMatrix& vectors) {
  const std::size_t n = q.rows();
  if (!q.st.is_square() || vectors.rows() != n || vectors.cols() != values.size() || values.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, "metric_elambda: matrix, eigenvalues and eigenvectors disagree in size");
  }
  if (n == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const DQVector u = column(vectors, i);
    total += norm_2r(q * u - u * values[i]);
  }
  return total / static_cast<double>(n);
}

double metric_elambda(const DQMatrix& q, const SolveReport& report) {
  return metric_elambda(q, report.eigenvalues, report.eigenvectors);
}

}  // namespace dqeig
