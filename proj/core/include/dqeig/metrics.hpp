#pragma once

#include <vector>

#include "dqeig/matrix.hpp"
#include "dqeig/solver.hpp"

namespace dqeig {

/// Off-diagonal mass of both parts relative to d, the Fᴿ-norm of the original
/// matrix: sqrt(Σ_{i≠j} |st_ij|² + |du_ij|²) / d. Throws ZeroNorm when d ≤ 0.
double metric_R(const DQMatrix& q, double d);

/// Mean residual (1/n) Σ ‖Q u_i − u_i λ_i‖₂ᴿ. Throws ShapeMismatch.
double metric_elambda(const DQMatrix& q, const std::vector<DualNumber>& values, const DQMatrix& vectors);
double metric_elambda(const DQMatrix& q, const SolveReport& report);

}  // namespace dqeig
