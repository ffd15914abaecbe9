#pragma once

/**
 * @file solver.hpp
 * @brief Jacobi-type eigensolvers for dual quaternion Hermitian matrices.
 *
 * Three drivers share one report type:
 *  - jacobi_max: eliminate the largest standard off-diagonal entry each step.
 *  - jacobi_threshold: row-major sweeps against a decreasing threshold.
 *  - jacobi_three_step: standard part first, then dual coupling between
 *    distinct standard eigenvalues, then dual blocks inside clusters of equal
 *    standard eigenvalues. Only this one handles repeated standard eigenvalues.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dqeig/matrix.hpp"

namespace dqeig {

struct SolverConfig {
  double eps = 1e-7;      ///< stopping accuracy of jacobi_max
  double delta = 1.0;     ///< first threshold on standard entries
  double delta1 = 1.0;    ///< first threshold on dual entries (three-step)
  double rho = 0.31622776601683794;  ///< threshold decay, sqrt(0.1)
  double eta = 1e-7;      ///< smallest threshold
  std::size_t s_repeats = 2;
  std::optional<double> gamma_override;
  bool adaptive_s = false;
  bool post_correct = false;
  /// Record a trace row every this many iterations; 0 records only the first and last.
  std::size_t trace_stride = 0;
  /// 0 picks a size-dependent cap.
  std::size_t max_iterations = 0;

  /// Throws InvalidConfig.
  void validate() const;
  /// Cluster width sqrt(2n(n−1))·η unless overridden.
  double gamma(std::size_t n) const;
};

enum class SolveStatus { Converged, DegenerateSpectrumWarning };

std::string to_string(SolveStatus s);

struct TraceRow {
  std::size_t iteration = 0;
  double R = 0.0;
  double n_st = 0.0;
  double n_du = 0.0;
  double max_offdiag = 0.0;
  double elapsed_ms = 0.0;
};

struct StepCounts {
  std::size_t step1 = 0;
  std::size_t step2 = 0;
  std::size_t step3 = 0;
};

struct SolveReport {
  std::vector<DualNumber> eigenvalues;  ///< descending; ties in the standard part ordered by dual part
  DQMatrix eigenvectors;                ///< column i belongs to eigenvalues[i]
  DQMatrix final_matrix;                ///< last iterate, rows/cols in eigenvalue order
  std::vector<TraceRow> trace;
  std::size_t iterations = 0;
  double bound_T = 0.0;
  SolveStatus status = SolveStatus::Converged;
  std::string message;
  StepCounts steps;
  double alpha = 0.0;  ///< three-step only
  double beta = 1.0;   ///< three-step only
  std::size_t s_used = 0;
  double elapsed_ms = 0.0;
};

SolveReport jacobi_max(const DQMatrix& q, const SolverConfig& cfg = {});
SolveReport jacobi_threshold(const DQMatrix& q, const SolverConfig& cfg = {});
SolveReport jacobi_three_step(const DQMatrix& q, const SolverConfig& cfg = {});

enum class Method { Max, Threshold, ThreeStep };

Method parse_method(const std::string& s);  ///< "max", "threshold", "3sjacobi"; throws InvalidConfig
std::string to_string(Method m);
SolveReport solve(const DQMatrix& q, Method m, const SolverConfig& cfg = {});

/// V = I + Wε with W_ji = (Q_I)_ji / ((Q_st)_ii − (Q_st)_jj). Throws RepeatedDiagonal
/// when some gap is below min_gap.
DQMatrix eigvecs_correction(const DQMatrix& qnear, double min_gap);

struct PartialCorrection {
  DQMatrix V;
  std::size_t skipped = 0;  ///< off-diagonal pairs left uncorrected
};

/// Same as eigvecs_correction but pairs with gap ≤ min_gap are left at zero.
PartialCorrection eigvecs_correction_partial(const DQMatrix& qnear, double min_gap);

struct AlphaBeta {
  double alpha = 0.0;
  double beta = 1.0;
};

/// Upper bounds on α and β when distinct standard eigenvalues are at least c apart.
AlphaBeta step2_envelope(std::size_t n, double c, double gamma, double eta);

struct IterationBounds {
  double t_max = 0.0;         ///< worst-case count for jacobi_max
  double t_three_step = 0.0;  ///< worst-case count for jacobi_three_step with S repeats
  AlphaBeta ab;
  double kappa_s = 1.0;
};

/// multiplicities are those of the distinct standard eigenvalues, largest first.
/// Without realized α, β the envelope is evaluated from oracle eigenvalues.
/// Throws InvalidMultiplicities.
IterationBounds iteration_bounds(const DQMatrix& q, const SolverConfig& cfg,
                                 const std::vector<std::size_t>& multiplicities,
                                 std::optional<AlphaBeta> realized = std::nullopt);

/// Worst-case iteration count of jacobi_max from the initial off-diagonal measure.
double max_jacobi_bound(std::size_t n, double eps, double n0);

/// Trace rows as CSV with a header line.
std::string trace_csv(const std::vector<TraceRow>& rows);

}  // namespace dqeig
