#pragma once

/**
 * @file experiments.hpp
 * @brief Seeded test-matrix generators and the benchmark runner.
 *
 * Every generator draws from Rng, a std::mt19937_64 engine with hand-written
 * uniform and normal transforms, so the same seed yields the same matrix on
 * every platform and standard library.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dqeig/matrix.hpp"
#include "dqeig/solver.hpp"

namespace dqeig {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_{seed} {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box–Muller).
  double normal();
  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// (B + B*)/2 for each part, B with i.i.d. N(0,1) components.
DQMatrix gen_random_hermitian(std::size_t n, std::uint64_t seed);

/// Nearest unit dual quaternion: normalized standard part, dual part made orthogonal to it.
DualQuaternion project_unit(const DualQuaternion& q);

DQVector gen_unit_dq_vector(std::size_t n, std::uint64_t seed);
DQVector gen_unit_dq_vector(std::size_t n, Rng& rng);

/// The five-entry demo vector as printed (four decimals, so only approximately unit).
DQVector demo_q_vector_raw();
/// demo_q_vector_raw with every entry projected to an exact unit dual quaternion.
DQVector demo_q_vector();

/// p_ij = q_i* q_j on the 5-cycle, (i+1)ε on the diagonal, zero elsewhere.
DQMatrix demo_p5();
DQMatrix demo_p5(const DQVector& q);

using Edge = std::pair<std::size_t, std::size_t>;

/// D − A with a_ij = q_i* q_j on edges and D the degree matrix.
DQMatrix laplacian_from(std::size_t n, const std::vector<Edge>& edges, const DQVector& q);

/// floor(s·n²/2) edges drawn without replacement from the n(n−1)/2 vertex pairs.
/// Throws InvalidSparsity unless 0 < s < 1 and the edge count fits.
std::vector<Edge> sample_edges(std::size_t n, double s, Rng& rng);

DQMatrix build_laplacian(std::size_t n, double s, std::uint64_t seed);

enum class ExperimentKind { Random, Laplacian, DemoP5, FromFile };

ExperimentKind parse_kind(const std::string& s);  ///< random, laplacian, demo, file
std::string to_string(ExperimentKind k);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::Random;
  std::size_t n = 10;
  double sparsity = 0.1;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  Method solver = Method::ThreeStep;
  SolverConfig cfg;
  std::string input_path;   ///< FromFile only
  std::size_t threads = 1;  ///< concurrent trials

  /// Throws InvalidConfig or InvalidSparsity.
  void validate() const;
};

struct MetricsRow {
  std::size_t trial = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double e_lambda = 0.0;
  double R_final = 0.0;
  std::size_t iterations = 0;
  double cpu_seconds = 0.0;
  std::string status;
  std::string error;  ///< nonempty when the trial failed
};

struct BenchAggregate {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double mean_e_lambda = 0.0;
  double mean_R = 0.0;
  double mean_iterations = 0.0;
  double mean_cpu_seconds = 0.0;
  double sigma_T = 0.0;
  double sigma_N = 0.0;
};

struct BenchResult {
  std::vector<MetricsRow> rows;  ///< ordered by trial index
  BenchAggregate aggregate;
};

/// Trial t uses seed + t. Failed trials are recorded and left out of the aggregate.
BenchResult run_bench(const ExperimentSpec& spec);

/// Builds the matrix for one trial.
DQMatrix make_trial_matrix(const ExperimentSpec& spec, std::size_t trial);

}  // namespace dqeig
