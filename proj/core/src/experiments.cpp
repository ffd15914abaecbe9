#include "dqeig/experiments.hpp"

#include <time.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "dqeig/io.hpp"
#include "dqeig/metrics.hpp"

namespace dqeig {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  return r * std::cos(t);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

namespace {

Quaternion normal_quaternion(Rng& rng) {
  const double w = rng.normal();
  const double x = rng.normal();
  const double y = rng.normal();
  const double z = rng.normal();
  return {w, x, y, z};
}

QMatrix hermitize(const QMatrix& b) { return 0.5 * (b + b.adjoint()); }

double thread_cpu_seconds() {
  timespec ts{};
  clock_gettime(CLOCK_THREAD_CPUTIME_ID, &ts);
  return static_cast<double>(ts.tv_sec) + 1e-9 * static_cast<double>(ts.tv_nsec);
}

constexpr double kDemoSt[5][4] = {{0.9359, 0.3033, 0.0112, -0.1785},
                                  {-0.6476, 0.3307, 0.6751, -0.1249},
                                  {-0.7964, -0.4063, 0.4446, 0.0542},
                                  {-0.4627, -0.3857, -0.7755, -0.1891},
                                  {-0.4083, -0.4844, -0.7025, -0.3243}};
constexpr double kDemoDu[5][4] = {{0.0739, -0.9213, -1.0193, -1.2419},
                                  {-0.2448, -0.0200, -0.3720, -0.7944},
                                  {-0.3142, 0.0313, -0.5714, 0.3056},
                                  {0.2159, -0.5179, 0.1159, 0.0530},
                                  {-0.1260, 0.1389, 0.0662, -0.1923}};

}  // namespace

DQMatrix gen_random_hermitian(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  QMatrix bst(n), bdu(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bst(i, j) = normal_quaternion(rng);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bdu(i, j) = normal_quaternion(rng);
  return {hermitize(bst), hermitize(bdu)};
}

DualQuaternion project_unit(const DualQuaternion& q) {
  const double s = q.st.norm();
  if (s <= kZeroTol) throw Error(ErrorCode::ZeroQuaternion, "project_unit: standard part is zero");
  const Quaternion st = q.st / s;
  const Quaternion du = q.du / s;
  return {st, du - st * dot(st, du)};
}

DQVector gen_unit_dq_vector(std::size_t n, Rng& rng) {
  DQVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    Quaternion st;
    do {
      st = normal_quaternion(rng);
    } while (st.norm() <= 1e-12);
    const Quaternion du = normal_quaternion(rng);
    v[i] = project_unit({st, du});
  }
  return v;
}

DQVector gen_unit_dq_vector(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return gen_unit_dq_vector(n, rng);
}

DQVector demo_q_vector_raw() {
  DQVector v(5);
  for (std::size_t i = 0; i < 5; ++i) {
    v[i] = {{kDemoSt[i][0], kDemoSt[i][1], kDemoSt[i][2], kDemoSt[i][3]},
            {kDemoDu[i][0], kDemoDu[i][1], kDemoDu[i][2], kDemoDu[i][3]}};
  }
  return v;
}

DQVector demo_q_vector() {
  DQVector v = demo_q_vector_raw();
  for (auto& e : v.entries) e = project_unit(e);
  return v;
}

DQMatrix demo_p5(const DQVector& q) {
  const std::size_t n = q.size();
  DQMatrix p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.set(i, i, {{}, Quaternion(static_cast<double>(i + 1))});
    const std::size_t j = (i + 1) % n;
    const DualQuaternion e = q[i].conj() * q[j];
    p.set(i, j, e);
    p.set(j, i, e.conj());
  }
  return p;
}

DQMatrix demo_p5() { return demo_p5(demo_q_vector()); }

DQMatrix laplacian_from(std::size_t n, const std::vector<Edge>& edges, const DQVector& q) {
  if (q.size() != n) throw Error(ErrorCode::ShapeMismatch, "laplacian_from: vector length differs from n");
  DQMatrix l(n);
  std::vector<double> degree(n, 0.0);
  for (const auto& [i, j] : edges) {
    if (i >= n || j >= n || i == j) throw Error(ErrorCode::IndexOutOfRange, "laplacian_from: bad edge");
    const DualQuaternion a = q[i].conj() * q[j];
    l.set(i, j, -a);
    l.set(j, i, -a.conj());
    degree[i] += 1.0;
    degree[j] += 1.0;
  }
  for (std::size_t i = 0; i < n; ++i) l.st(i, i) = Quaternion(degree[i]);
  return l;
}

std::vector<Edge> sample_edges(std::size_t n, double s, Rng& rng) {
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::InvalidSparsity, "sparsity must lie in (0, 1)");
  const std::size_t pairs = n * (n - 1) / 2;
  const auto m = static_cast<std::size_t>(std::floor(s * static_cast<double>(n) * static_cast<double>(n) / 2.0));
  if (m > pairs) {
    throw Error(ErrorCode::InvalidSparsity, std::to_string(m) + " edges requested but only " + std::to_string(pairs) +
                                                " vertex pairs exist");
  }
  std::vector<Edge> all;
  all.reserve(pairs);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
  // Partial Fisher–Yates: the first m slots become the sample.
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t pick = k + static_cast<std::size_t>(rng.below(pairs - k));
    std::swap(all[k], all[pick]);
  }
  all.resize(m);
  std::sort(all.begin(), all.end());
  return all;
}

DQMatrix build_laplacian(std::size_t n, double s, std::uint64_t seed) {
  Rng rng(seed);
  const auto edges = sample_edges(n, s, rng);
  const DQVector q = gen_unit_dq_vector(n, rng);
  return laplacian_from(n, edges, q);
}

ExperimentKind parse_kind(const std::string& s) {
  if (s == "random") return ExperimentKind::Random;
  if (s == "laplacian") return ExperimentKind::Laplacian;
  if (s == "demo") return ExperimentKind::DemoP5;
  if (s == "file") return ExperimentKind::FromFile;
  throw Error(ErrorCode::InvalidConfig, "unknown experiment kind '" + s + "'");
}

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Random: return "random";
    case ExperimentKind::Laplacian: return "laplacian";
    case ExperimentKind::DemoP5: return "demo";
    case ExperimentKind::FromFile: return "file";
  }
  return "?";
}

void ExperimentSpec::validate() const {
  cfg.validate();
  if ((kind == ExperimentKind::Random || kind == ExperimentKind::Laplacian) && n < 2) {
    throw Error(ErrorCode::InvalidConfig, "n must be at least 2");
  }
  if (kind == ExperimentKind::Laplacian && !(sparsity > 0.0 && sparsity < 1.0)) {
    throw Error(ErrorCode::InvalidSparsity, "sparsity must lie in (0, 1)");
  }
  if (kind == ExperimentKind::FromFile && input_path.empty()) {
    throw Error(ErrorCode::InvalidConfig, "file experiments need an input path");
  }
}

DQMatrix make_trial_matrix(const ExperimentSpec& spec, std::size_t trial) {
  const std::uint64_t seed = spec.seed + trial;
  switch (spec.kind) {
    case ExperimentKind::Random: return gen_random_hermitian(spec.n, seed);
    case ExperimentKind::Laplacian: return build_laplacian(spec.n, spec.sparsity, seed);
    case ExperimentKind::DemoP5: return demo_p5();
    case ExperimentKind::FromFile: return read_matrix_file(spec.input_path);
  }
  throw Error(ErrorCode::InvalidConfig, "unknown experiment kind");
}

BenchResult run_bench(const ExperimentSpec& spec) {
  spec.validate();
  BenchResult out;
  out.rows.resize(spec.trials);

  auto run_trial = [&](std::size_t t) {
    MetricsRow& row = out.rows[t];
    row.trial = t;
    row.seed = spec.seed + t;
    try {
      const DQMatrix q = make_trial_matrix(spec, t);
      row.n = q.rows();
      const double c0 = thread_cpu_seconds();
      const SolveReport rep = solve(q, spec.solver, spec.cfg);
      row.cpu_seconds = thread_cpu_seconds() - c0;
      row.iterations = rep.iterations;
      row.status = to_string(rep.status);
      row.e_lambda = metric_elambda(q, rep);
      row.R_final = metric_R(rep.final_matrix, norm_fr(q));
    } catch (const std::exception& e) {
      row.status = "Error";
      row.error = e.what();
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(spec.threads, spec.trials));
  if (workers == 1) {
    for (std::size_t t = 0; t < spec.trials; ++t) run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < spec.trials; t = next++) run_trial(t);
      });
    for (auto& th : pool) th.join();
  }

  BenchAggregate& a = out.aggregate;
  a.n = spec.kind == ExperimentKind::Random || spec.kind == ExperimentKind::Laplacian ? spec.n : 0;
  a.trials = spec.trials;
  std::vector<const MetricsRow*> ok;
  for (const auto& r : out.rows) {
    if (r.error.empty())
      ok.push_back(&r);
    else
      ++a.failures;
    if (a.n == 0 && r.n != 0) a.n = r.n;
  }
  if (ok.empty()) return out;
  const double m = static_cast<double>(ok.size());
  for (const auto* r : ok) {
    a.mean_e_lambda += r->e_lambda / m;
    a.mean_R += r->R_final / m;
    a.mean_iterations += static_cast<double>(r->iterations) / m;
    a.mean_cpu_seconds += r->cpu_seconds / m;
  }
  if (ok.size() > 1) {
    double vt = 0.0, vn = 0.0;
    for (const auto* r : ok) {
      vt += (r->cpu_seconds - a.mean_cpu_seconds) * (r->cpu_seconds - a.mean_cpu_seconds);
      const double di = static_cast<double>(r->iterations) - a.mean_iterations;
      vn += di * di;
    }
    a.sigma_T = std::sqrt(vt / (m - 1.0));
    a.sigma_N = std::sqrt(vn / (m - 1.0));
  }
  return out;
}

}  // namespace dqeig
