#include "dqeig/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "dqeig/givens.hpp"
#include "dqeig/oracle.hpp"

namespace dqeig {

namespace {

using Clock = std::chrono::steady_clock;

// Threshold levels are products of floats; without slack the level that should
// equal η can land a hair below it and be skipped.
constexpr double kLevelSlack = 1e-12;

constexpr std::size_t kSweepsPerLevel = 200;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

class Tracer {
 public:
  Tracer(const DQMatrix& original, std::size_t stride, std::vector<TraceRow>& rows)
      : d_{norm_fr(original)}, stride_{stride}, rows_{rows}, t0_{Clock::now()} {}

  Clock::time_point start() const { return t0_; }

  void maybe(const DQMatrix& q, std::size_t it) {
    if (stride_ != 0 && it % stride_ == 0) record(q, it);
  }

  void record(const DQMatrix& q, std::size_t it) {
    if (!rows_.empty() && rows_.back().iteration == it) return;
    const OffdiagMeasure m = offdiag_measure(q);
    TraceRow row;
    row.iteration = it;
    row.R = d_ > 0.0 ? std::sqrt(m.st + m.du) / d_ : 0.0;
    row.n_st = m.st;
    row.n_du = m.du;
    row.max_offdiag = max_offdiag(q.st);
    row.elapsed_ms = ms_since(t0_);
    rows_.push_back(row);
  }

 private:
  double d_;
  std::size_t stride_;
  std::vector<TraceRow>& rows_;
  Clock::time_point t0_;
};

std::size_t default_cap(std::size_t n) { return 200 * n * n + 10000; }

std::vector<double> standard_diag(const DQMatrix& q) {
  std::vector<double> d(q.rows());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = q.st(i, i).w;
  return d;
}

// Sizes of runs of values (sorted descending) whose consecutive gaps are ≤ tol.
std::vector<std::size_t> cluster_sizes(std::vector<double> v, double tol) {
  std::sort(v.begin(), v.end(), std::greater<>());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == 0 || v[i - 1] - v[i] > tol)
      out.push_back(1);
    else
      ++out.back();
  }
  return out;
}

// Descending by standard part; entries whose standard parts chain within tol are
// ordered by dual part so near-equal standard values do not swap at random.
std::vector<std::size_t> eigen_order(const DQMatrix& q, double tol) {
  const std::size_t n = q.rows();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return q.st(a, a).w > q.st(b, b).w; });
  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || q.st(idx[i - 1], idx[i - 1]).w - q.st(idx[i], idx[i]).w > tol) {
      std::stable_sort(idx.begin() + static_cast<std::ptrdiff_t>(start), idx.begin() + static_cast<std::ptrdiff_t>(i),
                       [&](std::size_t a, std::size_t b) { return q.du(a, a).w > q.du(b, b).w; });
      start = i;
    }
  }
  return idx;
}

void finalize(SolveReport& rep, const DQMatrix& q, const DQMatrix& vectors, double order_tol) {
  const std::size_t n = q.rows();
  const auto idx = eigen_order(q, order_tol);
  rep.eigenvalues.resize(n);
  rep.eigenvectors = DQMatrix(n);
  rep.final_matrix = DQMatrix(n);
  for (std::size_t a = 0; a < n; ++a) {
    rep.eigenvalues[a] = {q.st(idx[a], idx[a]).w, q.du(idx[a], idx[a]).w};
    for (std::size_t r = 0; r < n; ++r) rep.eigenvectors.set(r, a, vectors.at(r, idx[a]));
    for (std::size_t b = 0; b < n; ++b) rep.final_matrix.set(a, b, q.at(idx[a], idx[b]));
  }
}

// acc ← acc·V for V = I + Wε.
void apply_vector_correction(DQMatrix& acc, const DQMatrix& v) { acc.du = acc.du + acc.st * v.du; }

void finish_with_correction(SolveReport& rep, const DQMatrix& q, DQMatrix& acc, double min_gap, double order_tol) {
  const PartialCorrection pc = eigvecs_correction_partial(q, min_gap);
  apply_vector_correction(acc, pc.V);
  if (pc.skipped > 0) {
    rep.status = SolveStatus::DegenerateSpectrumWarning;
    std::ostringstream os;
    os << pc.skipped << " eigenvector correction pair(s) skipped: standard gap below " << min_gap;
    if (!rep.message.empty()) rep.message += "; ";
    rep.message += os.str();
  }
  finalize(rep, q, acc, order_tol);
}

void warn(SolveReport& rep, const std::string& msg) {
  rep.status = SolveStatus::DegenerateSpectrumWarning;
  if (!rep.message.empty()) rep.message += "; ";
  rep.message += msg;
}

// Runs decreasing threshold levels. `magnitude(k,l)` is the entry tested against the
// level, `eligible(k,l)` filters pairs, `rotate(k,l)` eliminates one entry.
// Returns false when a level needed more sweeps than allowed or the iteration cap was hit.
template <class Mag, class Eligible, class Rotate>
bool threshold_levels(std::size_t n, double start, double rho, double eta, std::size_t& iterations,
                      std::size_t cap, Mag magnitude, Eligible eligible, Rotate rotate) {
  for (double level = start; level >= eta * (1.0 - kLevelSlack); level *= rho) {
    std::size_t sweeps = 0;
    bool hit = true;
    while (hit) {
      if (++sweeps > kSweepsPerLevel) return false;
      hit = false;
      for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          if (!eligible(k, l)) continue;
          const double m = magnitude(k, l);
          if (m >= level && m > kOffdiagTol) {
            rotate(k, l);
            hit = true;
            if (++iterations >= cap) return false;
          }
        }
    }
  }
  return true;
}

}  // namespace

void SolverConfig::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); };
  if (!(eps > 0.0)) bad("eps must be positive");
  if (!(delta > 0.0)) bad("delta must be positive");
  if (!(delta1 > 0.0)) bad("delta1 must be positive");
  if (!(eta > 0.0)) bad("eta must be positive");
  if (!(rho > 0.0 && rho < 1.0)) bad("rho must lie in (0, 1)");
  if (s_repeats < 1) bad("s_repeats must be at least 1");
  if (gamma_override && !(*gamma_override >= 0.0)) bad("gamma must be nonnegative");
}

double SolverConfig::gamma(std::size_t n) const {
  if (gamma_override) return *gamma_override;
  const double nn = static_cast<double>(n);
  return std::sqrt(2.0 * nn * (nn - 1.0)) * eta;
}

std::string to_string(SolveStatus s) {
  return s == SolveStatus::Converged ? "Converged" : "DegenerateSpectrumWarning";
}

Method parse_method(const std::string& s) {
  if (s == "max") return Method::Max;
  if (s == "threshold") return Method::Threshold;
  if (s == "3sjacobi") return Method::ThreeStep;
  throw Error(ErrorCode::InvalidConfig, "unknown method '" + s + "' (expected max, threshold or 3sjacobi)");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Max: return "max";
    case Method::Threshold: return "threshold";
    case Method::ThreeStep: return "3sjacobi";
  }
  return "?";
}

SolveReport solve(const DQMatrix& q, Method m, const SolverConfig& cfg) {
  switch (m) {
    case Method::Max: return jacobi_max(q, cfg);
    case Method::Threshold: return jacobi_threshold(q, cfg);
    case Method::ThreeStep: return jacobi_three_step(q, cfg);
  }
  throw Error(ErrorCode::InvalidConfig, "unknown method");
}

double max_jacobi_bound(std::size_t n, double eps, double n0) {
  if (n0 <= eps) return 0.0;
  if (n <= 2) return 1.0;
  const double nn = static_cast<double>(n);
  const double ratio = 1.0 - 2.0 / (nn * (nn - 1.0));
  return std::ceil(std::log(eps / n0) / std::log(ratio));
}

SolveReport jacobi_max(const DQMatrix& input, const SolverConfig& cfg) {
  cfg.validate();
  require_hermitian(input, "jacobi_max");
  const std::size_t n = input.rows();
  SolveReport rep;
  DQMatrix q = input;
  DQMatrix acc = DQMatrix::identity(n);
  Tracer tr(input, cfg.trace_stride, rep.trace);
  tr.record(q, 0);

  rep.bound_T = max_jacobi_bound(n, cfg.eps, offdiag_measure(q.st));
  const std::size_t cap = cfg.max_iterations ? cfg.max_iterations : default_cap(n);
  const double eps2 = cfg.eps * cfg.eps;
  double last_n = std::numeric_limits<double>::infinity();
  std::size_t stalled = 0;

  while (true) {
    double best = -1.0;
    double off = 0.0;
    std::size_t bk = 0, bl = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const auto row = q.st.row(k);
      for (std::size_t l = k + 1; l < n; ++l) {
        const double m = row[l].norm_sq();
        off += m;
        if (m > best) {
          best = m;
          bk = k;
          bl = l;
        }
      }
    }
    if (n < 2 || best < eps2) break;
    if (!std::isfinite(off)) {
      warn(rep, "iteration diverged");
      break;
    }
    if (off >= last_n) {
      if (++stalled >= n * n) {
        warn(rep, "no progress in the off-diagonal measure");
        break;
      }
    } else {
      stalled = 0;
    }
    last_n = off;
    if (rep.iterations >= cap) {
      warn(rep, "iteration cap reached");
      break;
    }
    apply_dual_givens(q, plan_dual_at(q, bk, bl), &acc);
    ++rep.iterations;
    tr.maybe(q, rep.iterations);
  }
  tr.record(q, rep.iterations);

  const double nn = static_cast<double>(n);
  finish_with_correction(rep, q, acc, std::sqrt(nn * (nn - 1.0)) * cfg.eps, cfg.gamma(n));
  rep.elapsed_ms = ms_since(tr.start());
  return rep;
}

SolveReport jacobi_threshold(const DQMatrix& input, const SolverConfig& cfg) {
  cfg.validate();
  require_hermitian(input, "jacobi_threshold");
  const std::size_t n = input.rows();
  SolveReport rep;
  DQMatrix q = input;
  DQMatrix acc = DQMatrix::identity(n);
  Tracer tr(input, cfg.trace_stride, rep.trace);
  tr.record(q, 0);

  const double nn = static_cast<double>(n);
  const double levels = std::ceil(std::log(cfg.eta / cfg.delta) / std::log(cfg.rho));
  rep.bound_T = q.st.frobenius_sq() / (2.0 * cfg.delta * cfg.delta) +
                nn * nn / 2.0 * std::max(levels, 0.0) / (cfg.rho * cfg.rho);
  const std::size_t cap = cfg.max_iterations ? cfg.max_iterations : default_cap(n);

  const bool ok = threshold_levels(
      n, cfg.delta, cfg.rho, cfg.eta, rep.iterations, cap,
      [&](std::size_t k, std::size_t l) { return q.st(k, l).norm(); },
      [](std::size_t, std::size_t) { return true; },
      [&](std::size_t k, std::size_t l) {
        apply_dual_givens(q, plan_dual_at(q, k, l), &acc);
        tr.maybe(q, rep.iterations + 1);
      });
  if (!ok) warn(rep, "threshold sweeps did not settle");
  tr.record(q, rep.iterations);

  finish_with_correction(rep, q, acc, std::sqrt(nn * (nn - 1.0)) * cfg.eta, cfg.gamma(n));
  rep.elapsed_ms = ms_since(tr.start());
  return rep;
}

SolveReport jacobi_three_step(const DQMatrix& input, const SolverConfig& cfg) {
  cfg.validate();
  require_hermitian(input, "jacobi_three_step");
  const std::size_t n = input.rows();
  SolveReport rep;
  DQMatrix q = input;
  DQMatrix acc = DQMatrix::identity(n);
  Tracer tr(input, cfg.trace_stride, rep.trace);
  tr.record(q, 0);
  const std::size_t cap = cfg.max_iterations ? cfg.max_iterations : default_cap(n);
  const double gamma = cfg.gamma(n);

  // Standard part only.
  bool ok = threshold_levels(
      n, cfg.delta, cfg.rho, cfg.eta, rep.iterations, cap,
      [&](std::size_t k, std::size_t l) { return q.st(k, l).norm(); },
      [](std::size_t, std::size_t) { return true; },
      [&](std::size_t k, std::size_t l) {
        apply_standard_rotation(q, plan_standard_at(q, k, l), &acc);
        tr.maybe(q, rep.iterations + 1);
      });
  if (!ok) warn(rep, "standard-part sweeps did not settle");
  rep.steps.step1 = rep.iterations;

  const std::vector<double> d0 = standard_diag(q);
  auto separated = [&](std::size_t i, std::size_t j) { return std::fabs(d0[i] - d0[j]) > gamma; };

  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (separated(i, j)) {
        const double r = 2.0 / std::fabs(d0[i] - d0[j]);
        rep.alpha += r;
        rep.beta *= 1.0 + r * cfg.eta;
      }

  // Dual coupling between distinct standard eigenvalues.
  std::size_t s = cfg.s_repeats;
  if (cfg.adaptive_s) {
    const double ratio = q.du.frobenius() / (static_cast<double>(n) * cfg.eta);
    s = ratio > 1.0 ? static_cast<std::size_t>(std::ceil(std::log10(ratio))) : 1;
    s = std::max<std::size_t>(s, 1);
  }
  rep.s_used = s;
  for (std::size_t pass = 0; pass < s && ok; ++pass)
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (separated(i, j) && q.du(i, j).norm_sq() > 0.0) {
          apply_dual_decoupling(q, i, j, &acc);
          ++rep.iterations;
          ++rep.steps.step2;
          tr.maybe(q, rep.iterations);
        }

  // Dual blocks inside clusters of equal standard eigenvalues.
  if (ok) {
    const std::size_t before = rep.iterations;
    ok = threshold_levels(
        n, cfg.delta1, cfg.rho, cfg.eta, rep.iterations, cap,
        [&](std::size_t k, std::size_t l) { return q.du(k, l).norm(); },
        [&](std::size_t k, std::size_t l) { return !separated(k, l); },
        [&](std::size_t k, std::size_t l) {
          apply_standard_rotation(q, plan_dual_block_at(q, k, l), &acc);
          tr.maybe(q, rep.iterations + 1);
        });
    if (!ok) warn(rep, "dual-block sweeps did not settle");
    rep.steps.step3 = rep.iterations - before;
  }
  tr.record(q, rep.iterations);

  const auto sizes = cluster_sizes(d0, gamma);
  const IterationBounds b = iteration_bounds(input, cfg, sizes, AlphaBeta{rep.alpha, rep.beta});
  rep.bound_T = b.t_three_step;

  if (cfg.post_correct) {
    apply_vector_correction(acc, eigvecs_correction_partial(q, gamma).V);
  }
  finalize(rep, q, acc, gamma);
  rep.elapsed_ms = ms_since(tr.start());
  return rep;
}

PartialCorrection eigvecs_correction_partial(const DQMatrix& qnear, double min_gap) {
  if (!qnear.st.is_square()) throw Error(ErrorCode::ShapeMismatch, "eigvecs_correction: matrix is not square");
  const std::size_t n = qnear.rows();
  PartialCorrection out{DQMatrix::identity(n), 0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double gap = qnear.st(i, i).w - qnear.st(j, j).w;
      if (std::fabs(gap) <= min_gap) {
        if (i < j) ++out.skipped;
        continue;
      }
      // Column i of V: e_i + W(:,i)ε, W(j,i) = (Q_I)_ji / (d_i − d_j).
      out.V.du(j, i) = qnear.du(j, i) / gap;
    }
  return out;
}

DQMatrix eigvecs_correction(const DQMatrix& qnear, double min_gap) {
  PartialCorrection pc = eigvecs_correction_partial(qnear, min_gap);
  if (pc.skipped > 0) {
    throw Error(ErrorCode::RepeatedDiagonal,
                std::to_string(pc.skipped) + " diagonal pair(s) closer than " + std::to_string(min_gap));
  }
  return std::move(pc.V);
}

AlphaBeta step2_envelope(std::size_t n, double c, double gamma, double eta) {
  const double nn = static_cast<double>(n);
  const double room = c - gamma;
  if (!(room > 0.0)) return {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  return {nn * (nn - 1.0) / room, std::pow(1.0 + 2.0 * eta / room, nn * (nn - 1.0) / 2.0)};
}

IterationBounds iteration_bounds(const DQMatrix& q, const SolverConfig& cfg,
                                 const std::vector<std::size_t>& multiplicities, std::optional<AlphaBeta> realized) {
  cfg.validate();
  const std::size_t n = q.rows();
  const std::size_t total = std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0});
  if (total != n || std::find(multiplicities.begin(), multiplicities.end(), 0) != multiplicities.end()) {
    throw Error(ErrorCode::InvalidMultiplicities, "multiplicities must be positive and sum to n");
  }

  IterationBounds out;
  out.t_max = max_jacobi_bound(n, cfg.eps, offdiag_measure(q.st));

  if (realized) {
    out.ab = *realized;
  } else if (multiplicities.size() < 2) {
    out.ab = {0.0, 1.0};
  } else {
    // Smallest distance between the means of consecutive eigenvalue groups.
    const auto mu = oracle::standard_eigs_oracle(q.st);
    std::vector<double> means;
    std::size_t pos = 0;
    for (std::size_t t : multiplicities) {
      means.push_back(std::accumulate(mu.begin() + static_cast<std::ptrdiff_t>(pos),
                                      mu.begin() + static_cast<std::ptrdiff_t>(pos + t), 0.0) /
                      static_cast<double>(t));
      pos += t;
    }
    double c = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < means.size(); ++i) c = std::min(c, means[i] - means[i + 1]);
    out.ab = step2_envelope(n, c, cfg.gamma(n), cfg.eta);
  }

  const double abe = out.ab.alpha * out.ab.beta * cfg.eta;
  const std::size_t s = cfg.s_repeats;
  out.kappa_s = std::fabs(1.0 - abe) < 1e-15 ? static_cast<double>(s + 1)
                                             : (1.0 - std::pow(abe, static_cast<double>(s + 1))) / (1.0 - abe);

  double h2 = 0.0;
  for (std::size_t t : multiplicities) h2 += static_cast<double>(t * t);
  const double nn = static_cast<double>(n);
  const double rho2 = cfg.rho * cfg.rho;
  const double lv = std::max(0.0, std::ceil(std::log(cfg.eta / cfg.delta) / std::log(cfg.rho)));
  const double lv1 = std::max(0.0, std::ceil(std::log(cfg.eta / cfg.delta1) / std::log(cfg.rho)));
  out.t_three_step = q.st.frobenius_sq() / (2.0 * cfg.delta * cfg.delta) +
                     nn * nn / 2.0 * (static_cast<double>(s) + lv / rho2) +
                     h2 / 2.0 * (out.kappa_s * out.kappa_s * q.du.frobenius_sq() / (cfg.delta1 * cfg.delta1) + lv1 / rho2);
  return out;
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "iteration,R,N_st,N_du,max_offdiag,elapsed_ms\n";
  for (const auto& r : rows)
    os << r.iteration << ',' << r.R << ',' << r.n_st << ',' << r.n_du << ',' << r.max_offdiag << ',' << r.elapsed_ms
       << '\n';
  return os.str();
}

}  // namespace dqeig
