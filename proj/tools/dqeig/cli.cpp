#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dqeig/dqeig.hpp"

namespace dqeig::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitWarning = 2;

struct SolverFlags {
  double eps = 1e-7;
  double delta = 1.0;
  double delta1 = 1.0;
  double rho2 = 0.1;
  double eta = 1e-7;
  std::size_t s = 2;
  bool adaptive_s = false;
  bool post_correct = false;

  void attach(CLI::App* app) {
    app->add_option("--eps", eps, "Stopping accuracy for the max-element method")->capture_default_str();
    app->add_option("--delta", delta, "First threshold on standard entries")->capture_default_str();
    app->add_option("--delta1", delta1, "First threshold on dual entries (3sjacobi)")->capture_default_str();
    app->add_option("--rho2", rho2, "Squared threshold decay factor")->capture_default_str();
    app->add_option("--eta", eta, "Smallest threshold")->capture_default_str();
    app->add_option("--s", s, "Repetitions of the dual coupling step (3sjacobi)")->capture_default_str();
    app->add_flag("--adaptive-s", adaptive_s, "Choose the repetition count from the dual-part norm");
    app->add_flag("--post-correct", post_correct, "Apply the first-order eigenvector correction after 3sjacobi");
  }

  SolverConfig config() const {
    SolverConfig c;
    c.eps = eps;
    c.delta = delta;
    c.delta1 = delta1;
    if (!(rho2 > 0.0 && rho2 < 1.0)) throw Error(ErrorCode::InvalidConfig, "--rho2 must lie in (0, 1)");
    c.rho = std::sqrt(rho2);
    c.eta = eta;
    c.s_repeats = s;
    c.adaptive_s = adaptive_s;
    c.post_correct = post_correct;
    c.validate();
    return c;
  }
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

std::vector<std::size_t> parse_sizes(const std::string& list) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      sizes.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidConfig, "bad size '" + item + "' in --sizes");
    }
  }
  if (sizes.empty()) throw Error(ErrorCode::InvalidConfig, "--sizes is empty");
  return sizes;
}

std::string jsonl_path(const std::string& report) {
  std::filesystem::path p(report);
  p.replace_extension(".jsonl");
  return p.string();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenvalues of dual quaternion Hermitian matrices"};
  app.name("dqeig");
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Compute all eigenpairs of a matrix file");
  std::string input, method_name = "3sjacobi", trace_path, solve_out;
  SolverFlags solve_flags;
  solve_cmd->add_option("--input", input, "Matrix JSON file")->required();
  solve_cmd->add_option("--method", method_name, "max | threshold | 3sjacobi")
      ->check(CLI::IsMember({"max", "threshold", "3sjacobi"}))
      ->capture_default_str();
  solve_cmd->add_option("--trace", trace_path, "Write the per-iteration trace as CSV");
  solve_cmd->add_option("--out", solve_out, "Write the JSON report here instead of stdout");
  solve_flags.attach(solve_cmd);

  // random
  auto* random_cmd = app.add_subcommand("random", "Generate a random Hermitian matrix");
  std::size_t rn = 10;
  std::uint64_t rseed = 0;
  std::string rout;
  random_cmd->add_option("--n", rn, "Size")->required();
  random_cmd->add_option("--seed", rseed, "Seed")->capture_default_str();
  random_cmd->add_option("--out", rout, "Output file (stdout if omitted)");

  // laplacian
  auto* lap_cmd = app.add_subcommand("laplacian", "Generate the Laplacian of a random graph");
  std::size_t ln = 10;
  double lsparsity = 0.1;
  std::uint64_t lseed = 0;
  std::string lout;
  lap_cmd->add_option("--n", ln, "Number of vertices")->required();
  lap_cmd->add_option("--sparsity", lsparsity, "Edge density s, floor(s*n^2/2) edges")->required();
  lap_cmd->add_option("--seed", lseed, "Seed")->capture_default_str();
  lap_cmd->add_option("--out", lout, "Output file (stdout if omitted)");

  // demo
  auto* demo_cmd = app.add_subcommand("demo", "Built-in example matrices");
  std::string demo_name;
  std::string dout;
  bool draw = false;
  demo_cmd->add_option("name", demo_name, "Example name")->required()->check(CLI::IsMember({"p5"}));
  demo_cmd->add_option("--out", dout, "Output file (stdout if omitted)");
  demo_cmd->add_flag("--raw", draw, "Use the four-decimal vector without projecting to unit length");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run repeated seeded trials and report metrics");
  std::string bkind = "random", bsizes = "10", breport, bmethod = "3sjacobi";
  std::size_t btrials = 10, bthreads = 1;
  std::uint64_t bseed = 0;
  double bsparsity = 0.1;
  SolverFlags bench_flags;
  bench_cmd->add_option("--kind", bkind, "random | laplacian")
      ->check(CLI::IsMember({"random", "laplacian"}))
      ->capture_default_str();
  bench_cmd->add_option("--sizes", bsizes, "Comma-separated sizes")->capture_default_str();
  bench_cmd->add_option("--trials", btrials, "Trials per size")->capture_default_str();
  bench_cmd->add_option("--seed", bseed, "Base seed; trial t uses seed + t")->capture_default_str();
  bench_cmd->add_option("--sparsity", bsparsity, "Edge density for laplacian")->capture_default_str();
  bench_cmd->add_option("--method", bmethod, "max | threshold | 3sjacobi")
      ->check(CLI::IsMember({"max", "threshold", "3sjacobi"}))
      ->capture_default_str();
  bench_cmd->add_option("--threads", bthreads, "Concurrent trials")->capture_default_str();
  bench_cmd->add_option("--report", breport, "CSV report path; JSON lines go next to it with a .jsonl extension");
  bench_flags.attach(bench_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (*solve_cmd) {
      SolverConfig cfg = solve_flags.config();
      if (!trace_path.empty()) cfg.trace_stride = 1;
      const Method method = parse_method(method_name);
      const DQMatrix q = read_matrix_file(input);
      const SolveReport rep = solve(q, method, cfg);
      const double e = metric_elambda(q, rep);
      const double r = metric_R(rep.final_matrix, norm_fr(q));
      if (!trace_path.empty()) write_text_file(trace_path, trace_csv(rep.trace));
      emit(solve_out, report_to_json(rep, method, e, r), out);
      if (rep.status == SolveStatus::DegenerateSpectrumWarning) {
        err << "warning: " << rep.message << '\n';
        return kExitWarning;
      }
      return kExitOk;
    }
    if (*random_cmd) {
      if (rn < 2) throw Error(ErrorCode::InvalidConfig, "--n must be at least 2");
      emit(rout, matrix_to_json(gen_random_hermitian(rn, rseed)), out);
      return kExitOk;
    }
    if (*lap_cmd) {
      if (ln < 2) throw Error(ErrorCode::InvalidConfig, "--n must be at least 2");
      emit(lout, matrix_to_json(build_laplacian(ln, lsparsity, lseed)), out);
      return kExitOk;
    }
    if (*demo_cmd) {
      emit(dout, matrix_to_json(draw ? demo_p5(demo_q_vector_raw()) : demo_p5()), out);
      return kExitOk;
    }
    if (*bench_cmd) {
      ExperimentSpec spec;
      spec.kind = parse_kind(bkind);
      spec.sparsity = bsparsity;
      spec.seed = bseed;
      spec.trials = btrials;
      spec.threads = bthreads;
      spec.solver = parse_method(bmethod);
      spec.cfg = bench_flags.config();
      std::string csv, jsonl;
      bool first = true;
      for (std::size_t n : parse_sizes(bsizes)) {
        spec.n = n;
        const BenchResult res = run_bench(spec);
        std::string part = bench_csv(res);
        if (!first) part.erase(0, part.find('\n') + 1);
        csv += part;
        jsonl += bench_jsonl(res, spec);
        first = false;
        const auto& a = res.aggregate;
        out << std::setprecision(3) << "n=" << n << " trials=" << a.trials << " failures=" << a.failures
            << " e_lambda=" << a.mean_e_lambda << " R=" << a.mean_R << " iterations=" << a.mean_iterations
            << " cpu_s=" << a.mean_cpu_seconds << " sigma_T=" << a.sigma_T << " sigma_N=" << a.sigma_N << '\n';
      }
      if (!breport.empty()) {
        write_text_file(breport, csv);
        write_text_file(jsonl_path(breport), jsonl);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace dqeig::cli
