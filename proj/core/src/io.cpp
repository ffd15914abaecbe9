#include "dqeig/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace dqeig {

namespace {

using nlohmann::json;

json part_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Quaternion& q = m(i, j);
      row.push_back({q.w, q.x, q.y, q.z});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix part_from_json(const json& rows, std::size_t n, const char* name) {
  if (!rows.is_array() || rows.size() != n) {
    throw Error(ErrorCode::ShapeMismatch, std::string("\"") + name + "\" must have n rows");
  }
  QMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw Error(ErrorCode::ShapeMismatch, std::string("\"") + name + "\" row " + std::to_string(i) + " must have n entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const json& e = row[j];
      if (!e.is_array() || e.size() != 4) {
        throw Error(ErrorCode::ParseError, std::string("\"") + name + "\" entries must be [w,x,y,z]");
      }
      m(i, j) = {e[0].get<double>(), e[1].get<double>(), e[2].get<double>(), e[3].get<double>()};
    }
  }
  return m;
}

json dual_number_json(DualNumber a) { return {{"st", a.st}, {"du", a.du}}; }

}  // namespace

DQMatrix matrix_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("st") || !doc.contains("du")) {
      throw Error(ErrorCode::ParseError, "matrix JSON needs \"n\", \"st\" and \"du\"");
    }
    const auto n = doc.at("n").get<std::size_t>();
    return {part_from_json(doc.at("st"), n, "st"), part_from_json(doc.at("du"), n, "du")};
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string matrix_to_json(const DQMatrix& q) {
  json doc;
  doc["n"] = q.rows();
  doc["st"] = part_to_json(q.st);
  doc["du"] = part_to_json(q.du);
  return doc.dump() + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

DQMatrix read_matrix_file(const std::string& path) { return matrix_from_json(read_text_file(path)); }

void write_matrix_file(const std::string& path, const DQMatrix& q) { write_text_file(path, matrix_to_json(q)); }

std::string report_to_json(const SolveReport& rep, Method method, double e_lambda, double R) {
  json doc;
  doc["method"] = to_string(method);
  doc["status"] = to_string(rep.status);
  if (!rep.message.empty()) doc["message"] = rep.message;
  json values = json::array();
  for (const auto& v : rep.eigenvalues) values.push_back(dual_number_json(v));
  doc["eigenvalues"] = std::move(values);
  doc["iterations"] = rep.iterations;
  doc["bound_T"] = rep.bound_T;
  doc["e_lambda"] = e_lambda;
  doc["R"] = R;
  doc["elapsed_ms"] = rep.elapsed_ms;
  if (method == Method::ThreeStep) {
    doc["steps"] = {{"step1", rep.steps.step1}, {"step2", rep.steps.step2}, {"step3", rep.steps.step3}};
    doc["alpha"] = rep.alpha;
    doc["beta"] = rep.beta;
    doc["s_used"] = rep.s_used;
  }
  doc["eigenvectors"] = {{"st", part_to_json(rep.eigenvectors.st)}, {"du", part_to_json(rep.eigenvectors.du)}};
  return doc.dump(2) + "\n";
}

std::string bench_csv(const BenchResult& result) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "trial,n,seed,e_lambda,R,iterations,cpu_seconds,status\n";
  for (const auto& r : result.rows) {
    os << r.trial << ',' << r.n << ',' << r.seed << ',' << r.e_lambda << ',' << r.R_final << ',' << r.iterations << ','
       << r.cpu_seconds << ',' << r.status << '\n';
  }
  return os.str();
}

std::string bench_jsonl(const BenchResult& result, const ExperimentSpec& spec) {
  std::ostringstream os;
  for (const auto& r : result.rows) {
    json line = {{"trial", r.trial},         {"n", r.n},
                 {"seed", r.seed},           {"kind", to_string(spec.kind)},
                 {"method", to_string(spec.solver)},
                 {"e_lambda", r.e_lambda},   {"R", r.R_final},
                 {"iterations", r.iterations}, {"cpu_seconds", r.cpu_seconds},
                 {"status", r.status}};
    if (!r.error.empty()) line["error"] = r.error;
    os << line.dump() << '\n';
  }
  const auto& a = result.aggregate;
  json agg = {{"aggregate", true},
              {"n", a.n},
              {"kind", to_string(spec.kind)},
              {"method", to_string(spec.solver)},
              {"trials", a.trials},
              {"failures", a.failures},
              {"mean_e_lambda", a.mean_e_lambda},
              {"mean_R", a.mean_R},
              {"mean_iterations", a.mean_iterations},
              {"mean_cpu_seconds", a.mean_cpu_seconds},
              {"sigma_T", a.sigma_T},
              {"sigma_N", a.sigma_N}};
  os << agg.dump() << '\n';
  return os.str();
}

}  // namespace dqeig
