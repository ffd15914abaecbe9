#pragma once

/**
 * @file io.hpp
 * @brief JSON matrix files, solve reports and benchmark reports.
 *
 * Matrix schema: {"n": N, "st": [[[w,x,y,z], ...], ...], "du": [...]}, row-major.
 */

#include <string>

#include "dqeig/experiments.hpp"
#include "dqeig/matrix.hpp"
#include "dqeig/solver.hpp"

namespace dqeig {

/// Throws ParseError on malformed input or ShapeMismatch when sizes disagree with "n".
DQMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const DQMatrix& q);

DQMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const DQMatrix& q);

/// Eigenvalues, status, iteration counts and metrics as one JSON object.
std::string report_to_json(const SolveReport& rep, Method method, double e_lambda, double R);

/// One line per trial plus a header.
std::string bench_csv(const BenchResult& result);
/// One JSON object per trial, then one aggregate object.
std::string bench_jsonl(const BenchResult& result, const ExperimentSpec& spec);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace dqeig
