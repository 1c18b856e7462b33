#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

/// Knobs shared by every report-producing run.
struct RunOptions {
  double tolerance = 1e-8;
  /// Header timestamp override; reproducible outputs (golden files) pin it.
  std::optional<std::string> stamp;
  bool allow_n8 = false;
};

/// A serialized report document plus the count of failed theorem verdicts,
/// which drives the process exit code.
struct RunResult {
  std::string json;
  std::size_t violations = 0;
};

/// Every document follows one schema:
///   {header: {version, config, timestamp},
///    records: [...], reports: [...],
///    summary: {counts, min_rho, violations}}
/// Floats are rounded to 12 significant digits before serialization so
/// documents are byte-stable across runs.

/// Full verify suite on each input graph. Unsaturated inputs are recorded
/// and counted in the summary but produce no theorem reports (the
/// statements do not apply to them) and no violations.
RunResult run_check(const std::vector<Graph>& graphs, std::size_t r,
                    const RunOptions& opt);

/// Eigendecomposition summary per input graph.
RunResult run_spectra(const std::vector<Graph>& graphs, const RunOptions& opt);

/// Exhaustive enumeration of K_{r+1}-saturated graphs of order n plus the
/// verify suite on every class and the family-level equality-set report.
RunResult run_enumerate(std::size_t n, std::size_t r, const RunOptions& opt);

/// Randomized saturation sampling plus the verify suite on every distinct
/// sample.
RunResult run_sample(std::size_t n, std::size_t r, std::size_t trials,
                     std::uint64_t seed, const RunOptions& opt);

/// Closed-form table for (n, r): rho(S_{n,r-1}), the degree-based lower
/// bound (r >= 3 only), and the extremal edge count.
RunResult run_bounds(std::size_t n, std::size_t r, const RunOptions& opt);

/// Nearest double to x printed with 12 significant digits.
double round12(double x);

/// Current UTC time as an ISO-8601 stamp.
std::string iso8601_now();

}  // namespace satspec
