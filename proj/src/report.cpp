#include "satspec/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <stdexcept>

#include <json.hpp>

#include "satspec/cliques.hpp"
#include "satspec/enumerate.hpp"
#include "satspec/graph6.hpp"
#include "satspec/spectral.hpp"
#include "satspec/verify.hpp"
#include "satspec/version.hpp"

namespace satspec {

namespace {

using nlohmann::ordered_json;

ordered_json json_real(double x) { return round12(x); }

ordered_json record_json(const EnumerationRecord& rec, const char* source,
                         bool saturated) {
  ordered_json j;
  j["n"] = rec.n;
  j["r"] = rec.r;
  j["g6"] = rec.g6;
  j["canonical"] = rec.canonical;
  j["rho"] = json_real(rec.rho);
  j["is_split_star"] = rec.is_split_star;
  j["is_moore_d2"] = rec.is_moore_d2;
  j["edge_count"] = rec.edge_count;
  j["saturated"] = saturated;
  j["source"] = source;
  if (rec.sample_seed) j["seed"] = *rec.sample_seed;
  return j;
}

ordered_json report_json(const TheoremReport& rep, const std::string* graph) {
  ordered_json j;
  j["theorem"] = theorem_id_name(rep.id);
  j["holds"] = rep.holds;
  if (rep.margin_int)
    j["margin"] = *rep.margin_int;
  else
    j["margin"] = json_real(rep.margin);
  j["equality"] = rep.equality;
  if (rep.exception_class)
    j["exception_class"] = exception_class_name(*rep.exception_class);
  if (rep.suspicious) j["suspicious"] = true;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  if (graph) j["graph"] = *graph;
  return j;
}

ordered_json make_document(ordered_json config, const RunOptions& opt,
                           ordered_json records, ordered_json reports,
                           std::optional<double> min_rho,
                           std::size_t violations,
                           ordered_json extra_counts = ordered_json::object()) {
  ordered_json counts;
  counts["records"] = records.size();
  counts["reports"] = reports.size();
  for (auto& [k, v] : extra_counts.items()) counts[k] = v;

  ordered_json doc;
  doc["header"]["version"] = kVersion;
  doc["header"]["config"] = std::move(config);
  doc["header"]["timestamp"] = opt.stamp ? *opt.stamp : iso8601_now();
  doc["records"] = std::move(records);
  doc["reports"] = std::move(reports);
  doc["summary"]["counts"] = std::move(counts);
  doc["summary"]["min_rho"] = min_rho ? ordered_json(json_real(*min_rho))
                                      : ordered_json(nullptr);
  doc["summary"]["violations"] = violations;
  return doc;
}

RunResult finish(ordered_json doc, std::size_t violations) {
  return {doc.dump(2) + "\n", violations};
}

void track_min(std::optional<double>& min_rho, double rho) {
  if (!min_rho || rho < *min_rho) min_rho = rho;
}

EnumerationRecord input_record(const Graph& g, std::size_t r,
                               const std::string& g6) {
  EnumerationRecord rec;
  rec.n = g.order();
  rec.r = r;
  rec.g6 = g6;
  rec.canonical = false;
  rec.rho = eig_sym(g).rho;
  rec.is_split_star = is_split_star_shape(g, r - 1);
  rec.is_moore_d2 = is_moore_d2(g);
  rec.edge_count = g.edge_count();
  return rec;
}

/// Checks one saturated graph and appends its reports; returns the number
/// of failed verdicts.
std::size_t append_checks(ordered_json& reports, const Graph& g, std::size_t r,
                          const SaturationVerdict& sat, const std::string& g6,
                          double tol) {
  std::size_t violations = 0;
  const auto spectrum = eig_sym(g);
  for (const TheoremReport& rep : run_all_checks(g, r, sat, spectrum, tol)) {
    if (!rep.holds) ++violations;
    reports.push_back(report_json(rep, &g6));
  }
  return violations;
}

}  // namespace

double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string iso8601_now() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

RunResult run_check(const std::vector<Graph>& graphs, std::size_t r,
                    const RunOptions& opt) {
  ordered_json records = ordered_json::array();
  ordered_json reports = ordered_json::array();
  std::optional<double> min_rho;
  std::size_t violations = 0, unsaturated = 0;

  for (const Graph& g : graphs) {
    const std::string g6 = graph6_encode(g);
    const auto sat = is_saturated(g, r);
    EnumerationRecord rec = input_record(g, r, g6);
    track_min(min_rho, rec.rho);
    records.push_back(record_json(rec, "input", sat.is_saturated));
    if (!sat.is_saturated) {
      ++unsaturated;
      continue;
    }
    violations += append_checks(reports, g, r, sat, g6, opt.tolerance);
  }

  ordered_json config{{"command", "check"}, {"r", r},
                      {"tolerance", json_real(opt.tolerance)}};
  ordered_json extra{{"unsaturated_inputs", unsaturated}};
  return finish(make_document(std::move(config), opt, std::move(records),
                              std::move(reports), min_rho, violations,
                              std::move(extra)),
                violations);
}

RunResult run_spectra(const std::vector<Graph>& graphs, const RunOptions& opt) {
  ordered_json records = ordered_json::array();
  std::optional<double> min_rho;
  for (const Graph& g : graphs) {
    const auto spectrum = eig_sym(g);
    track_min(min_rho, spectrum.rho);
    ordered_json j;
    j["n"] = g.order();
    j["g6"] = graph6_encode(g);
    j["edge_count"] = g.edge_count();
    j["rho"] = json_real(spectrum.rho);
    ordered_json eigs = ordered_json::array();
    for (double lambda : spectrum.eigenvalues) eigs.push_back(json_real(lambda));
    j["eigenvalues"] = std::move(eigs);
    ordered_json perron = ordered_json::array();
    for (double x : spectrum.perron_vector) perron.push_back(json_real(x));
    j["perron_vector"] = std::move(perron);
    j["residual"] = json_real(spectrum.residual);
    records.push_back(std::move(j));
  }
  ordered_json config{{"command", "spectra"}};
  return finish(make_document(std::move(config), opt, std::move(records),
                              ordered_json::array(), min_rho, 0),
                0);
}

RunResult run_enumerate(std::size_t n, std::size_t r, const RunOptions& opt) {
  const auto recs = enum_saturated(n, r, opt.allow_n8);

  ordered_json records = ordered_json::array();
  ordered_json reports = ordered_json::array();
  std::optional<double> min_rho;
  std::size_t violations = 0;

  std::vector<Graph> family;
  family.reserve(recs.size());
  for (const EnumerationRecord& rec : recs) {
    Graph g = graph6_decode(rec.g6);
    const auto sat = is_saturated(g, r);
    track_min(min_rho, rec.rho);
    records.push_back(record_json(rec, "exhaustive", sat.is_saturated));
    violations += append_checks(reports, g, r, sat, rec.g6, opt.tolerance);
    family.push_back(std::move(g));
  }

  const TheoremReport lemma1 = check_lemma1_concordance(family, n, r);
  if (!lemma1.holds) ++violations;
  reports.push_back(report_json(lemma1, nullptr));

  ordered_json config{{"command", "enumerate"},
                      {"n", n},
                      {"r", r},
                      {"allow_n8", opt.allow_n8},
                      {"tolerance", json_real(opt.tolerance)}};
  return finish(make_document(std::move(config), opt, std::move(records),
                              std::move(reports), min_rho, violations),
                violations);
}

RunResult run_sample(std::size_t n, std::size_t r, std::size_t trials,
                     std::uint64_t seed, const RunOptions& opt) {
  const auto recs = sample_saturated(n, r, trials, seed);

  ordered_json records = ordered_json::array();
  ordered_json reports = ordered_json::array();
  std::optional<double> min_rho;
  std::size_t violations = 0;

  for (const EnumerationRecord& rec : recs) {
    Graph g = graph6_decode(rec.g6);
    const auto sat = is_saturated(g, r);
    track_min(min_rho, rec.rho);
    records.push_back(record_json(rec, "sampled", sat.is_saturated));
    violations += append_checks(reports, g, r, sat, rec.g6, opt.tolerance);
  }

  ordered_json config{{"command", "sample"},     {"n", n},
                      {"r", r},                  {"trials", trials},
                      {"seed", seed},            {"tolerance", json_real(opt.tolerance)}};
  return finish(make_document(std::move(config), opt, std::move(records),
                              std::move(reports), min_rho, violations),
                violations);
}

RunResult run_bounds(std::size_t n, std::size_t r, const RunOptions& opt) {
  if (r < 2 || n <= r)
    throw std::invalid_argument("bounds: requires n > r >= 2");

  ordered_json table;
  table["n"] = n;
  table["r"] = r;
  table["rho_split_star"] = json_real(rho_split_star(n, r - 1));
  table["kkko_lower_bound"] =
      r >= 3 ? ordered_json(json_real(kkko_lower_bound(n, r)))
             : ordered_json(nullptr);
  table["extremal_edges"] = split_star_edges(n, r - 1);
  table["degree_square_bound"] =
      static_cast<long long>(r - 1) * static_cast<long long>(n - r + 1) *
      static_cast<long long>(n);

  ordered_json records = ordered_json::array({std::move(table)});
  ordered_json config{{"command", "bounds"}, {"n", n}, {"r", r}};
  return finish(make_document(std::move(config), opt, std::move(records),
                              ordered_json::array(), std::nullopt, 0),
                0);
}

}  // namespace satspec
