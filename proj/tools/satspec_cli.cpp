// Command-line front end. Everything goes through the C API in satspec.h;
// exit codes: 0 = all checks passed, 1 = at least one theorem verdict
// failed, 2 = usage, parse, or I/O error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "satspec.h"

namespace {

int fail_usage(const std::string& message) {
  std::fprintf(stderr, "satspec: %s\n", message.c_str());
  return 2;
}

int fail_api() { return fail_usage(satspec_last_error()); }

bool read_input(const std::string& path, std::string& out, int& exit_code) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    exit_code = fail_usage("cannot open " + path);
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

int write_output(const std::string& path, const char* text) {
  if (path == "-") {
    std::fputs(text, stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return fail_usage("cannot write " + path);
  out << text;
  return out ? 0 : fail_usage("cannot write " + path);
}

struct CommonOpts {
  double tolerance = 0.0;  // 0 keeps the library default
  std::string stamp;
  CLI::Option* stamp_opt = nullptr;
  std::string output = "-";
  bool allow_n8 = false;
};

void attach_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--tolerance", c.tolerance,
                  "Comparison tolerance for spectral checks (default 1e-8)");
  c.stamp_opt = cmd->add_option(
      "--stamp", c.stamp, "Fixed report timestamp, for reproducible output");
  cmd->add_option("-o,--output", c.output,
                  "Write the JSON report to this file instead of stdout");
}

satspec_run_options to_api(const CommonOpts& c) {
  satspec_run_options opt{};
  opt.tolerance = c.tolerance;
  opt.stamp = c.stamp_opt && c.stamp_opt->count() ? c.stamp.c_str() : nullptr;
  opt.allow_n8 = c.allow_n8 ? 1 : 0;
  return opt;
}

int finish_report(satspec_status st, char* json, size_t violations,
                  const CommonOpts& c) {
  if (st != SATSPEC_OK) return fail_api();
  const int rc = write_output(c.output, json);
  satspec_string_free(json);
  if (rc != 0) return rc;
  return violations > 0 ? 1 : 0;
}

int run_construct(const std::vector<std::size_t>& split_star,
                  const std::string& moore) {
  if (split_star.empty() == moore.empty())
    return fail_usage("construct needs exactly one of --split-star, --moore");
  satspec_graph* g = nullptr;
  satspec_status st;
  if (!split_star.empty())
    st = satspec_split_star(split_star[0], split_star[1], &g);
  else
    st = satspec_moore_graph(moore.c_str(), &g);
  if (st != SATSPEC_OK) return fail_api();
  char* g6 = nullptr;
  st = satspec_graph_to_g6(g, &g6);
  satspec_graph_free(g);
  if (st != SATSPEC_OK) return fail_api();
  std::printf("%s\n", g6);
  satspec_string_free(g6);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification workbench for the spectral theory of "
               "K_{r+1}-saturated graphs"};
  app.require_subcommand(1);

  auto* construct =
      app.add_subcommand("construct", "Emit a named graph as graph6");
  std::vector<std::size_t> split_star;
  std::string moore;
  construct
      ->add_option("--split-star", split_star,
                   "n r: the r-clique joined to n-r independent vertices")
      ->expected(2);
  construct->add_option("--moore", moore, "c5 | petersen | hoffman-singleton");

  auto* check = app.add_subcommand(
      "check", "Run every theorem checker on each graph6 input line");
  std::string check_file = "-";
  std::size_t check_r = 0;
  CommonOpts check_opts;
  check->add_option("file", check_file, "graph6 file, one graph per line");
  check->add_option("-r,--r", check_r, "clique parameter: inputs are checked "
                                       "as K_{r+1}-saturated graphs")
      ->required();
  attach_common(check, check_opts);

  auto* spectra = app.add_subcommand(
      "spectra", "Eigendecomposition summary for each graph6 input line");
  std::string spectra_file = "-";
  CommonOpts spectra_opts;
  spectra->add_option("file", spectra_file, "graph6 file, one graph per line");
  attach_common(spectra, spectra_opts);

  auto* enumerate = app.add_subcommand(
      "enumerate", "All K_{r+1}-saturated graphs of order n, verified");
  std::size_t enum_n = 0, enum_r = 0;
  CommonOpts enum_opts;
  enumerate->add_option("-n,--n", enum_n, "graph order (<= 7, or 8 with "
                                          "--allow-n8)")
      ->required();
  enumerate->add_option("-r,--r", enum_r, "clique parameter")->required();
  enumerate->add_flag("--allow-n8", enum_opts.allow_n8,
                      "permit the 2^28-leaf n = 8 walk");
  attach_common(enumerate, enum_opts);

  auto* sample = app.add_subcommand(
      "sample", "Randomized saturated graphs via seeded completion, verified");
  std::size_t sample_n = 0, sample_r = 0, sample_trials = 100;
  std::uint64_t sample_seed = 0;
  CommonOpts sample_opts;
  sample->add_option("-n,--n", sample_n, "graph order (<= 200)")->required();
  sample->add_option("-r,--r", sample_r, "clique parameter")->required();
  sample->add_option("--trials", sample_trials, "number of seeded completions");
  sample->add_option("--seed", sample_seed, "base seed; trial i uses seed + i");
  attach_common(sample, sample_opts);

  auto* bounds = app.add_subcommand(
      "bounds", "Closed-form bound table for one (n, r)");
  std::size_t bounds_n = 0, bounds_r = 0;
  CommonOpts bounds_opts;
  bounds->add_option("-n,--n", bounds_n, "graph order")->required();
  bounds->add_option("-r,--r", bounds_r, "clique parameter")->required();
  attach_common(bounds, bounds_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help exits cleanly; everything else is usage
  }

  if (construct->parsed()) return run_construct(split_star, moore);

  char* json = nullptr;
  size_t violations = 0;

  // The run call must complete before `json` is read, so keep the status
  // in a named variable instead of nesting the call in the argument list.
  if (check->parsed()) {
    std::string text;
    int rc = 0;
    if (!read_input(check_file, text, rc)) return rc;
    const auto opt = to_api(check_opts);
    const satspec_status st =
        satspec_run_check(text.c_str(), check_r, &opt, &json, &violations);
    return finish_report(st, json, violations, check_opts);
  }
  if (spectra->parsed()) {
    std::string text;
    int rc = 0;
    if (!read_input(spectra_file, text, rc)) return rc;
    const auto opt = to_api(spectra_opts);
    const satspec_status st = satspec_run_spectra(text.c_str(), &opt, &json);
    return finish_report(st, json, 0, spectra_opts);
  }
  if (enumerate->parsed()) {
    const auto opt = to_api(enum_opts);
    const satspec_status st =
        satspec_run_enumerate(enum_n, enum_r, &opt, &json, &violations);
    return finish_report(st, json, violations, enum_opts);
  }
  if (sample->parsed()) {
    const auto opt = to_api(sample_opts);
    const satspec_status st = satspec_run_sample(
        sample_n, sample_r, sample_trials, sample_seed, &opt, &json, &violations);
    return finish_report(st, json, violations, sample_opts);
  }
  if (bounds->parsed()) {
    const auto opt = to_api(bounds_opts);
    const satspec_status st = satspec_run_bounds(bounds_n, bounds_r, &opt, &json);
    return finish_report(st, json, 0, bounds_opts);
  }
  return fail_usage("no subcommand");
}
