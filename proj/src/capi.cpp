#include "satspec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "satspec/cliques.hpp"
#include "satspec/enumerate.hpp"
#include "satspec/graph.hpp"
#include "satspec/graph6.hpp"
#include "satspec/report.hpp"
#include "satspec/spectral.hpp"
#include "satspec/version.hpp"

struct satspec_graph {
  satspec::Graph g;
};

namespace {

thread_local std::string t_last_error;

satspec_status fail(satspec_status code, const char* what) noexcept {
  try {
    t_last_error = what;
  } catch (...) {
    /* keep the previous message if we cannot store the new one */
  }
  return code;
}

/* Wrap every body that calls into the C++ core: exceptions must not cross
 * the C boundary. */
#define SATSPEC_PROLOGUE try {
#define SATSPEC_EPILOGUE                                                  \
  }                                                                       \
  catch (const satspec::Graph6Error& e) {                                 \
    return fail(SATSPEC_ERR_PARSE, e.what());                             \
  }                                                                       \
  catch (const std::invalid_argument& e) {                                \
    return fail(SATSPEC_ERR_INVALID_ARGUMENT, e.what());                  \
  }                                                                       \
  catch (const std::bad_alloc&) {                                         \
    return fail(SATSPEC_ERR_NOMEM, "out of memory");                      \
  }                                                                       \
  catch (const std::logic_error& e) {                                     \
    return fail(SATSPEC_ERR_INTERNAL, e.what());                          \
  }                                                                       \
  catch (const std::runtime_error& e) {                                   \
    return fail(SATSPEC_ERR_NUMERIC, e.what());                           \
  }                                                                       \
  catch (...) {                                                           \
    return fail(SATSPEC_ERR_INTERNAL, "unknown error");                   \
  }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

satspec_graph* wrap(satspec::Graph g) {
  return new satspec_graph{std::move(g)};
}

satspec_status require(bool ok, const char* what) {
  return ok ? SATSPEC_OK : fail(SATSPEC_ERR_INVALID_ARGUMENT, what);
}

satspec::RunOptions to_options(const satspec_run_options* opt) {
  satspec::RunOptions out;
  if (opt) {
    if (opt->tolerance > 0) out.tolerance = opt->tolerance;
    if (opt->stamp) out.stamp = opt->stamp;
    out.allow_n8 = opt->allow_n8 != 0;
  }
  return out;
}

satspec_status deliver(const satspec::RunResult& result, char** json_out,
                       size_t* violations) {
  *json_out = dup_string(result.json);
  if (violations) *violations = result.violations;
  return SATSPEC_OK;
}

}  // namespace

extern "C" {

const char* satspec_version(void) { return satspec::kVersion; }

const char* satspec_last_error(void) { return t_last_error.c_str(); }

void satspec_string_free(char* s) { std::free(s); }

void satspec_graph_free(satspec_graph* g) { delete g; }

satspec_status satspec_graph_from_g6(const char* text, satspec_graph** out) {
  if (auto st = require(text && out, "null argument")) return st;
  SATSPEC_PROLOGUE
  *out = wrap(satspec::graph6_decode(text));
  return SATSPEC_OK;
  SATSPEC_EPILOGUE
}

satspec_status satspec_graph_to_g6(const satspec_graph* g, char** out) {
  if (auto st = require(g && out, "null argument")) return st;
  SATSPEC_PROLOGUE
  *out = dup_string(satspec::graph6_encode(g->g));
  return SATSPEC_OK;
  SATSPEC_EPILOGUE
}

satspec_status satspec_graph_canonical_g6(const satspec_graph* g, char** out) {
  if (auto st = require(g && out, "null argument")) return st;
  SATSPEC_PROLOGUE
  *out = dup_string(satspec::canonical_g6(g->g));
  return SATSPEC_OK;
  SATSPEC_EPILOGUE
}

satspec_status satspec_split_star(size_t n, size_t r, satspec_graph** out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  SATSPEC_PROLOGUE
  *out = wrap(satspec::make_split_star(n, r));
  return SATSPEC_OK;
  SATSPEC_EPILOGUE
}

satspec_status satspec_moore_graph(const char* kind, satspec_graph** out) {
  if (auto st = require(kind && out, "null argument")) return st;
  SATSPEC_PROLOGUE
  const std::string name = kind;
  satspec::MooreKind mk;
  if (name == "c5")
    mk = satspec::MooreKind::C5;
  else if (name == "petersen")
    mk = satspec::MooreKind::Petersen;
  else if (name == "hoffman-singleton")
    mk = satspec::MooreKind::HoffmanSingleton;
  else
    return fail(SATSPEC_ERR_INVALID_ARGUMENT,
                ("unknown graph kind \"" + name +
                 "\"; expected c5, petersen, or hoffman-singleton")
                    .c_str());
  *out = wrap(satspec::make_moore(mk));
  return SATSPEC_OK;
  SATSPEC_EPILOGUE
}

satspec_status satspec_graph_order(const satspec_graph* g, size_t* out) {
  if (auto st = require(g && out, "null argument")) return st;
  *out = g->g.order();
  return SATSPEC_OK;
}

satspec_status satspec_graph_edge_count(const satspec_graph* g, size_t* out) {
  if (auto st = require(g && out, "null argument")) return st;
  *out = g->g.edge_count();
  return SATSPEC_OK;
}

satspec_status satspec_spectral_radius(const satspec_graph* g, double* out) {
  if (auto st = require(g && out, "null argument")) return st;
  SATSPEC_PROLOGUE
  *out = satspec::eig_sym(g->g).rho;
  return SATSPEC_OK;
  SATSPEC_EPILOGUE
}

satspec_status satspec_is_saturated(const satspec_graph* g, size_t r,
                                    int* out) {
  if (auto st = require(g && out, "null argument")) return st;
  SATSPEC_PROLOGUE
  *out = satspec::is_saturated_quick(g->g, r) ? 1 : 0;
  return SATSPEC_OK;
  SATSPEC_EPILOGUE
}

satspec_status satspec_saturate(const satspec_graph* g, size_t r, int seeded,
                                uint64_t seed, satspec_graph** out) {
  if (auto st = require(g && out, "null argument")) return st;
  SATSPEC_PROLOGUE
  const auto order = seeded ? satspec::EdgeOrder::seeded(seed)
                            : satspec::EdgeOrder::lexicographic();
  *out = wrap(satspec::saturate(g->g, r, order));
  return SATSPEC_OK;
  SATSPEC_EPILOGUE
}

satspec_status satspec_rho_split_star(size_t n, size_t k, double* out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  SATSPEC_PROLOGUE
  *out = satspec::rho_split_star(n, k);
  return SATSPEC_OK;
  SATSPEC_EPILOGUE
}

satspec_status satspec_kkko_lower_bound(size_t n, size_t r, double* out) {
  if (auto st = require(out != nullptr, "null argument")) return st;
  SATSPEC_PROLOGUE
  *out = satspec::kkko_lower_bound(n, r);
  return SATSPEC_OK;
  SATSPEC_EPILOGUE
}

satspec_status satspec_run_check(const char* g6_lines, size_t r,
                                 const satspec_run_options* opt,
                                 char** json_out, size_t* violations) {
  if (auto st = require(g6_lines && json_out, "null argument")) return st;
  SATSPEC_PROLOGUE
  const auto graphs = satspec::graph6_decode_lines(g6_lines);
  return deliver(satspec::run_check(graphs, r, to_options(opt)), json_out,
                 violations);
  SATSPEC_EPILOGUE
}

satspec_status satspec_run_spectra(const char* g6_lines,
                                   const satspec_run_options* opt,
                                   char** json_out) {
  if (auto st = require(g6_lines && json_out, "null argument")) return st;
  SATSPEC_PROLOGUE
  const auto graphs = satspec::graph6_decode_lines(g6_lines);
  return deliver(satspec::run_spectra(graphs, to_options(opt)), json_out,
                 nullptr);
  SATSPEC_EPILOGUE
}

satspec_status satspec_run_enumerate(size_t n, size_t r,
                                     const satspec_run_options* opt,
                                     char** json_out, size_t* violations) {
  if (auto st = require(json_out != nullptr, "null argument")) return st;
  SATSPEC_PROLOGUE
  return deliver(satspec::run_enumerate(n, r, to_options(opt)), json_out,
                 violations);
  SATSPEC_EPILOGUE
}

satspec_status satspec_run_sample(size_t n, size_t r, size_t trials,
                                  uint64_t seed,
                                  const satspec_run_options* opt,
                                  char** json_out, size_t* violations) {
  if (auto st = require(json_out != nullptr, "null argument")) return st;
  SATSPEC_PROLOGUE
  return deliver(satspec::run_sample(n, r, trials, seed, to_options(opt)),
                 json_out, violations);
  SATSPEC_EPILOGUE
}

satspec_status satspec_run_bounds(size_t n, size_t r,
                                  const satspec_run_options* opt,
                                  char** json_out) {
  if (auto st = require(json_out != nullptr, "null argument")) return st;
  SATSPEC_PROLOGUE
  return deliver(satspec::run_bounds(n, r, to_options(opt)), json_out,
                 nullptr);
  SATSPEC_EPILOGUE
}

}  // extern "C"
