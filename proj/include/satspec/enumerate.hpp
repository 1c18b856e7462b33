#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

/// One K_{r+1}-saturated graph, as produced by exhaustive enumeration or
/// randomized sampling. g6 is the canonical labeling when canonical is
/// true (always the case for n <= 10); larger sampled graphs keep their
/// as-built labeling and are deduplicated by exact string instead.
struct EnumerationRecord {
  std::size_t n = 0;
  std::size_t r = 0;
  std::string g6;
  bool canonical = false;
  double rho = 0.0;
  bool is_split_star = false;  // S_{n,r-1} shape, the extremal graph
  bool is_moore_d2 = false;
  std::size_t edge_count = 0;
  /// Engaged for sampled records: the per-trial saturation seed.
  std::optional<std::uint64_t> sample_seed;
};

/// Relabeling of g that minimizes the upper-triangle adjacency bit string
/// in slot order; two graphs are isomorphic iff their canonical forms are
/// equal. Prefix-pruned search over position assignments, seeded with an
/// ascending-degree incumbent. Practical for the orders the enumerator
/// and sampler deduplicate; rejects n > 16.
Graph canonical_form(const Graph& g);

/// graph6 encoding of canonical_form(g).
std::string canonical_g6(const Graph& g);

/// All K_{r+1}-saturated graphs of order n, one record per isomorphism
/// class, sorted by (edge_count, g6). Walks the 2^{n(n-1)/2} labeled
/// graphs depth-first over edge slots, cutting every branch whose added
/// edge completes a K_{r+1} (supergraphs of a clique stay cut), so leaves
/// are exactly the K_{r+1}-free labeled graphs; survivors of the
/// saturation filter are deduplicated canonically. n <= 7 required;
/// n = 8 costs ~2^28 leaves and must be opted into.
std::vector<EnumerationRecord> enum_saturated(std::size_t n, std::size_t r,
                                              bool allow_n8 = false);

struct MinRhoResult {
  double rho_min = 0.0;
  /// Every record with rho within 1e-8 of the minimum.
  std::vector<EnumerationRecord> minimizers;
};

/// Minimum spectral radius over enum_saturated(n, r) with all graphs
/// attaining it. Reports only; uniqueness assertions live with callers.
MinRhoResult min_rho_saturated(std::size_t n, std::size_t r,
                               bool allow_n8 = false);

/// Saturates the empty graph on n vertices `trials` times, trial i using
/// edge order seeded with seed + i, and deduplicates (canonically for
/// n <= 10, by exact string above). A maximal K_{r+1}-free graph is
/// saturated by definition; seeds only provide coverage diversity, not
/// uniformity. Requires 2 <= r < n <= 200.
std::vector<EnumerationRecord> sample_saturated(std::size_t n, std::size_t r,
                                                std::size_t trials,
                                                std::uint64_t seed);

/// Visits every `stride`-th labeled graph of order n, walking the
/// 2^{n(n-1)/2} edge subsets in slot order starting from the empty graph.
/// Requires 1 <= n <= 8 and stride >= 1.
void for_each_labeled_graph(std::size_t n, std::uint64_t stride,
                            const std::function<void(const Graph&)>& fn);

}  // namespace satspec
