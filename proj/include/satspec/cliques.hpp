#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

/// Some K_s vertex list if one exists, else nullopt. Branch-and-bound over
/// common-neighborhood sets: candidates ordered by descending degree with
/// deterministic tie-break by vertex index, pruned by a greedy-coloring
/// upper bound, so returned certificates are reproducible.
std::optional<std::vector<Vertex>> contains_clique(const Graph& g,
                                                   std::size_t s);

/// Same search restricted to the candidate set `cand`; witnesses come back
/// in original vertex labels.
std::optional<std::vector<Vertex>> contains_clique_within(const Graph& g,
                                                          const Bits& cand,
                                                          std::size_t s);

/// Single-word existence test for K_s inside `cand`, with `rows[v]` the
/// adjacency mask of v. Only valid for order <= 64; this is the enumerator's
/// hot path.
bool has_clique_u64(const std::vector<std::uint64_t>& rows,
                    std::uint64_t cand, std::size_t s);

struct NonEdgeWitness {
  Vertex u = 0;
  Vertex v = 0;
  /// An (r-1)-clique inside N(u) & N(v), or nullopt when the non-edge has
  /// no witness (the graph is not saturated).
  std::optional<std::vector<Vertex>> clique;
};

/// Outcome of the K_{r+1}-saturation check. is_saturated holds exactly when
/// the graph is K_{r+1}-free and every non-edge carries a witness clique.
struct SaturationVerdict {
  std::size_t r = 0;
  bool is_free = false;
  std::optional<std::vector<Vertex>> violating_clique;
  std::vector<NonEdgeWitness> non_edge_witnesses;  // lex order by (u, v)
  bool is_saturated = false;
};

/// Full K_{r+1}-saturation verdict with certificates. Per non-edge {u,v}
/// the witness search runs inside N(u) & N(v) with target size r-1, which
/// is equivalent to adding the edge and searching for K_{r+1} globally.
/// Requires n > r >= 2.
SaturationVerdict is_saturated(const Graph& g, std::size_t r);

/// Early-exit boolean variant of is_saturated, without certificates.
bool is_saturated_quick(const Graph& g, std::size_t r);

enum class EdgeOrderKind { Lexicographic, SeededRandom };

struct EdgeOrder {
  EdgeOrderKind kind = EdgeOrderKind::Lexicographic;
  std::uint64_t seed = 0;

  static EdgeOrder lexicographic() { return {}; }
  static EdgeOrder seeded(std::uint64_t s) {
    return {EdgeOrderKind::SeededRandom, s};
  }
};

/// Completes a K_{r+1}-free graph to a K_{r+1}-saturated one by adding, in
/// the given order, every edge whose addition keeps the graph K_{r+1}-free.
/// Rejects input that already contains K_{r+1}.
Graph saturate(const Graph& g, std::size_t r, const EdgeOrder& order);

struct EdgeCheck {
  bool ok = false;
  std::optional<std::pair<Vertex, Vertex>> failing_edge;
};

/// True iff every edge {u,v} extends to a K_r, i.e. N(u) & N(v) contains a
/// K_{r-2}. Requires r >= 2; r == 2 holds trivially.
EdgeCheck every_edge_in_clique(const Graph& g, std::size_t r);

struct MinDegreeCheck {
  bool ok = false;
  std::size_t delta = 0;
  std::optional<Vertex> failing_vertex;
};

/// delta >= r-1, plus the stronger statement that every vertex lies in
/// some K_r.
MinDegreeCheck min_degree_bound_holds(const Graph& g, std::size_t r);

struct VertexCheck {
  bool ok = false;
  std::optional<Vertex> failing_vertex;
};

/// True iff the neighbors of every vertex u induce S_{d(u),r-2}.
VertexCheck neighborhood_equality_condition(const Graph& g, std::size_t r);

}  // namespace satspec
