#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace satspec {

using Vertex = std::uint32_t;

/// Fixed-width bit vector sized in 64-bit words. Rows of the adjacency
/// relation and candidate sets in clique search are all of this type;
/// intersection and popcount are the primitive operations.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void clear() { words_.assign(words_.size(), 0); }

  std::size_t count() const;
  bool any() const;

  /// Lowest set bit, or -1 when empty.
  int first() const;
  /// Lowest set bit strictly greater than `i`, or -1.
  int next(std::size_t i) const;

  Bits& operator&=(const Bits& o);
  Bits& operator|=(const Bits& o);
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  std::size_t intersection_count(const Bits& o) const;
  bool intersects(const Bits& o) const;

  std::vector<Vertex> to_vector() const;

  bool operator==(const Bits& o) const = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on dense 0-indexed vertices. Adjacency is kept
/// symmetric, with no self-loops; each row is a Bits of width n.
/// Immutable by convention once built: mutation happens on locally owned
/// copies only, so values are safe to share across threads.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex u) const { return rows_[u].count(); }
  const Bits& neighbors(Vertex u) const { return rows_[u]; }
  Bits common_neighbors(Vertex u, Vertex v) const {
    return rows_[u] & rows_[v];
  }

  /// Edges as (u, v) pairs with u < v, in column-major order
  /// (0,1),(0,2),(1,2),(0,3),... matching the graph6 bit layout.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph& o) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Bits> rows_;
};

/// Upper-triangle vertex pairs of an order-n graph in column-major order:
/// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...  This is the slot order shared
/// by the graph6 codec, the canonical form, and the enumerator.
std::vector<std::pair<Vertex, Vertex>> upper_triangle_pairs(std::size_t n);

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> degrees;
  std::size_t delta = 0;  // minimum degree
  std::size_t Delta = 0;  // maximum degree
  bool connected = false;
};

GraphStats compute_stats(const Graph& g);

bool is_connected(const Graph& g);

/// Diameter via BFS from every vertex; SIZE_MAX when disconnected.
std::size_t diameter(const Graph& g);

/// Girth (length of a shortest cycle); SIZE_MAX for forests.
std::size_t girth(const Graph& g);

/// Degree of a regular graph, or nullopt.
std::optional<std::size_t> regular_degree(const Graph& g);

/// The split star S_{n,r}: vertices 0..r-1 form a dominating clique,
/// vertices r..n-1 an independent set. Edge count r(r-1)/2 + r(n-r).
Graph make_split_star(std::size_t n, std::size_t r);

/// Edge count of S_{n,r}.
std::size_t split_star_edges(std::size_t n, std::size_t r);

enum class MooreKind { C5, Petersen, HoffmanSingleton };

/// The three known Moore graphs of diameter 2 with small degree.
/// Petersen is the Kneser construction on 2-subsets of a 5-set;
/// Hoffman-Singleton is the 5-pentagons/5-pentagrams rule with P_h vertex i
/// joined to Q_k vertex (h*k + i) mod 5. Each construction is validated
/// against order, regularity, girth and diameter before being returned.
Graph make_moore(MooreKind kind);

/// Induced subgraph together with the new->old vertex index map, so that
/// witness certificates can be reported in original labels.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> vertices;  // vertices[new_index] = old_index
};

InducedSubgraph induced_subgraph(const Graph& g, const Bits& keep);

/// G(u), the subgraph induced by the neighbors of u. A degree-0 vertex
/// yields the empty graph.
InducedSubgraph neighborhood_graph(const Graph& g, Vertex u);

/// Structural test for g == S_{n,r} (up to isomorphism), without any
/// isomorphism search: with D the set of dominating vertices, n-r >= 2
/// requires |D| = r and V \ D independent; n-r <= 1 degenerates to
/// S_{n,r} = K_n, where the dominating set is not unique.
bool is_split_star_shape(const Graph& g, std::size_t r);

/// A vertex triple inducing exactly one edge (the graph K3'' obtained from
/// K3 by removing two incident edges): returns {u, v, w} with uv an edge
/// and w adjacent to neither, or nullopt. The triple is absent exactly
/// when the graph is complete multipartite.
std::optional<std::array<Vertex, 3>> find_induced_k3pp(const Graph& g);

/// Moore graph of diameter 2: k-regular with n = k^2 + 1, diameter 2,
/// girth 5. Exactly C5, Petersen, Hoffman-Singleton (and possibly a
/// 57-regular graph) satisfy this.
bool is_moore_d2(const Graph& g);

}  // namespace satspec
