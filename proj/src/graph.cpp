#include "satspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace satspec {

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool Bits::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

int Bits::first() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
  return -1;
}

int Bits::next(std::size_t i) const {
  std::size_t k = (i + 1) >> 6;
  if (k >= words_.size()) return -1;
  std::uint64_t w = words_[k] >> ((i + 1) & 63);
  if (w) return static_cast<int>(i + 1 + std::countr_zero(w));
  for (++k; k < words_.size(); ++k)
    if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
  return -1;
}

Bits& Bits::operator&=(const Bits& o) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
  return *this;
}

Bits& Bits::operator|=(const Bits& o) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  return *this;
}

std::size_t Bits::intersection_count(const Bits& o) const {
  std::size_t c = 0;
  for (std::size_t k = 0; k < words_.size(); ++k)
    c += std::popcount(words_[k] & o.words_[k]);
  return c;
}

bool Bits::intersects(const Bits& o) const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & o.words_[k]) return true;
  return false;
}

std::vector<Vertex> Bits::to_vector() const {
  std::vector<Vertex> out;
  for (int v = first(); v >= 0; v = next(static_cast<std::size_t>(v)))
    out.push_back(static_cast<Vertex>(v));
  return out;
}

Graph::Graph(std::size_t n) : n_(n), rows_(n, Bits(n)) {
  if (n > kMaxOrder)
    throw std::invalid_argument("graph order exceeds supported maximum");
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
  if (!rows_[u].test(v)) return;
  rows_[u].reset(v);
  rows_[v].reset(u);
  --m_;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex v = 1; v < n_; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (rows_[u].test(v)) out.emplace_back(u, v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> upper_triangle_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(n * (n - 1) / 2);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) out.emplace_back(u, v);
  return out;
}

GraphStats compute_stats(const Graph& g) {
  GraphStats s;
  s.n = g.order();
  s.m = g.edge_count();
  s.degrees.resize(s.n);
  if (s.n == 0) return s;
  s.delta = g.order();
  for (Vertex u = 0; u < s.n; ++u) {
    s.degrees[u] = g.degree(u);
    s.delta = std::min(s.delta, s.degrees[u]);
    s.Delta = std::max(s.Delta, s.degrees[u]);
  }
  s.connected = is_connected(g);
  return s;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  Bits seen(n);
  std::vector<Vertex> stack{0};
  seen.set(0);
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    const Bits& nb = g.neighbors(u);
    for (int v = nb.first(); v >= 0; v = nb.next(v)) {
      if (!seen.test(v)) {
        seen.set(v);
        ++reached;
        stack.push_back(static_cast<Vertex>(v));
      }
    }
  }
  return reached == n;
}

namespace {

// BFS distances from s; SIZE_MAX for unreachable vertices.
std::vector<std::size_t> bfs_dist(const Graph& g, Vertex s) {
  std::vector<std::size_t> dist(g.order(), SIZE_MAX);
  std::queue<Vertex> q;
  dist[s] = 0;
  q.push(s);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    const Bits& nb = g.neighbors(u);
    for (int v = nb.first(); v >= 0; v = nb.next(v)) {
      if (dist[v] == SIZE_MAX) {
        dist[v] = dist[u] + 1;
        q.push(static_cast<Vertex>(v));
      }
    }
  }
  return dist;
}

}  // namespace

std::size_t diameter(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  std::size_t diam = 0;
  for (Vertex s = 0; s < n; ++s) {
    auto dist = bfs_dist(g, s);
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] == SIZE_MAX) return SIZE_MAX;
      diam = std::max(diam, dist[v]);
    }
  }
  return diam;
}

std::size_t girth(const Graph& g) {
  // Shortest cycle through each start vertex: BFS, and any edge closing two
  // BFS branches yields a cycle of length d(u)+d(v)+1.
  const std::size_t n = g.order();
  std::size_t best = SIZE_MAX;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    std::queue<Vertex> q;
    dist[s] = 0;
    parent[s] = s;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      const Bits& nb = g.neighbors(u);
      for (int vi = nb.first(); vi >= 0; vi = nb.next(vi)) {
        Vertex v = static_cast<Vertex>(vi);
        if (dist[v] == SIZE_MAX) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u] && dist[v] + dist[u] + 1 < best) {
          // Cross or back edge: cycle through s (or an ancestor).
          best = dist[v] + dist[u] + 1;
        }
      }
    }
  }
  return best;
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  std::size_t d = g.degree(0);
  for (Vertex u = 1; u < g.order(); ++u)
    if (g.degree(u) != d) return std::nullopt;
  return d;
}

std::size_t split_star_edges(std::size_t n, std::size_t r) {
  return r * (r - 1) / 2 + r * (n - r);
}

Graph make_split_star(std::size_t n, std::size_t r) {
  if (r > n) throw std::invalid_argument("split star requires r <= n");
  Graph g(n);
  for (Vertex u = 0; u < r; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

namespace {

Graph make_c5() {
  Graph g(5);
  for (Vertex i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  return g;
}

Graph make_petersen() {
  // Kneser graph on the 2-subsets of {0..4}: vertices are pairs, adjacent
  // iff disjoint.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  Graph g(10);
  for (Vertex i = 0; i < 10; ++i)
    for (Vertex j = i + 1; j < 10; ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
    }
  return g;
}

Graph make_hoffman_singleton() {
  // Five pentagons P_0..P_4 (i ~ i+-1 mod 5) and five pentagrams Q_0..Q_4
  // (i ~ i+-2 mod 5); P_h vertex i is joined to Q_k vertex (h*k + i) mod 5.
  auto pv = [](int h, int i) { return static_cast<Vertex>(5 * h + i); };
  auto qv = [](int k, int i) { return static_cast<Vertex>(25 + 5 * k + i); };
  Graph g(50);
  for (int h = 0; h < 5; ++h)
    for (int i = 0; i < 5; ++i) g.add_edge(pv(h, i), pv(h, (i + 1) % 5));
  for (int k = 0; k < 5; ++k)
    for (int i = 0; i < 5; ++i) g.add_edge(qv(k, i), qv(k, (i + 2) % 5));
  for (int h = 0; h < 5; ++h)
    for (int k = 0; k < 5; ++k)
      for (int i = 0; i < 5; ++i) g.add_edge(pv(h, i), qv(k, (h * k + i) % 5));
  return g;
}

void validate_moore(const Graph& g, std::size_t n, std::size_t k,
                    const char* name) {
  auto deg = regular_degree(g);
  if (g.order() != n || !deg || *deg != k || n != k * k + 1 ||
      diameter(g) != 2 || girth(g) != 5) {
    throw std::logic_error(std::string("construction of ") + name +
                           " violates its Moore invariants");
  }
}

}  // namespace

Graph make_moore(MooreKind kind) {
  switch (kind) {
    case MooreKind::C5: {
      Graph g = make_c5();
      validate_moore(g, 5, 2, "C5");
      return g;
    }
    case MooreKind::Petersen: {
      Graph g = make_petersen();
      validate_moore(g, 10, 3, "Petersen");
      return g;
    }
    case MooreKind::HoffmanSingleton: {
      Graph g = make_hoffman_singleton();
      validate_moore(g, 50, 7, "Hoffman-Singleton");
      return g;
    }
  }
  throw std::invalid_argument("unknown Moore graph kind");
}

InducedSubgraph induced_subgraph(const Graph& g, const Bits& keep) {
  InducedSubgraph out;
  out.vertices = keep.to_vector();
  out.graph = Graph(out.vertices.size());
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
      if (g.has_edge(out.vertices[i], out.vertices[j]))
        out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

InducedSubgraph neighborhood_graph(const Graph& g, Vertex u) {
  if (u >= g.order()) throw std::invalid_argument("vertex out of range");
  return induced_subgraph(g, g.neighbors(u));
}

bool is_split_star_shape(const Graph& g, std::size_t r) {
  const std::size_t n = g.order();
  if (r > n) return false;
  if (n - r <= 1) {
    // S_{n,n} = S_{n,n-1} = K_n; the dominating set is not unique here.
    return g.edge_count() == n * (n - 1) / 2;
  }
  std::vector<Vertex> dominating;
  for (Vertex u = 0; u < n; ++u)
    if (g.degree(u) == n - 1) dominating.push_back(u);
  if (dominating.size() != r) return false;
  // The rest must be independent; dominating vertices already see everyone.
  Bits rest(n);
  for (Vertex u = 0; u < n; ++u) rest.set(u);
  for (Vertex u : dominating) rest.reset(u);
  for (int u = rest.first(); u >= 0; u = rest.next(u))
    if (g.neighbors(static_cast<Vertex>(u)).intersects(rest)) return false;
  return true;
}

std::optional<std::array<Vertex, 3>> find_induced_k3pp(const Graph& g) {
  const std::size_t n = g.order();
  // For each edge uv, look for w adjacent to neither endpoint.
  for (Vertex u = 0; u < n; ++u) {
    const Bits& nu = g.neighbors(u);
    for (int vi = nu.next(u); vi >= 0; vi = nu.next(vi)) {
      Vertex v = static_cast<Vertex>(vi);
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (!nu.test(w) && !g.has_edge(v, w)) return std::array<Vertex, 3>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

bool is_moore_d2(const Graph& g) {
  auto k = regular_degree(g);
  if (!k) return false;
  if (g.order() != *k * *k + 1) return false;
  return diameter(g) == 2 && girth(g) == 5;
}

}  // namespace satspec
