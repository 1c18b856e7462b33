#include "satspec/cliques.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

namespace satspec {

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::size_t s) : g_(g), target_(s) {}

  std::optional<std::vector<Vertex>> run(const Bits& cand) {
    std::vector<Vertex> pool = cand.to_vector();
    std::sort(pool.begin(), pool.end(), [this](Vertex a, Vertex b) {
      std::size_t da = g_.degree(a), db = g_.degree(b);
      return da != db ? da > db : a < b;
    });
    clique_.clear();
    if (dfs(pool)) return clique_;
    return std::nullopt;
  }

 private:
  bool dfs(const std::vector<Vertex>& pool) {
    if (clique_.size() == target_) return true;
    const std::size_t need = target_ - clique_.size();
    if (pool.size() < need) return false;
    if (need > 1 && color_bound(pool) < need) return false;
    for (std::size_t i = 0; i + need <= pool.size(); ++i) {
      Vertex v = pool[i];
      const Bits& nv = g_.neighbors(v);
      std::vector<Vertex> next;
      next.reserve(pool.size() - i - 1);
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if (nv.test(pool[j])) next.push_back(pool[j]);
      clique_.push_back(v);
      if (dfs(next)) return true;
      clique_.pop_back();
    }
    return false;
  }

  // Greedy partition of the pool into independent sets; a clique takes at
  // most one vertex per class, so the class count bounds the clique size.
  std::size_t color_bound(const std::vector<Vertex>& pool) const {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : pool) {
      bool placed = false;
      for (auto& cls : classes) {
        bool independent = true;
        for (Vertex w : cls)
          if (g_.has_edge(v, w)) {
            independent = false;
            break;
          }
        if (independent) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    return classes.size();
  }

  const Graph& g_;
  std::size_t target_;
  std::vector<Vertex> clique_;
};

Bits full_set(std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i);
  return b;
}

}  // namespace

std::optional<std::vector<Vertex>> contains_clique_within(const Graph& g,
                                                          const Bits& cand,
                                                          std::size_t s) {
  if (s == 0) return std::vector<Vertex>{};
  return CliqueSearch(g, s).run(cand);
}

std::optional<std::vector<Vertex>> contains_clique(const Graph& g,
                                                   std::size_t s) {
  return contains_clique_within(g, full_set(g.order()), s);
}

bool has_clique_u64(const std::vector<std::uint64_t>& rows,
                    std::uint64_t cand, std::size_t s) {
  if (s == 0) return true;
  while (cand) {
    if (static_cast<std::size_t>(std::popcount(cand)) < s) return false;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (s == 1) return true;
    if (has_clique_u64(rows, cand & rows[v], s - 1)) return true;
  }
  return false;
}

SaturationVerdict is_saturated(const Graph& g, std::size_t r) {
  if (r < 2) throw std::invalid_argument("saturation requires r >= 2");
  if (g.order() <= r)
    throw std::invalid_argument("saturation check requires n > r");

  SaturationVerdict verdict;
  verdict.r = r;
  verdict.violating_clique = contains_clique(g, r + 1);
  verdict.is_free = !verdict.violating_clique.has_value();
  if (!verdict.is_free) return verdict;

  bool all_witnessed = true;
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      NonEdgeWitness w;
      w.u = u;
      w.v = v;
      w.clique = contains_clique_within(g, g.common_neighbors(u, v), r - 1);
      all_witnessed = all_witnessed && w.clique.has_value();
      verdict.non_edge_witnesses.push_back(std::move(w));
    }
  }
  verdict.is_saturated = all_witnessed;
  return verdict;
}

bool is_saturated_quick(const Graph& g, std::size_t r) {
  if (r < 2) throw std::invalid_argument("saturation requires r >= 2");
  const std::size_t n = g.order();
  if (n <= r) throw std::invalid_argument("saturation check requires n > r");

  if (n <= 64) {
    std::vector<std::uint64_t> rows(n);
    std::uint64_t all = n == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << n) - 1;
    for (Vertex u = 0; u < n; ++u) {
      std::uint64_t row = 0;
      const Bits& nb = g.neighbors(u);
      for (int v = nb.first(); v >= 0; v = nb.next(v)) row |= std::uint64_t{1} << v;
      rows[u] = row;
    }
    if (has_clique_u64(rows, all, r + 1)) return false;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!(rows[u] >> v & 1) &&
            !has_clique_u64(rows, rows[u] & rows[v], r - 1))
          return false;
    return true;
  }

  if (contains_clique(g, r + 1)) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) &&
          !contains_clique_within(g, g.common_neighbors(u, v), r - 1))
        return false;
  return true;
}

Graph saturate(const Graph& g, std::size_t r, const EdgeOrder& order) {
  if (r < 2) throw std::invalid_argument("saturation requires r >= 2");
  if (contains_clique(g, r + 1))
    throw std::invalid_argument("saturate: input already contains K_{r+1}");

  auto pairs = upper_triangle_pairs(g.order());
  if (order.kind == EdgeOrderKind::SeededRandom) {
    // Hand-rolled Fisher-Yates: std::shuffle's draw is implementation
    // defined, and sampled runs must be byte-reproducible.
    std::mt19937_64 rng(order.seed);
    for (std::size_t i = pairs.size(); i > 1; --i)
      std::swap(pairs[i - 1], pairs[rng() % i]);
  }

  // Admissibility of a pair only decays as edges are added, so one ordered
  // pass matches the repeatedly-take-first-admissible semantics.
  Graph h = g;
  for (auto [u, v] : pairs) {
    if (h.has_edge(u, v)) continue;
    if (!contains_clique_within(h, h.common_neighbors(u, v), r - 1))
      h.add_edge(u, v);
  }
  return h;
}

EdgeCheck every_edge_in_clique(const Graph& g, std::size_t r) {
  if (r < 2) throw std::invalid_argument("every_edge_in_clique requires r >= 2");
  for (auto [u, v] : g.edges()) {
    if (g.common_neighbors(u, v).count() + 2 < r ||
        !contains_clique_within(g, g.common_neighbors(u, v), r - 2))
      return {false, std::make_pair(u, v)};
  }
  return {true, std::nullopt};
}

MinDegreeCheck min_degree_bound_holds(const Graph& g, std::size_t r) {
  MinDegreeCheck out;
  out.delta = compute_stats(g).delta;
  if (out.delta + 1 < r) {
    for (Vertex u = 0; u < g.order(); ++u)
      if (g.degree(u) == out.delta) {
        out.failing_vertex = u;
        break;
      }
    return out;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    if (!contains_clique_within(g, g.neighbors(u), r - 1)) {
      out.failing_vertex = u;
      return out;
    }
  }
  out.ok = true;
  return out;
}

VertexCheck neighborhood_equality_condition(const Graph& g, std::size_t r) {
  if (r < 2)
    throw std::invalid_argument("neighborhood condition requires r >= 2");
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) + 2 < r) return {false, u};
    if (!is_split_star_shape(neighborhood_graph(g, u).graph, r - 2))
      return {false, u};
  }
  return {true, std::nullopt};
}

}  // namespace satspec
