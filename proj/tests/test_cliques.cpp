#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "satspec/cliques.hpp"
#include "satspec/graph.hpp"

using namespace satspec;

namespace {

bool is_clique_of(const Graph& g, const std::vector<Vertex>& vs,
                  std::size_t s) {
  if (vs.size() != s) return false;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!g.has_edge(vs[a], vs[b])) return false;
  return true;
}

std::vector<std::uint64_t> row_masks(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  return rows;
}

}  // namespace

TEST_CASE("contains_clique on hand-checked graphs") {
  auto k5 = oracle::make_complete(5);
  auto w = contains_clique(k5, 5);
  REQUIRE(w.has_value());
  CHECK(is_clique_of(k5, *w, 5));
  CHECK(!contains_clique(k5, 6).has_value());

  auto c5 = oracle::make_cycle(5);
  CHECK(contains_clique(c5, 2).has_value());
  CHECK(!contains_clique(c5, 3).has_value());

  auto pet = make_moore(MooreKind::Petersen);
  CHECK(!contains_clique(pet, 3).has_value());  // Petersen is triangle-free

  // K_0 exists in anything, including the empty graph
  CHECK(contains_clique(Graph(0), 0).has_value());
  CHECK(contains_clique(Graph(0), 0)->empty());
  CHECK(!contains_clique(Graph(0), 1).has_value());
  CHECK(contains_clique(Graph(3), 1).has_value());
}

TEST_CASE("contains_clique agrees with the subset-scan oracle") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dens(0.2, 0.9);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 2 + trial % 6;  // up to 7
    auto g = oracle::random_graph(n, dens(rng), rng);
    for (std::size_t s = 2; s <= 5; ++s) {
      auto w = contains_clique(g, s);
      CHECK(w.has_value() == oracle::naive_contains_clique(g, s));
      if (w) CHECK(is_clique_of(g, *w, s));
    }
  }
}

TEST_CASE("contains_clique_within restricts the witness to the candidates") {
  auto k5 = oracle::make_complete(5);
  Bits cand(5);
  cand.set(1);
  cand.set(3);
  cand.set(4);
  auto w = contains_clique_within(k5, cand, 3);
  REQUIRE(w.has_value());
  CHECK(is_clique_of(k5, *w, 3));
  for (Vertex v : *w) CHECK(cand.test(v));

  Bits pair(5);
  pair.set(0);
  pair.set(2);
  CHECK(!contains_clique_within(k5, pair, 3).has_value());
  CHECK(contains_clique_within(k5, Bits(5), 0).has_value());
}

TEST_CASE("has_clique_u64 matches contains_clique_within") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 3 + trial % 8;
    auto g = oracle::random_graph(n, 0.55, rng);
    auto rows = row_masks(g);
    std::uint64_t cand_mask = rng() & ((std::uint64_t{1} << n) - 1);
    Bits cand(n);
    for (std::size_t v = 0; v < n; ++v)
      if (cand_mask >> v & 1) cand.set(v);
    for (std::size_t s = 0; s <= 4; ++s)
      CHECK(has_clique_u64(rows, cand_mask, s) ==
            contains_clique_within(g, cand, s).has_value());
  }
}

TEST_CASE("is_saturated on the extremal and classical graphs") {
  // split stars S_{n,r-1} are K_{r+1}-saturated for every 2 <= r < n
  for (std::size_t n = 3; n <= 9; ++n)
    for (std::size_t r = 2; r < n; ++r) {
      auto v = is_saturated(make_split_star(n, r - 1), r);
      CHECK(v.is_free);
      CHECK(v.is_saturated);
    }

  CHECK(is_saturated(oracle::make_cycle(5), 2).is_saturated);
  CHECK(is_saturated(make_moore(MooreKind::Petersen), 2).is_saturated);
  CHECK(is_saturated(make_moore(MooreKind::HoffmanSingleton), 2).is_saturated);

  // C6 is triangle-free but not saturated: antipodal vertices share no
  // neighbor
  auto v6 = is_saturated(oracle::make_cycle(6), 2);
  CHECK(v6.is_free);
  CHECK(!v6.is_saturated);

  // K4 minus an edge is K4-saturated (it is S_{4,2})
  Graph k4e = oracle::make_complete(4);
  k4e.remove_edge(2, 3);
  CHECK(is_saturated(k4e, 3).is_saturated);

  // C5 is K4-free but adding a chord yields only triangles
  CHECK(!is_saturated(oracle::make_cycle(5), 3).is_saturated);

  // a graph containing K_{r+1} is not free, with a certificate
  auto vk = is_saturated(oracle::make_complete(5), 3);
  CHECK(!vk.is_free);
  CHECK(!vk.is_saturated);
  REQUIRE(vk.violating_clique.has_value());
  CHECK(is_clique_of(oracle::make_complete(5), *vk.violating_clique, 4));
}

TEST_CASE("is_saturated certificates cover every non-edge") {
  auto g = make_split_star(6, 2);
  auto v = is_saturated(g, 3);
  REQUIRE(v.is_saturated);
  CHECK(v.non_edge_witnesses.size() ==
        6 * 5 / 2 - g.edge_count());  // one entry per non-edge
  for (const auto& w : v.non_edge_witnesses) {
    CHECK(!g.has_edge(w.u, w.v));
    REQUIRE(w.clique.has_value());
    CHECK(is_clique_of(g, *w.clique, 2));  // K_{r-1} with r = 3
    for (Vertex x : *w.clique) {
      CHECK(g.has_edge(w.u, x));
      CHECK(g.has_edge(w.v, x));
    }
  }

  // non-saturated input pinpoints a witness-less non-edge
  auto v6 = is_saturated(oracle::make_cycle(6), 2);
  bool found_gap = false;
  for (const auto& w : v6.non_edge_witnesses)
    if (!w.clique.has_value()) found_gap = true;
  CHECK(found_gap);
}

TEST_CASE("is_saturated matches the definitional oracle on all order-5 graphs") {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 10); ++mask) {
    auto g = oracle::graph_from_mask(5, mask);
    for (std::size_t r = 2; r <= 4; ++r)
      CHECK(is_saturated(g, r).is_saturated == oracle::naive_is_saturated(g, r));
  }
}

TEST_CASE("is_saturated_quick equals is_saturated") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> dens(0.2, 0.8);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 4 + trial % 9;
    auto g = oracle::random_graph(n, dens(rng), rng);
    for (std::size_t r = 2; r < n; ++r)
      CHECK(is_saturated_quick(g, r) == is_saturated(g, r).is_saturated);
  }

  // beyond the single-word fast path
  CHECK(is_saturated_quick(make_split_star(70, 2), 3));
  Graph big = make_split_star(70, 2);
  big.remove_edge(0, 69);
  CHECK(!is_saturated_quick(big, 3));
}

TEST_CASE("saturation argument validation") {
  CHECK_THROWS_AS(is_saturated(oracle::make_cycle(5), 1), std::invalid_argument);
  CHECK_THROWS_AS(is_saturated(oracle::make_cycle(5), 5), std::invalid_argument);
  CHECK_THROWS_AS(is_saturated_quick(Graph(3), 3), std::invalid_argument);
}

TEST_CASE("saturate: lexicographic completion of the empty graph is the star") {
  for (std::size_t n = 3; n <= 8; ++n) {
    auto g = saturate(Graph(n), 2, EdgeOrder::lexicographic());
    CHECK(is_split_star_shape(g, 1));
    CHECK(g.degree(0) == n - 1);
  }
}

TEST_CASE("saturate yields saturated graphs for any seed and keeps input edges") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 5 + trial % 8;
    std::size_t r = 2 + trial % 3;
    if (r >= n) continue;
    auto g = saturate(Graph(n), r, EdgeOrder::seeded(rng()));
    CHECK(is_saturated_quick(g, r));
  }

  // seeded order is a deterministic function of the seed
  auto a = saturate(Graph(9), 3, EdgeOrder::seeded(1234));
  auto b = saturate(Graph(9), 3, EdgeOrder::seeded(1234));
  CHECK(a == b);

  // starting from a partial graph keeps its edges
  auto c5 = oracle::make_cycle(5);
  auto done = saturate(c5, 2, EdgeOrder::lexicographic());
  for (auto [u, v] : c5.edges()) CHECK(done.has_edge(u, v));
  CHECK(is_saturated_quick(done, 2));
  CHECK(done == c5);  // C5 is already maximal triangle-free

  CHECK_THROWS_AS(saturate(oracle::make_complete(4), 3, EdgeOrder::lexicographic()),
                  std::invalid_argument);
}

TEST_CASE("saturate completes every K_{r+1}-free seed under both orders") {
  auto completes = [](const Graph& seed, std::size_t r, const EdgeOrder& ord) {
    const Graph done = saturate(seed, r, ord);
    for (auto [u, v] : seed.edges()) CHECK(done.has_edge(u, v));
    CHECK(is_saturated_quick(done, r));
  };

  // exhaustive over all labeled seeds of order <= 5
  for (std::size_t n = 3; n <= 5; ++n) {
    const std::size_t slots = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ull << slots); ++mask) {
      const Graph seed = oracle::graph_from_mask(n, mask);
      for (std::size_t r = 2; r < n; ++r) {
        if (oracle::naive_contains_clique(seed, r + 1)) continue;
        completes(seed, r, EdgeOrder::lexicographic());
        completes(seed, r, EdgeOrder::seeded(mask * 31 + r));
      }
    }
  }

  // random free seeds at orders 6 and 7: grow from empty, keeping each
  // tentative edge only if the graph stays K_{r+1}-free
  std::mt19937_64 rng(911);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 6 + trial % 2;
    const std::size_t r = 2 + trial % 3;
    Graph seed(n);
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex v = 1; v < n; ++v)
      for (Vertex u = 0; u < v; ++u) slots.emplace_back(u, v);
    std::shuffle(slots.begin(), slots.end(), rng);
    for (auto [u, v] : slots) {
      if (rng() % 5 == 0) continue;  // leave some pairs open
      seed.add_edge(u, v);
      if (oracle::naive_contains_clique(seed, r + 1)) seed.remove_edge(u, v);
    }
    REQUIRE(!oracle::naive_contains_clique(seed, r + 1));
    completes(seed, r, EdgeOrder::lexicographic());
    completes(seed, r, EdgeOrder::seeded(rng()));
  }
}

TEST_CASE("every_edge_in_clique") {
  CHECK(every_edge_in_clique(oracle::make_cycle(5), 2).ok);  // r = 2 is trivial
  auto bad = every_edge_in_clique(oracle::make_cycle(5), 3);
  CHECK(!bad.ok);
  REQUIRE(bad.failing_edge.has_value());
  CHECK(oracle::make_cycle(5).has_edge(bad.failing_edge->first,
                                       bad.failing_edge->second));

  CHECK(every_edge_in_clique(make_split_star(6, 2), 3).ok);
  CHECK(!every_edge_in_clique(make_split_star(6, 2), 4).ok);
  CHECK(every_edge_in_clique(oracle::make_complete(4), 4).ok);
  CHECK(every_edge_in_clique(Graph(3), 5).ok);  // no edges, vacuous
  CHECK_THROWS_AS(every_edge_in_clique(Graph(3), 1), std::invalid_argument);
}

TEST_CASE("min_degree_bound_holds") {
  auto ok = min_degree_bound_holds(make_split_star(7, 1), 2);
  CHECK(ok.ok);
  CHECK(ok.delta == 1);

  // C4 is triangle-free, so no vertex lies in a K3
  auto bad = min_degree_bound_holds(oracle::make_cycle(4), 3);
  CHECK(!bad.ok);
  CHECK(bad.failing_vertex.has_value());

  // degree can pass while the clique membership fails: C5 with r = 3
  auto c5 = min_degree_bound_holds(oracle::make_cycle(5), 3);
  CHECK(c5.delta == 2);
  CHECK(!c5.ok);

  CHECK(min_degree_bound_holds(make_split_star(8, 3), 4).ok);
}

TEST_CASE("neighborhood_equality_condition") {
  // split stars satisfy it: N(u) induces S_{d(u),r-2} for every u
  CHECK(neighborhood_equality_condition(make_split_star(5, 2), 3).ok);
  CHECK(neighborhood_equality_condition(make_split_star(9, 3), 4).ok);

  // K4 minus an edge is S_{4,2} and satisfies it as well
  Graph k4e = oracle::make_complete(4);
  k4e.remove_edge(2, 3);
  CHECK(neighborhood_equality_condition(k4e, 3).ok);

  // C4: each neighborhood induces two isolated vertices, not S_{2,1} = K2
  auto c4 = neighborhood_equality_condition(oracle::make_cycle(4), 3);
  CHECK(!c4.ok);
  CHECK(c4.failing_vertex.has_value());

  // P4: the middle vertices fail the same way
  CHECK(!neighborhood_equality_condition(oracle::make_path(4), 3).ok);

  // r = 2: neighborhoods must induce S_{d,0}, i.e. be independent sets
  CHECK(neighborhood_equality_condition(make_split_star(6, 1), 2).ok);
  CHECK(neighborhood_equality_condition(oracle::make_cycle(5), 2).ok);
  CHECK(!neighborhood_equality_condition(oracle::make_complete(3), 2).ok);
}
