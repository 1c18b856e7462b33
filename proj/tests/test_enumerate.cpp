#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "satspec/cliques.hpp"
#include "satspec/enumerate.hpp"
#include "satspec/graph.hpp"
#include "satspec/graph6.hpp"
#include "satspec/spectral.hpp"

using namespace satspec;

namespace {

Graph apply_random_relabeling(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST_CASE("canonical_form is a relabeling-invariant of the graph") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> dens(0.15, 0.85);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 1 + trial % 8;
    auto g = oracle::random_graph(n, dens(rng), rng);
    auto h = apply_random_relabeling(g, rng);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_g6(g) == canonical_g6(h));
  }
}

TEST_CASE("canonical_form preserves the isomorphism class") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 2 + trial % 5;  // brute oracle needs tiny n
    auto g = oracle::random_graph(n, 0.5, rng);
    auto c = canonical_form(g);
    CHECK(c.order() == g.order());
    CHECK(c.edge_count() == g.edge_count());
    CHECK(oracle::brute_isomorphic(g, c));
    // idempotent
    CHECK(canonical_form(c) == c);
  }
}

TEST_CASE("canonical_form separates non-isomorphic graphs (order <= 5)") {
  // exhaustive over all labeled graphs on 5 vertices: the canonical string
  // must agree exactly with the brute-force minimum bit string
  std::set<std::string> canon;
  std::set<std::vector<bool>> brute;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 10); ++mask) {
    auto g = oracle::graph_from_mask(5, mask);
    canon.insert(canonical_g6(g));
    brute.insert(oracle::brute_canonical_bits(g));
  }
  CHECK(canon.size() == brute.size());  // 34 isomorphism classes on 5 vertices
  CHECK(canon.size() == 34);
}

TEST_CASE("canonical_form rejects orders beyond the search budget") {
  CHECK_THROWS_AS(canonical_form(Graph(17)), std::invalid_argument);
  CHECK(canonical_form(Graph(0)).order() == 0);
  CHECK(canonical_form(Graph(1)).order() == 1);
}

TEST_CASE("enum_saturated matches a from-scratch enumeration") {
  // Oracle side: scan every labeled graph, filter by the definitional
  // saturation test, reduce to brute canonical bit strings.
  for (std::size_t n : {4u, 5u, 6u}) {
    for (std::size_t r = 2; r < n; ++r) {
      std::set<std::vector<bool>> expect;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2));
           ++mask) {
        auto g = oracle::graph_from_mask(n, mask);
        if (oracle::naive_is_saturated(g, r))
          expect.insert(oracle::brute_canonical_bits(g));
      }
      auto records = enum_saturated(n, r);
      std::set<std::vector<bool>> got;
      for (const auto& rec : records) {
        auto g = graph6_decode(rec.g6);
        CHECK(rec.canonical);
        CHECK(rec.n == n);
        CHECK(rec.r == r);
        CHECK(rec.edge_count == g.edge_count());
        CHECK(is_connected(g));  // saturated graphs are connected
        got.insert(oracle::brute_canonical_bits(g));
      }
      CHECK(got.size() == records.size());  // records pairwise non-isomorphic
      CHECK(got == expect);
    }
  }
}

TEST_CASE("enum_saturated record metadata is consistent") {
  auto records = enum_saturated(6, 3);
  CHECK(!records.empty());
  bool saw_split_star = false;
  for (const auto& rec : records) {
    auto g = graph6_decode(rec.g6);
    CHECK(is_saturated_quick(g, 3));
    CHECK(is_connected(g));  // saturated graphs are connected
    CHECK(rec.rho == doctest::Approx(eig_sym(g).rho).epsilon(1e-10));
    CHECK(rec.is_split_star == is_split_star_shape(g, 2));
    CHECK(rec.is_moore_d2 == is_moore_d2(g));
    CHECK(!rec.sample_seed.has_value());
    saw_split_star |= rec.is_split_star;
  }
  CHECK(saw_split_star);

  // sorted by (edge_count, g6)
  for (std::size_t i = 1; i < records.size(); ++i) {
    CHECK(std::pair(records[i - 1].edge_count, records[i - 1].g6) <=
          std::pair(records[i].edge_count, records[i].g6));
  }

  // deterministic across runs
  auto again = enum_saturated(6, 3);
  REQUIRE(again.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i)
    CHECK(again[i].g6 == records[i].g6);
}

TEST_CASE("enum_saturated boundary family: n = r + 1 is the near-complete graph") {
  // adding the one missing edge of K_n - e completes K_n; any second
  // missing edge would leave some completion short, so the class is unique
  auto records = enum_saturated(5, 4);
  REQUIRE(records.size() == 1);
  auto g = graph6_decode(records[0].g6);
  CHECK(is_split_star_shape(g, 3));
  CHECK(g.edge_count() == 9);
}

TEST_CASE("enum_saturated input validation") {
  CHECK_THROWS_AS(enum_saturated(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(enum_saturated(8, 2), std::invalid_argument);  // opt-in only
  CHECK_THROWS_AS(enum_saturated(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(enum_saturated(3, 3), std::invalid_argument);
  CHECK_NOTHROW(enum_saturated(3, 2));
}

TEST_CASE("min_rho_saturated: known minimizers") {
  // (5,2): the star and the pentagon tie at rho = 2
  auto r52 = min_rho_saturated(5, 2);
  CHECK(r52.rho_min == doctest::Approx(2.0).epsilon(1e-9));
  REQUIRE(r52.minimizers.size() == 2);
  bool star = false, pentagon = false;
  for (const auto& rec : r52.minimizers) {
    auto g = graph6_decode(rec.g6);
    star |= is_split_star_shape(g, 1);
    pentagon |= is_moore_d2(g);
  }
  CHECK(star);
  CHECK(pentagon);

  // (5,3): unique minimizer S_{5,2} at rho = 3
  auto r53 = min_rho_saturated(5, 3);
  CHECK(r53.rho_min == doctest::Approx(3.0).epsilon(1e-9));
  REQUIRE(r53.minimizers.size() == 1);
  CHECK(r53.minimizers[0].is_split_star);

  // (7,6): the only K7-saturated graph on 7 vertices is K7 minus an edge,
  // so the minimum is rho(S_{7,5}) = 2 + sqrt(14), not rho(K7) = 6
  auto r76 = min_rho_saturated(7, 6);
  REQUIRE(r76.minimizers.size() == 1);
  CHECK(r76.minimizers[0].is_split_star);
  CHECK(r76.rho_min == doctest::Approx(rho_split_star(7, 5)).epsilon(1e-9));
  CHECK(r76.rho_min < 6.0);
}

TEST_CASE("sample_saturated: determinism, dedup, and validity") {
  auto a = sample_saturated(12, 3, 40, 1001);
  auto b = sample_saturated(12, 3, 40, 1001);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].g6 == b[i].g6);
    CHECK(a[i].sample_seed == b[i].sample_seed);
  }

  for (const auto& rec : a) {
    auto g = graph6_decode(rec.g6);
    CHECK(g.order() == 12);
    CHECK(is_saturated_quick(g, 3));
    CHECK(rec.rho == doctest::Approx(eig_sym(g).rho).epsilon(1e-10));
    REQUIRE(rec.sample_seed.has_value());
    CHECK(*rec.sample_seed >= 1001);
    CHECK(*rec.sample_seed < 1001 + 40);
  }

  // n <= 10 dedups canonically; every trial on (5,4) rebuilds the same class
  auto tiny = sample_saturated(5, 4, 20, 7);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].canonical);
  CHECK(graph6_decode(tiny[0].g6).edge_count() == 9);

  CHECK(sample_saturated(10, 2, 0, 5).empty());
  CHECK_THROWS_AS(sample_saturated(5, 5, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(sample_saturated(201, 2, 3, 0), std::invalid_argument);

  // larger sampled graphs keep their as-built labeling
  auto big = sample_saturated(15, 3, 10, 99);
  for (const auto& rec : big) CHECK(!rec.canonical);
}

TEST_CASE("for_each_labeled_graph walks the mask space") {
  std::size_t count = 0;
  std::size_t edges = 0;
  for_each_labeled_graph(3, 1, [&](const Graph& g) {
    ++count;
    edges += g.edge_count();
    CHECK(g.order() == 3);
  });
  CHECK(count == 8);
  CHECK(edges == 12);  // each of 3 slots set in half of all masks

  std::size_t strided = 0;
  for_each_labeled_graph(4, 4, [&](const Graph&) { ++strided; });
  CHECK(strided == 16);  // 2^6 / 4

  std::size_t one = 0;
  for_each_labeled_graph(1, 1, [&](const Graph& g) {
    ++one;
    CHECK(g.order() == 1);
  });
  CHECK(one == 1);

  CHECK_THROWS_AS(for_each_labeled_graph(9, 1, [](const Graph&) {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(for_each_labeled_graph(3, 0, [](const Graph&) {}),
                  std::invalid_argument);
}
