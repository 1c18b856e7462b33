#include "satspec/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "satspec/cliques.hpp"
#include "satspec/graph6.hpp"
#include "satspec/spectral.hpp"

namespace satspec {

namespace {

/// Minimal-adjacency-string search. Positions are filled left to right;
/// placing position j fixes column j of the slot order, so the string
/// prefix grows by j bits per placement and mismatches against the
/// incumbent prune whole assignment subtrees.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {
    // Incumbent: ascending-degree labeling. Low-degree vertices up front
    // push 0-bits into the early columns, which is where minimal strings
    // win, so this starts the search close to the answer.
    std::vector<Vertex> order(n_);
    for (std::size_t i = 0; i < n_; ++i) order[i] = static_cast<Vertex>(i);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) < g.degree(b);
    });
    best_.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i)
        best_.push_back(g.has_edge(order[i], order[j]) ? 1 : 0);

    used_.assign(n_, false);
    pos_.reserve(n_);
    cur_.reserve(best_.size());
    dfs(false);
  }

  Graph result() const {
    Graph out(n_);
    std::size_t slot = 0;
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < j; ++i, ++slot)
        if (best_[slot])
          out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
  }

 private:
  void dfs(bool below_incumbent) {
    const std::size_t j = pos_.size();
    if (j == n_) {
      // The incumbent can shrink mid-search, which makes the comparison
      // flags along this path stale; a full compare keeps updates sound.
      if (below_incumbent && cur_ < best_) best_ = cur_;
      return;
    }
    const std::size_t base = cur_.size();
    for (Vertex cand = 0; cand < n_; ++cand) {
      if (used_[cand]) continue;
      bool below = below_incumbent;
      bool prune = false;
      for (std::size_t i = 0; i < j; ++i) {
        const std::uint8_t bit = g_.has_edge(pos_[i], cand) ? 1 : 0;
        if (!below) {
          if (bit > best_[base + i]) {
            prune = true;
            break;
          }
          if (bit < best_[base + i]) below = true;
        }
        cur_.push_back(bit);
      }
      if (!prune) {
        pos_.push_back(cand);
        used_[cand] = true;
        dfs(below);
        used_[cand] = false;
        pos_.pop_back();
      }
      cur_.resize(base);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint8_t> best_;
  std::vector<std::uint8_t> cur_;
  std::vector<Vertex> pos_;
  std::vector<bool> used_;
};

Graph graph_from_rows(const std::vector<std::uint64_t>& rows) {
  const std::size_t n = rows.size();
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (std::uint64_t bits = rows[u] >> (u + 1); bits; bits &= bits - 1)
      g.add_edge(u, u + 1 + static_cast<Vertex>(std::countr_zero(bits)));
  return g;
}

/// Depth-first walk of the edge slots. The 1-branch of slot (u,v) is
/// entered only when N(u) & N(v) holds no K_{r-1}; a K_{r+1} is detected
/// the moment its final slot would be set, so every extension of a
/// clique-carrying partial graph is cut and the leaves visited are
/// exactly the K_{r+1}-free labeled graphs.
class SaturatedEnumerator {
 public:
  SaturatedEnumerator(std::size_t n, std::size_t r,
                      const std::function<void(const Graph&)>& emit)
      : n_(n), r_(r), slots_(upper_triangle_pairs(n)), rows_(n, 0),
        emit_(emit) {}

  void run() { dfs(0); }

 private:
  void dfs(std::size_t s) {
    if (s == slots_.size()) {
      leaf();
      return;
    }
    dfs(s + 1);
    const auto [u, v] = slots_[s];
    if (!has_clique_u64(rows_, rows_[u] & rows_[v], r_ - 1)) {
      rows_[u] |= std::uint64_t{1} << v;
      rows_[v] |= std::uint64_t{1} << u;
      dfs(s + 1);
      rows_[u] &= ~(std::uint64_t{1} << v);
      rows_[v] &= ~(std::uint64_t{1} << u);
    }
  }

  void leaf() {
    // Free by construction; saturated iff every non-edge has a K_{r-1}
    // witness in the common neighborhood.
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (!(rows_[u] >> v & 1) &&
            !has_clique_u64(rows_, rows_[u] & rows_[v], r_ - 1))
          return;
    emit_(graph_from_rows(rows_));
  }

  std::size_t n_, r_;
  std::vector<std::pair<Vertex, Vertex>> slots_;
  std::vector<std::uint64_t> rows_;
  const std::function<void(const Graph&)>& emit_;
};

EnumerationRecord make_record(const Graph& g, std::size_t r, std::string g6,
                              bool canonical,
                              std::optional<std::uint64_t> sample_seed) {
  EnumerationRecord rec;
  rec.n = g.order();
  rec.r = r;
  rec.g6 = std::move(g6);
  rec.canonical = canonical;
  rec.rho = eig_sym(g).rho;
  rec.is_split_star = is_split_star_shape(g, r - 1);
  rec.is_moore_d2 = is_moore_d2(g);
  rec.edge_count = g.edge_count();
  rec.sample_seed = sample_seed;
  return rec;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > 16)
    throw std::invalid_argument(
        "canonical_form: assignment search is intended for n <= 16");
  if (g.order() <= 1) return g;
  return Canonicalizer(g).result();
}

std::string canonical_g6(const Graph& g) {
  return graph6_encode(canonical_form(g));
}

std::vector<EnumerationRecord> enum_saturated(std::size_t n, std::size_t r,
                                              bool allow_n8) {
  if (r < 2 || n <= r)
    throw std::invalid_argument("enum_saturated: requires n > r >= 2");
  if (n > 8)
    throw std::invalid_argument("enum_saturated: exhaustive mode ends at n = 8");
  if (n == 8 && !allow_n8)
    throw std::invalid_argument(
        "enum_saturated: n = 8 walks 2^28 graphs; pass allow_n8 to opt in");

  std::set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> classes;
  auto emit = [&](const Graph& g) {
    Graph canon = canonical_form(g);
    std::string key = graph6_encode(canon);
    if (seen.insert(key).second) classes.emplace_back(std::move(key), std::move(canon));
  };
  SaturatedEnumerator(n, r, emit).run();

  std::vector<EnumerationRecord> records;
  records.reserve(classes.size());
  for (auto& [key, g] : classes)
    records.push_back(make_record(g, r, std::move(key), true, std::nullopt));
  std::sort(records.begin(), records.end(),
            [](const EnumerationRecord& a, const EnumerationRecord& b) {
              return a.edge_count != b.edge_count ? a.edge_count < b.edge_count
                                                  : a.g6 < b.g6;
            });
  return records;
}

MinRhoResult min_rho_saturated(std::size_t n, std::size_t r, bool allow_n8) {
  const auto records = enum_saturated(n, r, allow_n8);
  MinRhoResult out;
  out.rho_min = records.front().rho;
  for (const auto& rec : records) out.rho_min = std::min(out.rho_min, rec.rho);
  for (const auto& rec : records)
    if (rec.rho <= out.rho_min + 1e-8) out.minimizers.push_back(rec);
  return out;
}

std::vector<EnumerationRecord> sample_saturated(std::size_t n, std::size_t r,
                                                std::size_t trials,
                                                std::uint64_t seed) {
  if (r < 2 || n <= r)
    throw std::invalid_argument("sample_saturated: requires n > r >= 2");
  if (n > 200)
    throw std::invalid_argument("sample_saturated: capped at n <= 200");

  std::vector<EnumerationRecord> out;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::uint64_t trial_seed = seed + i;
    Graph g = saturate(Graph(n), r, EdgeOrder::seeded(trial_seed));
    const bool canonical = n <= 10;
    Graph rep = canonical ? canonical_form(g) : std::move(g);
    std::string key = graph6_encode(rep);
    if (!seen.insert(key).second) continue;
    out.push_back(make_record(rep, r, std::move(key), canonical, trial_seed));
  }
  return out;
}

void for_each_labeled_graph(std::size_t n, std::uint64_t stride,
                            const std::function<void(const Graph&)>& fn) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("for_each_labeled_graph: requires 1 <= n <= 8");
  if (stride == 0)
    throw std::invalid_argument("for_each_labeled_graph: stride must be >= 1");
  const auto slots = upper_triangle_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; mask += stride) {
    Graph g(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) g.add_edge(slots[s].first, slots[s].second);
    fn(g);
  }
}

}  // namespace satspec
