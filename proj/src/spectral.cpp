#include "satspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "satspec/cliques.hpp"

namespace satspec {

namespace {

constexpr std::size_t kMaxEigOrder = 2048;
constexpr int kMaxSweeps = 64;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) sum += 2.0 * a[p * n + q] * a[p * n + q];
  return std::sqrt(sum);
}

// One Givens rotation zeroing a[p][q], applied to both sides and to the
// accumulated eigenvector matrix v (columns are eigenvectors).
void jacobi_rotate(std::vector<double>& a, std::vector<double>& v,
                   std::size_t n, std::size_t p, std::size_t q) {
  const double apq = a[p * n + q];
  const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 1.0 / (2.0 * theta);
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const double app = a[p * n + p];
  const double aqq = a[q * n + q];
  a[p * n + p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
  a[q * n + q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a[k * n + p];
    const double akq = a[k * n + q];
    a[k * n + p] = a[p * n + k] = c * akp - s * akq;
    a[k * n + q] = a[q * n + k] = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v[k * n + p];
    const double vkq = v[k * n + q];
    v[k * n + p] = c * vkp - s * vkq;
    v[k * n + q] = s * vkp + c * vkq;
  }
}

}  // namespace

SpectralSummary eig_sym(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("eig_sym requires n >= 1");
  if (n > kMaxEigOrder)
    throw std::invalid_argument("eig_sym: dense solver capped at n <= 2048");

  std::vector<double> a(n * n, 0.0);
  for (Vertex u = 0; u < n; ++u) {
    const Bits& nb = g.neighbors(u);
    for (int v = nb.first(); v >= 0; v = nb.next(v)) a[u * n + v] = 1.0;
  }
  std::vector<double> vec(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) vec[i * n + i] = 1.0;

  const double target = 1e-12 * static_cast<double>(n);
  double off = off_diagonal_norm(a, n);
  int sweep = 0;
  while (off > target) {
    if (++sweep > kMaxSweeps)
      throw std::runtime_error(
          "eig_sym: Jacobi sweeps exhausted, off-diagonal norm " +
          std::to_string(off));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a[p * n + q]) > 0.0) jacobi_rotate(a, vec, n, p, q);
    off = off_diagonal_norm(a, n);
  }

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i] > a[j * n + j];
  });

  SpectralSummary out;
  out.eigenvalues.resize(n);
  out.vectors.assign(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    out.eigenvalues[i] = a[idx[i] * n + idx[i]];
    for (std::size_t k = 0; k < n; ++k)
      out.vectors[i][k] = vec[k * n + idx[i]];
  }
  out.rho = out.eigenvalues[0];

  // Perron vector: project the all-ones vector onto the eigenspace of
  // lambda_1. Each connected component attaining lambda_1 contributes its
  // (nonnegative) Perron vector with a positive weight, so the projection
  // is entrywise nonnegative even when lambda_1 is degenerate.
  const double window = 1e-8 * std::max(1.0, std::abs(out.rho));
  std::vector<double> perron(n, 0.0);
  for (std::size_t i = 0; i < n && out.eigenvalues[0] - out.eigenvalues[i] <= window; ++i) {
    double dot = std::accumulate(out.vectors[i].begin(), out.vectors[i].end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) perron[k] += dot * out.vectors[i][k];
  }
  double norm = std::sqrt(std::inner_product(perron.begin(), perron.end(),
                                             perron.begin(), 0.0));
  if (norm > 1e-9) {
    for (double& x : perron) x /= norm;
  } else {
    // All-ones happened to be orthogonal to the eigenspace (cannot occur
    // for adjacency matrices, but keep the fallback total): sign-normalize
    // the first eigenvector instead.
    perron = out.vectors[0];
    double s = std::accumulate(perron.begin(), perron.end(), 0.0);
    if (s < 0.0)
      for (double& x : perron) x = -x;
  }
  out.perron_vector = std::move(perron);

  double residual = 0.0;
  std::vector<double> av(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = out.vectors[i];
    for (Vertex u = 0; u < n; ++u) {
      double s = 0.0;
      const Bits& nb = g.neighbors(u);
      for (int w = nb.first(); w >= 0; w = nb.next(w)) s += v[w];
      av[u] = s;
    }
    for (std::size_t k = 0; k < n; ++k)
      residual = std::max(residual, std::abs(av[k] - out.eigenvalues[i] * v[k]));
  }
  out.residual = residual;
  return out;
}

double rho_split_star(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n)
    throw std::invalid_argument("rho_split_star requires 1 <= k < n");
  const double km1 = static_cast<double>(k) - 1.0;
  const double disc = km1 * km1 + 4.0 * static_cast<double>(k) *
                                      static_cast<double>(n - k);
  return (km1 + std::sqrt(disc)) / 2.0;
}

BMatrixSummary b_matrix_summary(const Graph& g, std::size_t r,
                                const SpectralSummary& spectrum) {
  if (r < 2) throw std::invalid_argument("b_matrix_summary requires r >= 2");
  BMatrixSummary out;
  const std::size_t n = g.order();
  const long long shift = static_cast<long long>(r) - 2;

  // Diagonal entries of A^2 are degrees, hence nonnegative; only the
  // off-diagonal entries (2-path counts minus the shift on edges) can dip
  // below zero.
  long long min_entry = n > 0 ? static_cast<long long>(g.degree(0)) : 0;
  for (Vertex u = 0; u < n; ++u) {
    min_entry = std::min(min_entry, static_cast<long long>(g.degree(u)));
    for (Vertex v = u + 1; v < n; ++v) {
      long long paths2 =
          static_cast<long long>(g.common_neighbors(u, v).count());
      long long entry = paths2 - (g.has_edge(u, v) ? shift : 0);
      if (entry < min_entry) {
        min_entry = entry;
        if (entry < 0 && !out.negative_entry) out.negative_entry = {u, v};
      }
    }
  }
  out.min_entry = min_entry;
  out.nonneg = min_entry >= 0;

  auto f = [&](double x) { return x * x - static_cast<double>(shift) * x; };
  double rho_b = 0.0;
  for (double lambda : spectrum.eigenvalues)
    rho_b = std::max(rho_b, std::abs(f(lambda)));
  out.rho_b = rho_b;
  out.f_lambda1 = f(spectrum.eigenvalues.front());
  out.f_lambdan = f(spectrum.eigenvalues.back());
  return out;
}

IdentityCheck rho_b_identity_check(const Graph& g, std::size_t r, double tol) {
  if (!is_connected(g) || !every_edge_in_clique(g, r).ok)
    return IdentityCheck::NotApplicable;
  auto spectrum = eig_sym(g);
  auto b = b_matrix_summary(g, r, spectrum);
  const bool identity = std::abs(b.rho_b - b.f_lambda1) <= tol;
  const bool convex_max =
      std::abs(b.rho_b - std::max(b.f_lambda1, b.f_lambdan)) <= tol;
  return identity && convex_max ? IdentityCheck::Holds : IdentityCheck::Fails;
}

long long degree_square_sum(const Graph& g, std::size_t r) {
  if (r < 2) throw std::invalid_argument("degree_square_sum requires r >= 2");
  const long long shift = static_cast<long long>(r) - 2;
  long long sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const long long d = static_cast<long long>(g.degree(u));
    sum += d * d - shift * d;
  }
  return sum;
}

double rayleigh_lower(const Graph& g, std::size_t r) {
  if (g.order() == 0) throw std::invalid_argument("rayleigh_lower: empty graph");
  return static_cast<double>(degree_square_sum(g, r)) /
         static_cast<double>(g.order());
}

double hsf_upper_bound(const GraphStats& stats) {
  const double n = static_cast<double>(stats.n);
  const double m = static_cast<double>(stats.m);
  const double delta = static_cast<double>(stats.delta);
  const double radicand = 2.0 * m - delta * n + (delta + 1.0) * (delta + 1.0) / 4.0;
  return (delta - 1.0) / 2.0 + std::sqrt(radicand);
}

double kkko_lower_bound(std::size_t n, std::size_t r) {
  if (r < 3) throw std::invalid_argument("kkko_lower_bound is stated for r >= 3");
  if (n <= r) throw std::invalid_argument("kkko_lower_bound requires n > r");
  const long long nn = static_cast<long long>(n);
  const long long rr = static_cast<long long>(r);
  const long long numerator =
      (nn - 1) * (nn - 1) * (rr - 1) + (rr - 1) * (rr - 1) * (nn - rr + 1);
  return std::sqrt(static_cast<double>(numerator) / static_cast<double>(nn));
}

}  // namespace satspec
