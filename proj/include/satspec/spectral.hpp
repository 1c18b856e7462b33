#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "satspec/graph.hpp"

namespace satspec {

/// Full adjacency eigendecomposition. Eigenvalues are sorted descending;
/// the Perron vector is the nonnegative unit eigenvector for lambda_1
/// (strictly positive entries when the graph is connected).
struct SpectralSummary {
  std::vector<double> eigenvalues;            // lambda_1 >= ... >= lambda_n
  std::vector<std::vector<double>> vectors;   // vectors[i] pairs eigenvalues[i]
  std::vector<double> perron_vector;
  double rho = 0.0;       // spectral radius = lambda_1
  double residual = 0.0;  // max over eigenpairs of ||A v - lambda v||_inf
};

/// Cyclic Jacobi on a dense symmetric copy of the adjacency matrix.
/// Off-diagonal Frobenius norm is driven below 1e-12 * n; throws when the
/// sweep budget is exhausted first (the message reports the residual).
SpectralSummary eig_sym(const Graph& g);

/// rho(S_{n,k}) = (k-1 + sqrt((k-1)^2 + 4k(n-k))) / 2, requiring
/// 1 <= k < n. With k = r-1 this is the extremal value the saturation
/// checks compare against.
double rho_split_star(std::size_t n, std::size_t k);

/// The matrix B = A^2 - (r-2) A, summarized. Entries are exact integers:
/// off-diagonal (u,v) counts paths of length 2 minus (r-2) for adjacent
/// pairs; the diagonal holds degrees. rho_b is computed from the adjacency
/// spectrum as max_i |lambda_i^2 - (r-2) lambda_i|.
struct BMatrixSummary {
  bool nonneg = false;
  long long min_entry = 0;
  std::optional<std::pair<Vertex, Vertex>> negative_entry;
  double rho_b = 0.0;
  double f_lambda1 = 0.0;
  double f_lambdan = 0.0;
};

BMatrixSummary b_matrix_summary(const Graph& g, std::size_t r,
                                const SpectralSummary& spectrum);

enum class IdentityCheck { Holds, Fails, NotApplicable };

/// Checks rho(B) = lambda_1^2 - (r-2) lambda_1 and that rho(B) equals
/// max{f(lambda_1), f(lambda_n)}. NotApplicable when the graph is
/// disconnected or some edge lies in no K_r (B need not be nonnegative
/// then, and the identity is not guaranteed).
IdentityCheck rho_b_identity_check(const Graph& g, std::size_t r, double tol);

/// Exact integer sum over vertices of d(u)^2 - (r-2) d(u).
long long degree_square_sum(const Graph& g, std::size_t r);

/// (1/n) * degree_square_sum: the Rayleigh value <Bx,x> for the normalized
/// all-ones vector x.
double rayleigh_lower(const Graph& g, std::size_t r);

/// Upper bound (delta-1)/2 + sqrt(2m - delta n + (delta+1)^2/4) on the
/// spectral radius; the radicand is nonnegative because 2m >= delta n.
double hsf_upper_bound(const GraphStats& stats);

/// sqrt(((n-1)^2 (r-1) + (r-1)^2 (n-r+1)) / n), stated for n > r >= 3.
double kkko_lower_bound(std::size_t n, std::size_t r);

}  // namespace satspec
