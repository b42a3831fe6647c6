#ifndef SMR_GENERATORS_HPP
#define SMR_GENERATORS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "smr/dense.hpp"
#include "smr/rng.hpp"

namespace smr {

// Seeded fixture generators shared by tests and the CLI `gen` subcommand.
// Everything is a pure function of (shape parameters, seed).

inline dense_symmetric random_symmetric(int n, std::uint64_t seed) {
  rng g(seed);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double v = g.next_gaussian();
      m(i, j) = v;
      m(j, i) = v;
    }
  return dense_symmetric(m);
}

// Erdos-Renyi G(n,p) graph Laplacian, forced connected by wiring vertex i to a
// uniformly random earlier vertex first (a random spanning tree).
inline dense_symmetric gnp_laplacian(int n, double p, std::uint64_t seed) {
  rng g(seed);
  Matrix a = Matrix::Zero(n, n);
  auto add_edge = [&](int i, int j) {
    if (a(i, j) != 0.0) return;
    a(i, j) = a(j, i) = -1.0;
    a(i, i) += 1.0;
    a(j, j) += 1.0;
  };
  for (int i = 1; i < n; ++i) add_edge(i, static_cast<int>(g.next_below(i)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.next_unit() < p) add_edge(i, j);
  return dense_symmetric(a);
}

// Path graph Laplacian P_n.
inline dense_symmetric path_laplacian(int n) {
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    a(i, i) += 1.0;
    a(i + 1, i + 1) += 1.0;
    a(i, i + 1) = a(i + 1, i) = -1.0;
  }
  return dense_symmetric(a);
}

// Cycle graph Laplacian C_n.
inline dense_symmetric cycle_laplacian(int n) {
  Matrix a = path_laplacian(n).mat();
  if (n >= 3) {
    a(0, 0) += 1.0;
    a(n - 1, n - 1) += 1.0;
    a(0, n - 1) -= 1.0;
    a(n - 1, 0) -= 1.0;
  }
  return dense_symmetric(a);
}

// SDDM matrix (symmetric diagonally dominant, nonpositive off-diagonal,
// positive definite): a connected Laplacian plus random positive diagonal.
inline dense_symmetric random_sddm(int n, double p, std::uint64_t seed) {
  dense_symmetric lap = gnp_laplacian(n, p, seed);
  rng g(derive_seed(seed, 1));
  Matrix m = lap.mat();
  for (int i = 0; i < n; ++i) m(i, i) += g.next_range(0.1, 1.5);
  return dense_symmetric(m);
}

// Random weighted SDDM: like random_sddm but with random positive edge weights.
inline dense_symmetric random_weighted_sddm(int n, double p, std::uint64_t seed) {
  rng g(seed);
  Matrix a = Matrix::Zero(n, n);
  auto add_edge = [&](int i, int j, double w) {
    a(i, j) -= w;
    a(j, i) -= w;
    a(i, i) += w;
    a(j, j) += w;
  };
  for (int i = 1; i < n; ++i) add_edge(i, static_cast<int>(g.next_below(i)), g.next_range(0.2, 2.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.next_unit() < p) add_edge(i, j, g.next_range(0.2, 2.0));
  for (int i = 0; i < n; ++i) a(i, i) += g.next_range(0.05, 1.0);
  return dense_symmetric(a);
}

// Inverse of a random symmetric M-matrix (entrywise positive when connected).
// Returned pair: (A = M^{-1}, M itself for oracle checks in tests).
inline std::pair<dense_symmetric, dense_symmetric> random_inverse_m(int n, double p,
                                                                    std::uint64_t seed) {
  dense_symmetric m = random_weighted_sddm(n, p, seed);
  Matrix inv = m.mat().inverse();
  return {dense_symmetric(inv), m};
}

// Laplacian pseudo-inverse of a connected G(n,p) graph.
inline std::pair<dense_symmetric, dense_symmetric> random_lap_pinv(int n, double p,
                                                                   std::uint64_t seed) {
  dense_symmetric lap = gnp_laplacian(n, p, seed);
  dense_symmetric pinv =
      matrix_function(lap, [](double x) { return 1.0 / x; }, kernel_policy::map_zero_to_zero);
  return {pinv, lap};
}

// Perturbed-Laplacian pair: witness Laplacian L and perturbation A with
// gamma*A <= L <= A. A = L + c*L_sub for a random edge-subset Laplacian
// L_sub <= L, which gives gamma = 1/(1+c) exactly as a feasible lower bound.
struct perturbed_pair {
  dense_symmetric a;        // the observable matrix
  dense_symmetric witness;  // the hidden Laplacian L
  double gamma;             // guaranteed feasibility constant
};

inline perturbed_pair random_perturbed_laplacian(int n, double p, double c, std::uint64_t seed) {
  dense_symmetric lap = gnp_laplacian(n, p, seed);
  rng g(derive_seed(seed, 2));
  Matrix sub = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (lap(i, j) != 0.0 && g.next_unit() < 0.5) {
        sub(i, j) = sub(j, i) = -1.0;
        sub(i, i) += 1.0;
        sub(j, j) += 1.0;
      }
  Matrix a = lap.mat() + c * sub;
  return {dense_symmetric(a), lap, 1.0 / (1.0 + c)};
}

}  // namespace smr

#endif  // SMR_GENERATORS_HPP
