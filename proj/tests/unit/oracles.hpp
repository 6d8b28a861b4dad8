#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "hoffgraph/graph.hpp"

namespace oracle {

using hoffgraph::Graph;

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return out;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Lexicographically smallest adjacency bit string over all permutations.
inline std::string min_permutation_code(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string code;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) code.push_back(g.adjacent(p[i], p[j]) ? '1' : '0');
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::to_string(n) + ":" + best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && min_permutation_code(a) == min_permutation_code(b);
}

// Subset enumeration: does some |h|-subset of g induce a copy of h?
inline bool contains_induced(const Graph& g, const Graph& h) {
  const std::size_t n = g.order(), k = h.order();
  if (k > n) return false;
  const std::string target = min_permutation_code(h);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<int> vs;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1u) vs.push_back(static_cast<int>(v));
    if (min_permutation_code(g.induced(vs)) == target) return true;
  }
  return false;
}

inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Eigen's self-adjoint solver, descending.
inline std::vector<double> reference_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline std::vector<double> reference_eigenvalues(const Graph& g) { return reference_eigenvalues(g.adjacency_matrix<double>()); }

inline std::size_t common_neighbors(const Graph& g, int u, int v) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < g.order(); ++w)
    if (g.adjacent(u, static_cast<int>(w)) && g.adjacent(v, static_cast<int>(w))) ++c;
  return c;
}

}  // namespace oracle
