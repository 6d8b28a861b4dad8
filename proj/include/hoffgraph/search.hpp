#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hoffgraph/graph.hpp"
#include "hoffgraph/rational.hpp"
#include "hoffgraph/spectra.hpp"

namespace hoffgraph {

inline constexpr double kSearchTolerance = 1e-9;

struct SearchOptions {
  /// Interlacing cut on the saturated subgraph.
  bool spectral_prune = true;
  /// Worker threads; 0 means HOFFGRAPH_THREADS or the hardware count.
  unsigned threads = 0;
  std::size_t degree_cap = 5;
  std::size_t order_cap = 16;
};

unsigned resolve_thread_count(unsigned requested);

struct RegularEnumeration {
  /// One representative per isomorphism class, sorted by canonical certificate.
  std::vector<Graph> graphs;
  /// Non-empty when the parameters admit no graph (parity, k >= n).
  std::string reason;
  std::size_t states_expanded = 0;
  std::size_t spectral_cuts = 0;
};

/// Connected k-regular graphs on n vertices, one per isomorphism class.
/// When `lambda_cut` is set and pruning is enabled, branches whose
/// saturated subgraph already has λ₂ > λ are dropped. Throws
/// unsupported_size beyond the configured caps.
RegularEnumeration enum_connected_regular(std::size_t k, std::size_t n, SearchOptions opts = {},
                                          std::optional<double> lambda_cut = std::nullopt);

/// Keep unless the subgraph induced on `saturated` has λ₂ > λ + 1e-9.
/// Sound because every completion contains that subgraph induced.
bool spectral_prune(const Graph& partial, const VertexSet& saturated, double lambda);

/// Exact test of λ₂(g) <= λ via the integer characteristic polynomial and
/// Descartes' rule on the shifted polynomial (exact for real-rooted
/// polynomials). Limited to order <= 24.
bool second_largest_at_most_exact(const Graph& g, const Rational& lambda);
/// Number of eigenvalues strictly greater than λ, exactly.
std::size_t eigenvalues_above_exact(const Graph& g, const Rational& lambda);

struct ExtremalGraph {
  Graph graph;
  Spectrum spectrum;
  std::string certificate;
  /// λ₂ within 1e-6 of λ.
  bool boundary = false;
  /// Result of the exact re-check for boundary graphs of order <= 12.
  std::optional<bool> exact_confirmed;
};

struct OrderCounts {
  std::size_t generated = 0;
  std::size_t passed = 0;
};

struct SearchReport {
  std::size_t k = 0;
  Rational lambda;
  std::size_t n_max = 0;
  std::optional<std::size_t> exact_v;
  std::vector<ExtremalGraph> extremal_graphs;
  std::map<std::size_t, OrderCounts> counts;
  bool complete = true;
  bool unique() const { return extremal_graphs.size() == 1; }
  std::vector<std::string> notes;
};

SearchReport v_search(std::size_t k, const Rational& lambda, std::size_t n_max, SearchOptions opts = {});

nlohmann::json to_json(const SearchReport& r);

}  // namespace hoffgraph
