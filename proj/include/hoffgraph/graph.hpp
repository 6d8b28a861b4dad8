#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hoffgraph/vertex_set.hpp"

namespace hoffgraph {

using Edge = std::pair<int, int>;

/// Dense simple undirected graph stored as rows of adjacency bits.
///
/// Vertices are 0..order()-1. The adjacency relation is kept symmetric and
/// irreflexive by every mutator, so the invariants hold for any value that
/// can be observed from outside.
class Graph {
 public:
  explicit Graph(std::size_t order, std::string label = {});

  static Graph from_edges(std::size_t order, std::span<const Edge> edges, std::string label = {});

  std::size_t order() const { return rows_.size(); }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }
  const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::size_t degree(int v) const { return rows_[static_cast<std::size_t>(v)].count(); }
  std::size_t common_neighbors(int u, int v) const {
    return rows_[static_cast<std::size_t>(u)].intersection_count(rows_[static_cast<std::size_t>(v)]);
  }

  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::size_t edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;

  /// Subgraph induced on `vertices`, renumbered in the given order.
  Graph induced(std::span<const int> vertices) const;

  template <typename Scalar = double>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const {
    const auto n = static_cast<Eigen::Index>(order());
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      rows_[static_cast<std::size_t>(i)].for_each([&](std::size_t j) { a(i, static_cast<Eigen::Index>(j)) = Scalar(1); });
    return a;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> rows_;
  std::string label_;
};

// Named constructions. Each documents its vertex order.

/// Parts occupy consecutive vertex ranges in the given order.
Graph complete_multipartite(std::span<const std::size_t> parts);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
/// Vertices 0..s-1 form the first side.
Graph complete_bipartite(std::size_t s, std::size_t t);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();
/// Two copies of C_n joined by a perfect matching (i -- i+n).
Graph prism_graph(std::size_t n);

/// One vertex per edge of g, in the order of g.edges().
Graph line_graph(const Graph& g);
Graph complement(const Graph& g);
/// Vertices 0..2m-1 form K_2m; vertex 2m is the apex, adjacent to 0..m-1.
Graph k_tilde(std::size_t m);
/// Block order: copies of vertex x are x*q .. x*q+q-1. Adjacency is A ⊗ J_q.
Graph coclique_extension(const Graph& g, std::size_t q);
/// Vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

struct DistanceLayers {
  int source = 0;
  /// layers[i] = Γ_i(source).
  std::vector<std::vector<int>> layers;
  std::vector<int> unreached;
  std::size_t eccentricity() const { return layers.empty() ? 0 : layers.size() - 1; }
};

DistanceLayers distance_layers(const Graph& g, int x);
bool is_connected(const Graph& g);
/// Empty when g is disconnected.
std::optional<std::size_t> diameter(const Graph& g);

struct InducedSearchOptions {
  std::size_t pattern_cap = 12;
};

/// Embedding of h into g as an induced subgraph: result[i] is the image of
/// pattern vertex i. Throws unsupported_size when h exceeds the cap.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h, InducedSearchOptions opts = {});
inline bool contains_induced(const Graph& g, const Graph& h, InducedSearchOptions opts = {}) {
  return find_induced(g, h, opts).has_value();
}

struct RegularityParams {
  std::size_t order = 0;
  bool is_regular = false;
  std::optional<std::size_t> degree;
  /// Common neighbours of adjacent pairs, when constant (absent if no edges).
  std::optional<std::size_t> a1;
  /// Common neighbours of pairs at distance 2, when constant.
  std::optional<std::size_t> c2;
  /// Common neighbours of non-adjacent pairs, when constant.
  std::optional<std::size_t> co_edge_c2;
  std::size_t adjacent_pairs = 0;
  std::size_t distance2_pairs = 0;
  std::size_t nonadjacent_pairs = 0;
  /// Range of common-neighbour counts over distance-2 pairs.
  std::optional<std::size_t> distance2_min_common;
  std::optional<std::size_t> distance2_max_common;

  bool edge_regular() const { return is_regular && adjacent_pairs > 0 && a1.has_value(); }
  bool co_edge_regular() const { return is_regular && nonadjacent_pairs > 0 && co_edge_c2.has_value(); }
  bool amply_regular() const {
    return is_regular && (adjacent_pairs == 0 || a1.has_value()) && (distance2_pairs == 0 || c2.has_value());
  }
};

RegularityParams regularity_params(const Graph& g);

/// True iff non-adjacency is transitive, i.e. the complement is a disjoint union of cliques.
bool is_complete_multipartite(const Graph& g);

}  // namespace hoffgraph
