#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hoffgraph/graph.hpp"
#include "hoffgraph/symmetric_eigen.hpp"

namespace hoffgraph {

enum class VertexKind : bool { slim = false, fat = true };

/// A graph whose vertices are labelled fat or slim. Fat vertices must be
/// pairwise non-adjacent and each must have a slim neighbour; values that
/// break these rules can be held, but validate() reports them and the
/// spectral operations refuse them.
class HoffmanGraph {
 public:
  HoffmanGraph(Graph graph, std::vector<VertexKind> kinds);
  /// Convenience: `fat` lists the fat vertex ids.
  static HoffmanGraph with_fat(Graph graph, const std::vector<int>& fat);

  const Graph& graph() const { return graph_; }
  VertexKind kind(int v) const { return kinds_[static_cast<std::size_t>(v)]; }
  bool is_fat(int v) const { return kind(v) == VertexKind::fat; }
  std::size_t order() const { return graph_.order(); }

  /// Ascending vertex ids.
  const std::vector<int>& slim_vertices() const { return slim_; }
  const std::vector<int>& fat_vertices() const { return fat_; }

  /// Adjacency among slim vertices, in slim_vertices() order.
  SymMatrix slim_adjacency() const;
  /// Slim-by-fat 0/1 incidence matrix C.
  Eigen::MatrixXd incidence() const;
  std::size_t fat_degree(int slim_vertex) const;

  const std::string& label() const { return graph_.label(); }

 private:
  Graph graph_;
  std::vector<VertexKind> kinds_;
  std::vector<int> slim_;
  std::vector<int> fat_;
};

struct ValidationReport {
  /// Edges joining two fat vertices.
  std::vector<Edge> adjacent_fat_pairs;
  /// Fat vertices with no slim neighbour.
  std::vector<int> fat_without_slim_neighbor;
  bool ok() const { return adjacent_fat_pairs.empty() && fat_without_slim_neighbor.empty(); }
  std::string describe() const;
};

ValidationReport validate(const HoffmanGraph& h);

/// S = A_slim - C Cᵀ. Throws std::invalid_argument for invalid h.
SymMatrix special_matrix(const HoffmanGraph& h);
double lambda_min_hoffman(const HoffmanGraph& h);

/// G(h, p): each fat vertex becomes a K_p joined to the fat vertex's
/// neighbours. Slim vertices keep their ids in ascending order, then the
/// K_p blocks follow in fat-vertex order.
Graph fatten(const HoffmanGraph& h, std::size_t p);

/// q(H): H as slim part plus one fat vertex (the last id) adjacent to all of it.
HoffmanGraph attach_universal_fat(const Graph& h);
/// h^(s): one slim vertex (id 0) adjacent to s fat vertices.
HoffmanGraph fat_star(std::size_t s);

struct HoffmanSearchOptions {
  std::size_t pattern_cap = 10;
};

/// Label-preserving induced embedding of `pattern` into `h`. When found, the
/// eigenvalue inequality λ_min(pattern) >= λ_min(h) is checked on the witness
/// and a violation raises internal_consistency_error.
std::optional<std::vector<int>> find_hoffman_subgraph(const HoffmanGraph& h, const HoffmanGraph& pattern,
                                                      HoffmanSearchOptions opts = {});
inline bool contains_hoffman_subgraph(const HoffmanGraph& h, const HoffmanGraph& pattern, HoffmanSearchOptions opts = {}) {
  return find_hoffman_subgraph(h, pattern, opts).has_value();
}

/// {"order": n, "edges": [[u, v], ...], "fat": [ids]}
nlohmann::json to_json(const HoffmanGraph& h);
HoffmanGraph hoffman_from_json(const nlohmann::json& j);

}  // namespace hoffgraph
