#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "hoffgraph/graph.hpp"
#include "hoffgraph/hoffman.hpp"

namespace hoffgraph {

using Clique = std::vector<int>;

struct CliqueFamily {
  Graph graph;
  std::size_t threshold = 1;
  /// Maximal cliques with at least `threshold` vertices, each sorted
  /// ascending; the list is in lexicographic order.
  std::vector<Clique> cliques;
};

struct CliqueEnumerationOptions {
  std::size_t order_cap = 200;
  std::size_t clique_cap = 1'000'000;
};

/// Bron-Kerbosch with Tomita pivoting and size pruning. Throws
/// unsupported_size when the graph or the output exceeds the caps.
CliqueFamily maximal_cliques(const Graph& g, std::size_t threshold, CliqueEnumerationOptions opts = {});

/// Number of vertices of `target` not adjacent to x (x itself does not count).
std::size_t non_neighbors_in(const Graph& g, int x, const Clique& target);

/// C1 ≡ C2: every vertex of either clique has at most m-1 non-neighbours in the other.
bool equiv_nm(const Graph& g, const Clique& c1, const Clique& c2, std::size_t m);

/// Vertices with at most m-1 non-neighbours in c.
std::vector<int> quasi_clique(const Graph& g, const Clique& c, std::size_t m);

struct CliquePartition {
  CliqueFamily family;
  std::size_t m = 2;
  /// Indices into family.cliques; each class ascending, classes ordered by first member.
  std::vector<std::vector<std::size_t>> classes;
  /// Quasi-clique of each class, computed from its least representative.
  std::vector<std::vector<int>> quasi_cliques;
  /// Whether the hypotheses threshold >= (m+1)^2 and "no induced K̃_2m" hold.
  bool hypotheses_hold = false;
  /// Whether the pairwise relation was transitive on the family.
  bool transitive = true;
  /// Whether every representative of each class yields the same quasi-clique
  /// (only evaluated in certified mode).
  bool representatives_agree = true;
  std::vector<std::string> warnings;
};

struct PartitionOptions {
  /// Check all representatives of each class for quasi-clique agreement.
  bool certified = false;
  /// Pattern cap used when testing for an induced K̃_2m.
  std::size_t induced_cap = 12;
};

/// Classes are the transitive closure of the pairwise relation. Hypothesis
/// violations and non-transitivity are reported as warnings, not errors.
/// In certified mode, representative disagreement under valid hypotheses
/// throws internal_consistency_error.
CliquePartition partition_classes(const CliqueFamily& fam, std::size_t m, PartitionOptions opts = {});

struct Association {
  CliquePartition partition;
  HoffmanGraph hoffman;
};

/// g(G, m, n): slim vertices 0..|G|-1 are G itself; fat vertex order+i is
/// adjacent exactly to the i-th class's quasi-clique. Throws
/// std::invalid_argument when n < (m+1)^2.
Association associate_detailed(const Graph& g, std::size_t m, std::size_t n, PartitionOptions opts = {},
                               CliqueEnumerationOptions enum_opts = {});
HoffmanGraph associate(const Graph& g, std::size_t m, std::size_t n);

nlohmann::json to_json(const CliquePartition& p);

}  // namespace hoffgraph
