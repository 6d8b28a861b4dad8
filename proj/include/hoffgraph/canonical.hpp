#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hoffgraph/graph.hpp"

namespace hoffgraph {

inline constexpr std::size_t kCanonicalOrderCap = 64;

struct CanonicalForm {
  /// labeling[v] = canonical position of vertex v.
  std::vector<int> labeling;
  /// Equal for two (coloured) graphs iff they are isomorphic.
  std::string certificate;
};

/// Canonical labeling by equitable-partition refinement and individualization,
/// with automorphism pruning. `colors`, when given, is an initial vertex
/// colouring that isomorphisms must preserve (color values are part of the
/// certificate). Throws unsupported_size above kCanonicalOrderCap vertices.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});

inline std::string canonical_certificate(const Graph& g, std::span<const int> colors = {}) {
  return canonical_form(g, colors).certificate;
}

/// Vertex v of g becomes vertex labeling[v] of the result.
Graph relabel(const Graph& g, std::span<const int> labeling);

}  // namespace hoffgraph
