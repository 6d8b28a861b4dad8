#include "hoffgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "hoffgraph/errors.hpp"

namespace hoffgraph {

Graph::Graph(std::size_t order, std::string label) : label_(std::move(label)) {
  if (order == 0) throw std::invalid_argument("graph order must be at least 1");
  rows_.assign(order, VertexSet(order));
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges, std::string label) {
  Graph g(order, std::move(label));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= order())
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed (vertex " + std::to_string(u) + ")");
  rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
  rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[static_cast<std::size_t>(u)].reset(static_cast<std::size_t>(v));
  rows_[static_cast<std::size_t>(v)].reset(static_cast<std::size_t>(u));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (auto v = rows_[u].next(u + 1); v < order(); v = rows_[u].next(v + 1))
      out.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> d(order());
  for (std::size_t v = 0; v < order(); ++v) d[v] = rows_[v].count();
  return d;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph h(vertices.size(), label_.empty() ? std::string{} : label_ + "[induced]");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return h;
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  if (parts.empty()) throw std::invalid_argument("complete_multipartite: parts list is empty");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] == 0) throw std::invalid_argument("complete_multipartite: part sizes must be positive");
    part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  }
  std::string label = "K_{";
  for (std::size_t p = 0; p < parts.size(); ++p) label += (p ? "," : "") + std::to_string(parts[p]);
  Graph g(part_of.size(), label + "}");
  for (std::size_t u = 0; u < part_of.size(); ++u)
    for (std::size_t v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

Graph complete_graph(std::size_t n) {
  std::vector<std::size_t> parts(n, 1);
  Graph g = complete_multipartite(parts);
  g.set_label("K_" + std::to_string(n));
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n, "empty_" + std::to_string(n)); }

Graph complete_bipartite(std::size_t s, std::size_t t) {
  const std::size_t parts[] = {s, t};
  return complete_multipartite(parts);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
  Graph g(n, "C_" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) g.add_edge(static_cast<int>(i), static_cast<int>((i + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n, "P_" + std::to_string(n));
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
  return g;
}

Graph petersen_graph() {
  Graph g(10, "Petersen");
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, i + 5);
  }
  return g;
}

Graph prism_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("prism_graph: need n >= 3");
  Graph g(2 * n, "prism_" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<int>(i), b = static_cast<int>((i + 1) % n), m = static_cast<int>(n);
    g.add_edge(a, b);
    g.add_edge(a + m, b + m);
    g.add_edge(a, a + m);
  }
  return g;
}

Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  if (es.empty()) throw std::invalid_argument("line_graph: input has no edges");
  Graph l(es.size(), "L(" + g.label() + ")");
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto [a, b] = es[i];
      const auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) l.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return l;
}

Graph complement(const Graph& g) {
  const std::string& lbl = g.label();
  std::string label;
  if (lbl.starts_with("co(") && lbl.ends_with(")"))
    label = lbl.substr(3, lbl.size() - 4);
  else if (!lbl.empty())
    label = "co(" + lbl + ")";
  Graph c(g.order(), label);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(static_cast<int>(u), static_cast<int>(v))) c.add_edge(static_cast<int>(u), static_cast<int>(v));
  return c;
}

Graph k_tilde(std::size_t m) {
  if (m == 0) throw std::invalid_argument("k_tilde: m must be positive");
  const auto n = 2 * m + 1;
  Graph g(n, "Ktilde_" + std::to_string(2 * m));
  for (std::size_t u = 0; u < 2 * m; ++u)
    for (std::size_t v = u + 1; v < 2 * m; ++v) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  for (std::size_t u = 0; u < m; ++u) g.add_edge(static_cast<int>(u), static_cast<int>(2 * m));
  return g;
}

Graph coclique_extension(const Graph& g, std::size_t q) {
  if (q == 0) throw std::invalid_argument("coclique_extension: q must be positive");
  Graph ext(g.order() * q, "coclique_ext(" + g.label() + "," + std::to_string(q) + ")");
  for (auto [x, y] : g.edges())
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j)
        ext.add_edge(static_cast<int>(static_cast<std::size_t>(x) * q + i), static_cast<int>(static_cast<std::size_t>(y) * q + j));
  return ext;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph u(a.order() + b.order(), a.label() + "+" + b.label());
  for (auto [x, y] : a.edges()) u.add_edge(x, y);
  const auto shift = static_cast<int>(a.order());
  for (auto [x, y] : b.edges()) u.add_edge(x + shift, y + shift);
  return u;
}

DistanceLayers distance_layers(const Graph& g, int x) {
  if (x < 0 || static_cast<std::size_t>(x) >= g.order()) throw std::invalid_argument("distance_layers: vertex out of range");
  DistanceLayers out;
  out.source = x;
  VertexSet seen(g.order());
  seen.set(static_cast<std::size_t>(x));
  std::vector<int> frontier{x};
  while (!frontier.empty()) {
    out.layers.push_back(frontier);
    VertexSet next(g.order());
    for (int v : frontier) next |= g.neighbors(v);
    next -= seen;
    seen |= next;
    frontier = next.to_vector();
  }
  out.unreached = seen.complement().to_vector();
  return out;
}

bool is_connected(const Graph& g) { return distance_layers(g, 0).unreached.empty(); }

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t d = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    auto layers = distance_layers(g, static_cast<int>(v));
    if (!layers.unreached.empty()) return std::nullopt;
    d = std::max(d, layers.eccentricity());
  }
  return d;
}

namespace {

// Pattern vertex order for induced matching: greedily take the vertex with
// the most already-placed neighbours, breaking ties by degree.
std::vector<int> matching_order(const Graph& h) {
  const auto n = h.order();
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || links[v] > links[static_cast<std::size_t>(best)] ||
          (links[v] == links[static_cast<std::size_t>(best)] && h.degree(static_cast<int>(v)) > h.degree(best)))
        best = static_cast<int>(v);
    }
    placed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
    h.neighbors(best).for_each([&](std::size_t w) { ++links[w]; });
  }
  return order;
}

struct InducedMatcher {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;
  std::vector<int> image;  // indexed by pattern vertex
  VertexSet used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int p = order[depth];
    const auto need = h.degree(p);
    VertexSet cand = used.complement();
    for (std::size_t j = 0; j < depth; ++j) {
      const int q = order[j];
      const int gq = image[static_cast<std::size_t>(q)];
      if (h.adjacent(p, q))
        cand &= g.neighbors(gq);
      else
        cand -= g.neighbors(gq);
    }
    for (auto v = cand.first(); v < cand.size(); v = cand.next(v + 1)) {
      if (g.degree(static_cast<int>(v)) < need) continue;
      image[static_cast<std::size_t>(p)] = static_cast<int>(v);
      used.set(v);
      if (extend(depth + 1)) return true;
      used.reset(v);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h, InducedSearchOptions opts) {
  if (h.order() > opts.pattern_cap)
    throw unsupported_size("induced-subgraph pattern of order " + std::to_string(h.order()) + " exceeds cap " +
                           std::to_string(opts.pattern_cap));
  if (h.order() > g.order()) return std::nullopt;
  InducedMatcher m{g, h, matching_order(h), std::vector<int>(h.order(), -1), VertexSet(g.order())};
  if (!m.extend(0)) return std::nullopt;
  return m.image;
}

RegularityParams regularity_params(const Graph& g) {
  RegularityParams rp;
  rp.order = g.order();
  const auto deg = g.degrees();
  rp.is_regular = std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == deg[0]; });
  if (rp.is_regular) rp.degree = deg[0];

  bool a1_uniform = true, c2_uniform = true, co_uniform = true;
  std::optional<std::size_t> a1, c2, co;
  auto track = [](std::optional<std::size_t>& slot, bool& uniform, std::size_t value) {
    if (!slot) slot = value;
    else if (*slot != value) uniform = false;
  };
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      const auto iu = static_cast<int>(u), iv = static_cast<int>(v);
      const auto common = g.common_neighbors(iu, iv);
      if (g.adjacent(iu, iv)) {
        ++rp.adjacent_pairs;
        track(a1, a1_uniform, common);
        continue;
      }
      ++rp.nonadjacent_pairs;
      track(co, co_uniform, common);
      if (common > 0) {
        ++rp.distance2_pairs;
        track(c2, c2_uniform, common);
        rp.distance2_min_common = std::min(rp.distance2_min_common.value_or(common), common);
        rp.distance2_max_common = std::max(rp.distance2_max_common.value_or(common), common);
      }
    }
  }
  if (a1_uniform) rp.a1 = a1;
  if (c2_uniform) rp.c2 = c2;
  if (co_uniform) rp.co_edge_c2 = co;
  return rp;
}

bool is_complete_multipartite(const Graph& g) {
  // Non-adjacency (with reflexivity) must be an equivalence relation.
  for (std::size_t u = 0; u < g.order(); ++u) {
    const auto iu = static_cast<int>(u);
    VertexSet non = g.neighbors(iu).complement();
    for (auto v = non.first(); v < non.size(); v = non.next(v + 1)) {
      VertexSet other = g.neighbors(static_cast<int>(v)).complement();
      if (!(other == non)) return false;
    }
  }
  return true;
}

}  // namespace hoffgraph
