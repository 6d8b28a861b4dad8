#include "hoffgraph/hoffman.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hoffgraph/errors.hpp"
#include "hoffgraph/spectra.hpp"

namespace hoffgraph {

HoffmanGraph::HoffmanGraph(Graph graph, std::vector<VertexKind> kinds) : graph_(std::move(graph)), kinds_(std::move(kinds)) {
  if (kinds_.size() != graph_.order()) throw std::invalid_argument("HoffmanGraph: label count does not match graph order");
  for (std::size_t v = 0; v < kinds_.size(); ++v)
    (kinds_[v] == VertexKind::fat ? fat_ : slim_).push_back(static_cast<int>(v));
}

HoffmanGraph HoffmanGraph::with_fat(Graph graph, const std::vector<int>& fat) {
  std::vector<VertexKind> kinds(graph.order(), VertexKind::slim);
  for (int f : fat) {
    if (f < 0 || static_cast<std::size_t>(f) >= graph.order()) throw std::invalid_argument("HoffmanGraph: fat vertex out of range");
    kinds[static_cast<std::size_t>(f)] = VertexKind::fat;
  }
  return HoffmanGraph(std::move(graph), std::move(kinds));
}

SymMatrix HoffmanGraph::slim_adjacency() const { return graph_.induced(slim_).adjacency_matrix<double>(); }

Eigen::MatrixXd HoffmanGraph::incidence() const {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(slim_.size()), static_cast<Eigen::Index>(fat_.size()));
  for (std::size_t i = 0; i < slim_.size(); ++i)
    for (std::size_t j = 0; j < fat_.size(); ++j)
      if (graph_.adjacent(slim_[i], fat_[j])) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
  return c;
}

std::size_t HoffmanGraph::fat_degree(int slim_vertex) const {
  return static_cast<std::size_t>(std::count_if(fat_.begin(), fat_.end(), [&](int f) { return graph_.adjacent(slim_vertex, f); }));
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (auto [u, v] : adjacent_fat_pairs) out << "fat vertices " << u << " and " << v << " are adjacent; ";
  for (int f : fat_without_slim_neighbor) out << "fat vertex " << f << " has no slim neighbour; ";
  auto s = out.str();
  s.resize(s.size() - 2);
  return s;
}

ValidationReport validate(const HoffmanGraph& h) {
  ValidationReport r;
  const auto& fat = h.fat_vertices();
  for (std::size_t i = 0; i < fat.size(); ++i) {
    for (std::size_t j = i + 1; j < fat.size(); ++j)
      if (h.graph().adjacent(fat[i], fat[j])) r.adjacent_fat_pairs.emplace_back(fat[i], fat[j]);
    const auto& nb = h.graph().neighbors(fat[i]);
    const bool has_slim = std::any_of(h.slim_vertices().begin(), h.slim_vertices().end(),
                                      [&](int s) { return nb.test(static_cast<std::size_t>(s)); });
    if (!has_slim) r.fat_without_slim_neighbor.push_back(fat[i]);
  }
  return r;
}

SymMatrix special_matrix(const HoffmanGraph& h) {
  if (auto r = validate(h); !r.ok()) throw std::invalid_argument("special_matrix: invalid Hoffman graph: " + r.describe());
  if (h.slim_vertices().empty()) throw std::invalid_argument("special_matrix: Hoffman graph has no slim vertices");
  const Eigen::MatrixXd c = h.incidence();
  return h.slim_adjacency() - c * c.transpose();
}

double lambda_min_hoffman(const HoffmanGraph& h) {
  const auto ev = eig_symmetric(special_matrix(h));
  return ev(ev.size() - 1);
}

Graph fatten(const HoffmanGraph& h, std::size_t p) {
  if (p == 0) throw std::invalid_argument("fatten: p must be positive");
  if (auto r = validate(h); !r.ok()) throw std::invalid_argument("fatten: invalid Hoffman graph: " + r.describe());
  const auto& slim = h.slim_vertices();
  const auto& fat = h.fat_vertices();
  Graph g(slim.size() + p * fat.size(), "G(" + h.label() + "," + std::to_string(p) + ")");
  std::vector<int> new_id(h.order(), -1);
  for (std::size_t i = 0; i < slim.size(); ++i) new_id[static_cast<std::size_t>(slim[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < slim.size(); ++i)
    for (std::size_t j = i + 1; j < slim.size(); ++j)
      if (h.graph().adjacent(slim[i], slim[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  for (std::size_t f = 0; f < fat.size(); ++f) {
    const auto base = static_cast<int>(slim.size() + f * p);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = a + 1; b < p; ++b) g.add_edge(base + static_cast<int>(a), base + static_cast<int>(b));
      for (int s : slim)
        if (h.graph().adjacent(s, fat[f])) g.add_edge(base + static_cast<int>(a), new_id[static_cast<std::size_t>(s)]);
    }
  }
  return g;
}

HoffmanGraph attach_universal_fat(const Graph& h) {
  const auto n = h.order();
  Graph g(n + 1, "q(" + h.label() + ")");
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(static_cast<int>(v), static_cast<int>(n));
  return HoffmanGraph::with_fat(std::move(g), {static_cast<int>(n)});
}

HoffmanGraph fat_star(std::size_t s) {
  if (s == 0) throw std::invalid_argument("fat_star: need at least one fat vertex");
  Graph g(s + 1, "h^(" + std::to_string(s) + ")");
  std::vector<int> fat;
  for (std::size_t i = 1; i <= s; ++i) {
    g.add_edge(0, static_cast<int>(i));
    fat.push_back(static_cast<int>(i));
  }
  return HoffmanGraph::with_fat(std::move(g), fat);
}

namespace {

struct HoffmanMatcher {
  const HoffmanGraph& h;
  const HoffmanGraph& pattern;
  std::vector<int> order;
  std::vector<std::size_t> slim_deg_h, fat_deg_h, slim_deg_p, fat_deg_p;
  std::vector<int> image;
  VertexSet used;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int p = order[depth];
    for (std::size_t v = 0; v < h.order(); ++v) {
      const auto iv = static_cast<int>(v);
      if (used.test(v) || h.kind(iv) != pattern.kind(p)) continue;
      if (slim_deg_h[v] < slim_deg_p[static_cast<std::size_t>(p)] || fat_deg_h[v] < fat_deg_p[static_cast<std::size_t>(p)]) continue;
      bool consistent = true;
      for (std::size_t j = 0; j < depth && consistent; ++j) {
        const int q = order[j];
        consistent = pattern.graph().adjacent(p, q) == h.graph().adjacent(iv, image[static_cast<std::size_t>(q)]);
      }
      if (!consistent) continue;
      image[static_cast<std::size_t>(p)] = iv;
      used.set(v);
      if (extend(depth + 1)) return true;
      used.reset(v);
    }
    return false;
  }
};

void split_degrees(const HoffmanGraph& h, std::vector<std::size_t>& slim_deg, std::vector<std::size_t>& fat_deg) {
  slim_deg.assign(h.order(), 0);
  fat_deg.assign(h.order(), 0);
  for (auto [u, v] : h.graph().edges()) {
    (h.is_fat(v) ? fat_deg : slim_deg)[static_cast<std::size_t>(u)]++;
    (h.is_fat(u) ? fat_deg : slim_deg)[static_cast<std::size_t>(v)]++;
  }
}

}  // namespace

std::optional<std::vector<int>> find_hoffman_subgraph(const HoffmanGraph& h, const HoffmanGraph& pattern,
                                                      HoffmanSearchOptions opts) {
  if (pattern.order() > opts.pattern_cap)
    throw unsupported_size("Hoffman pattern of order " + std::to_string(pattern.order()) + " exceeds cap " +
                           std::to_string(opts.pattern_cap));
  if (pattern.order() > h.order() || pattern.fat_vertices().size() > h.fat_vertices().size() ||
      pattern.slim_vertices().size() > h.slim_vertices().size())
    return std::nullopt;

  HoffmanMatcher m{h, pattern, {}, {}, {}, {}, {}, std::vector<int>(pattern.order(), -1), VertexSet(h.order())};
  split_degrees(h, m.slim_deg_h, m.fat_deg_h);
  split_degrees(pattern, m.slim_deg_p, m.fat_deg_p);
  // Place high-degree pattern vertices first.
  m.order.resize(pattern.order());
  for (std::size_t i = 0; i < m.order.size(); ++i) m.order[i] = static_cast<int>(i);
  std::stable_sort(m.order.begin(), m.order.end(),
                   [&](int a, int b) { return pattern.graph().degree(a) > pattern.graph().degree(b); });
  if (!m.extend(0)) return std::nullopt;

  if (validate(pattern).ok() && validate(h).ok() && !pattern.slim_vertices().empty()) {
    const double sub = lambda_min_hoffman(pattern), whole = lambda_min_hoffman(h);
    if (sub < whole - 1e-9 * std::max(1.0, std::abs(whole)))
      throw internal_consistency_error("induced Hoffman subgraph has smaller lambda_min than its host");
  }
  return m.image;
}

nlohmann::json to_json(const HoffmanGraph& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : h.graph().edges()) edges.push_back({u, v});
  return {{"order", h.order()}, {"edges", std::move(edges)}, {"fat", h.fat_vertices()}};
}

HoffmanGraph hoffman_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
    throw std::invalid_argument("Hoffman JSON: expected object with \"order\", \"edges\" and \"fat\"");
  const auto n = j.at("order").get<long long>();
  if (n < 1) throw std::invalid_argument("Hoffman JSON: order must be positive");
  Graph g(static_cast<std::size_t>(n));
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("Hoffman JSON: each edge must be a pair");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<int> fat;
  if (j.contains("fat")) fat = j.at("fat").get<std::vector<int>>();
  return HoffmanGraph::with_fat(std::move(g), fat);
}

}  // namespace hoffgraph
