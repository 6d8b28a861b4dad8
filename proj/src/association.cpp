#include "hoffgraph/association.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hoffgraph/errors.hpp"

namespace hoffgraph {

namespace {

struct BronKerbosch {
  const Graph& g;
  std::size_t threshold;
  std::size_t cap;
  std::vector<Clique> out;
  std::vector<int> current;

  void expand(VertexSet p, VertexSet x) {
    if (current.size() + p.count() < threshold) return;
    if (p.none()) {
      if (x.none()) {
        if (out.size() >= cap)
          throw unsupported_size("maximal clique enumeration exceeded cap of " + std::to_string(cap) + " cliques");
        out.push_back(current);
      }
      return;
    }
    // Pivot maximizing |P ∩ N(u)| over u in P ∪ X.
    const VertexSet px = p | x;
    std::size_t pivot = px.first();
    std::size_t best = p.intersection_count(g.neighbors(static_cast<int>(pivot)));
    px.for_each([&](std::size_t u) {
      const auto c = p.intersection_count(g.neighbors(static_cast<int>(u)));
      if (c > best) {
        best = c;
        pivot = u;
      }
    });
    const VertexSet candidates = p - g.neighbors(static_cast<int>(pivot));
    candidates.for_each([&](std::size_t v) {
      const auto& nv = g.neighbors(static_cast<int>(v));
      current.push_back(static_cast<int>(v));
      expand(p & nv, x & nv);
      current.pop_back();
      p.reset(v);
      x.set(v);
    });
  }
};

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

CliqueFamily maximal_cliques(const Graph& g, std::size_t threshold, CliqueEnumerationOptions opts) {
  if (threshold == 0) throw std::invalid_argument("maximal_cliques: threshold must be at least 1");
  if (g.order() > opts.order_cap)
    throw unsupported_size("maximal_cliques: graph order " + std::to_string(g.order()) + " exceeds cap " +
                           std::to_string(opts.order_cap));
  BronKerbosch bk{g, threshold, opts.clique_cap, {}, {}};
  bk.expand(VertexSet::full(g.order()), VertexSet(g.order()));
  for (auto& c : bk.out) std::sort(c.begin(), c.end());
  std::sort(bk.out.begin(), bk.out.end());
  return CliqueFamily{g, threshold, std::move(bk.out)};
}

std::size_t non_neighbors_in(const Graph& g, int x, const Clique& target) {
  std::size_t count = 0;
  for (int y : target)
    if (y != x && !g.adjacent(x, y)) ++count;
  return count;
}

bool equiv_nm(const Graph& g, const Clique& c1, const Clique& c2, std::size_t m) {
  if (m == 0) return false;
  for (int x : c1)
    if (non_neighbors_in(g, x, c2) > m - 1) return false;
  for (int y : c2)
    if (non_neighbors_in(g, y, c1) > m - 1) return false;
  return true;
}

std::vector<int> quasi_clique(const Graph& g, const Clique& c, std::size_t m) {
  std::vector<int> out;
  if (m == 0) return out;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (non_neighbors_in(g, static_cast<int>(v), c) <= m - 1) out.push_back(static_cast<int>(v));
  return out;
}

CliquePartition partition_classes(const CliqueFamily& fam, std::size_t m, PartitionOptions opts) {
  CliquePartition part{fam, m, {}, {}, false, true, true, {}};
  const Graph& g = fam.graph;
  const auto k = fam.cliques.size();

  bool hyp = true;
  if (m < 2) {
    hyp = false;
    part.warnings.push_back("m = " + std::to_string(m) + " is below 2");
  }
  if (fam.threshold < (m + 1) * (m + 1)) {
    hyp = false;
    part.warnings.push_back("threshold n = " + std::to_string(fam.threshold) + " is below (m+1)^2 = " + std::to_string((m + 1) * (m + 1)));
  }
  if (m >= 1) {
    const Graph pattern = k_tilde(m);
    if (pattern.order() > opts.induced_cap) {
      hyp = false;
      part.warnings.push_back("induced K~_" + std::to_string(2 * m) + " check skipped: pattern exceeds cap");
    } else if (contains_induced(g, pattern, {opts.induced_cap})) {
      hyp = false;
      part.warnings.push_back("graph contains an induced K~_" + std::to_string(2 * m));
    }
  }
  part.hypotheses_hold = hyp;

  std::vector<std::vector<bool>> related(k, std::vector<bool>(k, false));
  DisjointSets sets(k);
  for (std::size_t i = 0; i < k; ++i) {
    related[i][i] = true;
    for (std::size_t j = i + 1; j < k; ++j)
      if (equiv_nm(g, fam.cliques[i], fam.cliques[j], m)) {
        related[i][j] = related[j][i] = true;
        sets.unite(i, j);
      }
  }
  std::vector<std::vector<std::size_t>> by_root(k);
  for (std::size_t i = 0; i < k; ++i) by_root[sets.find(i)].push_back(i);
  for (auto& cls : by_root)
    if (!cls.empty()) part.classes.push_back(std::move(cls));
  std::sort(part.classes.begin(), part.classes.end());

  for (const auto& cls : part.classes)
    for (std::size_t a = 0; a < cls.size() && part.transitive; ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b)
        if (!related[cls[a]][cls[b]]) {
          part.transitive = false;
          break;
        }
  if (!part.transitive)
    part.warnings.push_back(std::string(hyp ? "hypotheses hold but " : "") +
                            "relation is not transitive on this family; classes are its transitive closure");

  for (const auto& cls : part.classes) {
    auto q = quasi_clique(g, fam.cliques[cls.front()], m);
    if (opts.certified) {
      for (std::size_t r = 1; r < cls.size(); ++r)
        if (quasi_clique(g, fam.cliques[cls[r]], m) != q) {
          part.representatives_agree = false;
          if (hyp) throw internal_consistency_error("quasi-clique depends on the class representative although the hypotheses hold");
        }
    }
    part.quasi_cliques.push_back(std::move(q));
  }
  if (!part.representatives_agree) part.warnings.push_back("quasi-clique depends on the chosen representative");
  return part;
}

Association associate_detailed(const Graph& g, std::size_t m, std::size_t n, PartitionOptions opts,
                               CliqueEnumerationOptions enum_opts) {
  if (n < (m + 1) * (m + 1))
    throw std::invalid_argument("associate: need n >= (m+1)^2, got n = " + std::to_string(n) + ", m = " + std::to_string(m));
  auto part = partition_classes(maximal_cliques(g, n, enum_opts), m, opts);
  const auto order = g.order();
  Graph h(order + part.classes.size(), "assoc(" + g.label() + "," + std::to_string(m) + "," + std::to_string(n) + ")");
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  std::vector<int> fat;
  for (std::size_t i = 0; i < part.quasi_cliques.size(); ++i) {
    const auto f = static_cast<int>(order + i);
    fat.push_back(f);
    if (part.quasi_cliques[i].empty()) throw internal_consistency_error("associate: empty quasi-clique");
    for (int v : part.quasi_cliques[i]) h.add_edge(v, f);
  }
  return Association{std::move(part), HoffmanGraph::with_fat(std::move(h), fat)};
}

HoffmanGraph associate(const Graph& g, std::size_t m, std::size_t n) { return associate_detailed(g, m, n).hoffman; }

nlohmann::json to_json(const CliquePartition& p) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    nlohmann::json cliques = nlohmann::json::array();
    for (auto idx : p.classes[i]) cliques.push_back(p.family.cliques[idx]);
    classes.push_back({{"cliques", std::move(cliques)}, {"quasi_clique", p.quasi_cliques[i]}});
  }
  return {{"m", p.m},
          {"n", p.family.threshold},
          {"classes", std::move(classes)},
          {"hypotheses_hold", p.hypotheses_hold},
          {"transitive", p.transitive},
          {"warnings", p.warnings}};
}

}  // namespace hoffgraph
