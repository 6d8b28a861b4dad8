#include <doctest.h>

#include <algorithm>

#include "hoffgraph/association.hpp"
#include "hoffgraph/errors.hpp"
#include "oracles.hpp"

using namespace hoffgraph;

namespace {

// Every vertex subset that is a maximal clique of at least `threshold` vertices.
std::vector<Clique> maximal_cliques_oracle(const Graph& g, std::size_t threshold) {
  const std::size_t n = g.order();
  std::vector<Clique> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Clique c;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1u) c.push_back(static_cast<int>(v));
    bool clique = true;
    for (std::size_t i = 0; clique && i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) clique = clique && g.adjacent(c[i], c[j]);
    if (!clique || c.size() < threshold) continue;
    bool maximal = true;
    for (std::size_t v = 0; maximal && v < n; ++v) {
      if (mask >> v & 1u) continue;
      maximal = !std::all_of(c.begin(), c.end(), [&](int u) { return g.adjacent(u, static_cast<int>(v)); });
    }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph two_cliques(std::size_t size, std::size_t shared) {
  const std::size_t n = 2 * size - shared;
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const bool first = u < size && v < size;
      const bool second = u >= size - shared && v >= size - shared;
      if (first || second) g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
  return g;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> r;
  for (int v = lo; v < hi; ++v) r.push_back(v);
  return r;
}

}  // namespace

TEST_SUITE("association") {
  TEST_CASE("maximal cliques against subset enumeration") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
      const auto g = oracle::random_graph(rng, 1 + i % 12, 0.3 + 0.1 * (i % 5));
      for (std::size_t t = 1; t <= 4; ++t) CHECK(maximal_cliques(g, t).cliques == maximal_cliques_oracle(g, t));
    }
    CHECK(maximal_cliques(petersen_graph(), 2).cliques.size() == 15);
    CHECK(maximal_cliques(petersen_graph(), 3).cliques.empty());
    CHECK(maximal_cliques(complete_graph(7), 7).cliques == std::vector<Clique>{range(0, 7)});
    CHECK_THROWS_AS(maximal_cliques(petersen_graph(), 0), std::invalid_argument);
    CliqueEnumerationOptions tight;
    tight.clique_cap = 3;
    CHECK_THROWS_AS(maximal_cliques(petersen_graph(), 1, tight), unsupported_size);
    tight = {};
    tight.order_cap = 5;
    CHECK_THROWS_AS(maximal_cliques(petersen_graph(), 1, tight), unsupported_size);
  }

  TEST_CASE("pairwise relation and quasi-cliques") {
    const auto g = two_cliques(10, 9);  // K_11 minus the edge {0, 10}
    const auto c1 = range(0, 10), c2 = range(1, 11);
    CHECK(non_neighbors_in(g, 0, c2) == 1);
    CHECK(non_neighbors_in(g, 5, c2) == 0);
    CHECK(equiv_nm(g, c1, c2, 2));
    CHECK_FALSE(equiv_nm(g, c1, c2, 1));
    CHECK(quasi_clique(g, c1, 2) == range(0, 11));
    CHECK(quasi_clique(g, c1, 1) == c1);
    CHECK(quasi_clique(g, c1, 0).empty());

    const auto h = two_cliques(10, 1);
    CHECK_FALSE(equiv_nm(h, range(0, 10), range(9, 19), 2));
    CHECK(quasi_clique(h, range(0, 10), 2) == range(0, 10));
  }

  TEST_CASE("single large clique") {
    const auto a = associate_detailed(complete_graph(9), 2, 9);
    CHECK(a.partition.hypotheses_hold);
    CHECK(a.partition.classes.size() == 1);
    CHECK(a.hoffman.order() == 10);
    CHECK(a.hoffman.fat_vertices() == std::vector<int>{9});
    CHECK(a.hoffman.graph().degree(9) == 9);
    CHECK(validate(a.hoffman).ok());
  }

  TEST_CASE("nearly equal cliques merge") {
    PartitionOptions certified;
    certified.certified = true;
    const auto a = associate_detailed(two_cliques(10, 9), 2, 9, certified);
    CHECK(a.partition.hypotheses_hold);
    CHECK(a.partition.family.cliques.size() == 2);
    CHECK(a.partition.classes.size() == 1);
    CHECK(a.partition.transitive);
    CHECK(a.partition.representatives_agree);
    CHECK(a.partition.quasi_cliques.front() == range(0, 11));
  }

  TEST_CASE("cliques meeting in one vertex stay apart") {
    const auto a = associate_detailed(two_cliques(10, 1), 2, 9);
    CHECK(a.partition.classes.size() == 2);
    const auto& g = a.hoffman.graph();
    CHECK(a.hoffman.fat_vertices() == std::vector<int>{19, 20});
    CHECK(g.adjacent(9, 19));
    CHECK(g.adjacent(9, 20));
    CHECK_FALSE(g.adjacent(0, 20));
    CHECK(a.hoffman.fat_degree(9) == 2);
    CHECK(a.hoffman.fat_degree(0) == 1);
  }

  TEST_CASE("fattened Hoffman graphs are recovered") {
    // q(K_2) fattened with p = 9 is K_11; the association is q(K_11).
    const auto g = fatten(attach_universal_fat(complete_graph(2)), 9);
    const auto h = associate(g, 2, 9);
    CHECK(h.fat_vertices().size() == 1);
    CHECK(h.graph().degree(11) == 11);

    // Two fat ends of a slim path: two classes whose quasi-cliques are the blocks plus their slim neighbour.
    const auto fsf = fatten(HoffmanGraph::with_fat(path_graph(4), {0, 3}), 10);
    const auto a = associate_detailed(fsf, 2, 9);
    REQUIRE(a.partition.classes.size() == 2);
    auto first = range(2, 12);
    first.insert(first.begin(), 0);
    CHECK(a.partition.quasi_cliques[0] == first);
  }

  TEST_CASE("small fattenings") {
    const auto g = fatten(attach_universal_fat(complete_graph(2)), 10);
    const auto fam = maximal_cliques(g, 5);
    REQUIRE(fam.cliques.size() == 1);
    CHECK(fam.cliques.front().size() == 12);
    CHECK(quasi_clique(g, fam.cliques.front(), 2) == range(0, 12));
    CHECK(maximal_cliques(complete_graph(5), 3).cliques.size() == 1);
    CHECK(maximal_cliques(cycle_graph(5), 3).cliques.empty());

    // Two disjoint q(K_2) components give two classes.
    const auto h = HoffmanGraph::with_fat(disjoint_union(complete_graph(3), complete_graph(3)), {2, 5});
    const auto split = fatten(h, 9);
    CHECK(partition_classes(maximal_cliques(split, 9), 2).classes.size() == 2);

    // No clique of size n: no fat vertices and the slim part is g itself.
    const auto plain = associate(petersen_graph(), 2, 9);
    CHECK(plain.fat_vertices().empty());
    CHECK(plain.graph() == petersen_graph());
  }

  TEST_CASE("non-transitive closure is reported") {
    Graph g(5);
    for (auto [u, v] : std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}) g.add_edge(u, v);
    const auto part = partition_classes(maximal_cliques(g, 3), 2);
    CHECK(part.family.cliques.size() == 3);
    CHECK(part.classes.size() == 1);
    CHECK_FALSE(part.transitive);
    CHECK_FALSE(part.hypotheses_hold);
    CHECK(part.warnings.size() >= 2);
    const auto j = to_json(part);
    CHECK(j["m"] == 2);
  }

  TEST_CASE("induced K tilde breaks the hypotheses") {
    // K_9 plus a vertex joined to 2 of its vertices contains an induced K̃_4.
    Graph g(10);
    for (int u = 0; u < 9; ++u)
      for (int v = u + 1; v < 9; ++v) g.add_edge(u, v);
    g.add_edge(9, 0);
    g.add_edge(9, 1);
    const auto part = partition_classes(maximal_cliques(g, 9), 2);
    CHECK_FALSE(part.hypotheses_hold);
  }

  TEST_CASE("threshold below (m+1)^2 is rejected") {
    CHECK_THROWS_AS(associate(complete_graph(9), 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(associate(complete_graph(16), 3, 15), std::invalid_argument);
    CHECK_NOTHROW(associate(complete_graph(16), 3, 16));
  }
}
