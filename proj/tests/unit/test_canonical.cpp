#include <doctest.h>

#include <map>
#include <set>

#include "hoffgraph/canonical.hpp"
#include "hoffgraph/errors.hpp"
#include "oracles.hpp"

using namespace hoffgraph;

namespace {

Graph from_mask(std::size_t n, std::uint32_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("classes agree with brute-force permutation codes") {
    const std::map<std::size_t, std::size_t> known{{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}};
    for (const auto& [n, count] : known) {
      std::map<std::string, std::string> cert_to_code;
      std::set<std::string> codes;
      bool consistent = true;
      for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
        const auto g = from_mask(n, mask);
        const auto code = oracle::min_permutation_code(g);
        const auto [it, inserted] = cert_to_code.emplace(canonical_certificate(g), code);
        consistent = consistent && (inserted || it->second == code);
        codes.insert(code);
      }
      CHECK(consistent);
      CHECK(codes.size() == count);
      CHECK(cert_to_code.size() == count);
    }
  }

  TEST_CASE("relabelling invariance") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 60; ++i) {
      const auto n = 1 + static_cast<std::size_t>(i % 40);
      const auto g = oracle::random_graph(rng, n, 0.1 + 0.15 * (i % 6));
      const auto h = oracle::permuted(g, oracle::random_permutation(rng, n));
      const auto fg = canonical_form(g), fh = canonical_form(h);
      CHECK(fg.certificate == fh.certificate);
      CHECK(relabel(g, fg.labeling) == relabel(h, fh.labeling));
    }
    // Highly symmetric graphs stress automorphism pruning.
    for (const auto& g : {petersen_graph(), complete_bipartite(8, 8), coclique_extension(cycle_graph(5), 4), prism_graph(12), complete_graph(20)}) {
      const auto h = oracle::permuted(g, oracle::random_permutation(rng, g.order()));
      CHECK(canonical_certificate(g) == canonical_certificate(h));
    }
  }

  TEST_CASE("distinguishes non-isomorphic graphs") {
    CHECK(canonical_certificate(complete_bipartite(3, 3)) != canonical_certificate(prism_graph(3)));
    CHECK(canonical_certificate(cycle_graph(6)) != canonical_certificate(disjoint_union(cycle_graph(3), cycle_graph(3))));
    CHECK(canonical_certificate(petersen_graph()) != canonical_certificate(prism_graph(5)));
    CHECK(canonical_certificate(Graph(3)) != canonical_certificate(Graph(4)));
  }

  TEST_CASE("vertex colours") {
    const auto p = path_graph(3);
    const std::vector<int> end_red{1, 0, 0}, other_end_red{0, 0, 1}, mid_red{0, 1, 0};
    CHECK(canonical_certificate(p, end_red) == canonical_certificate(p, other_end_red));
    CHECK(canonical_certificate(p, end_red) != canonical_certificate(p, mid_red));
    CHECK(canonical_certificate(p, end_red) != canonical_certificate(p));
    const std::vector<int> blue{0, 0, 2};
    CHECK(canonical_certificate(p, other_end_red) != canonical_certificate(p, blue));
    const std::vector<int> short_colors{0, 1};
    CHECK_THROWS_AS(canonical_form(p, short_colors), std::invalid_argument);
  }

  TEST_CASE("labeling is a permutation") {
    const auto f = canonical_form(petersen_graph());
    auto sorted = f.labeling;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 10; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
    CHECK_THROWS_AS(canonical_form(Graph(kCanonicalOrderCap + 1)), unsupported_size);
  }
}
