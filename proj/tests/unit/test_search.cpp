#include <doctest.h>

#include <set>

#include "hoffgraph/bounds.hpp"
#include "hoffgraph/canonical.hpp"
#include "hoffgraph/errors.hpp"
#include "hoffgraph/search.hpp"
#include "oracles.hpp"

using namespace hoffgraph;

namespace {

// Isomorphism classes of connected k-regular graphs on n vertices, by
// scanning every edge subset.
std::set<std::string> regular_classes_oracle(std::size_t k, std::size_t n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < static_cast<int>(n); ++u)
    for (int v = u + 1; v < static_cast<int>(n); ++v) pairs.push_back({u, v});
  std::set<std::string> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k * n / 2) continue;
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1u) g.add_edge(pairs[b].first, pairs[b].second);
    const auto d = g.degrees();
    if (std::any_of(d.begin(), d.end(), [&](std::size_t x) { return x != k; }) || !is_connected(g)) continue;
    out.insert(oracle::min_permutation_code(g));
  }
  return out;
}

SearchOptions with_threads(unsigned t, bool prune = true) {
  SearchOptions o;
  o.threads = t;
  o.spectral_prune = prune;
  return o;
}

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("small enumerations") {
    const auto c5 = enum_connected_regular(2, 5);
    REQUIRE(c5.graphs.size() == 1);
    CHECK(oracle::isomorphic(c5.graphs.front(), cycle_graph(5)));
    const auto k4 = enum_connected_regular(3, 4);
    REQUIRE(k4.graphs.size() == 1);
    CHECK(k4.graphs.front() == complete_graph(4));

    for (const auto& [k, n] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 6}, {2, 6}, {4, 6}, {4, 7}, {3, 4}}) {
      const auto e = enum_connected_regular(k, n);
      std::set<std::string> codes;
      for (const auto& g : e.graphs) codes.insert(oracle::min_permutation_code(g));
      CHECK(codes.size() == e.graphs.size());
      CHECK(codes == regular_classes_oracle(k, n));
    }

    CHECK_FALSE(enum_connected_regular(3, 5).reason.empty());
    CHECK_FALSE(enum_connected_regular(4, 4).reason.empty());
    CHECK(enum_connected_regular(3, 5).graphs.empty());
    CHECK_THROWS_AS(enum_connected_regular(6, 10), unsupported_size);
    CHECK_THROWS_AS(enum_connected_regular(3, 18), unsupported_size);
  }

  TEST_CASE("published counts of connected regular graphs") {
    const std::vector<std::size_t> cubic{1, 2, 5, 19, 85};  // n = 4, 6, ..., 12
    for (std::size_t i = 0; i < cubic.size(); ++i) CHECK(enum_connected_regular(3, 4 + 2 * i).graphs.size() == cubic[i]);
    const std::vector<std::size_t> quartic{1, 1, 2, 6, 16};  // n = 5, ..., 9
    for (std::size_t i = 0; i < quartic.size(); ++i) CHECK(enum_connected_regular(4, 5 + i).graphs.size() == quartic[i]);
  }

  TEST_CASE("spectral pruning") {
    const auto pet = petersen_graph();
    const auto all = VertexSet::full(10);
    CHECK(spectral_prune(pet, all, 1.0));
    CHECK_FALSE(spectral_prune(pet, all, 0.9));
    CHECK(spectral_prune(pet, VertexSet(10), 0.0));

    // The cut never removes a graph the filter would keep.
    const auto pruned = enum_connected_regular(3, 10, with_threads(0, true), 1.0);
    const auto plain = enum_connected_regular(3, 10, with_threads(0, false), 1.0);
    std::set<std::string> kept_plain;
    for (const auto& g : plain.graphs)
      if (second_largest(g) <= 1.0 + kSearchTolerance) kept_plain.insert(canonical_certificate(g));
    std::set<std::string> kept_pruned;
    for (const auto& g : pruned.graphs)
      if (second_largest(g) <= 1.0 + kSearchTolerance) kept_pruned.insert(canonical_certificate(g));
    CHECK(kept_plain == kept_pruned);
    CHECK(pruned.spectral_cuts > 0);
    CHECK(plain.spectral_cuts == 0);
  }

  TEST_CASE("exact second-eigenvalue test") {
    const auto pet = petersen_graph();
    CHECK(second_largest_at_most_exact(pet, Rational(1)));
    CHECK_FALSE(second_largest_at_most_exact(pet, Rational(99, 100)));
    CHECK(eigenvalues_above_exact(pet, Rational(1)) == 1);
    CHECK(eigenvalues_above_exact(pet, Rational(0)) == 6);
    CHECK(eigenvalues_above_exact(pet, Rational(-2)) == 6);
    CHECK(eigenvalues_above_exact(pet, Rational(-3)) == 10);
    const auto c5 = cycle_graph(5);  // λ₂ = 0.6180...
    CHECK_FALSE(second_largest_at_most_exact(c5, Rational(618, 1000)));
    CHECK(second_largest_at_most_exact(c5, Rational(619, 1000)));
    CHECK_THROWS_AS(eigenvalues_above_exact(Graph(25), Rational(0)), unsupported_size);

    std::mt19937_64 rng(51);
    for (int i = 0; i < 40; ++i) {
      const auto g = oracle::random_graph(rng, 2 + i % 12, 0.5);
      const auto ev = oracle::reference_eigenvalues(g);
      const Rational lambda(i % 7 - 3, 2);
      std::size_t above = 0;
      for (double x : ev)
        if (x > lambda.to_double() + 1e-7) ++above;
      bool near = false;
      for (double x : ev) near = near || std::abs(x - lambda.to_double()) <= 1e-7;
      if (!near) CHECK(eigenvalues_above_exact(g, lambda) == above);
    }
  }

  TEST_CASE("v search") {
    const auto r = v_search(3, Rational(1), 12);
    CHECK(r.complete);
    CHECK(r.exact_v == std::optional<std::size_t>(10));
    REQUIRE(r.unique());
    CHECK(r.extremal_graphs.front().certificate == canonical_certificate(petersen_graph()));
    CHECK(r.extremal_graphs.front().boundary);
    CHECK(r.extremal_graphs.front().exact_confirmed == std::optional<bool>(true));
    CHECK(r.counts.at(12).passed == 0);

    CHECK(v_search(3, Rational(0), 10).exact_v == std::optional<std::size_t>(6));
    CHECK(v_search(3, Rational(-1), 10).exact_v == std::optional<std::size_t>(4));
    CHECK(v_search(2, Rational(1), 10).exact_v == std::optional<std::size_t>(6));
    CHECK(v_search(4, Rational(0), 10).exact_v == std::optional<std::size_t>(8));

    // Agrees with the known values.
    for (const auto& [k, l] : std::vector<std::pair<std::int64_t, Rational>>{{3, Rational(-1)}, {3, Rational(0)}, {2, Rational(1)}, {4, Rational(0)}}) {
      const auto known = known_v(k, l);
      const auto found = v_search(static_cast<std::size_t>(k), l, 10).exact_v;
      REQUIRE(found);
      CHECK(known.lower <= static_cast<std::int64_t>(*found));
      if (known.upper) CHECK(static_cast<std::int64_t>(*found) <= *known.upper);
    }

    // Non-decreasing in λ.
    std::size_t previous = 0;
    for (const auto& l : {Rational(-1), Rational(0), Rational(1, 2), Rational(1)}) {
      const auto v = v_search(3, l, 12).exact_v;
      REQUIRE(v);
      CHECK(*v >= previous);
      previous = *v;
    }

    // The coclique lower-bound witness is among the graphs found.
    const auto witness = lower_bound_graph(1, 3);
    CHECK(static_cast<std::int64_t>(previous) >= static_cast<std::int64_t>(witness.graph.order()));
  }

  TEST_CASE("pruned and unpruned searches agree") {
    const auto a = v_search(3, Rational(1), 10, with_threads(0, true));
    const auto b = v_search(3, Rational(1), 10, with_threads(0, false));
    CHECK(a.exact_v == b.exact_v);
    REQUIRE(a.extremal_graphs.size() == b.extremal_graphs.size());
    for (std::size_t i = 0; i < a.extremal_graphs.size(); ++i) CHECK(a.extremal_graphs[i].certificate == b.extremal_graphs[i].certificate);
    for (const auto& [n, c] : a.counts) CHECK(c.passed == b.counts.at(n).passed);
  }

  TEST_CASE("results do not depend on the thread count") {
    const auto one = to_json(v_search(3, Rational(1), 12, with_threads(1)));
    const auto four = to_json(v_search(3, Rational(1), 12, with_threads(4)));
    CHECK(one == four);
    CHECK(resolve_thread_count(3) == 3);
    CHECK(resolve_thread_count(0) >= 1);
  }

  TEST_CASE("incomplete search is flagged") {
    SearchOptions tight;
    tight.order_cap = 8;
    const auto r = v_search(3, Rational(1), 12, tight);
    CHECK_FALSE(r.complete);
    CHECK_FALSE(r.notes.empty());
  }
}
