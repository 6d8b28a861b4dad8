#include <doctest.h>

#include <cmath>

#include "hoffgraph/spectra.hpp"
#include "hoffgraph/symmetric_eigen.hpp"
#include "oracles.hpp"

using namespace hoffgraph;

namespace {

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::vector<double> eig(const Eigen::MatrixXd& m) {
  const Eigen::VectorXd v = eig_symmetric(m);
  return {v.data(), v.data() + v.size()};
}

Spectrum make(std::vector<SpectrumEntry> entries) {
  Spectrum s;
  s.entries = std::move(entries);
  return s;
}

void check_same(const Spectrum& got, const Spectrum& want, double tol = 1e-8) {
  REQUIRE(got.entries.size() == want.entries.size());
  for (std::size_t i = 0; i < got.entries.size(); ++i) {
    CHECK(std::abs(got.entries[i].value - want.entries[i].value) <= tol);
    CHECK(got.entries[i].multiplicity == want.entries[i].multiplicity);
  }
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("symmetric eigensolver against Eigen") {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> normal;
    for (int n = 1; n <= 40; n += 3) {
      Eigen::MatrixXd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = normal(rng);
      const auto ours = eig(m);
      const auto ref = oracle::reference_eigenvalues(m);
      const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
      CHECK(max_diff(ours, ref) <= 1e-10 * (1 + norm));
    }
    for (int i = 0; i < 30; ++i) {
      const auto g = oracle::random_graph(rng, 1 + i % 25, 0.4);
      CHECK(max_diff(eigenvalues(g), oracle::reference_eigenvalues(g)) <= 1e-10 * (1 + 25));
    }
  }

  TEST_CASE("eigensolver edge cases") {
    CHECK(eig(Eigen::MatrixXd::Zero(4, 4)) == std::vector<double>(4, 0.0));
    Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
    asym(0, 1) = 1;
    CHECK_THROWS_AS(eig_symmetric(asym), std::invalid_argument);
    Eigen::MatrixXd rect(2, 3);
    CHECK_THROWS_AS(eig_symmetric(rect), std::invalid_argument);
    Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
    bad(0, 0) = NAN;
    CHECK_THROWS_AS(eig_symmetric(bad), std::invalid_argument);
    Eigen::MatrixXd tiny = Eigen::MatrixXd::Zero(2, 2);
    tiny(0, 1) = 1;
    tiny(1, 0) = 1 + 1e-14;
    CHECK_NOTHROW(eig_symmetric(tiny));
  }

  TEST_CASE("closed-form extremes") {
    for (std::size_t n = 2; n <= 12; ++n) CHECK(lambda_max(complete_bipartite(1, n - 1)) == doctest::Approx(std::sqrt(n - 1.0)).epsilon(1e-12));
    for (std::size_t t = 1; t <= 12; ++t) CHECK(lambda_min(complete_bipartite(2, t)) == doctest::Approx(-std::sqrt(2.0 * t)).epsilon(1e-12));
  }

  TEST_CASE("grouped spectra") {
    check_same(spectrum(complement(line_graph(complete_bipartite(2, 4)))), make({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}));
    check_same(spectrum(complete_graph(6)), make({{5, 1}, {-1, 5}}));
    check_same(spectrum(cycle_graph(6)), make({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}));
    check_same(spectrum(petersen_graph()), make({{3, 1}, {1, 5}, {-2, 4}}));
    check_same(spectrum(empty_graph(5)), make({{0, 5}}));
    CHECK(second_largest(petersen_graph()) == doctest::Approx(1.0));

    const auto j = to_json(spectrum(cycle_graph(4)));
    CHECK(j["eigenvalues"].size() == 3);
    CHECK(j["eigenvalues"][0]["value"] == doctest::Approx(2.0));
    CHECK(j["eigenvalues"][1]["multiplicity"] == 2);
    CHECK(j["tolerance"] == doctest::Approx(1e-8));
  }

  TEST_CASE("trace, squared sum and complement relations") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 40; ++i) {
      const auto g = oracle::random_graph(rng, 1 + i % 15, 0.5);
      const auto ev = eigenvalues(g);
      double sum = 0, sq = 0;
      for (double x : ev) {
        sum += x;
        sq += x * x;
      }
      CHECK(std::abs(sum) <= 1e-8);
      CHECK(sq == doctest::Approx(2.0 * static_cast<double>(g.edge_count())).epsilon(1e-6));
    }
    // Regular graphs: eigenvalues orthogonal to the all-ones vector map to -1-x.
    for (const auto& g : {petersen_graph(), cycle_graph(7), complete_bipartite(3, 3), prism_graph(4), complement(line_graph(complete_bipartite(2, 5)))}) {
      const auto k = static_cast<double>(g.degree(0));
      const auto v = static_cast<double>(g.order());
      auto ev = eigenvalues(g);
      std::vector<double> expected{v - 1 - k};
      for (std::size_t i = 1; i < ev.size(); ++i) expected.push_back(-1 - ev[i]);
      std::sort(expected.rbegin(), expected.rend());
      CHECK(max_diff(eigenvalues(complement(g)), expected) <= 1e-8);
    }
  }

  TEST_CASE("coclique extension spectrum") {
    const auto base = spectrum(complement(line_graph(complete_bipartite(2, 4))));
    check_same(coclique_extension_spectrum(base, 8, 1), base);
    check_same(coclique_extension_spectrum(base, 8, 2), make({{6, 1}, {2, 3}, {0, 8}, {-2, 3}, {-6, 1}}));
    CHECK_THROWS_AS(coclique_extension_spectrum(base, 9, 2), std::invalid_argument);
    // Merge into an existing zero group.
    check_same(coclique_extension_spectrum(spectrum(cycle_graph(4)), 4, 3), make({{6, 1}, {0, 10}, {-6, 1}}));

    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
      const auto g = oracle::random_graph(rng, 1 + i % 8, 0.5);
      for (std::size_t q = 1; q <= 3; ++q) {
        const auto predicted = coclique_extension_spectrum(spectrum(g), g.order(), q).eigenvalues();
        CHECK(max_diff(predicted, oracle::reference_eigenvalues(coclique_extension(g, q))) <= 1e-8);
      }
    }
  }

  TEST_CASE("quotient matrices") {
    const auto reg = quotient_matrix(petersen_graph(), {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}});
    CHECK(reg.equitable);
    CHECK(reg.matrix(0, 0) == 3);

    const auto bi = quotient_matrix(complete_bipartite(2, 5), {{0, 1}, {2, 3, 4, 5, 6}});
    CHECK(bi.equitable);
    CHECK(bi.matrix(0, 0) == 0);
    CHECK(bi.matrix(0, 1) == 5);
    CHECK(bi.matrix(1, 0) == 2);
    const auto qe = quotient_eigenvalues(bi);
    CHECK(qe.front() == doctest::Approx(std::sqrt(10.0)));
    CHECK(qe.back() == doctest::Approx(-std::sqrt(10.0)));

    const auto path = quotient_matrix(path_graph(3), {{0, 1}, {2}});
    CHECK_FALSE(path.equitable);
    CHECK(path.matrix(0, 0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(quotient_matrix(path_graph(3), {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(quotient_matrix(path_graph(3), {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(quotient_matrix(path_graph(3), {{0, 1, 2}, {}}), std::invalid_argument);

    // k_tilde(m): parts (non-adjacent to apex, adjacent to apex, apex).
    for (std::size_t m = 1; m <= 6; ++m) {
      std::vector<int> adj, non;
      for (std::size_t v = 0; v < 2 * m; ++v) (v < m ? adj : non).push_back(static_cast<int>(v));
      const auto q = quotient_matrix(k_tilde(m), {non, adj, {static_cast<int>(2 * m)}});
      const double md = static_cast<double>(m);
      Eigen::Matrix3d displayed;
      displayed << md - 1, md, 0, md, md - 1, 1, 0, md, 0;
      CHECK(q.equitable);
      CHECK((q.matrix - displayed).cwiseAbs().maxCoeff() == 0.0);
      CHECK(quotient_eigenvalues(q).back() == doctest::Approx(lambda_min(k_tilde(m))).epsilon(1e-10));
    }
  }

  TEST_CASE("equitable quotient eigenvalues lie in the spectrum") {
    // Orbit-like partitions by degree are equitable for these graphs.
    const std::vector<std::pair<Graph, std::vector<std::vector<int>>>> cases = {
        {k_tilde(3), {{0, 1, 2}, {3, 4, 5}, {6}}},
        {complete_bipartite(3, 4), {{0, 1, 2}, {3, 4, 5, 6}}},
        {petersen_graph(), {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}},
        {coclique_extension(cycle_graph(5), 3), {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}}},
    };
    for (const auto& [g, parts] : cases) {
      const auto q = quotient_matrix(g, parts);
      REQUIRE(q.equitable);
      const auto ev = eigenvalues(g);
      for (double x : quotient_eigenvalues(q)) {
        double nearest = INFINITY;
        for (double y : ev) nearest = std::min(nearest, std::abs(x - y));
        CHECK(nearest <= 1e-7);
      }
    }
  }

  TEST_CASE("general eigenvalues of non-symmetric matrices") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int n = 1; n <= 7; ++n) {
      Eigen::MatrixXd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = u(rng);
      auto ours = general_eigenvalues(m);
      Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
      for (auto z : ours) {
        double nearest = INFINITY;
        for (Eigen::Index i = 0; i < n; ++i) nearest = std::min(nearest, std::abs(z - es.eigenvalues()(i)));
        CHECK(nearest <= 1e-8);
      }
    }
    Eigen::Matrix2d rot;
    rot << 0, -1, 1, 0;
    const auto poly = characteristic_polynomial(rot);
    REQUIRE(poly.size() == 3);
    CHECK(poly[0] == doctest::Approx(1.0));
    CHECK(poly[1] == doctest::Approx(0.0));
    CHECK(poly[2] == doctest::Approx(1.0));
  }

  TEST_CASE("interlacing") {
    const auto pet = petersen_graph();
    const std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(interlacing_check(pet, all));
    const auto p3 = std::vector<int>{0, 1, 2};
    CHECK(interlacing_check(pet, p3));
    CHECK(second_largest(pet) >= second_largest(pet.induced(p3)));
    CHECK_THROWS_AS(interlacing_check(pet, std::vector<int>{}), std::invalid_argument);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
      const auto g = oracle::random_graph(rng, 2 + i % 9, 0.5);
      std::vector<int> subset;
      std::bernoulli_distribution coin(0.6);
      for (int v = 0; v < static_cast<int>(g.order()); ++v)
        if (coin(rng)) subset.push_back(v);
      if (subset.empty()) subset.push_back(0);
      CHECK(interlacing_check(g, subset));
    }
  }
}
