#include "hoffgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "hoffgraph/association.hpp"
#include "hoffgraph/bounds.hpp"
#include "hoffgraph/canonical.hpp"
#include "hoffgraph/graph_io.hpp"
#include "hoffgraph/search.hpp"
#include "hoffgraph/spectra.hpp"

namespace hoffgraph {

namespace {

using json = nlohmann::json;

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool same_grouped(const Spectrum& s, const Spectrum& expected, double tol, double& worst) {
  worst = 0;
  if (s.entries.size() != expected.entries.size()) {
    worst = INFINITY;
    return false;
  }
  bool ok = true;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    ok = ok && s.entries[i].multiplicity == expected.entries[i].multiplicity;
    worst = std::max(worst, std::abs(s.entries[i].value - expected.entries[i].value));
  }
  return ok && worst <= tol;
}

// spectrum(complement(L(K_{2,a+1}))) against {[a]^1, [1]^a, [-1]^a, [-a]^1}.
json criterion_line_graph_spectrum(const VerifyOptions&, bool& passed) {
  passed = true;
  json rows = json::array();
  for (std::size_t a = 2; a <= 10; ++a) {
    const auto g = complement(line_graph(complete_bipartite(2, a + 1)));
    const auto da = static_cast<double>(a);
    Spectrum expected;
    expected.entries = {{da, 1}, {1.0, a}, {-1.0, a}, {-da, 1}};
    double worst = 0;
    const bool ok = same_grouped(spectrum(g), expected, 1e-8, worst);
    passed = passed && ok;
    rows.push_back({{"a", a}, {"order", g.order()}, {"max_error", worst}, {"ok", ok}});
  }
  return {{"instances", rows}};
}

json criterion_coclique_spectrum(const VerifyOptions& opts, bool& passed) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> order(1, 8);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  passed = true;
  double worst = 0;
  std::size_t checked = 0;
  for (int i = 0; i < 50; ++i) {
    const auto g = random_graph(rng, order(rng), density(rng));
    for (std::size_t q : {2u, 3u}) {
      const auto predicted = coclique_extension_spectrum(spectrum(g), g.order(), q).eigenvalues();
      const auto direct = eigenvalues(coclique_extension(g, q));
      const double err = max_abs_diff(predicted, direct);
      worst = std::max(worst, err);
      passed = passed && err <= 1e-8;
      ++checked;
    }
  }
  return {{"pairs_checked", checked}, {"max_error", worst}};
}

json criterion_lower_bound_graphs(const VerifyOptions&, bool& passed) {
  passed = true;
  json rows = json::array();
  for (std::int64_t lambda = 1; lambda <= 3; ++lambda)
    for (std::int64_t a = 2; a <= 6; ++a) {
      const auto w = lower_bound_graph(lambda, a);
      passed = passed && w.certificate.verified;
      rows.push_back({{"lambda", lambda},
                      {"a", a},
                      {"k", lambda * a},
                      {"order", w.graph.order()},
                      {"second_largest", w.certificate.evidence["second_largest"]},
                      {"verified", w.certificate.verified}});
    }
  return {{"instances", rows}};
}

json criterion_fattening(const VerifyOptions&, bool& passed) {
  passed = true;
  json rows = json::array();
  const auto catalog = hoffman_catalog();
  for (const auto& h : catalog) {
    const double floor_value = lambda_min_hoffman(h);
    bool monotone = true, bounded = true;
    double prev = INFINITY, last = 0;
    for (std::size_t p = 1; p <= 30; ++p) {
      last = lambda_min(fatten(h, p));
      monotone = monotone && last <= prev + 1e-9;
      bounded = bounded && last >= floor_value - 1e-9;
      prev = last;
    }
    const double gap = last - floor_value;
    const bool ok = monotone && bounded && gap < 0.1;
    passed = passed && ok;
    rows.push_back({{"hoffman", h.label()},
                    {"slim", h.slim_vertices().size()},
                    {"fat", h.fat_vertices().size()},
                    {"lambda_min_hoffman", floor_value},
                    {"lambda_min_p30", last},
                    {"gap_p30", gap},
                    {"monotone", monotone},
                    {"bounded_below", bounded},
                    {"ok", ok}});
  }
  return {{"catalog_size", catalog.size()}, {"instances", rows}};
}

json criterion_universal_fat(const VerifyOptions& opts, bool& passed) {
  std::mt19937_64 rng(opts.seed + 5);
  std::uniform_int_distribution<std::size_t> order(1, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  double worst = 0, worst_shifted = 0, min_residual = INFINITY;
  const std::size_t count = 120;
  for (std::size_t i = 0; i < count; ++i) {
    const auto h = random_graph(rng, order(rng), density(rng));
    const double lmin = lambda_min_hoffman(attach_universal_fat(h));
    const double lmax_co = lambda_max(complement(h));
    const double residual = std::abs(lmin + lmax_co);
    worst = std::max(worst, residual);
    min_residual = std::min(min_residual, residual);
    worst_shifted = std::max(worst_shifted, std::abs(lmin + 1.0 + lmax_co));
  }
  passed = worst <= 1e-8;
  return {{"graphs", count},
          {"max_abs_lambda_min_q_plus_lambda_max_complement", worst},
          {"min_abs_lambda_min_q_plus_lambda_max_complement", min_residual},
          {"max_abs_lambda_min_q_plus_1_plus_lambda_max_complement", worst_shifted},
          {"note", "S(q(H)) = A(H) - J = -(I + A(complement H)), so lambda_min(q(H)) = -1 - lambda_max(complement H)"}};
}

json criterion_isolated_vertex(const VerifyOptions&, bool& passed) {
  const auto graphs = all_graphs_up_to_isomorphism(6);
  const Rational lambda(2);
  passed = true;
  double largest = -INFINITY;
  std::size_t checked = 0;
  for (const auto& base : graphs) {
    const auto h = disjoint_union(base, Graph(1));
    const auto cert = isolated_vertex_bound_check(lambda, h);
    const double lmin = cert.evidence["lambda_min_qH"].get<double>();
    largest = std::max(largest, lmin);
    passed = passed && cert.verified && lmin < -2.0 - kBoundTolerance;
    ++checked;
  }
  return {{"graphs_on_6_vertices", graphs.size()}, {"instances", checked}, {"max_lambda_min_qH", largest}};
}

json criterion_thresholds(const VerifyOptions&, bool& passed) {
  passed = true;
  json rows = json::array();
  for (const char* text : {"1", "3/2", "2", "5/2", "3"}) {
    const auto lambda = Rational::parse(text);
    const auto th = thresholds(lambda);
    const double target = -lambda.to_double() - kBoundTolerance;
    const bool t_ok = th.t_prime == th.t_prime_closed_form;
    const bool t_min = th.t_prime == 1 || lambda_min_k2t(th.t_prime - 1) >= target;
    const bool m_min = lambda_min_k_tilde(th.m_prime) < target && (th.m_prime == 1 || lambda_min_k_tilde(th.m_prime - 1) >= target);
    passed = passed && t_ok && t_min && m_min;
    rows.push_back({{"lambda", lambda.to_string()},
                    {"t_prime", th.t_prime},
                    {"t_prime_closed_form", th.t_prime_closed_form},
                    {"m_prime", th.m_prime},
                    {"t_minimal", t_min},
                    {"m_minimal", m_min}});
  }
  json quotients = json::array();
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto g = k_tilde(m);
    std::vector<int> adjacent, other;
    for (std::size_t v = 0; v < 2 * m; ++v) (v < m ? adjacent : other).push_back(static_cast<int>(v));
    const auto q = quotient_matrix(g, {other, adjacent, {static_cast<int>(2 * m)}});
    Eigen::Matrix3d displayed;
    const double md = static_cast<double>(m);
    displayed << md - 1, md, 0, md, md - 1, 1, 0, md, 0;
    const bool matrix_ok = q.equitable && (q.matrix - displayed).cwiseAbs().maxCoeff() == 0.0;
    const auto qe = quotient_eigenvalues(q);
    const double err = std::abs(qe.back() - lambda_min(g));
    passed = passed && matrix_ok && err <= 1e-8;
    quotients.push_back({{"m", m}, {"matrix_matches", matrix_ok}, {"quotient_lambda_min", qe.back()}, {"error", err}});
  }
  return {{"thresholds", rows}, {"quotients", quotients}, {"partition_order", "non-adjacent to apex, adjacent to apex, apex"}};
}

// Independent check of the class structure: members pairwise related,
// members of different classes unrelated.
bool classes_consistent(const CliquePartition& part) {
  const auto& g = part.family.graph;
  const auto& cl = part.family.cliques;
  std::vector<std::size_t> owner(cl.size());
  for (std::size_t c = 0; c < part.classes.size(); ++c)
    for (auto i : part.classes[c]) owner[i] = c;
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i + 1; j < cl.size(); ++j)
      if (equiv_nm(g, cl[i], cl[j], part.m) != (owner[i] == owner[j])) return false;
  return true;
}

HoffmanGraph random_hoffman(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> slim_count(1, 4), fat_count(1, 3);
  const std::size_t s = slim_count(rng), f = fat_count(rng);
  Graph g(s + f);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t v = u + 1; v < s; ++v)
      if (coin(rng)) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  std::vector<int> fat;
  std::uniform_int_distribution<std::size_t> pick(0, s - 1);
  for (std::size_t i = 0; i < f; ++i) {
    const int F = static_cast<int>(s + i);
    fat.push_back(F);
    g.add_edge(static_cast<int>(pick(rng)), F);
    for (std::size_t x = 0; x < s; ++x)
      if (coin(rng) && !g.adjacent(static_cast<int>(x), F)) g.add_edge(static_cast<int>(x), F);
  }
  return HoffmanGraph::with_fat(std::move(g), fat);
}

json criterion_equivalence(const VerifyOptions& opts, bool& passed) {
  std::mt19937_64 rng(opts.seed + 8);
  std::uniform_int_distribution<std::size_t> psize(9, 12);
  const std::size_t m = 2, n = 9;
  std::size_t accepted = 0, rejected = 0, nontrivial = 0, multi_class = 0;
  passed = true;
  json failures = json::array();
  auto consider = [&](const Graph& g) {
    PartitionOptions popts;
    popts.certified = true;
    const auto assoc = associate_detailed(g, m, n, popts);
    const auto& part = assoc.partition;
    if (!part.hypotheses_hold) {
      ++rejected;
      return;
    }
    ++accepted;
    if (!part.family.cliques.empty()) ++nontrivial;
    if (part.classes.size() > 1) ++multi_class;
    const bool ok = part.transitive && part.representatives_agree && classes_consistent(part) && validate(assoc.hoffman).ok();
    if (!ok) {
      passed = false;
      failures.push_back(to_edge_list(g));
    }
  };
  for (int i = 0; i < 100; ++i) consider(fatten(random_hoffman(rng), psize(rng)));
  // Two large cliques overlapping in s vertices.
  for (std::size_t s = 0; s <= 9; s += 3)
    for (std::size_t a : {9u, 11u}) {
      Graph g(2 * a - s);
      for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = u + 1; v < a; ++v) g.add_edge(static_cast<int>(u), static_cast<int>(v));
      for (std::size_t u = a - s; u < 2 * a - s; ++u)
        for (std::size_t v = u + 1; v < 2 * a - s; ++v)
          if (!g.adjacent(static_cast<int>(u), static_cast<int>(v))) g.add_edge(static_cast<int>(u), static_cast<int>(v));
      consider(g);
    }
  passed = passed && accepted >= 50;
  return {{"accepted", accepted},
          {"rejected_induced_k_tilde", rejected},
          {"with_large_cliques", nontrivial},
          {"with_several_classes", multi_class},
          {"failures", failures}};
}

json criterion_round_trip(const VerifyOptions&, bool& passed) {
  passed = true;
  json rows = json::array();
  for (const auto& h : hoffman_catalog()) {
    json found = nullptr;
    json attempts = json::array();
    for (std::size_t m = 2; m <= 5 && found.is_null(); ++m) {
      const std::size_t n = (m + 1) * (m + 1);
      for (std::size_t p : {n, n + 4}) {
        const auto assoc = associate(fatten(h, p), m, n);
        const bool hit = contains_hoffman_subgraph(assoc, h);
        attempts.push_back({{"m", m}, {"n", n}, {"p", p}, {"fat_vertices", assoc.fat_vertices().size()}, {"contains", hit}});
        if (hit) {
          found = {{"m", m}, {"n", n}, {"p", p}};
          break;
        }
      }
    }
    passed = passed && !found.is_null();
    rows.push_back({{"hoffman", h.label()}, {"found", found}, {"attempts", attempts}});
  }
  return {{"instances", rows}};
}

json criterion_search(const VerifyOptions& opts, bool& passed) {
  struct Case {
    std::size_t k;
    const char* lambda;
    std::size_t n_max;
    std::size_t expected_v;
    const char* unique_graph;  // graph6 of the expected unique extremal graph, or empty
  };
  const Graph k22 = complete_bipartite(2, 2), k4 = complete_graph(4), k33 = complete_bipartite(3, 3);
  const std::vector<std::pair<Case, const Graph*>> cases = {
      {{2, "0", 8, 4, "K_{2,2}"}, &k22}, {{3, "-1/2", 8, 4, "K_4"}, &k4}, {{2, "1", 10, 6, ""}, nullptr}, {{3, "0", 10, 6, "K_{3,3}"}, &k33}};
  passed = true;
  json rows = json::array();
  for (const auto& [c, expected] : cases) {
    SearchOptions pruned, plain;
    pruned.threads = plain.threads = opts.threads;
    plain.spectral_prune = false;
    const auto lambda = Rational::parse(c.lambda);
    const auto a = v_search(c.k, lambda, c.n_max, pruned);
    const auto b = v_search(c.k, lambda, c.n_max, plain);
    std::vector<std::string> ca, cb;
    for (const auto& e : a.extremal_graphs) ca.push_back(e.certificate);
    for (const auto& e : b.extremal_graphs) cb.push_back(e.certificate);
    bool agree = a.exact_v == b.exact_v && ca == cb && a.complete && b.complete;
    for (const auto& [n, counts] : a.counts) agree = agree && b.counts.contains(n) && b.counts.at(n).passed == counts.passed;
    bool value_ok = a.exact_v && *a.exact_v == c.expected_v;
    bool unique_ok = true;
    if (expected) unique_ok = a.unique() && a.extremal_graphs.front().certificate == canonical_certificate(*expected);
    const bool ok = agree && value_ok && unique_ok;
    passed = passed && ok;
    json ex = json::array();
    for (const auto& e : a.extremal_graphs) ex.push_back(to_graph6(e.graph));
    rows.push_back({{"k", c.k},
                    {"lambda", c.lambda},
                    {"n_max", c.n_max},
                    {"v", a.exact_v ? json(*a.exact_v) : json(nullptr)},
                    {"extremal_graph6", ex},
                    {"expected_unique", c.unique_graph},
                    {"pruned_matches_unpruned", agree},
                    {"ok", ok}});
  }
  return {{"instances", rows}};
}

json criterion_mu_bound(const VerifyOptions&, bool& passed) {
  const auto mu2 = mu_bound(2);
  const auto c2 = known_c2(Rational(2));
  const auto pet = regularity_params(petersen_graph());
  const SrgParams params{static_cast<std::int64_t>(pet.order), static_cast<std::int64_t>(pet.degree.value_or(0)),
                         static_cast<std::int64_t>(pet.a1.value_or(0)), static_cast<std::int64_t>(pet.c2.value_or(0))};
  const bool srg_ok = srg_mu_check(params, 2);
  const std::vector<std::size_t> parts{3, 3, 3};
  const auto cert = amply_regular_check(complete_multipartite(parts), 3);
  const bool multipartite = cert.evidence["complete_multipartite"].get<bool>();
  passed = mu2 == 8 && c2 && *c2 == 8 && srg_ok && multipartite && cert.verified;
  return {{"mu_bound_2", mu2},
          {"C2_2", c2 ? json(*c2) : json(nullptr)},
          {"petersen", {{"v", params.v}, {"k", params.k}, {"a1", params.a1}, {"c2", params.c2}, {"srg_mu_check", srg_ok}}},
          {"K_3_3_3", to_json(cert)}};
}

json criterion_diameter_and_ramsey(const VerifyOptions& opts, bool& passed) {
  // Corpus: named graphs plus every graph on at most 6 vertices.
  std::vector<Graph> corpus = {petersen_graph(), complement(petersen_graph()), cycle_graph(5), cycle_graph(6), prism_graph(3)};
  for (std::size_t k = 1; k <= 4; ++k) corpus.push_back(complete_bipartite(k, k));
  for (std::size_t n = 1; n <= 6; ++n) corpus.push_back(complete_graph(n));
  for (std::size_t t = 2; t <= 3; ++t) {
    const std::vector<std::size_t> parts(3, t);
    corpus.push_back(complete_multipartite(parts));
  }
  for (std::size_t a = 2; a <= 4; ++a) corpus.push_back(complement(line_graph(complete_bipartite(2, a + 1))));
  for (std::size_t n = 2; n <= 6; ++n)
    for (auto& g : all_graphs_up_to_isomorphism(n)) corpus.push_back(std::move(g));

  const std::vector<Rational> lambdas = {Rational(1), Rational(6, 5), Rational(7, 5), Rational(2), Rational(3)};
  std::size_t instances = 0, premise_ok = 0, applicable = 0, applicable_ok = 0, outside = 0, outside_fail = 0;
  bool all_applicable_hold = true;
  for (const auto& g : corpus)
    for (const auto& lambda : lambdas) {
      const auto mr = constant_m(lambda);
      for (std::size_t m = 1; m <= 6; ++m) {
        const auto r = prop13_verifier(g, lambda, m);
        ++instances;
        if (!(r.premise_common_neighbors && r.premise_lambda_min)) continue;
        ++premise_ok;
        const bool concl = r.conclusion_diameter && r.conclusion_gamma2;
        if (r.applicable()) {
          ++applicable;
          applicable_ok += concl ? 1 : 0;
          all_applicable_hold = all_applicable_hold && concl;
        } else {
          ++outside;
          outside_fail += concl ? 0 : 1;
        }
        (void)mr;
      }
    }

  const auto pet = prop13_verifier(petersen_graph(), Rational(2), 1);
  const std::vector<std::size_t> parts{3, 3, 3};
  const auto k333 = prop13_verifier(complete_multipartite(parts), Rational(3), 6);
  const bool given_ok = pet.premise_common_neighbors && pet.premise_lambda_min && pet.conclusion_diameter && pet.conclusion_gamma2 &&
                        k333.premise_common_neighbors && k333.premise_lambda_min && k333.conclusion_diameter && k333.conclusion_gamma2;

  json ramsey = json::array();
  bool ramsey_ok = true;
  const std::vector<std::pair<std::size_t, std::size_t>> pairs = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}};
  for (auto [s, t] : pairs) {
    const auto table = ramsey_lookup(s, t);
    const auto brute = ramsey_bruteforce(s, t, 12, opts.threads);
    const bool ok = table.exact() && brute && static_cast<std::int64_t>(*brute) == table.lower;
    ramsey_ok = ramsey_ok && ok;
    ramsey.push_back({{"s", s}, {"t", t}, {"table", table.lower}, {"brute_force", brute ? json(*brute) : json(nullptr)}, {"ok", ok}});
  }

  passed = all_applicable_hold && applicable > 0 && given_ok && ramsey_ok;
  return {{"corpus_graphs", corpus.size()},
          {"instances", instances},
          {"premises_hold", premise_ok},
          {"applicable", applicable},
          {"applicable_conclusions_hold", applicable_ok},
          {"premises_hold_but_M_not_certified", outside},
          {"of_which_conclusion_fails", outside_fail},
          {"petersen_lambda2_M1", to_json(pet.certificate)},
          {"K_3x3_lambda3_M6", to_json(k333.certificate)},
          {"ramsey", ramsey}};
}

}  // namespace

std::vector<HoffmanGraph> hoffman_catalog() {
  std::vector<HoffmanGraph> out;
  auto add = [&](HoffmanGraph h, const std::string& label) {
    Graph g = h.graph();
    g.set_label(label);
    std::vector<VertexKind> kinds;
    for (std::size_t v = 0; v < h.order(); ++v) kinds.push_back(h.kind(static_cast<int>(v)));
    out.emplace_back(std::move(g), std::move(kinds));
  };
  add(fat_star(1), "h(1)");
  add(fat_star(2), "h(2)");
  add(fat_star(3), "h(3)");
  add(attach_universal_fat(complete_graph(2)), "q(K2)");
  add(attach_universal_fat(complete_graph(3)), "q(K3)");
  add(attach_universal_fat(complete_graph(4)), "q(K4)");
  add(attach_universal_fat(path_graph(3)), "q(P3)");
  add(attach_universal_fat(empty_graph(2)), "q(2K1)");
  add(attach_universal_fat(cycle_graph(4)), "q(C4)");
  {
    // Slim edge 0-1; fat 2 on 0, fat 3 on 1.
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    add(HoffmanGraph::with_fat(std::move(g), {2, 3}), "fat-slim-slim-fat");
  }
  {
    // Slim path 0-1-2; fat 3 on {0,1}, fat 4 on {1,2}.
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    g.add_edge(1, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 4);
    add(HoffmanGraph::with_fat(std::move(g), {3, 4}), "P3 with two edge fats");
  }
  {
    // Slim triangle 0,1,2; one fat per vertex.
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    for (int i = 0; i < 3; ++i) g.add_edge(i, 3 + i);
    add(HoffmanGraph::with_fat(std::move(g), {3, 4, 5}), "K3 with pendant fats");
  }
  return out;
}

std::vector<Graph> all_graphs_up_to_isomorphism(std::size_t n) {
  if (n == 0 || n > 7) throw std::invalid_argument("all_graphs_up_to_isomorphism: need 1 <= n <= 7");
  std::vector<std::pair<int, int>> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(static_cast<int>(u), static_cast<int>(v));
  std::map<std::string, Graph> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
    auto form = canonical_form(g);
    if (!seen.contains(form.certificate)) seen.emplace(form.certificate, relabel(g, form.labeling));
  }
  std::vector<Graph> out;
  for (auto& [cert, g] : seen) out.push_back(std::move(g));
  return out;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "complement of L(K_{2,a+1}) spectrum", "spectra", 1, criterion_line_graph_spectrum},
      {2, "coclique-extension spectrum formula", "spectra", 5, criterion_coclique_spectrum},
      {3, "lower-bound graph certificates", "bounds", 5, criterion_lower_bound_graphs},
      {4, "fattening limit behaviour", "hoffman", 30, criterion_fattening},
      {5, "universal fat vertex identity", "hoffman", 10, criterion_universal_fat},
      {6, "isolated-vertex bound, exhaustive at lambda=2", "bounds", 120, criterion_isolated_vertex},
      {7, "thresholds t' and m'", "bounds", 1, criterion_thresholds},
      {8, "clique relation transitivity", "association", 60, criterion_equivalence},
      {9, "fattening round-trip through association", "association", 120, criterion_round_trip},
      {10, "exact v(k,lambda) by exhaustive search", "search", 300, criterion_search},
      {11, "mu-bound consistency", "bounds", 1, criterion_mu_bound},
      {12, "diameter-2 verifier and Ramsey table", "bounds", 600, criterion_diameter_and_ramsey},
  };
  return list;
}

bool is_known_suite(const std::string& suite) {
  static const std::set<std::string> known = {"all", "spectra", "hoffman", "association", "bounds", "search"};
  return known.contains(suite);
}

std::vector<const Criterion*> criteria_in_suite(const std::string& suite) {
  if (!is_known_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
  std::vector<const Criterion*> out;
  for (const auto& c : criteria())
    if (suite == "all" || c.suite == suite) out.push_back(&c);
  return out;
}

CriterionResult run_criterion(const Criterion& c, const VerifyOptions& opts) {
  CriterionResult r;
  r.id = c.id;
  r.name = c.name;
  r.suite = c.suite;
  r.budget_seconds = c.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    bool passed = false;
    r.evidence = c.run(opts, passed);
    r.passed = passed;
  } catch (const std::exception& e) {
    r.passed = false;
    r.evidence = {{"exception", e.what()}};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.evidence["within_budget"] = r.seconds <= r.budget_seconds;
  r.passed = r.passed && r.seconds <= r.budget_seconds;
  return r;
}

nlohmann::json to_json(const CriterionResult& r) {
  return {{"claim", r.id},
          {"name", r.name},
          {"suite", r.suite},
          {"verified", r.passed},
          {"seconds", r.seconds},
          {"budget_seconds", r.budget_seconds},
          {"evidence", r.evidence}};
}

}  // namespace hoffgraph
