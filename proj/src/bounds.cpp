#include "hoffgraph/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "hoffgraph/canonical.hpp"
#include "hoffgraph/hoffman.hpp"
#include "hoffgraph/search.hpp"
#include "hoffgraph/spectra.hpp"

namespace hoffgraph {

double lambda_min_k2t(std::size_t t) { return lambda_min(complete_bipartite(2, t)); }
double lambda_min_k_tilde(std::size_t m) { return lambda_min(k_tilde(m)); }

Thresholds thresholds(const Rational& lambda) {
  if (lambda < Rational(1)) throw std::invalid_argument("thresholds: need lambda >= 1, got " + lambda.to_string());
  Thresholds th;
  th.lambda = lambda;
  const Rational sq = lambda * lambda;
  th.gamma2_cap = lambda.floor() * sq.floor();
  th.isolated_cap = sq.floor() + 1;
  th.t_prime_closed_form = static_cast<std::size_t>((sq / Rational(2)).floor() + 1);

  const double target = -lambda.to_double() - kBoundTolerance;
  constexpr std::size_t kSearchLimit = 5000;
  for (std::size_t t = 1; t <= kSearchLimit; ++t)
    if (lambda_min_k2t(t) < target) {
      th.t_prime = t;
      break;
    }
  for (std::size_t m = 1; m <= kSearchLimit; ++m)
    if (lambda_min_k_tilde(m) < target) {
      th.m_prime = m;
      break;
    }
  if (th.t_prime == 0 || th.m_prime == 0) throw std::runtime_error("thresholds: search limit reached");
  return th;
}

nlohmann::json to_json(const BoundCertificate& c) {
  return {{"claim", c.claim}, {"parameters", c.parameters}, {"verified", c.verified}, {"evidence", c.evidence}, {"tolerance", c.tolerance}};
}

nlohmann::json to_json(const IntegerInterval& iv) {
  if (iv.exact()) return {{"exact", iv.lower}};
  return {{"lower", iv.lower}, {"upper", iv.upper ? nlohmann::json(*iv.upper) : nlohmann::json(nullptr)}};
}

BoundCertificate isolated_vertex_bound_check(const Rational& lambda, const Graph& h) {
  int isolated = -1;
  for (std::size_t v = 0; v < h.order() && isolated < 0; ++v)
    if (h.degree(static_cast<int>(v)) == 0) isolated = static_cast<int>(v);
  if (isolated < 0) throw std::invalid_argument("isolated_vertex_bound_check: graph has no isolated vertex");

  const double lmin = lambda_min_hoffman(attach_universal_fat(h));
  const auto cap = (lambda * lambda).floor() + 1;
  const auto order = static_cast<std::int64_t>(h.order());
  BoundCertificate c;
  c.claim = "isolated-vertex order bound";
  c.parameters = {{"lambda", lambda.to_string()}, {"order", order}, {"graph6", ""}};
  const bool premise = lmin >= -lambda.to_double() - kBoundTolerance;
  // Contrapositive: order > cap must force λ_min(q(H)) < -λ.
  c.verified = order <= cap || lmin < -lambda.to_double() - kBoundTolerance;
  c.evidence = {{"lambda_min_qH", lmin},
                {"order_cap", cap},
                {"premise_lambda_min_at_least_minus_lambda", premise},
                {"sqrt_order_minus_one", std::sqrt(static_cast<double>(order - 1))}};
  return c;
}

namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max() / 4;

struct RamseyTable {
  std::map<std::pair<std::size_t, std::size_t>, IntegerInterval> memo;

  static std::optional<std::int64_t> known_exact(std::size_t s, std::size_t t) {
    if (s > t) std::swap(s, t);
    if (s == 1) return 1;
    if (s == 2) return static_cast<std::int64_t>(t);
    static const std::map<std::pair<std::size_t, std::size_t>, std::int64_t> table = {
        {{3, 3}, 6}, {{3, 4}, 9}, {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23}, {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}};
    if (auto it = table.find({s, t}); it != table.end()) return it->second;
    return std::nullopt;
  }

  IntegerInterval get(std::size_t s, std::size_t t) {
    if (s > t) std::swap(s, t);
    if (auto v = known_exact(s, t)) return {*v, *v};
    if (auto it = memo.find({s, t}); it != memo.end()) return it->second;
    const auto a = get(s - 1, t), b = get(s, t - 1);
    IntegerInterval iv;
    const auto product = static_cast<long double>(s - 1) * static_cast<long double>(t - 1) + 1;
    iv.lower = std::max({product >= static_cast<long double>(kSaturated) ? kSaturated : static_cast<std::int64_t>(product),
                         a.lower + 1, b.lower + 1});
    iv.lower = std::min(iv.lower, kSaturated);
    if (a.upper && b.upper && *a.upper < kSaturated && *b.upper < kSaturated) {
      std::int64_t up = *a.upper + *b.upper;
      if (a.exact() && b.exact() && *a.upper % 2 == 0 && *b.upper % 2 == 0) --up;
      iv.upper = up;
    }
    memo[{s, t}] = iv;
    return iv;
  }
};

}  // namespace

IntegerInterval ramsey_lookup(std::size_t s, std::size_t t) {
  if (s == 0 || t == 0) throw std::invalid_argument("ramsey_lookup: s and t must be positive");
  thread_local RamseyTable table;
  return table.get(s, t);
}

namespace {

bool has_clique(std::uint64_t candidates, std::size_t size, const std::vector<std::uint64_t>& adj) {
  if (size == 0) return true;
  if (static_cast<std::size_t>(std::popcount(candidates)) < size) return false;
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (has_clique(candidates & adj[static_cast<std::size_t>(v)], size - 1, adj)) return true;
  }
  return false;
}

// Extend each graph by one vertex in every admissible way.
std::vector<Graph> ramsey_next_level(const std::vector<Graph>& level, std::size_t s, std::size_t t, unsigned threads) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, level.size()));
  std::vector<std::map<std::string, Graph>> outputs(workers);
  const std::size_t chunk = (level.size() + workers - 1) / workers;
  auto work = [&](std::size_t w) {
    for (std::size_t i = w * chunk; i < std::min(level.size(), (w + 1) * chunk); ++i) {
      const Graph& g = level[i];
      const std::size_t n = g.order();
      std::vector<std::uint64_t> adj(n, 0), nonadj(n, 0);
      const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
      for (std::size_t v = 0; v < n; ++v) {
        g.neighbors(static_cast<int>(v)).for_each([&](std::size_t u) { adj[v] |= std::uint64_t{1} << u; });
        nonadj[v] = all & ~adj[v] & ~(std::uint64_t{1} << v);
      }
      for (std::uint64_t nb = 0; nb <= all; ++nb) {
        if (has_clique(nb, s - 1, adj)) continue;
        if (has_clique(all & ~nb, t - 1, nonadj)) continue;
        Graph child(n + 1);
        for (auto [a, b] : g.edges()) child.add_edge(a, b);
        for (std::size_t u = 0; u < n; ++u)
          if ((nb >> u) & 1u) child.add_edge(static_cast<int>(u), static_cast<int>(n));
        auto canon = canonical_form(child);
        if (!outputs[w].contains(canon.certificate)) outputs[w].emplace(canon.certificate, relabel(child, canon.labeling));
        if (nb == all) break;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  std::map<std::string, Graph> merged;
  for (auto& o : outputs) merged.merge(o);
  std::vector<Graph> next;
  for (auto& [cert, g] : merged) next.push_back(std::move(g));
  return next;
}

}  // namespace

std::vector<Graph> ramsey_critical_graphs(std::size_t s, std::size_t t, std::size_t order, unsigned threads) {
  if (s == 0 || t == 0) throw std::invalid_argument("ramsey_critical_graphs: s and t must be positive");
  if (order == 0 || s == 1 || t == 1) return {};
  if (order > 40) throw std::invalid_argument("ramsey_critical_graphs: order too large");
  const unsigned workers = resolve_thread_count(threads);
  std::vector<Graph> level{Graph(1)};
  for (std::size_t n = 1; n < order && !level.empty(); ++n) level = ramsey_next_level(level, s, t, workers);
  return level;
}

std::optional<std::size_t> ramsey_bruteforce(std::size_t s, std::size_t t, std::size_t max_order, unsigned threads) {
  if (s == 0 || t == 0) throw std::invalid_argument("ramsey_bruteforce: s and t must be positive");
  if (s == 1 || t == 1) return 1;
  const unsigned workers = resolve_thread_count(threads);
  std::vector<Graph> level{Graph(1)};
  for (std::size_t n = 1; n < max_order; ++n) {
    level = ramsey_next_level(level, s, t, workers);
    if (level.empty()) return n + 1;
  }
  return std::nullopt;
}

IntegerInterval constant_m(const Rational& lambda) {
  const auto th = thresholds(lambda);
  const std::int64_t cube_term = (lambda * lambda * lambda).floor() + 1;
  if (th.t_prime == 1) return {cube_term, cube_term};
  // n' >= (m'+1)^2, and R is increasing in its first argument.
  const auto r = ramsey_lookup((th.m_prime + 1) * (th.m_prime + 1), th.t_prime);
  return {std::max(cube_term, r.lower), std::nullopt};
}

IntegerInterval constant_c1(const Rational& lambda) {
  auto m = constant_m(lambda + Rational(1));
  IntegerInterval c{m.lower - 1, std::nullopt};
  if (m.upper) c.upper = *m.upper - 1;
  return c;
}

std::int64_t mu_bound(std::int64_t lambda) {
  if (lambda < 2) throw std::invalid_argument("mu_bound: need integer lambda >= 2");
  return lambda * lambda * lambda * (2 * lambda - 3);
}

IntegerInterval constant_c3(std::int64_t lambda) {
  const auto mu = mu_bound(lambda);
  const auto m = constant_m(Rational(lambda));
  IntegerInterval c{std::max(m.lower - 1, mu), std::nullopt};
  if (m.upper) c.upper = std::max(*m.upper - 1, mu);
  return c;
}

std::optional<std::int64_t> known_c2(const Rational& lambda) {
  if (lambda == Rational(2)) return 8;
  return std::nullopt;
}

DiameterCheckReport prop13_verifier(const Graph& g, const Rational& lambda, std::size_t m) {
  if (lambda < Rational(1)) throw std::invalid_argument("prop13_verifier: need lambda >= 1");
  DiameterCheckReport r;
  const auto rp = regularity_params(g);
  r.premise_common_neighbors = rp.distance2_pairs == 0 || *rp.distance2_min_common >= m;
  const double lmin = lambda_min(g);
  r.premise_lambda_min = lmin >= -lambda.to_double() - kBoundTolerance;

  const auto m_lambda = constant_m(lambda);
  const auto mm = static_cast<std::int64_t>(m);
  if (m_lambda.exact() && mm >= m_lambda.lower) r.m_sufficient = "yes";
  else if (mm < m_lambda.lower) r.m_sufficient = "no";
  else r.m_sufficient = "unknown";

  const auto cap = lambda.floor() * (lambda * lambda).floor();
  std::size_t max_ecc = 0, max_gamma2 = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto layers = distance_layers(g, static_cast<int>(x));
    max_ecc = std::max(max_ecc, layers.eccentricity());
    if (layers.layers.size() > 2) max_gamma2 = std::max(max_gamma2, layers.layers[2].size());
  }
  r.conclusion_diameter = max_ecc <= 2;
  r.conclusion_gamma2 = static_cast<std::int64_t>(max_gamma2) <= cap;

  auto& c = r.certificate;
  c.claim = "common-neighbour premise forces diameter 2 and bounded second layer";
  c.parameters = {{"lambda", lambda.to_string()}, {"M", m}, {"order", g.order()}};
  c.verified = !(r.applicable() && !(r.conclusion_diameter && r.conclusion_gamma2));
  c.evidence = {{"lambda_min", lmin},
                {"distance2_min_common", rp.distance2_min_common ? nlohmann::json(*rp.distance2_min_common) : nlohmann::json(nullptr)},
                {"premise_common_neighbors", r.premise_common_neighbors},
                {"premise_lambda_min", r.premise_lambda_min},
                {"M_lambda", to_json(m_lambda)},
                {"M_sufficient", r.m_sufficient},
                {"applicable", r.applicable()},
                {"max_component_eccentricity", max_ecc},
                {"max_gamma2", max_gamma2},
                {"gamma2_cap", cap},
                {"conclusion_diameter", r.conclusion_diameter},
                {"conclusion_gamma2", r.conclusion_gamma2}};
  return r;
}

KnownV known_v(std::int64_t k, const Rational& lambda) {
  if (k < 1) throw std::invalid_argument("known_v: k must be at least 1");
  KnownV v;
  const Rational minus_one(-1);
  if (lambda < minus_one) {
    v.kind = KnownV::Kind::none;
    v.note = "every connected regular graph with an edge has second largest eigenvalue at least -1";
    return v;
  }
  if (k == 1) {
    v.kind = KnownV::Kind::exact;
    v.lower = 2;
    v.upper = 2;
    v.note = "K_2 is the only connected 1-regular graph";
    return v;
  }
  if (lambda < Rational(0)) {
    v.kind = KnownV::Kind::exact;
    v.lower = k + 1;
    v.upper = k + 1;
    v.note = "complete graph K_{k+1}";
    return v;
  }
  if (k == 2) {
    // Cycles: λ₂(C_n) = 2cos(2π/n), increasing in n.
    if (lambda >= Rational(2)) {
      v.kind = KnownV::Kind::infinite;
      v.note = "every cycle has second largest eigenvalue below 2";
      return v;
    }
    const double lam = lambda.to_double();
    std::int64_t n = 3;
    while (2.0 * std::cos(2.0 * M_PI / static_cast<double>(n + 1)) <= lam + 1e-12) ++n;
    v.kind = KnownV::Kind::exact;
    v.lower = n;
    v.upper = n;
    v.note = "cycle C_n with 2cos(2pi/n) <= lambda";
    return v;
  }
  if (lambda == Rational(0)) {
    v.kind = KnownV::Kind::exact;
    v.lower = 2 * k;
    v.upper = 2 * k;
    v.note = "complete bipartite K_{k,k}";
    return v;
  }
  const std::int64_t v1_upper = k >= 11 ? 2 * k + 2 : 2 * k + 6;
  if (lambda < Rational(1)) {
    v.kind = KnownV::Kind::interval;
    v.lower = 2 * k;
    v.upper = v1_upper;
    v.note = "between v(k,0) and v(k,1)";
    return v;
  }
  if (lambda == Rational(1)) {
    v.lower = 2 * k + 2;
    v.upper = v1_upper;
    v.kind = k >= 11 ? KnownV::Kind::exact : KnownV::Kind::interval;
    v.note = k >= 11 ? "complement of L(K_{2,k+1})" : "2k+2 <= v(k,1) <= 2k+6";
    return v;
  }
  // λ > 1: finite iff λ < 2√(k-1), i.e. λ² < 4(k-1).
  if (lambda * lambda >= Rational(4 * (k - 1))) {
    v.kind = KnownV::Kind::infinite;
    v.note = "lambda >= 2 sqrt(k-1): infinite families of bipartite Ramanujan graphs";
    return v;
  }
  v.kind = KnownV::Kind::interval;
  v.lower = 2 * k + 2;
  const std::int64_t base = lambda.floor();
  if (base >= 1 && k % base == 0 && k / base >= 2) {
    v.lower = 2 * k + 2 * base;
    v.note = "finite; lower bound from the " + std::to_string(base) + "-coclique extension of co-L(K_{2," + std::to_string(k / base + 1) +
             "}); upper constant not explicit";
  } else {
    v.note = "finite; 2k+2 <= v(k,lambda) <= 2k + C1(lambda) with C1 not explicit";
  }
  return v;
}

nlohmann::json to_json(const KnownV& v) {
  switch (v.kind) {
    case KnownV::Kind::exact: return {{"kind", "exact"}, {"value", v.lower}, {"note", v.note}};
    case KnownV::Kind::interval:
      return {{"kind", "interval"}, {"lower", v.lower}, {"upper", v.upper ? nlohmann::json(*v.upper) : nlohmann::json(nullptr)}, {"note", v.note}};
    case KnownV::Kind::infinite: return {{"kind", "infinite"}, {"note", v.note}};
    case KnownV::Kind::none: return {{"kind", "none"}, {"note", v.note}};
  }
  return {};
}

LowerBoundWitness lower_bound_graph(std::int64_t lambda, std::int64_t a) {
  if (lambda < 1 || a < 2) throw std::invalid_argument("lower_bound_graph: need lambda >= 1 and a >= 2");
  const Graph base = complement(line_graph(complete_bipartite(2, static_cast<std::size_t>(a + 1))));
  Graph g = coclique_extension(base, static_cast<std::size_t>(lambda));
  g.set_label("lower_bound(" + std::to_string(lambda) + "," + std::to_string(a) + ")");

  const auto k = lambda * a;
  const auto rp = regularity_params(g);
  const auto spec = spectrum(g);
  Spectrum expected;
  const double l = static_cast<double>(lambda), la = static_cast<double>(lambda * a);
  const auto au = static_cast<std::size_t>(a);
  expected.entries = {{la, 1}, {l, au}};
  if (lambda > 1) expected.entries.push_back({0.0, static_cast<std::size_t>((lambda - 1) * (2 * a + 2))});
  expected.entries.push_back({-l, au});
  expected.entries.push_back({-la, 1});

  bool spectrum_ok = spec.entries.size() == expected.entries.size();
  double worst = 0.0;
  for (std::size_t i = 0; spectrum_ok && i < spec.entries.size(); ++i) {
    spectrum_ok = spec.entries[i].multiplicity == expected.entries[i].multiplicity;
    worst = std::max(worst, std::abs(spec.entries[i].value - expected.entries[i].value));
  }
  spectrum_ok = spectrum_ok && worst <= 1e-8;
  const double l2 = second_largest(g);
  const bool regular_ok = rp.is_regular && rp.degree && static_cast<std::int64_t>(*rp.degree) == k;
  const bool order_ok = static_cast<std::int64_t>(g.order()) == 2 * k + 2 * lambda;
  const bool l2_ok = std::abs(l2 - l) <= 1e-8;
  const bool connected = is_connected(g);

  BoundCertificate c;
  c.claim = "coclique-extension lower bound v(k,lambda) >= 2k+2lambda";
  c.parameters = {{"lambda", lambda}, {"a", a}};
  c.tolerance = 1e-8;
  c.verified = spectrum_ok && regular_ok && order_ok && l2_ok && connected;
  c.evidence = {{"degree", rp.degree ? nlohmann::json(*rp.degree) : nlohmann::json(nullptr)},
                {"k", k},
                {"order", g.order()},
                {"order_minus_2k", static_cast<std::int64_t>(g.order()) - 2 * k},
                {"second_largest", l2},
                {"connected", connected},
                {"spectrum", to_json(spec)},
                {"expected_spectrum", to_json(expected)},
                {"max_eigenvalue_error", worst},
                {"spectrum_matches", spectrum_ok}};
  return {std::move(g), std::move(c)};
}

BoundCertificate co_edge_bound_check(const Graph& g, const Rational& lambda) {
  if (!is_connected(g)) throw std::invalid_argument("co_edge_bound_check: graph is not connected");
  const auto rp = regularity_params(g);
  BoundCertificate c;
  c.claim = "co-edge-regular: large c2 forces v-k-1 <= (lambda-1)^2/4 + 1";
  c.parameters = {{"lambda", lambda.to_string()}};
  if (rp.is_regular && rp.nonadjacent_pairs == 0) {
    c.verified = true;
    c.evidence = {{"vacuous", true}, {"reason", "complete graph: no non-adjacent pairs"}};
    return c;
  }
  if (!rp.co_edge_regular()) throw std::invalid_argument("co_edge_bound_check: graph is not co-edge-regular");
  const auto v = static_cast<std::int64_t>(rp.order), k = static_cast<std::int64_t>(*rp.degree),
             c2 = static_cast<std::int64_t>(*rp.co_edge_c2);
  const auto l = v - k - 1;
  const Rational bound = (lambda - Rational(1)) * (lambda - Rational(1)) / Rational(4) + Rational(1);
  const bool bound_holds = Rational(l) <= bound;
  const double lmin = lambda_min(g);
  const bool premise = lmin >= -lambda.to_double() - kBoundTolerance;
  const auto c2_const = known_c2(lambda);
  const bool triggered = premise && c2_const && c2 > *c2_const;
  c.verified = !(triggered && !bound_holds);
  c.evidence = {{"v", v},
                {"k", k},
                {"c2", c2},
                {"lambda_min", lmin},
                {"premise_lambda_min", premise},
                {"v_minus_k_minus_1", l},
                {"bound", bound.to_string()},
                {"bound_value", bound.to_double()},
                {"bound_holds", bound_holds},
                {"C2", c2_const ? nlohmann::json(*c2_const) : nlohmann::json("not explicit")},
                {"c2_exceeds_C2", c2_const ? nlohmann::json(c2 > *c2_const) : nlohmann::json(nullptr)}};
  return c;
}

bool srg_mu_check(const SrgParams& params, std::int64_t lambda) { return params.c2 <= mu_bound(lambda); }

BoundCertificate amply_regular_check(const Graph& g, std::int64_t lambda) {
  const auto rp = regularity_params(g);
  if (!rp.amply_regular()) throw std::invalid_argument("amply_regular_check: graph is not amply regular");
  const auto mu = mu_bound(lambda);
  const auto c3 = constant_c3(lambda);
  const double lmin = lambda_min(g);
  const bool premise = lmin >= -static_cast<double>(lambda) - kBoundTolerance;
  const bool multipartite = is_complete_multipartite(g);
  const std::int64_t c2 = rp.c2 ? static_cast<std::int64_t>(*rp.c2) : 0;

  std::string status;
  if (!premise) status = "inapplicable";
  else if (multipartite) status = "complete multipartite";
  else if (c2 <= c3.lower) status = "c2 within C3";
  else status = "undetermined";

  BoundCertificate c;
  c.claim = "amply regular: c2 <= C3(lambda) or complete multipartite";
  c.parameters = {{"lambda", lambda}};
  c.verified = status != "undetermined" || !c3.upper || c2 <= *c3.upper;
  c.evidence = {{"v", rp.order},
                {"k", rp.degree ? nlohmann::json(*rp.degree) : nlohmann::json(nullptr)},
                {"a1", rp.a1 ? nlohmann::json(*rp.a1) : nlohmann::json(nullptr)},
                {"c2", rp.c2 ? nlohmann::json(*rp.c2) : nlohmann::json(nullptr)},
                {"lambda_min", lmin},
                {"premise_lambda_min", premise},
                {"complete_multipartite", multipartite},
                {"mu_bound", mu},
                {"C3", to_json(c3)},
                {"status", status}};
  return c;
}

}  // namespace hoffgraph
