#include "hoffgraph/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "hoffgraph/canonical.hpp"
#include "hoffgraph/errors.hpp"
#include "hoffgraph/graph_io.hpp"

namespace hoffgraph {

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HOFFGRAPH_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

bool spectral_prune(const Graph& partial, const VertexSet& saturated, double lambda) {
  const auto members = saturated.to_vector();
  if (members.size() < 2) return true;
  const auto ev = eigenvalues(partial.induced(members));
  return ev[1] <= lambda + kSearchTolerance;
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Coefficients c_0..c_n of det(xI - A) by integer Faddeev-LeVerrier; every
// division is exact.
std::vector<BigInt> integer_characteristic_polynomial(const Graph& g) {
  const std::size_t n = g.order();
  using Mat = std::vector<std::vector<BigInt>>;
  Mat a(n, std::vector<BigInt>(n, 0));
  for (auto [u, v] : g.edges()) a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  std::vector<BigInt> c(n + 1, 0);
  c[n] = 1;
  Mat m(n, std::vector<BigInt>(n, 0));
  auto multiply = [&](const Mat& x, const Mat& y) {
    Mat z(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (x[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][l] * y[l][j];
      }
    return z;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    m = multiply(a, m);
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    const Mat am = multiply(a, m);
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return c;
}

}  // namespace

std::size_t eigenvalues_above_exact(const Graph& g, const Rational& lambda) {
  if (g.order() > 24) throw unsupported_size("exact eigenvalue count limited to order 24");
  const auto c = integer_characteristic_polynomial(g);
  const std::size_t n = g.order();
  // r(z) = b^n p((z + a) / b); its positive roots are the eigenvalues above a/b.
  const BigInt a = lambda.num(), b = lambda.den();
  std::vector<BigInt> r(n + 1, 0);
  std::vector<BigInt> binom(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    // (z + a)^i = Σ_j C(i, j) a^(i-j) z^j
    binom.assign(n + 1, 0);
    binom[0] = 1;
    for (std::size_t row = 1; row <= i; ++row)
      for (std::size_t j = row; j > 0; --j) binom[j] += binom[j - 1];
    BigInt scale = c[i];
    for (std::size_t e = 0; e < n - i; ++e) scale *= b;
    BigInt apow = 1;
    for (std::size_t j = i + 1; j-- > 0;) {
      r[j] += scale * binom[j] * apow;
      apow *= a;
    }
  }
  std::size_t variations = 0;
  int last_sign = 0;
  for (const auto& coef : r) {
    const int s = coef.sign();
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++variations;
    last_sign = s;
  }
  return variations;
}

bool second_largest_at_most_exact(const Graph& g, const Rational& lambda) { return eigenvalues_above_exact(g, lambda) <= 1; }

namespace {

struct PartialState {
  Graph graph;
  VertexSet saturated;
};

struct LevelOutput {
  std::map<std::string, PartialState> children;
  std::size_t expanded = 0;
  std::size_t cuts = 0;
};

std::vector<int> colours_of(const VertexSet& saturated) {
  std::vector<int> c(saturated.size(), 0);
  saturated.for_each([&](std::size_t v) { c[v] = 1; });
  return c;
}

// Deficits can still be met: every unsaturated vertex needs at least as
// many eligible partners as it lacks edges.
bool completable(const Graph& g, const VertexSet& saturated, std::size_t k) {
  const auto n = g.order();
  VertexSet open(n);
  for (std::size_t v = 0; v < n; ++v)
    if (!saturated.test(v) && g.degree(static_cast<int>(v)) < k) open.set(v);
  for (std::size_t v = 0; v < n; ++v) {
    if (saturated.test(v)) continue;
    const auto deficit = k - g.degree(static_cast<int>(v));
    if (deficit == 0) continue;
    VertexSet partners = open - g.neighbors(static_cast<int>(v));
    partners.reset(v);
    if (partners.count() < deficit) return false;
  }
  return true;
}

void expand_state(const PartialState& state, std::size_t k, const SearchOptions& opts, std::optional<double> lambda_cut,
                  LevelOutput& out) {
  const Graph& g = state.graph;
  const auto n = g.order();
  ++out.expanded;

  // Next vertex to saturate: adjacent to the saturated set when it is
  // nonempty, then largest degree, then smallest id. State graphs are
  // canonical, so this choice depends only on the isomorphism class.
  VertexSet frontier(n);
  if (state.saturated.any()) {
    state.saturated.for_each([&](std::size_t s) { frontier |= g.neighbors(static_cast<int>(s)); });
    frontier -= state.saturated;
  } else {
    frontier = VertexSet::full(n);
  }
  int v = -1;
  frontier.for_each([&](std::size_t u) {
    if (v < 0 || g.degree(static_cast<int>(u)) > g.degree(v)) v = static_cast<int>(u);
  });
  if (v < 0) return;

  const auto need = k - g.degree(v);
  std::vector<int> pool;
  for (std::size_t u = 0; u < n; ++u)
    if (!state.saturated.test(u) && static_cast<int>(u) != v && g.degree(static_cast<int>(u)) < k && !g.adjacent(v, static_cast<int>(u)))
      pool.push_back(static_cast<int>(u));
  if (pool.size() < need) return;

  VertexSet next_saturated = state.saturated;
  next_saturated.set(static_cast<std::size_t>(v));
  const bool last = next_saturated.count() == n;

  std::vector<std::size_t> pick(need);
  for (std::size_t i = 0; i < need; ++i) pick[i] = i;
  while (true) {
    Graph child = g;
    for (auto i : pick) child.add_edge(v, pool[i]);

    bool keep = true;
    if (!last) {
      VertexSet reach(n);
      next_saturated.for_each([&](std::size_t s) { reach |= child.neighbors(static_cast<int>(s)); });
      reach -= next_saturated;
      keep = reach.any() && completable(child, next_saturated, k);
    }
    if (keep && opts.spectral_prune && lambda_cut && !spectral_prune(child, next_saturated, *lambda_cut)) {
      keep = false;
      ++out.cuts;
    }
    if (keep) {
      const auto colours = colours_of(next_saturated);
      const auto canon = canonical_form(child, colours);
      if (!out.children.contains(canon.certificate)) {
        VertexSet relabeled(n);
        next_saturated.for_each([&](std::size_t s) { relabeled.set(static_cast<std::size_t>(canon.labeling[s])); });
        out.children.emplace(canon.certificate, PartialState{relabel(child, canon.labeling), std::move(relabeled)});
      }
    }

    // Next combination of `need` indices out of pool.size().
    std::size_t i = need;
    while (i > 0 && pick[i - 1] == pool.size() - need + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

RegularEnumeration enum_connected_regular(std::size_t k, std::size_t n, SearchOptions opts, std::optional<double> lambda_cut) {
  RegularEnumeration result;
  if (k > opts.degree_cap || n > opts.order_cap)
    throw unsupported_size("enum_connected_regular: (k, n) = (" + std::to_string(k) + ", " + std::to_string(n) +
                           ") exceeds caps (" + std::to_string(opts.degree_cap) + ", " + std::to_string(opts.order_cap) + ")");
  if (n == 0) {
    result.reason = "order must be positive";
    return result;
  }
  if (k >= n) {
    result.reason = "degree must be smaller than order";
    return result;
  }
  if ((k * n) % 2 != 0) {
    result.reason = "k*n is odd";
    return result;
  }
  if (k == 0) {
    if (n == 1) result.graphs.push_back(Graph(1, "K_1"));
    else result.reason = "0-regular graphs on more than one vertex are disconnected";
    return result;
  }

  const unsigned threads = resolve_thread_count(opts.threads);
  std::vector<PartialState> level{PartialState{Graph(n), VertexSet(n)}};
  for (std::size_t depth = 0; depth < n && !level.empty(); ++depth) {
    const std::size_t workers = std::min<std::size_t>(threads, level.size());
    std::vector<LevelOutput> outputs(workers);
    const std::size_t chunk = (level.size() + workers - 1) / workers;
    auto work = [&](std::size_t w) {
      const std::size_t lo = w * chunk, hi = std::min(level.size(), lo + chunk);
      for (std::size_t i = lo; i < hi; ++i) expand_state(level[i], k, opts, lambda_cut, outputs[w]);
    };
    if (workers <= 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    std::map<std::string, PartialState> merged;
    for (auto& out : outputs) {
      result.states_expanded += out.expanded;
      result.spectral_cuts += out.cuts;
      merged.merge(out.children);
    }
    level.clear();
    level.reserve(merged.size());
    for (auto& [cert, state] : merged) level.push_back(std::move(state));
  }
  for (auto& s : level) {
    s.graph.set_label(std::to_string(k) + "-regular order " + std::to_string(n));
    result.graphs.push_back(std::move(s.graph));
  }
  return result;
}

SearchReport v_search(std::size_t k, const Rational& lambda, std::size_t n_max, SearchOptions opts) {
  SearchReport report;
  report.k = k;
  report.lambda = lambda;
  report.n_max = n_max;
  const double lam = lambda.to_double();

  std::vector<Graph> best;
  for (std::size_t n = k + 1; n <= n_max; ++n) {
    if ((k * n) % 2 != 0) continue;
    RegularEnumeration en;
    try {
      en = enum_connected_regular(k, n, opts, lam);
    } catch (const unsupported_size& e) {
      report.complete = false;
      report.notes.push_back(std::string("stopped at order ") + std::to_string(n) + ": " + e.what());
      break;
    }
    auto& counts = report.counts[n];
    counts.generated = en.graphs.size();
    std::vector<Graph> passing;
    for (auto& g : en.graphs) {
      const double l2 = second_largest(g);
      bool ok = l2 <= lam + kSearchTolerance;
      if (std::abs(l2 - lam) <= 1e-6 && g.order() <= 12) ok = second_largest_at_most_exact(g, lambda);
      if (ok) passing.push_back(std::move(g));
    }
    counts.passed = passing.size();
    if (!passing.empty()) {
      report.exact_v = n;
      best = std::move(passing);
    }
  }
  for (auto& g : best) {
    ExtremalGraph eg{g, spectrum(g), canonical_certificate(g), false, std::nullopt};
    const double l2 = second_largest(g);
    if (std::abs(l2 - lam) <= 1e-6) {
      eg.boundary = true;
      if (g.order() <= 12) eg.exact_confirmed = second_largest_at_most_exact(g, lambda);
    }
    report.extremal_graphs.push_back(std::move(eg));
  }
  std::sort(report.extremal_graphs.begin(), report.extremal_graphs.end(),
            [](const ExtremalGraph& a, const ExtremalGraph& b) { return a.certificate < b.certificate; });
  return report;
}

nlohmann::json to_json(const SearchReport& r) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [n, c] : r.counts) counts[std::to_string(n)] = {{"generated", c.generated}, {"passed", c.passed}};
  nlohmann::json extremal = nlohmann::json::array();
  for (const auto& e : r.extremal_graphs) {
    nlohmann::json item = {{"graph6", to_graph6(e.graph)},
                           {"graph", to_json(e.graph)},
                           {"spectrum", to_json(e.spectrum)},
                           {"second_largest", second_largest(e.graph)},
                           {"boundary", e.boundary}};
    if (e.exact_confirmed) item["exact_confirmed"] = *e.exact_confirmed;
    extremal.push_back(std::move(item));
  }
  nlohmann::json out = {{"k", r.k},
                        {"lambda", r.lambda.to_string()},
                        {"n_max", r.n_max},
                        {"exact_v", r.exact_v ? nlohmann::json(*r.exact_v) : nlohmann::json("none found")},
                        {"unique", r.unique()},
                        {"extremal_graphs", std::move(extremal)},
                        {"counts", std::move(counts)},
                        {"complete", r.complete},
                        {"notes", r.notes}};
  return out;
}

}  // namespace hoffgraph
