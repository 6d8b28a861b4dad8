#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hoffgraph/graph.hpp"
#include "hoffgraph/rational.hpp"

namespace hoffgraph {

/// Tolerance on every eigenvalue comparison against a bound.
inline constexpr double kBoundTolerance = 1e-9;

/// λ_min(K_{2,t}) by eigensolve.
double lambda_min_k2t(std::size_t t);
/// λ_min(K̃_2m) by eigensolve.
double lambda_min_k_tilde(std::size_t m);

struct Thresholds {
  Rational lambda;
  /// Least t with λ_min(K_{2,t}) < -λ.
  std::size_t t_prime = 0;
  /// Least m with λ_min(K̃_2m) < -λ.
  std::size_t m_prime = 0;
  /// ⌊λ⌋·⌊λ²⌋, the cap on |Γ₂(x)|.
  std::int64_t gamma2_cap = 0;
  /// ⌊λ²⌋ + 1, the cap on |H| when H has an isolated vertex.
  std::int64_t isolated_cap = 0;
  /// t' from the closed form ⌊λ²/2⌋ + 1, for cross-checking.
  std::size_t t_prime_closed_form = 0;
};

/// Throws std::invalid_argument for λ < 1.
Thresholds thresholds(const Rational& lambda);

struct BoundCertificate {
  std::string claim;
  nlohmann::json parameters = nlohmann::json::object();
  bool verified = false;
  nlohmann::json evidence = nlohmann::json::object();
  double tolerance = kBoundTolerance;
};

nlohmann::json to_json(const BoundCertificate& c);

/// Instance check of: λ_min(q(H)) >= -λ forces |H| <= ⌊λ²⌋+1 when H has an
/// isolated vertex. Throws std::invalid_argument if H has no isolated vertex.
BoundCertificate isolated_vertex_bound_check(const Rational& lambda, const Graph& h);

/// A value known exactly or only up to an interval; `upper` absent means unbounded.
struct IntegerInterval {
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;
  bool exact() const { return upper && *upper == lower; }
  bool contains(std::int64_t v) const { return v >= lower && (!upper || v <= *upper); }
};

nlohmann::json to_json(const IntegerInterval& iv);

/// R(s, t) from the embedded table, or bounds: the recurrence
/// R(s,t) <= R(s-1,t) + R(s,t-1) (minus one when both terms are even)
/// above, and max((s-1)(t-1)+1, R(s-1,t)+1, R(s,t-1)+1) below.
IntegerInterval ramsey_lookup(std::size_t s, std::size_t t);

/// Exhaustive computation of R(s, t) by growing every graph with no K_s and
/// no independent t-set one vertex at a time, up to isomorphism. Returns the
/// first order at which none survive, or nullopt if none found up to max_order.
std::optional<std::size_t> ramsey_bruteforce(std::size_t s, std::size_t t, std::size_t max_order = 20, unsigned threads = 0);

/// Number of pairwise non-isomorphic graphs on `order` vertices with no K_s
/// and no independent t-set, as seen by ramsey_bruteforce.
std::vector<Graph> ramsey_critical_graphs(std::size_t s, std::size_t t, std::size_t order, unsigned threads = 0);

/// M(λ) = max{R(n', t'), ⌊λ³+1⌋}, with n' >= (m'+1)^2 not explicit. Exact
/// when t'(λ) = 1 (then R(n', 1) = 1); otherwise a lower bound only.
IntegerInterval constant_m(const Rational& lambda);
/// C₁(λ) = M(λ+1) - 1.
IntegerInterval constant_c1(const Rational& lambda);
/// C₃(λ) = max{M(λ)-1, λ³(2λ-3)} for integer λ >= 2.
IntegerInterval constant_c3(std::int64_t lambda);
/// C₂(λ): known only for λ = 2 (value 8).
std::optional<std::int64_t> known_c2(const Rational& lambda);

struct DiameterCheckReport {
  BoundCertificate certificate;
  bool premise_common_neighbors = false;
  bool premise_lambda_min = false;
  /// M compared with M(λ): "yes", "no" or "unknown".
  std::string m_sufficient;
  bool conclusion_diameter = false;
  bool conclusion_gamma2 = false;
  bool applicable() const { return premise_common_neighbors && premise_lambda_min && m_sufficient == "yes"; }
};

/// Checks the premises (distance-2 pairs share >= M neighbours; λ_min >= -λ)
/// and the conclusions (each component has diameter <= 2; |Γ₂(x)| <= ⌊λ⌋⌊λ²⌋).
/// The certificate is verified unless the instance is a counterexample.
DiameterCheckReport prop13_verifier(const Graph& g, const Rational& lambda, std::size_t m);

struct KnownV {
  enum class Kind { exact, interval, infinite, none };
  Kind kind = Kind::interval;
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;
  std::string note;
};

/// Known values and bounds of v(k, λ).
KnownV known_v(std::int64_t k, const Rational& lambda);
nlohmann::json to_json(const KnownV& v);

struct LowerBoundWitness {
  Graph graph;
  BoundCertificate certificate;
};

/// The λ-coclique extension of the complement of L(K_{2,a+1}).
LowerBoundWitness lower_bound_graph(std::int64_t lambda, std::int64_t a);

/// Instance check of the co-edge-regular bound. Throws std::invalid_argument
/// when g is not connected and co-edge-regular (complete graphs are reported
/// as vacuous).
BoundCertificate co_edge_bound_check(const Graph& g, const Rational& lambda);

/// λ³(2λ-3); throws for λ < 2.
std::int64_t mu_bound(std::int64_t lambda);

struct SrgParams {
  std::int64_t v = 0, k = 0, a1 = 0, c2 = 0;
};
bool srg_mu_check(const SrgParams& params, std::int64_t lambda);

/// Amply regular instance check: c₂ <= C₃(λ) or complete multipartite.
/// Throws std::invalid_argument when g is not amply regular.
BoundCertificate amply_regular_check(const Graph& g, std::int64_t lambda);

}  // namespace hoffgraph
