#include "hoffgraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hoffgraph {

std::size_t Spectrum::dimension() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.multiplicity;
  return n;
}

std::vector<double> Spectrum::eigenvalues() const {
  std::vector<double> out;
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

Spectrum group_eigenvalues(std::span<const double> descending, double tol, double scale) {
  Spectrum s;
  s.tolerance = tol;
  const double eps = tol * std::max(1.0, scale);
  std::size_t i = 0;
  while (i < descending.size()) {
    std::size_t j = i + 1;
    double sum = descending[i];
    while (j < descending.size() && descending[j - 1] - descending[j] <= eps) sum += descending[j++];
    s.entries.push_back({sum / static_cast<double>(j - i), j - i});
    i = j;
  }
  // Snap values that are zero to within the tolerance.
  for (auto& e : s.entries)
    if (std::abs(e.value) <= eps) e.value = 0.0;
  return s;
}

double norm_inf(const SymMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

std::vector<double> eigenvalues(const Graph& g) {
  const auto ev = eig_symmetric(g.adjacency_matrix<double>());
  return {ev.data(), ev.data() + ev.size()};
}

Spectrum spectrum(const SymMatrix& m, double tol) {
  const auto ev = eig_symmetric(m);
  return group_eigenvalues(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())), tol, norm_inf(m));
}

Spectrum spectrum(const Graph& g, double tol) { return spectrum(g.adjacency_matrix<double>(), tol); }

double lambda_max(const Graph& g) { return eigenvalues(g).front(); }
double lambda_min(const Graph& g) { return eigenvalues(g).back(); }
double second_largest(const Graph& g) {
  const auto ev = eigenvalues(g);
  return ev.size() > 1 ? ev[1] : ev[0];
}

Spectrum coclique_extension_spectrum(const Spectrum& s, std::size_t base_order, std::size_t q) {
  if (q == 0) throw std::invalid_argument("coclique_extension_spectrum: q must be positive");
  if (s.dimension() != base_order)
    throw std::invalid_argument("coclique_extension_spectrum: multiplicities sum to " + std::to_string(s.dimension()) +
                                ", expected base order " + std::to_string(base_order));
  Spectrum out;
  out.tolerance = s.tolerance;
  const double qd = static_cast<double>(q);
  const std::size_t extra_zeros = (q - 1) * base_order;
  bool merged = extra_zeros == 0;
  for (const auto& e : s.entries) {
    if (e.value == 0.0 && !merged) {
      out.entries.push_back({0.0, e.multiplicity + extra_zeros});
      merged = true;
      continue;
    }
    if (!merged && e.value < 0.0) {
      out.entries.push_back({0.0, extra_zeros});
      merged = true;
    }
    out.entries.push_back({qd * e.value, e.multiplicity});
  }
  if (!merged) out.entries.push_back({0.0, extra_zeros});
  return out;
}

Quotient quotient_matrix(const Graph& g, const std::vector<std::vector<int>>& partition) {
  const auto n = g.order();
  std::vector<int> part_of(n, -1);
  std::size_t covered = 0;
  for (std::size_t p = 0; p < partition.size(); ++p) {
    if (partition[p].empty()) throw std::invalid_argument("quotient_matrix: empty part");
    for (int v : partition[p]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("quotient_matrix: vertex out of range");
      if (part_of[static_cast<std::size_t>(v)] != -1) throw std::invalid_argument("quotient_matrix: parts overlap");
      part_of[static_cast<std::size_t>(v)] = static_cast<int>(p);
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("quotient_matrix: partition does not cover every vertex");

  const auto k = static_cast<Eigen::Index>(partition.size());
  std::vector<VertexSet> members(partition.size(), VertexSet(n));
  for (std::size_t p = 0; p < partition.size(); ++p)
    for (int v : partition[p]) members[p].set(static_cast<std::size_t>(v));

  Quotient q{Eigen::MatrixXd::Zero(k, k), true, {}};
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto& part = partition[static_cast<std::size_t>(i)];
    q.part_sizes.push_back(part.size());
    for (Eigen::Index j = 0; j < k; ++j) {
      std::size_t total = 0;
      std::optional<std::size_t> first;
      for (int v : part) {
        const auto c = g.neighbors(v).intersection_count(members[static_cast<std::size_t>(j)]);
        total += c;
        if (!first) first = c;
        else if (*first != c) q.equitable = false;
      }
      q.matrix(i, j) = static_cast<double>(total) / static_cast<double>(part.size());
    }
  }
  return q;
}

std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& m) {
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  const auto n = m.rows();
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[static_cast<std::size_t>(n)] = 1.0;
  Eigen::MatrixXd mk = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk + c[static_cast<std::size_t>(n - k + 1)] * Eigen::MatrixXd::Identity(n, n);
    c[static_cast<std::size_t>(n - k)] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

namespace {

std::complex<double> eval_poly(const std::vector<double>& c, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Durand-Kerner simultaneous iteration on a monic polynomial, then Newton
// polishing of each root.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& c) {
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) return {std::complex<double>(-c[0], 0.0)};
  double bound = 0.0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(c[i]));
  bound += 1.0;  // Cauchy bound on root moduli.
  std::vector<std::complex<double>> z(deg);
  const std::complex<double> seed(0.4, 0.9);
  for (std::size_t i = 0; i < deg; ++i) z[i] = bound * std::pow(seed / std::abs(seed), static_cast<double>(i));
  for (int iter = 0; iter < 5000; ++iter) {
    double change = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      std::complex<double> denom = 1.0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (std::abs(denom) == 0.0) denom = 1e-300;
      const auto delta = eval_poly(c, z[i]) / denom;
      z[i] -= delta;
      change = std::max(change, std::abs(delta));
    }
    if (change < 1e-15 * bound) break;
  }
  std::vector<double> dc(deg);
  for (std::size_t i = 1; i <= deg; ++i) dc[i - 1] = static_cast<double>(i) * c[i];
  for (auto& r : z) {
    for (int it = 0; it < 8; ++it) {
      const auto d = eval_poly(dc, r);
      if (std::abs(d) < 1e-12) break;
      const auto step = eval_poly(c, r) / d;
      r -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(r))) break;
    }
  }
  return z;
}

}  // namespace

std::vector<std::complex<double>> general_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("general_eigenvalues: matrix is not square");
  if (m.rows() <= 4) return polynomial_roots(characteristic_polynomial(m));
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("general_eigenvalues: QR iteration did not converge");
  const auto ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> quotient_eigenvalues(const Quotient& q) {
  const double scale = 1.0 + (q.matrix.size() ? q.matrix.cwiseAbs().rowwise().sum().maxCoeff() : 0.0);
  std::vector<double> out;
  for (auto z : general_eigenvalues(q.matrix)) {
    if (std::abs(z.imag()) > 1e-6 * scale)
      throw std::runtime_error("quotient_eigenvalues: complex eigenvalue in a symmetrizable quotient");
    out.push_back(z.real());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool interlacing_check(const Graph& g, std::span<const int> subset, double tol) {
  if (subset.empty()) throw std::invalid_argument("interlacing_check: subset is empty");
  const auto mu = eigenvalues(g);
  const auto nu = eigenvalues(g.induced(subset));
  const std::size_t n = mu.size(), m = nu.size();
  const double eps = tol * std::max(1.0, std::abs(mu.front()));
  for (std::size_t i = 0; i < m; ++i)
    if (nu[i] > mu[i] + eps || nu[i] < mu[n - m + i] - eps) return false;
  return true;
}

nlohmann::json to_json(const Spectrum& s) {
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : s.entries) ev.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return {{"eigenvalues", std::move(ev)}, {"tolerance", s.tolerance}};
}

}  // namespace hoffgraph
