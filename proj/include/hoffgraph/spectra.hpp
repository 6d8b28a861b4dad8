#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "hoffgraph/graph.hpp"
#include "hoffgraph/symmetric_eigen.hpp"

namespace hoffgraph {

inline constexpr double kDefaultGroupingTolerance = 1e-8;

struct SpectrumEntry {
  double value = 0;
  std::size_t multiplicity = 0;
};

/// Eigenvalues grouped with multiplicities, sorted descending.
struct Spectrum {
  std::vector<SpectrumEntry> entries;
  double tolerance = kDefaultGroupingTolerance;

  std::size_t dimension() const;
  double largest() const { return entries.front().value; }
  double smallest() const { return entries.back().value; }
  /// Expanded, descending.
  std::vector<double> eigenvalues() const;
};

/// Groups a descending eigenvalue list; neighbours within `tol * max(1, scale)`
/// join one group whose value is the group mean.
Spectrum group_eigenvalues(std::span<const double> descending, double tol = kDefaultGroupingTolerance, double scale = 1.0);

/// Infinity norm (maximum absolute row sum).
double norm_inf(const SymMatrix& m);

std::vector<double> eigenvalues(const Graph& g);
Spectrum spectrum(const SymMatrix& m, double tol = kDefaultGroupingTolerance);
Spectrum spectrum(const Graph& g, double tol = kDefaultGroupingTolerance);

double lambda_max(const Graph& g);
double lambda_min(const Graph& g);
/// λ₂ of the adjacency matrix, counted with multiplicity; for K_1 this is
/// the single eigenvalue 0.
double second_largest(const Graph& g);

/// Closed form for the q-coclique extension: every eigenvalue scaled by q,
/// plus 0 with multiplicity (q-1)*base_order merged into any existing 0 group.
Spectrum coclique_extension_spectrum(const Spectrum& s, std::size_t base_order, std::size_t q);

struct Quotient {
  Eigen::MatrixXd matrix;
  bool equitable = false;
  std::vector<std::size_t> part_sizes;
};

/// Entry (i, j): mean number of neighbours in part j of a vertex in part i.
Quotient quotient_matrix(const Graph& g, const std::vector<std::vector<int>>& partition);

/// Eigenvalues of a small general real matrix. Dimension <= 4 goes through
/// the characteristic polynomial; larger matrices use Hessenberg QR.
std::vector<std::complex<double>> general_eigenvalues(const Eigen::MatrixXd& m);
/// Coefficients c_0..c_n of det(xI - m), c_n = 1.
std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& m);

/// Real parts of the quotient eigenvalues, descending. Throws if any has a
/// non-negligible imaginary part.
std::vector<double> quotient_eigenvalues(const Quotient& q);

/// Cauchy interlacing between g and its induced subgraph on `subset`.
bool interlacing_check(const Graph& g, std::span<const int> subset, double tol = 1e-9);

nlohmann::json to_json(const Spectrum& s);

}  // namespace hoffgraph
