#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace hoffgraph {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Real symmetric matrices: adjacency, special and symmetrized quotient matrices.
using SymMatrix = MatrixX<double>;

/// Symmetric tridiagonal matrix: diagonal d and off-diagonal e, where
/// e[i] couples rows i and i+1 (e has the same length as d, last entry 0).
template <typename Scalar>
struct Tridiagonal {
  VectorX<Scalar> diagonal;
  VectorX<Scalar> offdiagonal;
};

/// Householder reduction of a symmetric matrix to tridiagonal form.
/// Only the lower triangle of `a` is trusted; eigenvectors are not formed.
template <typename Derived>
Tridiagonal<typename Derived::Scalar> tridiagonalize(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> a = input.template selfadjointView<Eigen::Lower>();
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k + 2 < n; ++k) {
    const Eigen::Index m = n - k - 1;
    VectorX<Scalar> v = a.col(k).tail(m);
    const Scalar norm = v.norm();
    if (norm == Scalar(0)) continue;
    const Scalar alpha = v(0) > Scalar(0) ? -norm : norm;
    v(0) -= alpha;
    const Scalar vnorm = v.norm();
    if (vnorm == Scalar(0)) continue;
    v /= vnorm;
    auto block = a.bottomRightCorner(m, m);
    const VectorX<Scalar> p = block * v;
    const VectorX<Scalar> q = p - v.dot(p) * v;
    block.noalias() -= Scalar(2) * (v * q.transpose() + q * v.transpose());
    a(k + 1, k) = a(k, k + 1) = alpha;
    a.col(k).tail(m - 1).setZero();
    a.row(k).tail(m - 1).setZero();
  }
  Tridiagonal<Scalar> t{a.diagonal(), VectorX<Scalar>::Zero(n)};
  for (Eigen::Index i = 0; i + 1 < n; ++i) t.offdiagonal(i) = a(i + 1, i);
  return t;
}

/// Eigenvalues of a symmetric tridiagonal matrix by QL iteration with
/// implicit Wilkinson-style shifts. Returned in ascending order.
template <typename Scalar>
VectorX<Scalar> tridiagonal_eigenvalues(Tridiagonal<Scalar> t, int max_sweeps = 60) {
  using std::abs;
  using std::hypot;
  VectorX<Scalar>& d = t.diagonal;
  VectorX<Scalar>& e = t.offdiagonal;
  const Eigen::Index n = d.size();
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  if (n > 0) e(n - 1) = Scalar(0);

  for (Eigen::Index l = 0; l < n; ++l) {
    int sweeps = 0;
    while (true) {
      Eigen::Index m = l;
      for (; m + 1 < n; ++m) {
        const Scalar dd = abs(d(m)) + abs(d(m + 1));
        if (abs(e(m)) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > max_sweeps)
        throw std::runtime_error("tridiagonal QL failed to converge after " + std::to_string(max_sweeps) + " sweeps");

      Scalar g = (d(l + 1) - d(l)) / (Scalar(2) * e(l));
      Scalar r = hypot(g, Scalar(1));
      g = d(m) - d(l) + e(l) / (g + (g >= Scalar(0) ? r : -r));
      Scalar s = 1, c = 1, p = 0;
      bool deflated = false;
      for (Eigen::Index i = m - 1; i >= l; --i) {
        const Scalar f = s * e(i);
        const Scalar b = c * e(i);
        r = hypot(f, g);
        e(i + 1) = r;
        if (r == Scalar(0)) {
          d(i + 1) -= p;
          e(m) = Scalar(0);
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d(i + 1) - p;
        r = (d(i) - g) * s + Scalar(2) * c * b;
        p = s * r;
        d(i + 1) = g + p;
        g = c * r - b;
      }
      if (deflated) continue;
      d(l) -= p;
      e(l) = g;
      e(m) = Scalar(0);
    }
  }
  std::sort(d.data(), d.data() + n);
  return d;
}

/// Largest absolute asymmetry |a_ij - a_ji|.
template <typename Derived>
typename Derived::Scalar asymmetry(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0) return 0;
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

/// All eigenvalues of a real symmetric matrix, sorted descending.
/// Throws std::invalid_argument if the matrix is not square, has
/// non-finite entries, or is asymmetric beyond 1e-12.
template <typename Derived>
VectorX<typename Derived::Scalar> eig_symmetric(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_symmetric: matrix is not square");
  if (!m.allFinite()) throw std::invalid_argument("eig_symmetric: non-finite entry");
  if (asymmetry(m) > Scalar(1e-12)) throw std::invalid_argument("eig_symmetric: matrix is not symmetric");
  VectorX<Scalar> ev = tridiagonal_eigenvalues(tridiagonalize(m));
  return ev.reverse().eval();
}

}  // namespace hoffgraph
