#pragma once

// Dense symmetric eigensolver (cyclic Jacobi) with degenerate-eigenspace
// handling. Everything here is templated on the scalar type so the same code
// runs in float, double and long double.

#include "frustra/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace frustra {

template <typename Scalar>
struct EigenGroup {
  Scalar value;       // mean of the clustered eigenvalues
  int first;          // index of the first member in the sorted spectrum
  int multiplicity;
};

template <typename Scalar>
struct EigenSystem {
  VectorX<Scalar> eigenvalues;   // ascending
  MatrixX<Scalar> eigenvectors;  // column k pairs with eigenvalues(k)
  std::vector<EigenGroup<Scalar>> groups;
  int sweeps = 0;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

template <typename Scalar>
struct DegenerateGroup {
  Scalar value;
  int multiplicity;
  MatrixX<Scalar> basis;  // orthonormal columns spanning the eigenspace
};

template <typename Scalar>
struct JacobiOptions {
  // Stop once the off-diagonal Frobenius norm is below this times ||A||_F.
  Scalar off_diagonal_tolerance = std::max(Scalar(1e-12), 64 * std::numeric_limits<Scalar>::epsilon());
  Scalar symmetry_tolerance = std::max(Scalar(1e-12), 64 * std::numeric_limits<Scalar>::epsilon());
  Scalar cluster_tolerance = std::max(Scalar(1e-8), Scalar(1e4) * std::numeric_limits<Scalar>::epsilon());
  int max_sweeps = 100;
};

/// Modified Gram-Schmidt (two passes) on the columns of `basis`.
/// Throws RankDeficientError if the Gram determinant is <= 1e-12.
template <typename Derived>
MatrixX<typename Derived::Scalar> orthonormalize(const Eigen::MatrixBase<Derived>& basis) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> q = basis;
  if (q.cols() == 0) return q;
  const MatrixX<Scalar> gram = q.transpose() * q;
  if (!(gram.determinant() > Scalar(1e-12)))
    throw RankDeficientError("orthonormalize: vectors are linearly dependent");
  for (int pass = 0; pass < 2; ++pass) {
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
      for (Eigen::Index j = 0; j < k; ++j) q.col(k) -= q.col(j).dot(q.col(k)) * q.col(j);
      const Scalar len = q.col(k).norm();
      if (!(len > Scalar(0))) throw RankDeficientError("orthonormalize: vanishing vector");
      q.col(k) /= len;
    }
  }
  return q;
}

namespace detail {

template <typename Scalar>
Scalar off_diagonal_norm(const MatrixX<Scalar>& a) {
  Scalar sum = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

// Orthonormal basis of span(v) obtained by projecting e_0, e_1, ... onto the
// subspace and keeping the first dim(v) independent results. The output does
// not depend on which basis of the subspace the solver happened to return.
template <typename Scalar>
MatrixX<Scalar> canonical_basis(const MatrixX<Scalar>& v) {
  const Eigen::Index n = v.rows();
  const Eigen::Index m = v.cols();
  MatrixX<Scalar> q(n, m);
  Eigen::Index found = 0;
  for (Eigen::Index j = 0; j < n && found < m; ++j) {
    VectorX<Scalar> r = v * v.row(j).transpose();  // P e_j
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index k = 0; k < found; ++k) r -= q.col(k).dot(r) * q.col(k);
    const Scalar len = r.norm();
    if (len > Scalar(1e-4)) q.col(found++) = r / len;
  }
  if (found < m) return v;
  return orthonormalize(q);
}

}  // namespace detail

/// Full spectrum of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Eigenvalues are returned ascending. Eigenvalues within
/// `cluster_tolerance` of their sorted neighbour are grouped, and each group's
/// eigenvectors are replaced by the canonical basis of the eigenspace so the
/// output is deterministic for a given matrix.
template <typename Derived>
EigenSystem<typename Derived::Scalar> solve_symmetric(
    const Eigen::MatrixBase<Derived>& m,
    const JacobiOptions<typename Derived::Scalar>& opts = {}) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw NotSymmetricError("matrix is not square");
  const Eigen::Index n = m.rows();

  MatrixX<Scalar> a = m;
  const Scalar scale = std::max(Scalar(1), a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > opts.symmetry_tolerance * scale)
    throw NotSymmetricError("matrix is not symmetric");

  MatrixX<Scalar> v = MatrixX<Scalar>::Identity(n, n);
  const Scalar threshold = opts.off_diagonal_tolerance * a.norm();
  int sweep = 0;
  while (detail::off_diagonal_norm(a) > threshold) {
    if (sweep == opts.max_sweeps)
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(opts.max_sweeps) +
                             " sweeps");
    ++sweep;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar tau = (a(q, q) - a(p, p)) / (2 * apq);
        const Scalar t = (tau >= 0 ? Scalar(1) : Scalar(-1)) /
                         (std::abs(tau) + std::sqrt(Scalar(1) + tau * tau));
        const Scalar c = Scalar(1) / std::sqrt(Scalar(1) + t * t);
        const Scalar s = t * c;

        // A <- J^T A J with J = [c s; -s c] in the (p, q) plane.
        VectorX<Scalar> col_p = a.col(p);
        a.col(p) = c * col_p - s * a.col(q);
        a.col(q) = s * col_p + c * a.col(q);
        Eigen::Matrix<Scalar, 1, Eigen::Dynamic> row_p = a.row(p);
        a.row(p) = c * row_p - s * a.row(q);
        a.row(q) = s * row_p + c * a.row(q);
        a(p, q) = Scalar(0);
        a(q, p) = Scalar(0);

        VectorX<Scalar> vp = v.col(p);
        v.col(p) = c * vp - s * v.col(q);
        v.col(q) = s * vp + c * v.col(q);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  EigenSystem<Scalar> es;
  es.sweeps = sweep;
  es.eigenvalues.resize(n);
  es.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    es.eigenvalues(k) = a(order[k], order[k]);
    es.eigenvectors.col(k) = v.col(order[k]);
  }

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && es.eigenvalues(end) - es.eigenvalues(end - 1) <= opts.cluster_tolerance) ++end;
    const auto count = end - start;
    const Scalar mean = es.eigenvalues.segment(start, count).mean();
    es.groups.push_back({mean, static_cast<int>(start), static_cast<int>(count)});
    es.eigenvectors.middleCols(start, count) =
        detail::canonical_basis<Scalar>(es.eigenvectors.middleCols(start, count));
    start = end;
  }
  return es;
}

template <typename Scalar>
DegenerateGroup<Scalar> extract_group(const EigenSystem<Scalar>& es, const EigenGroup<Scalar>& g) {
  return {g.value, g.multiplicity, es.eigenvectors.middleCols(g.first, g.multiplicity)};
}

/// The group holding the smallest eigenvalue.
template <typename Scalar>
DegenerateGroup<Scalar> lowest_group(const EigenSystem<Scalar>& es) {
  if (es.groups.empty()) throw DomainError("empty spectrum");
  return extract_group(es, es.groups.front());
}

/// The group whose value lies within `tolerance` of `value`.
template <typename Scalar>
DegenerateGroup<Scalar> group_at(const EigenSystem<Scalar>& es, Scalar value,
                                 Scalar tolerance = Scalar(1e-8)) {
  for (const auto& g : es.groups) {
    if (std::abs(g.value - value) <= tolerance) return extract_group(es, g);
  }
  throw DomainError("eigenvalue " + std::to_string(static_cast<double>(value)) +
                    " is not in the spectrum");
}

}  // namespace frustra
