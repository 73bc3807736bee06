#pragma once

#include "orbitope/error.hpp"
#include "orbitope/multipoly.hpp"
#include "orbitope/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace orbitope {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;
using MatrixP = Matrix<MultiPoly>;
using Index = Eigen::Index;

/// Division known to be exact in the scalar ring.
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) { return a / b; }

template <class Scalar>
struct DetAdj {
  Scalar det;
  Matrix<Scalar> adj;
};

namespace detail {

// Bareiss elimination with row pivoting on a copy of m; returns the determinant.
template <class Scalar>
Scalar bareiss_det(Matrix<Scalar> m) {
  const Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  bool negate = false;
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      m.row(p).swap(m.row(k));
      negate = !negate;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = exact_div(Scalar(m(k, k) * m(i, j) - m(i, k) * m(k, j)), prev);
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return negate ? Scalar(-prev) : prev;
}

template <class Scalar>
Matrix<Scalar> minor_without(const Matrix<Scalar>& m, Index row, Index col) {
  const Index n = m.rows();
  Matrix<Scalar> out(n - 1, n - 1);
  for (Index i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (Index j = 0, oj = 0; j < n; ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

}  // namespace detail

template <class Scalar>
Scalar determinant(const Matrix<Scalar>& m) {
  return detail::bareiss_det<Scalar>(m);
}

/// Determinant and adjugate by fraction-free Gauss-Jordan elimination on [M | I].
///
/// Every intermediate entry is a minor of [M | I], so all divisions by the
/// previous pivot are exact in any integral domain. Singular inputs fall back
/// to cofactor expansion. Post: M * adj == det * I.
template <class Scalar>
DetAdj<Scalar> det_adj(const Matrix<Scalar>& m) {
  const Index n = m.rows();
  if (m.cols() != n) throw PreconditionError("det_adj needs a square matrix");
  if (n == 0) return {Scalar(1), Matrix<Scalar>(0, 0)};

  Matrix<Scalar> a(n, 2 * n);
  a.leftCols(n) = m;
  a.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  Scalar prev(1);
  bool negate = false;
  bool singular = false;
  for (Index k = 0; k < n && !singular; ++k) {
    Index p = k;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) {
      singular = true;
      break;
    }
    if (p != k) {
      a.row(p).swap(a.row(k));
      negate = !negate;
    }
    for (Index i = 0; i < n; ++i) {
      if (i == k) continue;
      const Scalar factor = a(i, k);
      for (Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a(i, j) = exact_div(Scalar(a(k, k) * a(i, j) - factor * a(k, j)), prev);
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }

  if (!singular) {
    DetAdj<Scalar> out{prev, a.rightCols(n)};
    if (negate) {
      out.det = -out.det;
      out.adj = -out.adj;
    }
    return out;
  }

  DetAdj<Scalar> out{Scalar(0), Matrix<Scalar>(n, n)};
  if (n == 1) {
    out.adj(0, 0) = Scalar(1);
    return out;
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Scalar c = detail::bareiss_det<Scalar>(detail::minor_without(m, j, i));
      out.adj(i, j) = ((i + j) % 2 == 0) ? c : Scalar(-c);
    }
  }
  return out;
}

/// Row-reduces m in place by fraction-free elimination and returns the pivot
/// columns (in increasing order). The number of pivots is the rank.
template <class Scalar>
std::vector<Index> fraction_free_echelon(Matrix<Scalar>& m) {
  std::vector<Index> pivots;
  Scalar prev(1);
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    for (Index i = row + 1; i < m.rows(); ++i) {
      const Scalar factor = m(i, col);
      for (Index j = col + 1; j < m.cols(); ++j)
        m(i, j) = exact_div(Scalar(m(row, col) * m(i, j) - factor * m(row, j)), prev);
      m(i, col) = Scalar(0);
    }
    prev = m(row, col);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
Index rank(const Matrix<Scalar>& m) {
  Matrix<Scalar> work = m;
  return static_cast<Index>(fraction_free_echelon(work).size());
}

/// Indices of rows of m that form a basis of its row space (first maximal
/// independent set in row order). Restricting a column family to these rows
/// is injective on its span.
std::vector<Index> row_basis(const MatrixQ& m);

/// Returns the rows of `family` listed by row_basis: coordinates of the
/// family inside its own linear span.
MatrixQ span_coordinates(const MatrixQ& family);

/// Solves A X = B exactly. Returns nullopt when the system is inconsistent;
/// free variables (rank-deficient A) are set to zero.
std::optional<MatrixQ> solve_exact(const MatrixQ& a, const MatrixQ& b);

/// Inverse of a square rational matrix; nullopt when singular.
std::optional<MatrixQ> inverse(const MatrixQ& a);

/// Substitutes `point` for the variables of every entry.
MatrixQ evaluate(const MatrixP& m, std::span<const Rational> point);

/// Embeds a rational matrix as constant polynomials.
MatrixP to_poly(const MatrixQ& m);

}  // namespace orbitope
