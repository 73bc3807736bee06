#include "orbitope/matrix.hpp"

#include "orbitope/error.hpp"

namespace orbitope {

std::vector<Index> row_basis(const MatrixQ& m) {
  MatrixQ t = m.transpose();
  return fraction_free_echelon(t);
}

MatrixQ span_coordinates(const MatrixQ& family) {
  const auto rows = row_basis(family);
  MatrixQ out(static_cast<Index>(rows.size()), family.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = family.row(rows[i]);
  return out;
}

std::optional<MatrixQ> solve_exact(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows()) throw PreconditionError("solve_exact: row count mismatch");
  const Index n = a.cols();
  const Index k = b.cols();
  MatrixQ aug(a.rows(), n + k);
  aug << a, b;

  // Gauss-Jordan to reduced row echelon form.
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < n && row < aug.rows(); ++col) {
    Index p = row;
    while (p < aug.rows() && aug(p, col).is_zero()) ++p;
    if (p == aug.rows()) continue;
    if (p != row) aug.row(p).swap(aug.row(row));
    const Rational pivot = aug(row, col);
    for (Index j = col; j < aug.cols(); ++j) aug(row, j) /= pivot;
    for (Index i = 0; i < aug.rows(); ++i) {
      if (i == row || aug(i, col).is_zero()) continue;
      const Rational factor = aug(i, col);
      for (Index j = col; j < aug.cols(); ++j) aug(i, j) -= factor * aug(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  for (Index i = row; i < aug.rows(); ++i) {
    for (Index j = n; j < n + k; ++j) {
      if (!aug(i, j).is_zero()) return std::nullopt;
    }
  }
  MatrixQ x = MatrixQ::Zero(n, k);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x.row(pivots[r]) = aug.block(static_cast<Index>(r), n, 1, k);
  return x;
}

std::optional<MatrixQ> inverse(const MatrixQ& a) {
  if (a.rows() != a.cols()) throw PreconditionError("inverse needs a square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve_exact(a, MatrixQ::Identity(a.rows(), a.rows()));
}

MatrixQ evaluate(const MatrixP& m, std::span<const Rational> point) {
  MatrixQ out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(point);
  return out;
}

MatrixP to_poly(const MatrixQ& m) {
  MatrixP out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = MultiPoly(m(i, j));
  return out;
}

}  // namespace orbitope
