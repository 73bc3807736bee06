#pragma once

#include "orbitope/colored_graph.hpp"
#include "orbitope/matrix.hpp"
#include "orbitope/perm.hpp"

#include <map>
#include <vector>

namespace orbitope {

/// Q = V V^t for a family whose columns are the vectors v_i.
template <class Scalar>
Matrix<Scalar> gram(const Matrix<Scalar>& v) {
  const Index d = v.rows();
  Matrix<Scalar> q(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = i; j < d; ++j) {
      Scalar s(0);
      for (Index k = 0; k < v.cols(); ++k) s += v(i, k) * v(j, k);
      q(i, j) = s;
      q(j, i) = s;
    }
  }
  return q;
}

/// W = V^t Q^-1 V stored fraction-free as numerator / denominator with
/// numerator = V^t adj(Q) V and denominator = det Q.
template <class Scalar>
struct ColorMatrix {
  Matrix<Scalar> numerator;
  Scalar denominator;

  Index size() const { return numerator.rows(); }
};

/// Throws SingularGram when det Q = 0.
template <class Scalar>
ColorMatrix<Scalar> color_matrix(const Matrix<Scalar>& v) {
  auto [det, adj] = det_adj<Scalar>(gram(v));
  if (is_zero(det)) throw SingularGram();
  Matrix<Scalar> left = v.transpose() * adj;
  return {left * v, det};
}

/// Exact W over Q.
MatrixQ color_values(const ColorMatrix<Rational>& w);

/// P(s)^-1 W P(s) == W, i.e. w[s(i), s(j)] == w[i, j] for all i, j.
template <class Scalar>
bool is_linear_symmetry(const ColorMatrix<Scalar>& w, const Permutation& s) {
  if (s.degree() != w.size()) throw PreconditionError("permutation degree does not match the family");
  for (Index i = 0; i < w.size(); ++i)
    for (Index j = 0; j < w.size(); ++j)
      if (!(w.numerator(s(static_cast<int>(i)), s(static_cast<int>(j))) == w.numerator(i, j))) return false;
  return true;
}

/// A(s) = V P(s) V^t Q^-1, the unique linear map with A v_i = v_{s(i)}.
/// Throws NotASymmetry when s is not a linear symmetry.
MatrixQ realize(const MatrixQ& v, const Permutation& s);

/// Dense color ids (row-major) bucketing equal entries; ids follow first appearance.
template <class Scalar>
std::vector<int> color_ids(const Matrix<Scalar>& w) {
  std::map<Scalar, int> ids;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.rows() * w.cols()));
  for (Index i = 0; i < w.rows(); ++i)
    for (Index j = 0; j < w.cols(); ++j) out.push_back(ids.try_emplace(w(i, j), static_cast<int>(ids.size())).first->second);
  return out;
}

/// LinSym(V) = automorphisms of the complete graph colored by W.
template <class Scalar>
PermGroup linsym_group(const Matrix<Scalar>& v, std::size_t node_limit = 5'000'000) {
  const ColorMatrix<Scalar> w = color_matrix(v);
  const int n = static_cast<int>(v.cols());
  return automorphism_group(ColoredGraph::from_table(n, color_ids(w.numerator)), node_limit);
}

/// LinSym of a family that need not span: computed in its own span coordinates.
PermGroup linsym_group_in_span(const MatrixQ& v, std::size_t node_limit = 5'000'000);

/// Distinct columns of a family and the order of the fiber-preserving kernel.
struct FiberInfo {
  std::size_t distinct = 0;
  Integer kernel_order = 1;
};
/// kernel_order = prod over fibers of (fiber size)!.
FiberInfo fibers(const MatrixQ& v);

}  // namespace orbitope
