#include "orbitope/symcore.hpp"

#include <map>

namespace orbitope {

MatrixQ color_values(const ColorMatrix<Rational>& w) { return w.numerator / w.denominator; }

MatrixQ realize(const MatrixQ& v, const Permutation& s) {
  const ColorMatrix<Rational> w = color_matrix(v);
  if (!is_linear_symmetry(w, s)) throw NotASymmetry();
  MatrixQ permuted(v.rows(), v.cols());
  for (Index i = 0; i < v.cols(); ++i) permuted.col(i) = v.col(s(static_cast<int>(i)));
  const auto q_inv = inverse(gram(v));
  return permuted * v.transpose() * (*q_inv);
}

PermGroup linsym_group_in_span(const MatrixQ& v, std::size_t node_limit) {
  return linsym_group<Rational>(span_coordinates(v), node_limit);
}

FiberInfo fibers(const MatrixQ& v) {
  std::map<std::vector<Rational>, std::size_t> count;
  for (Index j = 0; j < v.cols(); ++j) {
    std::vector<Rational> key(v.col(j).begin(), v.col(j).end());
    ++count[key];
  }
  FiberInfo info;
  info.distinct = count.size();
  for (const auto& [key, m] : count)
    for (std::size_t k = 2; k <= m; ++k) info.kernel_order *= static_cast<unsigned>(k);
  return info;
}

}  // namespace orbitope
