#pragma once

#include "orbitope/matrix.hpp"
#include "orbitope/perm.hpp"
#include "orbitope/symcore.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace orbitope {

/// A finite group of d x d rational matrices with its multiplication table.
///
/// Element 0 is the identity. Elements produced by `close` are distinct and
/// listed breadth-first from the identity (generators in the given order).
/// `from_table` builds a representation of an abstract group given by its
/// table; images may then repeat (non-faithful).
class MatrixGroup {
 public:
  /// Throws OrderExceeded past `max_order` and ResourceError past 4096 elements
  /// (multiplication table size).
  static MatrixGroup close(int dim, const std::vector<MatrixQ>& generators,
                           std::size_t max_order = 10000);
  static MatrixGroup from_table(int dim, std::vector<MatrixQ> elements, std::vector<int> table,
                                std::vector<int> generators);

  int dim() const { return dim_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const MatrixQ& element(int g) const { return elements_[static_cast<std::size_t>(g)]; }
  const std::vector<MatrixQ>& elements() const { return elements_; }
  const std::vector<int>& generators() const { return generators_; }
  bool faithful() const { return faithful_; }

  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

  /// g -> x g.
  Permutation left_mult(int x) const;
  /// g -> g x^-1.
  Permutation right_mult(int x) const;
  /// g -> g^-1.
  Permutation inversion() const;
  int center_order() const;
  bool is_abelian() const { return center_order() == order(); }

 private:
  void finish();

  int dim_ = 0;
  std::vector<MatrixQ> elements_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  bool faithful_ = true;
};

/// Columns g v in element order.
MatrixQ orbit_family(const MatrixGroup& g, const VectorQ& v);
/// (1/|G|) sum_g g v.
VectorQ barycenter(const MatrixGroup& g, const VectorQ& v);
/// The orbit of v minus its barycenter spans Q^d.
bool is_generating_point(const MatrixGroup& g, const VectorQ& v);
/// Indices of {g : g v = v}.
std::vector<int> stabilizer_in_group(const MatrixGroup& g, const VectorQ& v);

/// f(h) = w_{e,h} for the orbit family of v in its own span; then
/// w_{g,h} = f(g^-1 h).
std::vector<Rational> orbit_color_row(const MatrixGroup& g, const VectorQ& v);

/// Permutations of G preserving the colors c(g^-1 h), given one value per element.
template <class Scalar>
PermGroup group_color_automorphisms(const MatrixGroup& g, const std::vector<Scalar>& row) {
  Matrix<Scalar> as_row(1, static_cast<Index>(row.size()));
  for (std::size_t i = 0; i < row.size(); ++i) as_row(0, static_cast<Index>(i)) = row[i];
  auto ids = std::make_shared<std::vector<int>>(color_ids(as_row));
  const MatrixGroup* grp = &g;
  return automorphism_group(ColoredGraph(g.order(), [grp, ids](int a, int b) {
    return (*ids)[static_cast<std::size_t>(grp->mul(grp->inv(a), b))];
  }));
}

/// Affine symmetries of P(G, v) as permutations of G.
/// Throws NotGenerating when the centered orbit does not span Q^d.
PermGroup affsym_group(const MatrixGroup& g, const VectorQ& v);

/// Linear map (in coordinates centered at the barycenter) realizing s.
MatrixQ realize_affine(const MatrixGroup& g, const VectorQ& v, const Permutation& s);

enum class GenericMode { Auto, Exact, MonteCarlo };

struct GenericOptions {
  GenericMode mode = GenericMode::Auto;
  std::size_t samples = 8;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  std::size_t max_order = 10000;
};

struct GenericResult {
  PermGroup group;
  bool exact = false;
  /// Monte-Carlo generators all passed the symbolic check.
  bool verified = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<VectorQ> sample_points;
};

/// Largest d for symbolic mode (ORBITOPE_MAX_DIM, default 4); the group cap is 16.
int symbolic_dim_cap();
constexpr int symbolic_order_cap = 16;

/// Numerators X^t adj(Q(X)) h X for every h, over Q[X_1..X_d].
/// Throws NoGeneratingPoint when det Q(X) vanishes identically.
std::vector<MultiPoly> symbolic_color_row(const MatrixGroup& g);

/// LinSym((g X)_g) over Q(X).
GenericResult generic_linsym(const MatrixGroup& g, const GenericOptions& options = {});

/// Uniform integer point in [-bound, bound]^d from a seeded generator.
VectorQ sample_point(int dim, std::uint64_t seed, std::size_t index, int bound = 1000);

struct GenericReport {
  bool full_dimensional = false;
  bool trivial_stabilizer = false;
  bool symmetry_match = false;
  Integer generic_order = 0;
  Integer point_order = 0;
  bool generic() const { return full_dimensional && trivial_stabilizer && symmetry_match; }
};

GenericReport is_generic(const MatrixGroup& g, const VectorQ& v, const GenericOptions& options = {});

struct ClosureReport {
  int hat_order = 0;
  std::vector<MatrixQ> hat_generators;
  VectorQ test_point;
  Integer test_order = 0;
  bool closed = false;
  /// True when `closed` is decided exactly (equality certificate or symbolic mode).
  bool certified = false;
};

/// Builds G^ = the realized affine symmetry group of P(G, v) and checks that
/// a generic orbit polytope of G^ has no symmetries beyond G^.
ClosureReport generic_closure_check(const MatrixGroup& g, const VectorQ& v,
                                    const std::optional<VectorQ>& w = std::nullopt,
                                    const GenericOptions& options = {});

}  // namespace orbitope
