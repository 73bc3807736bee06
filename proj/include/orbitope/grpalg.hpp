#pragma once

#include "orbitope/orbit.hpp"

#include <vector>

namespace orbitope {

/// An element sum_g c_g g of the group algebra QG; coefficients indexed by
/// the element order of the group.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement(const MatrixGroup& group, std::vector<Rational> coefficients);
  static GroupAlgebraElement zero(const MatrixGroup& group);
  static GroupAlgebraElement one(const MatrixGroup& group);
  /// E_1 = (1/|G|) sum_g g.
  static GroupAlgebraElement averaging(const MatrixGroup& group);

  const MatrixGroup& group() const { return *group_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  const Rational& operator[](int g) const { return c_[static_cast<std::size_t>(g)]; }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) { return a.c_ == b.c_; }

  /// Left multiplication by the group element x: (x a)_y = a_{x^-1 y}.
  GroupAlgebraElement translate(int x) const;
  /// Module action sum_g c_g (g v).
  VectorQ act(const VectorQ& v) const;

 private:
  const MatrixGroup* group_;
  std::vector<Rational> c_;
};

/// <a, b> = sum_g a_g b_g.
Rational inner(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
/// g a g^-1 = a for all g.
bool is_central(const GroupAlgebraElement& a);

struct IdempotentCertificate {
  bool idempotent = false;
  bool fixes_point = false;
  bool orthogonal = false;
  bool ok() const { return idempotent && fixes_point && orthogonal; }
};

struct SplittingIdempotent {
  GroupAlgebraElement f;
  IdempotentCertificate certificate;
};

/// f = sum_g ((g v)^t Q^-1 v) g. Requires the orbit of v to span Q^d
/// linearly (NotGenerating otherwise).
SplittingIdempotent splitting_idempotent(const MatrixGroup& g, const VectorQ& v);

/// mu(x) = sum_g ((g v)^t Q^-1 x) g.
GroupAlgebraElement splitting_map(const MatrixGroup& g, const VectorQ& v, const VectorQ& x);

/// g -> v^t Q^-1 g v, with Q inverted on the linear span of the orbit.
/// Throws NotGenerating for v = 0.
std::vector<Rational> orbit_character(const MatrixGroup& g, const VectorQ& v);

/// gamma(g) = |G| w_{e,g} for the family vec D(g), computed in its span.
/// Throws InternalError if a value is not an integer.
std::vector<Integer> gamma_character(const MatrixGroup& d);

/// Affine symmetries of the representation polytope conv{D(g)}.
PermGroup reppoly_symgroup(const MatrixGroup& d);

/// Color check for g -> g^-1 on the centered orbit, cross-checked against
/// is_central(splitting idempotent). Throws InternalError on disagreement.
bool has_inversion_symmetry(const MatrixGroup& g, const VectorQ& v);

/// 1 - f. Throws NotIdempotent / NotOrthogonal.
GroupAlgebraElement gale_complement(const GroupAlgebraElement& f);

/// Orbit family {g a} in coefficient coordinates (|G| x |G|).
MatrixQ algebra_orbit_family(const GroupAlgebraElement& a);

struct GaleReport {
  Integer order_f = 0;
  Integer order_complement = 0;
  bool same_group = false;
};

/// LinSym of {g f} and {g (1-f)}.
GaleReport gale_check(const GroupAlgebraElement& f);

/// 2 |G| |G : Z(G)|.
Integer bigsym_lower_bound(const MatrixGroup& g);

}  // namespace orbitope
