#pragma once

#include "orbitope/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orbitope {

/// A monomial in at most `max_vars` variables, packed into one word.
///
/// Layout (most significant byte first): total degree, then the exponent of
/// x0, x1, ..., x6. Comparing the packed words therefore orders monomials
/// graded-lexicographically with x0 > x1 > ... > x6.
class Monomial {
 public:
  static constexpr int max_vars = 7;
  static constexpr int max_degree = 255;

  constexpr Monomial() = default;
  static Monomial variable(int index);
  static Monomial from_exponents(std::span<const int> exponents);

  int degree() const { return static_cast<int>(key_ >> 56); }
  int exponent(int var) const { return static_cast<int>((key_ >> (48 - 8 * var)) & 0xffu); }
  std::uint64_t key() const { return key_; }

  bool divides(Monomial other) const;
  Monomial operator*(Monomial other) const;
  /// Requires divides(other) == true for `this` as the divisor.
  Monomial quotient_of(Monomial dividend) const;

  friend bool operator==(Monomial a, Monomial b) { return a.key_ == b.key_; }
  friend auto operator<=>(Monomial a, Monomial b) { return a.key_ <=> b.key_; }

 private:
  explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

/// Sparse multivariate polynomial over Q.
///
/// Terms are kept sorted by decreasing monomial (graded lex) with no zero
/// coefficients, so equality is a term-by-term comparison.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}  // NOLINT: Eigen needs implicit ints
  MultiPoly(const Rational& constant);                        // NOLINT
  static MultiPoly variable(int index);
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// Largest variable index used plus one.
  int variable_count() const;

  Rational evaluate(std::span<const Rational> point) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator/=(const MultiPoly& other);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  /// Exact division. Throws InternalError when `b` does not divide `a`.
  friend MultiPoly operator/(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  /// Arbitrary but total order, used for bucketing colors.
  friend bool operator<(const MultiPoly& a, const MultiPoly& b);

  std::string str() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Quotient and remainder of a by b under the graded-lex leading-term division.
std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& a, const MultiPoly& b);

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace orbitope

namespace Eigen {

template <>
struct NumTraits<orbitope::MultiPoly> : GenericNumTraits<orbitope::MultiPoly> {
  using Real = orbitope::MultiPoly;
  using NonInteger = orbitope::MultiPoly;
  using Nested = orbitope::MultiPoly;
  using Literal = orbitope::MultiPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 100
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
