#pragma once

#include "orbitope/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace orbitope {

/// A bijection of {0, ..., n-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);
  /// Parses 1-indexed cycle notation such as "(1 4 2 3)(5 6)"; "()" is the identity.
  static Permutation from_cycles(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// First point moved, or -1 for the identity.
  int first_moved() const;

  /// Composition (a * b)(i) = a(b(i)): b is applied first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// One-line image list "[3,0,1,2]".
  std::string str() const;
  /// 1-indexed cycle notation; "()" for the identity.
  std::string cycle_str() const;

 private:
  std::vector<int> images_;
};

/// A permutation group stored through a base and strong generating set,
/// built eagerly by deterministic Schreier-Sims. Immutable after construction.
class PermGroup {
 public:
  /// `base_prefix` forces the first base points (used for stabilizers).
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix = {});
  static PermGroup trivial(int degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& base() const { return base_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }

  Integer order() const;
  bool contains(const Permutation& p) const;
  PermGroup point_stabilizer(int point) const;
  std::vector<int> orbit(int point) const;
  /// All elements; throws ResourceError above `limit`.
  std::vector<Permutation> elements(std::size_t limit = 1000000) const;

 private:
  struct Level {
    int base_point = 0;
    std::vector<int> orbit;
    // transversal[x] maps the base point to x; empty when x is not in the orbit.
    std::vector<Permutation> transversal;
  };

  void build_level(std::size_t level);
  std::vector<const Permutation*> level_generators(std::size_t level) const;
  /// Sifts g starting at `from`; returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void schreier_sims();

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<int> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

}  // namespace orbitope
