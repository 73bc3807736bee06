#pragma once

#include "orbitope/orbit.hpp"
#include "orbitope/perm.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbitope {

/// Matrix over GF(2) with at most 64 columns; row r is a bit mask over columns.
class GF2Matrix {
 public:
  GF2Matrix(int rows, int cols);
  /// Rows of '0'/'1' characters; throws ParseError.
  static GF2Matrix from_strings(const std::vector<std::string>& rows);
  static GF2Matrix identity(int n);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return (rows_[static_cast<std::size_t>(r)] >> c) & 1u; }
  void set(int r, int c, bool value);
  std::uint64_t row_mask(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  int rank() const;
  /// Hamming weight of C x, x a column mask (bit j = x_{j+1}).
  int weight_of_image(std::uint64_t x) const;
  std::vector<std::string> to_strings() const;

 private:
  int cols_;
  std::vector<std::uint64_t> rows_;
};

/// Element index i of GF(2)^n lists x lexicographically, x_1 most significant.
std::uint64_t column_mask(std::uint64_t index, int n);

/// {diag((-1)^{C x})}, indexed lexicographically by x.
MatrixGroup diag_rep(const GF2Matrix& c);
/// d - 2 w(C x) for the element with the given index.
int hamming_gamma(const GF2Matrix& c, std::uint64_t index);
/// Rows pairwise distinct and nonzero.
bool is_ideal_character(const GF2Matrix& c);

struct IdealOrbitBound {
  Integer count;
  Integer gl_order;
  bool forced_stabilizer = false;
};
/// (binom(2^n - 1, d), |GL(n,2)|, count < |GL(n,2)|).
IdealOrbitBound count_ideal_orbit_bound(int n, int d);

/// Permutation representation of GF(2)^n on the 2d points +-b_k.
MatrixGroup permutation_rep(const GF2Matrix& c);

using EdgeSet = boost::dynamic_bitset<>;

/// Simple undirected graph; edges stored as (u, v) with u < v in sorted order.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);
  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool adjacent(int u, int v) const;
  /// Index of edge {u, v}, or -1.
  int edge_index(int u, int v) const;
  int degree(int v) const;
  Graph complement() const;
  int component_count() const;
  bool is_tree() const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> index_;
};

/// C(A): edges with exactly one end in A.
EdgeSet vertex_cut(const Graph& g, const std::vector<bool>& in_a);

class CutSpace {
 public:
  explicit CutSpace(const Graph& g);
  int dimension() const { return static_cast<int>(basis_.size()); }
  std::size_t size() const { return std::size_t{1} << basis_.size(); }
  const std::vector<EdgeSet>& basis() const { return basis_; }
  /// basis()[j] = C({basis_vertices()[j]}).
  const std::vector<int>& basis_vertices() const { return basis_vertices_; }
  /// Gray-code order: index i is the sum of basis elements selected by i ^ (i >> 1).
  EdgeSet cut(std::size_t index) const;
  std::vector<EdgeSet> enumerate() const;
  /// The basis as a |E| x dim GF(2) matrix (column j = basis element j).
  GF2Matrix matrix() const;

 private:
  int edges_;
  std::vector<EdgeSet> basis_;
  std::vector<int> basis_vertices_;
};

/// Default practical cap on the cut-space dimension for the admissible search.
constexpr int admissible_dim_cap = 14;
constexpr int admissible_hard_cap = 20;

/// Permutations of the cut sets fixing the empty set and preserving |S + T|.
/// Throws DimensionTooLarge above `dim_cap` (never above 20).
PermGroup admissible_perms(const Graph& g, int dim_cap = admissible_dim_cap);

/// |C Gamma| * |admissible_perms|. Requires a connected graph.
Integer affine_symmetry_order_of_cut_polytope(const Graph& g, int dim_cap = admissible_dim_cap);

/// Aut(Gamma) on the vertices.
PermGroup graph_automorphisms(const Graph& g);
/// The permutation of the cut sets (in enumeration order) induced by a vertex permutation.
Permutation induced_cut_permutation(const Graph& g, const CutSpace& space, const Permutation& p);

struct ClassTReport {
  bool enough_vertices = false;
  bool complement_is_tree = false;
  bool cover_exceeds_three = false;
  bool in_class() const { return enough_vertices && complement_is_tree && cover_exceeds_three; }
};
ClassTReport class_t_check(const Graph& g);

struct CutSizeReport {
  int max_principal = 0;
  int min_nonprincipal = 0;
  bool bounds_hold = false;
  bool no_four_cycle = false;
  bool all_bipartite = false;
};
/// Enumerates all cut sets of a graph in class T. Throws PreconditionError
/// outside T and InternalError if a bound fails.
CutSizeReport cut_size_bounds_check(const Graph& g);

/// Path 0 - 1 - ... - (n-2) with the leaf n-1 attached to vertex 2.
Graph caterpillar_tree(int n);
/// Complement of caterpillar_tree(n); n >= 7.
Graph caterpillar_complement(int n);

}  // namespace orbitope
