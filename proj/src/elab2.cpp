#include "orbitope/elab2.hpp"

#include "orbitope/colored_graph.hpp"
#include "orbitope/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>

namespace orbitope {

GF2Matrix::GF2Matrix(int rows, int cols) : cols_(cols), rows_(static_cast<std::size_t>(rows), 0) {
  if (rows < 0 || cols < 0 || cols > 64) throw PreconditionError("GF(2) matrices support at most 64 columns");
}

GF2Matrix GF2Matrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw ParseError("GF(2) matrix has no rows");
  const auto cols = rows.front().size();
  if (cols > 64) throw ParseError("GF(2) matrix has more than 64 columns");
  GF2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ParseError("GF(2) matrix rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != '0' && rows[r][c] != '1') throw ParseError("GF(2) matrix entries must be 0 or 1");
      m.set(static_cast<int>(r), static_cast<int>(c), rows[r][c] == '1');
    }
  }
  return m;
}

GF2Matrix GF2Matrix::identity(int n) {
  GF2Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void GF2Matrix::set(int r, int c, bool value) {
  auto& row = rows_[static_cast<std::size_t>(r)];
  const std::uint64_t bit = std::uint64_t{1} << c;
  row = value ? (row | bit) : (row & ~bit);
}

int GF2Matrix::rank() const {
  std::vector<std::uint64_t> basis;
  for (std::uint64_t r : rows_) {
    for (std::uint64_t b : basis) r = std::min(r, r ^ b);
    if (r != 0) {
      basis.push_back(r);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  return static_cast<int>(basis.size());
}

int GF2Matrix::weight_of_image(std::uint64_t x) const {
  int w = 0;
  for (std::uint64_t r : rows_) w += std::popcount(r & x) & 1;
  return w;
}

std::vector<std::string> GF2Matrix::to_strings() const {
  std::vector<std::string> out;
  for (int r = 0; r < rows(); ++r) {
    std::string s;
    for (int c = 0; c < cols_; ++c) s.push_back(get(r, c) ? '1' : '0');
    out.push_back(std::move(s));
  }
  return out;
}

std::uint64_t column_mask(std::uint64_t index, int n) {
  std::uint64_t mask = 0;
  for (int j = 0; j < n; ++j)
    if ((index >> (n - 1 - j)) & 1u) mask |= std::uint64_t{1} << j;
  return mask;
}

namespace {

constexpr int max_elab_rank = 12;

// Representation of GF(2)^n (n = c.cols()) by x -> image(x); the table is XOR on indices.
template <class Image>
MatrixGroup xor_group(const GF2Matrix& c, int dim, Image image) {
  const int n = c.cols();
  if (n > max_elab_rank) throw DimensionTooLarge("GF(2)^n supported up to n = 12");
  const std::size_t order = std::size_t{1} << n;
  std::vector<MatrixQ> elements;
  elements.reserve(order);
  for (std::size_t i = 0; i < order; ++i) elements.push_back(image(column_mask(i, n)));
  std::vector<int> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) table[a * order + b] = static_cast<int>(a ^ b);
  std::vector<int> generators;
  for (int j = 0; j < n; ++j) generators.push_back(1 << (n - 1 - j));
  return MatrixGroup::from_table(dim, std::move(elements), std::move(table), std::move(generators));
}

}  // namespace

MatrixGroup diag_rep(const GF2Matrix& c) {
  const int d = c.rows();
  return xor_group(c, d, [&](std::uint64_t x) {
    MatrixQ m = MatrixQ::Zero(d, d);
    for (int r = 0; r < d; ++r) m(r, r) = (std::popcount(c.row_mask(r) & x) & 1) ? -1 : 1;
    return m;
  });
}

MatrixGroup permutation_rep(const GF2Matrix& c) {
  const int d = c.rows();
  return xor_group(c, 2 * d, [&](std::uint64_t x) {
    MatrixQ m = MatrixQ::Zero(2 * d, 2 * d);
    for (int r = 0; r < d; ++r) {
      const bool flip = std::popcount(c.row_mask(r) & x) & 1;
      m(2 * r + (flip ? 1 : 0), 2 * r) = 1;
      m(2 * r + (flip ? 0 : 1), 2 * r + 1) = 1;
    }
    return m;
  });
}

int hamming_gamma(const GF2Matrix& c, std::uint64_t index) {
  return c.rows() - 2 * c.weight_of_image(column_mask(index, c.cols()));
}

bool is_ideal_character(const GF2Matrix& c) {
  std::set<std::uint64_t> seen;
  for (int r = 0; r < c.rows(); ++r)
    if (c.row_mask(r) == 0 || !seen.insert(c.row_mask(r)).second) return false;
  return true;
}

IdealOrbitBound count_ideal_orbit_bound(int n, int d) {
  if (n < 1 || n > 62) throw PreconditionError("n must lie in [1, 62]");
  const Integer points = (Integer(1) << n) - 1;
  if (d < 1 || Integer(d) > points) throw PreconditionError("d must lie in [1, 2^n - 1]");
  IdealOrbitBound b;
  b.count = 1;
  for (int k = 0; k < d; ++k) b.count = b.count * (points - k) / (k + 1);
  b.gl_order = 1;
  for (int i = 0; i < n; ++i) b.gl_order *= (Integer(1) << n) - (Integer(1) << i);
  b.forced_stabilizer = b.count < b.gl_order;
  return b;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  index_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("loops are not allowed");
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw PreconditionError("multiple edges are not allowed");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    index_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = static_cast<int>(e);
    index_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = static_cast<int>(e);
  }
}

bool Graph::adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  return index_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adjacent(u, v) ? 1 : 0;
  return d;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) out.emplace_back(u, v);
  return Graph(n_, std::move(out));
}

int Graph::component_count() const {
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  int count = 0;
  for (int s = 0; s < n_; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++count;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = true;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n_; ++v) {
        if (adjacent(u, v) && !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          q.push(v);
        }
      }
    }
  }
  return count;
}

bool Graph::is_tree() const { return n_ > 0 && component_count() == 1 && edge_count() == n_ - 1; }

EdgeSet vertex_cut(const Graph& g, const std::vector<bool>& in_a) {
  EdgeSet s(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto [u, v] = g.edges()[e];
    if (in_a[static_cast<std::size_t>(u)] != in_a[static_cast<std::size_t>(v)]) s.set(e);
  }
  return s;
}

CutSpace::CutSpace(const Graph& g) : edges_(g.edge_count()) {
  std::vector<EdgeSet> reduced;
  std::vector<std::size_t> pivots;
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> a(static_cast<std::size_t>(g.vertex_count()), false);
    a[static_cast<std::size_t>(v)] = true;
    EdgeSet c = vertex_cut(g, a);
    EdgeSet r = c;
    for (std::size_t k = 0; k < reduced.size(); ++k)
      if (r.test(pivots[k])) r ^= reduced[k];
    if (r.none()) continue;
    pivots.push_back(r.find_first());
    reduced.push_back(std::move(r));
    basis_.push_back(std::move(c));
    basis_vertices_.push_back(v);
  }
}

EdgeSet CutSpace::cut(std::size_t index) const {
  const std::size_t gray = index ^ (index >> 1);
  EdgeSet s(static_cast<std::size_t>(edges_));
  for (std::size_t j = 0; j < basis_.size(); ++j)
    if ((gray >> j) & 1u) s ^= basis_[j];
  return s;
}

std::vector<EdgeSet> CutSpace::enumerate() const {
  if (dimension() > admissible_hard_cap) throw DimensionTooLarge("cut space dimension above 20");
  std::vector<EdgeSet> out;
  out.reserve(size());
  EdgeSet s(static_cast<std::size_t>(edges_));
  out.push_back(s);
  for (std::size_t i = 1; i < size(); ++i) {
    s ^= basis_[static_cast<std::size_t>(std::countr_zero(i))];
    out.push_back(s);
  }
  return out;
}

GF2Matrix CutSpace::matrix() const {
  GF2Matrix m(edges_, dimension());
  for (int j = 0; j < dimension(); ++j)
    for (int e = 0; e < edges_; ++e) m.set(e, j, basis_[static_cast<std::size_t>(j)].test(static_cast<std::size_t>(e)));
  return m;
}

PermGroup admissible_perms(const Graph& g, int dim_cap) {
  const CutSpace space(g);
  const int dim = space.dimension();
  if (dim > std::min(dim_cap, admissible_hard_cap))
    throw DimensionTooLarge("cut space dimension " + std::to_string(dim) + " exceeds the cap " +
                            std::to_string(std::min(dim_cap, admissible_hard_cap)));
  // size[c] = |sum of the basis elements selected by the mask c|.
  auto size = std::make_shared<std::vector<int>>(space.size());
  EdgeSet s(static_cast<std::size_t>(g.edge_count()));
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i > 0) s ^= space.basis()[static_cast<std::size_t>(std::countr_zero(i))];
    (*size)[i ^ (i >> 1)] = static_cast<int>(s.count());
  }
  const ColoredGraph graph(static_cast<int>(space.size()), [size](int u, int v) {
    const auto gu = static_cast<std::size_t>(u ^ (u >> 1));
    const auto gv = static_cast<std::size_t>(v ^ (v >> 1));
    return (*size)[u == v ? gu : gu ^ gv];
  });
  return automorphism_group(graph).point_stabilizer(0);
}

Integer affine_symmetry_order_of_cut_polytope(const Graph& g, int dim_cap) {
  if (g.component_count() != 1) throw PreconditionError("graph must be connected");
  const CutSpace space(g);
  return Integer(space.size()) * admissible_perms(g, dim_cap).order();
}

PermGroup graph_automorphisms(const Graph& g) {
  std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
  return automorphism_group(ColoredGraph(g.vertex_count(), [&g, degree](int u, int v) {
    if (u == v) return degree[static_cast<std::size_t>(u)];
    return g.adjacent(u, v) ? 1 : 0;
  }));
}

Permutation induced_cut_permutation(const Graph& g, const CutSpace& space, const Permutation& p) {
  const auto cuts = space.enumerate();
  std::map<EdgeSet, int> index;
  for (std::size_t i = 0; i < cuts.size(); ++i) index.emplace(cuts[i], static_cast<int>(i));
  std::vector<int> images(cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    EdgeSet image(static_cast<std::size_t>(g.edge_count()));
    for (auto e = cuts[i].find_first(); e != EdgeSet::npos; e = cuts[i].find_next(e)) {
      const auto [u, v] = g.edges()[e];
      const int f = g.edge_index(p(u), p(v));
      if (f < 0) throw PreconditionError("vertex permutation is not a graph automorphism");
      image.set(static_cast<std::size_t>(f));
    }
    const auto it = index.find(image);
    if (it == index.end()) throw InternalError("image of a cut set is not a cut set");
    images[i] = it->second;
  }
  return Permutation(std::move(images));
}

ClassTReport class_t_check(const Graph& g) {
  ClassTReport r;
  const int n = g.vertex_count();
  r.enough_vertices = n >= 7;
  const Graph tree = g.complement();
  r.complement_is_tree = tree.is_tree();
  auto covers = [&](std::initializer_list<int> vs) {
    for (auto [u, v] : tree.edges()) {
      bool hit = false;
      for (int x : vs) hit = hit || x == u || x == v;
      if (!hit) return false;
    }
    return true;
  };
  bool small_cover = tree.edge_count() == 0;
  for (int a = 0; a < n && !small_cover; ++a) {
    small_cover = covers({a});
    for (int b = a + 1; b < n && !small_cover; ++b) {
      small_cover = covers({a, b});
      for (int c = b + 1; c < n && !small_cover; ++c) small_cover = covers({a, b, c});
    }
  }
  r.cover_exceeds_three = !small_cover;
  return r;
}

namespace {

bool is_four_cycle(const Graph& g, const EdgeSet& s) {
  if (s.count() != 4) return false;
  std::map<int, int> degree;
  for (auto e = s.find_first(); e != EdgeSet::npos; e = s.find_next(e)) {
    ++degree[g.edges()[e].first];
    ++degree[g.edges()[e].second];
  }
  if (degree.size() != 4) return false;
  return std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 2; });
}

bool is_bipartite(const Graph& g, const EdgeSet& s) {
  const int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (side[static_cast<std::size_t>(start)] >= 0) continue;
    side[static_cast<std::size_t>(start)] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        const int e = g.edge_index(u, v);
        if (e < 0 || !s.test(static_cast<std::size_t>(e))) continue;
        auto& sv = side[static_cast<std::size_t>(v)];
        if (sv < 0) {
          sv = 1 - side[static_cast<std::size_t>(u)];
          q.push(v);
        } else if (sv == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

CutSizeReport cut_size_bounds_check(const Graph& g) {
  if (!class_t_check(g).in_class()) throw PreconditionError("graph is not in class T");
  const int n = g.vertex_count();
  std::set<EdgeSet> principal;
  for (int v = 0; v < n; ++v) {
    std::vector<bool> a(static_cast<std::size_t>(n), false);
    a[static_cast<std::size_t>(v)] = true;
    principal.insert(vertex_cut(g, a));
  }
  const CutSpace space(g);
  CutSizeReport r;
  r.min_nonprincipal = g.edge_count() + 1;
  r.no_four_cycle = true;
  r.all_bipartite = true;
  for (const auto& s : space.enumerate()) {
    if (s.none()) continue;
    const int size = static_cast<int>(s.count());
    if (principal.count(s))
      r.max_principal = std::max(r.max_principal, size);
    else
      r.min_nonprincipal = std::min(r.min_nonprincipal, size);
    r.no_four_cycle = r.no_four_cycle && !is_four_cycle(g, s);
    r.all_bipartite = r.all_bipartite && is_bipartite(g, s);
  }
  r.bounds_hold = r.max_principal <= n - 2 && r.min_nonprincipal >= n - 1;
  if (!r.bounds_hold || !r.no_four_cycle || !r.all_bipartite)
    throw InternalError("cut-size bounds violated for a graph in class T");
  return r;
}

Graph caterpillar_tree(int n) {
  if (n < 4) throw PreconditionError("caterpillar tree needs at least 4 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n - 1; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(2, n - 1);
  return Graph(n, std::move(edges));
}

Graph caterpillar_complement(int n) {
  if (n < 7) throw PreconditionError("caterpillar complement needs n >= 7");
  return caterpillar_tree(n).complement();
}

}  // namespace orbitope
