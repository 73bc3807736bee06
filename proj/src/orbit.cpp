#include "orbitope/orbit.hpp"

#include "orbitope/error.hpp"

#include <cstdlib>
#include <future>
#include <map>
#include <random>
#include <string>

namespace orbitope {

namespace {

constexpr std::size_t table_cap = 4096;

std::vector<Rational> flatten(const MatrixQ& m) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

MatrixGroup MatrixGroup::close(int dim, const std::vector<MatrixQ>& generators, std::size_t max_order) {
  for (const auto& s : generators) {
    if (s.rows() != dim || s.cols() != dim) throw PreconditionError("generator has the wrong shape");
    if (rank(s) != dim) throw PreconditionError("generator is not invertible");
  }
  MatrixGroup g;
  g.dim_ = dim;
  std::map<std::vector<Rational>, int> index;
  g.elements_.push_back(MatrixQ::Identity(dim, dim));
  index.emplace(flatten(g.elements_.front()), 0);
  // left[s][e] = index of generators[s] * element e; parent links give words.
  std::vector<std::vector<int>> left(generators.size());
  std::vector<int> parent{-1};
  std::vector<int> via{-1};
  for (std::size_t k = 0; k < g.elements_.size(); ++k) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      MatrixQ product = generators[s] * g.elements_[k];
      auto [it, inserted] = index.try_emplace(flatten(product), static_cast<int>(g.elements_.size()));
      if (inserted) {
        if (g.elements_.size() >= max_order) throw OrderExceeded(max_order);
        if (g.elements_.size() >= table_cap)
          throw ResourceError("group has more than 4096 elements (multiplication table cap)");
        g.elements_.push_back(std::move(product));
        parent.push_back(static_cast<int>(k));
        via.push_back(static_cast<int>(s));
      }
      left[s].push_back(it->second);
    }
  }
  for (const auto& s : generators) g.generators_.push_back(index.at(flatten(s)));

  const std::size_t n = g.elements_.size();
  g.table_.resize(n * n);
  std::vector<int> word;
  for (std::size_t a = 0; a < n; ++a) {
    word.clear();
    for (int x = static_cast<int>(a); x != 0; x = parent[static_cast<std::size_t>(x)])
      word.push_back(via[static_cast<std::size_t>(x)]);
    for (std::size_t b = 0; b < n; ++b) {
      int x = static_cast<int>(b);
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        x = left[static_cast<std::size_t>(*it)][static_cast<std::size_t>(x)];
      g.table_[a * n + b] = x;
    }
  }
  g.finish();
  return g;
}

MatrixGroup MatrixGroup::from_table(int dim, std::vector<MatrixQ> elements, std::vector<int> table,
                                    std::vector<int> generators) {
  const std::size_t n = elements.size();
  if (n == 0 || table.size() != n * n) throw PreconditionError("multiplication table has the wrong size");
  MatrixGroup g;
  g.dim_ = dim;
  g.elements_ = std::move(elements);
  g.table_ = std::move(table);
  g.generators_ = std::move(generators);
  for (std::size_t a = 0; a < n; ++a) {
    if (g.table_[a] != static_cast<int>(a) || g.table_[a * n] != static_cast<int>(a))
      throw PreconditionError("element 0 of a multiplication table must be the identity");
  }
  std::map<std::vector<Rational>, int> seen;
  for (const auto& m : g.elements_) {
    if (m.rows() != dim || m.cols() != dim) throw PreconditionError("element has the wrong shape");
    if (!seen.emplace(flatten(m), 0).second) g.faithful_ = false;
  }
  g.finish();
  return g;
}

void MatrixGroup::finish() {
  const int n = order();
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) inverse_[static_cast<std::size_t>(a)] = b;
  for (int x : inverse_)
    if (x < 0) throw PreconditionError("multiplication table is not a group");
}

Permutation MatrixGroup::left_mult(int x) const {
  std::vector<int> images(static_cast<std::size_t>(order()));
  for (int g = 0; g < order(); ++g) images[static_cast<std::size_t>(g)] = mul(x, g);
  return Permutation(std::move(images));
}

Permutation MatrixGroup::right_mult(int x) const {
  std::vector<int> images(static_cast<std::size_t>(order()));
  for (int g = 0; g < order(); ++g) images[static_cast<std::size_t>(g)] = mul(g, inv(x));
  return Permutation(std::move(images));
}

Permutation MatrixGroup::inversion() const {
  std::vector<int> images(static_cast<std::size_t>(order()));
  for (int g = 0; g < order(); ++g) images[static_cast<std::size_t>(g)] = inv(g);
  return Permutation(std::move(images));
}

int MatrixGroup::center_order() const {
  int count = 0;
  for (int z = 0; z < order(); ++z) {
    bool central = true;
    for (int g = 0; g < order() && central; ++g) central = mul(z, g) == mul(g, z);
    if (central) ++count;
  }
  return count;
}

MatrixQ orbit_family(const MatrixGroup& g, const VectorQ& v) {
  if (v.size() != g.dim()) throw PreconditionError("point has the wrong dimension");
  MatrixQ out(g.dim(), g.order());
  for (int k = 0; k < g.order(); ++k) out.col(k) = g.element(k) * v;
  return out;
}

VectorQ barycenter(const MatrixGroup& g, const VectorQ& v) {
  const MatrixQ family = orbit_family(g, v);
  VectorQ sum = VectorQ::Zero(g.dim());
  for (Index k = 0; k < family.cols(); ++k) sum += family.col(k);
  return sum / Rational(g.order());
}

bool is_generating_point(const MatrixGroup& g, const VectorQ& v) {
  const VectorQ centered = v - barycenter(g, v);
  return rank(orbit_family(g, centered)) == g.dim();
}

std::vector<int> stabilizer_in_group(const MatrixGroup& g, const VectorQ& v) {
  if (v.size() != g.dim()) throw PreconditionError("point has the wrong dimension");
  std::vector<int> out;
  for (int k = 0; k < g.order(); ++k)
    if (g.element(k) * v == v) out.push_back(k);
  return out;
}

std::vector<Rational> orbit_color_row(const MatrixGroup& g, const VectorQ& v) {
  const MatrixQ span = span_coordinates(orbit_family(g, v));
  std::vector<Rational> row(static_cast<std::size_t>(g.order()), Rational(0));
  if (span.rows() == 0) return row;
  const VectorQ y = *inverse(gram(span)) * span.col(0);
  for (int h = 0; h < g.order(); ++h) row[static_cast<std::size_t>(h)] = y.dot(span.col(h));
  return row;
}

PermGroup affsym_group(const MatrixGroup& g, const VectorQ& v) {
  if (!is_generating_point(g, v)) throw NotGenerating();
  return group_color_automorphisms(g, orbit_color_row(g, v - barycenter(g, v)));
}

MatrixQ realize_affine(const MatrixGroup& g, const VectorQ& v, const Permutation& s) {
  return realize(orbit_family(g, v - barycenter(g, v)), s);
}

int symbolic_dim_cap() {
  if (const char* env = std::getenv("ORBITOPE_MAX_DIM")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 0) return std::min(cap, Monomial::max_vars);
    } catch (const std::exception&) {
    }
    throw ParseError("ORBITOPE_MAX_DIM must be a non-negative integer");
  }
  return 4;
}

std::vector<MultiPoly> symbolic_color_row(const MatrixGroup& g) {
  const int d = g.dim();
  if (d > Monomial::max_vars) throw DimensionTooLarge("symbolic mode supports at most 7 variables");
  Vector<MultiPoly> x(d);
  for (int i = 0; i < d; ++i) x(i) = MultiPoly::variable(i);
  MatrixP family(d, g.order());
  for (int k = 0; k < g.order(); ++k) family.col(k) = to_poly(g.element(k)) * x;
  auto [det, adj] = det_adj<MultiPoly>(gram(family));
  if (det.is_zero()) throw NoGeneratingPoint();
  const Vector<MultiPoly> y = adj * x;
  std::vector<MultiPoly> row(static_cast<std::size_t>(g.order()));
  for (int h = 0; h < g.order(); ++h) {
    MultiPoly s;
    for (int i = 0; i < d; ++i) s += y(i) * family(i, h);
    row[static_cast<std::size_t>(h)] = std::move(s);
  }
  return row;
}

VectorQ sample_point(int dim, std::uint64_t seed, std::size_t index, int bound) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + index);
  std::uniform_int_distribution<int> dist(-bound, bound);
  VectorQ p(dim);
  for (int i = 0; i < dim; ++i) p(i) = Rational(dist(rng));
  return p;
}

namespace {

bool preserves_colors(const MatrixGroup& g, const std::vector<MultiPoly>& row, const Permutation& p) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (!(row[static_cast<std::size_t>(g.mul(g.inv(p(a)), p(b)))] ==
            row[static_cast<std::size_t>(g.mul(g.inv(a), b))]))
        return false;
  return true;
}

bool symbolic_feasible(const MatrixGroup& g) {
  return g.dim() <= symbolic_dim_cap() && g.order() <= symbolic_order_cap;
}

}  // namespace

GenericResult generic_linsym(const MatrixGroup& g, const GenericOptions& options) {
  GenericMode mode = options.mode;
  if (mode == GenericMode::Auto) mode = symbolic_feasible(g) ? GenericMode::Exact : GenericMode::MonteCarlo;

  if (mode == GenericMode::Exact) {
    if (g.dim() > symbolic_dim_cap())
      throw DimensionTooLarge("symbolic mode is capped at dimension " + std::to_string(symbolic_dim_cap()) +
                              " (set ORBITOPE_MAX_DIM to raise it)");
    const auto row = symbolic_color_row(g);
    return GenericResult{group_color_automorphisms(g, row), true, true, 0, options.seed, {}};
  }

  const std::size_t wanted = std::max<std::size_t>(options.samples, 1);
  std::vector<VectorQ> points;
  for (std::size_t index = 0; points.size() < wanted && index < 100 * wanted + 100; ++index) {
    VectorQ p = sample_point(g.dim(), options.seed, index);
    if (rank(orbit_family(g, p)) != g.dim()) continue;
    if (g.faithful() && stabilizer_in_group(g, p).size() != 1) continue;
    points.push_back(std::move(p));
  }
  if (points.empty()) throw NoGeneratingPoint();

  std::vector<std::vector<Rational>> rows(points.size());
  const std::size_t threads = std::max<std::size_t>(options.threads, 1);
  if (threads == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) rows[i] = orbit_color_row(g, points[i]);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t t = 0; t < threads; ++t) {
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < points.size(); i += threads) rows[i] = orbit_color_row(g, points[i]);
      }));
    }
    for (auto& j : jobs) j.get();
  }

  // Intersection of the sampled groups = automorphisms for the tuple colors.
  std::map<std::vector<Rational>, int> tuple_ids;
  std::vector<int> ids(static_cast<std::size_t>(g.order()));
  for (int h = 0; h < g.order(); ++h) {
    std::vector<Rational> key;
    for (const auto& r : rows) key.push_back(r[static_cast<std::size_t>(h)]);
    ids[static_cast<std::size_t>(h)] = tuple_ids.try_emplace(key, static_cast<int>(tuple_ids.size())).first->second;
  }
  GenericResult result{group_color_automorphisms(g, ids), false, false, points.size(), options.seed, points};

  if (g.dim() <= symbolic_dim_cap()) {
    const auto row = symbolic_color_row(g);
    result.verified = true;
    for (const auto& p : result.group.generators())
      result.verified = result.verified && preserves_colors(g, row, p);
  }
  return result;
}

GenericReport is_generic(const MatrixGroup& g, const VectorQ& v, const GenericOptions& options) {
  GenericReport r;
  r.generic_order = generic_linsym(g, options).group.order();
  r.full_dimensional = is_generating_point(g, v);
  r.trivial_stabilizer = stabilizer_in_group(g, v).size() == 1;
  if (r.full_dimensional) {
    r.point_order = affsym_group(g, v).order();
    r.symmetry_match = r.point_order == r.generic_order;
  }
  return r;
}

ClosureReport generic_closure_check(const MatrixGroup& g, const VectorQ& v, const std::optional<VectorQ>& w,
                                    const GenericOptions& options) {
  const PermGroup sym = affsym_group(g, v);
  ClosureReport report;
  for (const auto& p : sym.generators()) report.hat_generators.push_back(realize_affine(g, v, p));
  const MatrixGroup hat = MatrixGroup::close(g.dim(), report.hat_generators, options.max_order);
  report.hat_order = hat.order();

  if (w) {
    report.test_point = *w;
  } else {
    bool found = false;
    for (std::size_t index = 0; index < 1000 && !found; ++index) {
      VectorQ p = sample_point(g.dim(), options.seed, 1000 + index);
      if (is_generating_point(hat, p) && stabilizer_in_group(hat, p).size() == 1) {
        report.test_point = std::move(p);
        found = true;
      }
    }
    if (!found) throw NoGeneratingPoint();
  }
  report.test_order = affsym_group(hat, report.test_point).order();
  report.closed = report.test_order == hat.order();
  report.certified = report.closed;
  if (!report.closed && symbolic_feasible(hat)) {
    GenericOptions exact = options;
    exact.mode = GenericMode::Exact;
    report.closed = generic_linsym(hat, exact).group.order() == hat.order();
    report.certified = true;
  }
  return report;
}

}  // namespace orbitope
