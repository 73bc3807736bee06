#include "orbitope/grpalg.hpp"

#include "orbitope/error.hpp"

namespace orbitope {

GroupAlgebraElement::GroupAlgebraElement(const MatrixGroup& group, std::vector<Rational> coefficients)
    : group_(&group), c_(std::move(coefficients)) {
  if (c_.size() != static_cast<std::size_t>(group.order()))
    throw PreconditionError("group algebra element has the wrong number of coefficients");
}

GroupAlgebraElement GroupAlgebraElement::zero(const MatrixGroup& group) {
  return {group, std::vector<Rational>(static_cast<std::size_t>(group.order()), Rational(0))};
}

GroupAlgebraElement GroupAlgebraElement::one(const MatrixGroup& group) {
  auto e = zero(group);
  e.c_[0] = 1;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::averaging(const MatrixGroup& group) {
  return {group, std::vector<Rational>(static_cast<std::size_t>(group.order()), Rational(1, group.order()))};
}

namespace {

void check_same_group(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (&a.group() != &b.group()) throw PreconditionError("group algebra elements over different groups");
}

}  // namespace

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same_group(a, b);
  auto out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
  return out;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same_group(a, b);
  auto out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
  return out;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same_group(a, b);
  const MatrixGroup& g = a.group();
  auto out = GroupAlgebraElement::zero(g);
  for (int x = 0; x < g.order(); ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < g.order(); ++y) {
      if (b[y].is_zero()) continue;
      out.c_[static_cast<std::size_t>(g.mul(x, y))] += a[x] * b[y];
    }
  }
  return out;
}

GroupAlgebraElement GroupAlgebraElement::translate(int x) const {
  auto out = zero(*group_);
  for (int y = 0; y < group_->order(); ++y) out.c_[static_cast<std::size_t>(group_->mul(x, y))] = c_[static_cast<std::size_t>(y)];
  return out;
}

VectorQ GroupAlgebraElement::act(const VectorQ& v) const {
  VectorQ out = VectorQ::Zero(group_->dim());
  for (int g = 0; g < group_->order(); ++g)
    if (!c_[static_cast<std::size_t>(g)].is_zero()) out += c_[static_cast<std::size_t>(g)] * (group_->element(g) * v);
  return out;
}

Rational inner(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  check_same_group(a, b);
  Rational s = 0;
  for (int g = 0; g < a.group().order(); ++g) s += a[g] * b[g];
  return s;
}

bool is_central(const GroupAlgebraElement& a) {
  const MatrixGroup& g = a.group();
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (a[g.mul(g.mul(x, y), g.inv(x))] != a[y]) return false;
  return true;
}

namespace {

// Q^-1 for the orbit family of v; throws NotGenerating unless the family spans.
MatrixQ inverse_gram(const MatrixGroup& g, const VectorQ& v, MatrixQ& family) {
  family = orbit_family(g, v);
  if (rank(family) != g.dim()) throw NotGenerating();
  return *inverse(gram(family));
}

}  // namespace

GroupAlgebraElement splitting_map(const MatrixGroup& g, const VectorQ& v, const VectorQ& x) {
  MatrixQ family;
  const VectorQ y = inverse_gram(g, v, family) * x;
  std::vector<Rational> c(static_cast<std::size_t>(g.order()));
  for (int k = 0; k < g.order(); ++k) c[static_cast<std::size_t>(k)] = family.col(k).dot(y);
  return {g, std::move(c)};
}

SplittingIdempotent splitting_idempotent(const MatrixGroup& g, const VectorQ& v) {
  GroupAlgebraElement f = splitting_map(g, v, v);
  IdempotentCertificate cert;
  cert.idempotent = f * f == f;
  cert.fixes_point = f.act(v) == v;
  cert.orthogonal = inner(GroupAlgebraElement::one(g) - f, f).is_zero();
  return {std::move(f), cert};
}

std::vector<Rational> orbit_character(const MatrixGroup& g, const VectorQ& v) {
  if (v.isZero()) throw NotGenerating();
  return orbit_color_row(g, v);
}

std::vector<Integer> gamma_character(const MatrixGroup& d) {
  const int n = d.dim();
  MatrixQ family(static_cast<Index>(n) * n, d.order());
  for (int k = 0; k < d.order(); ++k) {
    const MatrixQ& m = d.element(k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) family(static_cast<Index>(i) * n + j, k) = m(i, j);
  }
  const MatrixQ span = span_coordinates(family);
  std::vector<Integer> gamma(static_cast<std::size_t>(d.order()), Integer(0));
  if (span.rows() == 0) return gamma;
  const VectorQ y = *inverse(gram(span)) * span.col(0);
  for (int h = 0; h < d.order(); ++h) {
    const Rational value = Rational(d.order()) * y.dot(span.col(h));
    if (!is_integer(value)) throw InternalError("gamma value " + to_string(value) + " is not an integer");
    gamma[static_cast<std::size_t>(h)] = boost::multiprecision::numerator(value);
  }
  return gamma;
}

PermGroup reppoly_symgroup(const MatrixGroup& d) {
  const auto gamma = gamma_character(d);
  std::vector<Rational> row(gamma.begin(), gamma.end());
  return group_color_automorphisms(d, row);
}

bool has_inversion_symmetry(const MatrixGroup& g, const VectorQ& v) {
  if (!is_generating_point(g, v)) throw NotGenerating();
  const VectorQ centered = v - barycenter(g, v);
  const auto f = orbit_color_row(g, centered);
  bool by_colors = true;
  for (int a = 0; a < g.order() && by_colors; ++a)
    for (int b = 0; b < g.order() && by_colors; ++b)
      by_colors = f[static_cast<std::size_t>(g.mul(a, g.inv(b)))] == f[static_cast<std::size_t>(g.mul(g.inv(a), b))];
  const bool by_center = is_central(splitting_idempotent(g, centered).f);
  if (by_colors != by_center)
    throw InternalError("inversion color check and centrality of the splitting idempotent disagree");
  return by_colors;
}

GroupAlgebraElement gale_complement(const GroupAlgebraElement& f) {
  if (!(f * f == f)) throw NotIdempotent();
  const auto complement = GroupAlgebraElement::one(f.group()) - f;
  if (!inner(complement, f).is_zero()) throw NotOrthogonal();
  return complement;
}

MatrixQ algebra_orbit_family(const GroupAlgebraElement& a) {
  const int n = a.group().order();
  MatrixQ out(n, n);
  for (int g = 0; g < n; ++g) {
    const auto t = a.translate(g);
    for (int x = 0; x < n; ++x) out(x, g) = t[x];
  }
  return out;
}

GaleReport gale_check(const GroupAlgebraElement& f) {
  const auto complement = gale_complement(f);
  const PermGroup a = linsym_group_in_span(algebra_orbit_family(f));
  const PermGroup b = linsym_group_in_span(algebra_orbit_family(complement));
  GaleReport r;
  r.order_f = a.order();
  r.order_complement = b.order();
  r.same_group = r.order_f == r.order_complement;
  for (const auto& p : a.generators()) r.same_group = r.same_group && b.contains(p);
  for (const auto& p : b.generators()) r.same_group = r.same_group && a.contains(p);
  return r;
}

Integer bigsym_lower_bound(const MatrixGroup& g) {
  return Integer(2) * g.order() * (g.order() / g.center_order());
}

}  // namespace orbitope
