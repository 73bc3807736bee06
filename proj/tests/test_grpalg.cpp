#include "support.hpp"

#include "orbitope/error.hpp"
#include "orbitope/grpalg.hpp"

#include <doctest.h>

#include <random>

using namespace orbitope;
using namespace orbitope::test;

namespace {

int find_element(const MatrixGroup& g, const MatrixQ& m) {
  for (int i = 0; i < g.order(); ++i)
    if (g.element(i) == m) return i;
  return -1;
}

MatrixQ kron_identity(const MatrixQ& g) {
  const Index n = g.rows();
  MatrixQ out = MatrixQ::Zero(n * n, n * n);
  for (Index b = 0; b < n; ++b) out.block(b * n, b * n, n, n) = g;
  return out;
}

// Left multiplication action of a matrix group on its matrix space, and vec(I).
std::pair<MatrixGroup, VectorQ> left_action(const MatrixGroup& g) {
  std::vector<MatrixQ> gens;
  for (int x : g.generators()) gens.push_back(kron_identity(g.element(x)));
  const Index n = g.dim();
  VectorQ id = VectorQ::Zero(n * n);
  for (Index i = 0; i < n; ++i) id(i * n + i) = 1;
  return {MatrixGroup::close(static_cast<int>(n * n), gens), id};
}

}  // namespace

TEST_CASE("splitting idempotent of the square") {
  const MatrixGroup c4 = load_group("c4.json");
  const VectorQ v = vec({1, 0});
  const auto s = splitting_idempotent(c4, v);
  const int t = find_element(c4, mat({{0, -1}, {1, 0}}));
  const int t2 = find_element(c4, mat({{-1, 0}, {0, -1}}));
  const int t3 = find_element(c4, mat({{0, 1}, {-1, 0}}));
  CHECK(s.f[0] == Rational(1, 2));
  CHECK(s.f[t] == 0);
  CHECK(s.f[t2] == Rational(-1, 2));
  CHECK(s.f[t3] == 0);
  CHECK(s.certificate.ok());
  CHECK(s.f * s.f == s.f);
  const auto chi = orbit_character(c4, v);
  CHECK(chi[0] == Rational(1, 2));
  CHECK(chi[static_cast<std::size_t>(t2)] == Rational(-1, 2));
  CHECK(splitting_map(c4, v, v) == s.f);
}

TEST_CASE("splitting idempotent requires a spanning orbit") {
  const MatrixGroup s3 = load_group("s3.json");
  CHECK_THROWS_AS(splitting_idempotent(s3, vec({1, 1, 1})), NotGenerating);
  CHECK_THROWS_AS(orbit_character(s3, vec({0, 0, 0})), NotGenerating);
  // a fixed point spans a line; every coefficient is 1/|G|
  for (const auto& c : orbit_character(s3, vec({1, 1, 1}))) CHECK(c == Rational(1, 6));
}

TEST_CASE("group algebra arithmetic") {
  const MatrixGroup d4 = load_group("d4.json");
  const auto e = GroupAlgebraElement::averaging(d4);
  CHECK(e * e == e);
  CHECK(is_central(e));
  CHECK(GroupAlgebraElement::one(d4) * e == e);
  CHECK(e - e == GroupAlgebraElement::zero(d4));
  for (int x = 0; x < d4.order(); ++x) CHECK(e.translate(x) == e);
  CHECK(e.act(vec({2, 1})) == vec({0, 0}));
  CHECK(inner(e, GroupAlgebraElement::one(d4)) == Rational(1, 8));
}

TEST_CASE("gamma of the natural representation of S3") {
  const MatrixGroup s3 = load_group("s3.json");
  const auto gamma = gamma_character(s3);
  const Json& oracle = reference()["gamma_s3_by_class"];
  for (int g = 0; g < s3.order(); ++g) {
    const Rational tr = s3.element(g).trace();
    const char* cls = tr == 3 ? "identity" : (tr == 1 ? "transposition" : "three_cycle");
    CHECK(gamma[static_cast<std::size_t>(g)] == oracle[cls].get<int>());
  }
  // the orbit formula on the matrix space: |G| f = gamma
  const auto [left, id] = left_action(s3);
  const auto chi = orbit_character(left, id);
  for (int g = 0; g < s3.order(); ++g) {
    const int lg = find_element(left, kron_identity(s3.element(g)));
    CHECK(chi[static_cast<std::size_t>(lg)] * 6 == Rational(gamma[static_cast<std::size_t>(g)]));
  }
}

TEST_CASE("gamma is a real class function with gamma(e) = dim span D(G)") {
  for (const char* name : {"d4.json", "q8.json", "s3.json", "c5.json", "c3.json"}) {
    const MatrixGroup g = load_group(name);
    const auto gamma = gamma_character(g);
    MatrixQ vecs(g.dim() * g.dim(), g.order());
    for (int x = 0; x < g.order(); ++x) vecs.col(x) = g.element(x).reshaped();
    CHECK(gamma[0] == rank(vecs));
    for (int x = 0; x < g.order(); ++x) {
      CHECK(gamma[static_cast<std::size_t>(x)] == gamma[static_cast<std::size_t>(g.inv(x))]);
      for (int y = 0; y < g.order(); ++y)
        CHECK(gamma[static_cast<std::size_t>(x)] == gamma[static_cast<std::size_t>(g.mul(g.mul(y, x), g.inv(y)))]);
    }
  }
}

TEST_CASE("Birkhoff polytope B3") {
  const MatrixGroup s3 = load_group("s3.json");
  const PermGroup sym = reppoly_symgroup(s3);
  CHECK(sym.order() == reference()["birkhoff3_affsym"].get<int>());
  std::vector<Permutation> big;
  for (int x = 0; x < s3.order(); ++x) {
    CHECK(sym.contains(s3.left_mult(x)));
    CHECK(sym.contains(s3.right_mult(x)));
    big.push_back(s3.left_mult(x));
    big.push_back(s3.right_mult(x));
  }
  CHECK(sym.contains(s3.inversion()));
  big.push_back(s3.inversion());
  CHECK(PermGroup(6, big).order() == 72);
}

TEST_CASE("representation polytope of C4 contains inversion") {
  const MatrixGroup c4 = load_group("c4.json");
  CHECK(reppoly_symgroup(c4).contains(c4.inversion()));
}

TEST_CASE("inversion symmetry") {
  const MatrixGroup c4 = load_group("c4.json");
  const MatrixGroup d4 = load_group("d4.json");
  CHECK(has_inversion_symmetry(c4, vec({1, 0})));
  CHECK(has_inversion_symmetry(c4, vec({3, -7})));
  CHECK_FALSE(has_inversion_symmetry(d4, vec({2, 1})));
  CHECK_FALSE(is_central(splitting_idempotent(d4, vec({2, 1})).f));
  const auto [left, id] = left_action(d4);
  CHECK(has_inversion_symmetry(left, id));
}

TEST_CASE("Gale complement") {
  const MatrixGroup c4 = load_group("c4.json");
  const auto e = GroupAlgebraElement::averaging(c4);
  CHECK(gale_complement(e) == GroupAlgebraElement::one(c4) - e);
  const GaleReport avg = gale_check(e);
  CHECK(avg.order_f == 24);
  CHECK(avg.order_complement == 24);
  const GaleReport sq = gale_check(splitting_idempotent(c4, vec({1, 0})).f);
  CHECK(sq.same_group);
  CHECK(sq.order_f == sq.order_complement);
  const auto t = GroupAlgebraElement(c4, {Rational(0), Rational(1), Rational(0), Rational(0)});
  CHECK_THROWS_AS(gale_complement(t), NotIdempotent);
}

TEST_CASE("lower bound on representation polytope symmetries") {
  CHECK(bigsym_lower_bound(load_group("s3.json")) == 72);
  CHECK(bigsym_lower_bound(load_group("c4.json")) == 8);
  CHECK(bigsym_lower_bound(load_group("q8.json")) == 64);
}

TEST_CASE("property: splitting idempotent postconditions") {
  std::mt19937_64 rng(41);
  const auto groups = small_groups();
  for (int trial = 0; trial < 28; ++trial) {
    const MatrixGroup& g = groups[static_cast<std::size_t>(trial) % groups.size()];
    const VectorQ v = spanning_point(g, rng);
    const auto s = splitting_idempotent(g, v);
    const auto one = GroupAlgebraElement::one(g);
    CHECK(s.f * s.f == s.f);
    CHECK(s.f.act(v) == v);
    CHECK(inner(one - s.f, s.f) == 0);
    CHECK(s.certificate.ok());
  }
}

TEST_CASE("property: Gale complement has the same linear symmetry group") {
  std::mt19937_64 rng(42);
  const auto groups = small_groups();
  for (int trial = 0; trial < 28; ++trial) {
    const MatrixGroup& g = groups[static_cast<std::size_t>(trial) % groups.size()];
    const GaleReport r = gale_check(splitting_idempotent(g, spanning_point(g, rng)).f);
    CHECK(r.order_f == r.order_complement);
    CHECK(r.same_group);
  }
}
