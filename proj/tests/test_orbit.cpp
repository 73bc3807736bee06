#include "support.hpp"

#include "orbitope/error.hpp"
#include "orbitope/symcore.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

using namespace orbitope;
using namespace orbitope::test;

TEST_CASE("closing generators into a group") {
  const MatrixGroup d4 = MatrixGroup::close(2, {mat({{0, -1}, {1, 0}}), mat({{1, 0}, {0, -1}})});
  CHECK(d4.order() == 8);
  CHECK(d4.faithful());
  CHECK(d4.center_order() == 2);
  CHECK_FALSE(d4.is_abelian());
  CHECK(load_group("c4.json").is_abelian());
  CHECK(load_group("q8.json").order() == 8);
  CHECK(load_group("q8.json").center_order() == 2);
  CHECK(load_group("s3.json").order() == 6);
  CHECK(load_group("c5.json").order() == 5);
  for (int a = 0; a < d4.order(); ++a) {
    CHECK(d4.mul(a, d4.inv(a)) == 0);
    for (int b = 0; b < d4.order(); ++b) CHECK(d4.element(d4.mul(a, b)) == MatrixQ(d4.element(a) * d4.element(b)));
  }
  CHECK_THROWS_AS(MatrixGroup::close(2, {mat({{1, 1}, {0, 1}})}, 50), OrderExceeded);
  CHECK_THROWS_AS(MatrixGroup::close(2, {mat({{0, -1}, {1, 0}})}, 3), OrderExceeded);
}

TEST_CASE("generating points and stabilizers") {
  const MatrixGroup d4 = load_group("d4.json");
  CHECK(is_generating_point(d4, vec({2, 1})));
  CHECK(is_generating_point(d4, vec({1, 0})));
  CHECK_FALSE(is_generating_point(d4, vec({0, 0})));
  CHECK(stabilizer_in_group(d4, vec({2, 1})).size() == 1);
  CHECK(stabilizer_in_group(d4, vec({1, 0})).size() == 2);
  CHECK(barycenter(d4, vec({2, 1})) == vec({0, 0}));
  CHECK_THROWS_AS(affsym_group(d4, vec({0, 0})), NotGenerating);
}

TEST_CASE("affine symmetry groups of orbit polytopes") {
  const Json& o = reference()["orbit_affsym"];
  CHECK(affsym_group(load_group("d4.json"), vec({2, 1})).order() == o["d4_2_1"].get<int>());
  CHECK(affsym_group(load_group("c4.json"), vec({1, 0})).order() == o["c4_1_0"].get<int>());
  CHECK(affsym_group(load_group("c3.json"), vec({1, 0})).order() == o["c3_1_0"].get<int>());
  CHECK(affsym_group(load_group("c5.json"), vec({1, 2, -3, 7})).order() == o["c5_1_2_m3_7"].get<int>());
}

TEST_CASE("affine realizations map the orbit onto itself") {
  const MatrixGroup c4 = load_group("c4.json");
  const VectorQ v = vec({3, 1});
  const PermGroup sym = affsym_group(c4, v);
  const VectorQ c = barycenter(c4, v);
  for (const auto& s : sym.generators()) {
    const MatrixQ a = realize_affine(c4, v, s);
    for (int g = 0; g < c4.order(); ++g)
      CHECK(VectorQ(a * (c4.element(g) * v - c) + c) == VectorQ(c4.element(s(g)) * v));
  }
}

TEST_CASE("generic symmetry groups") {
  CHECK(generic_linsym(load_group("c4.json")).group.order() == 8);
  CHECK(generic_linsym(load_group("d4.json")).group.order() == 8);
  CHECK(generic_linsym(load_group("c3.json")).group.order() == 6);
  const GenericResult r = generic_linsym(load_group("d4.json"), {GenericMode::Exact});
  CHECK(r.exact);
  CHECK(r.verified);
  CHECK(symbolic_color_row(load_group("d4.json")).size() == 8);
}

TEST_CASE("Monte-Carlo mode is seeded and thread independent") {
  const MatrixGroup d4 = load_group("d4.json");
  GenericOptions opts{GenericMode::MonteCarlo, 6, 42, 1};
  const GenericResult one = generic_linsym(d4, opts);
  opts.threads = 4;
  const GenericResult four = generic_linsym(d4, opts);
  CHECK_FALSE(one.exact);
  CHECK(one.verified);
  CHECK(one.seed == 42);
  CHECK(one.samples == 6);
  CHECK(one.group.order() == 8);
  REQUIRE(one.sample_points.size() == four.sample_points.size());
  for (std::size_t i = 0; i < one.sample_points.size(); ++i) CHECK(one.sample_points[i] == four.sample_points[i]);
  CHECK(one.group.generators().size() == four.group.generators().size());
  CHECK(sample_point(3, 9, 2) == sample_point(3, 9, 2));
  CHECK_FALSE(sample_point(3, 9, 2) == sample_point(3, 10, 2));
}

TEST_CASE("points on the mirror lines of D4 are not generic") {
  const MatrixGroup d4 = load_group("d4.json");
  CHECK(is_generic(d4, vec({2, 1})).generic());
  for (const VectorQ& v : {vec({1, 0}), vec({0, 3}), vec({1, 1}), vec({2, -2}), vec({-5, 0})}) {
    const GenericReport r = is_generic(d4, v);
    CHECK_FALSE(r.generic());
    CHECK_FALSE(r.trivial_stabilizer);
  }
  const GenericReport r = is_generic(d4, vec({1, 0}));
  CHECK(r.generic_order == 8);
  CHECK(r.point_order == 128);
}

TEST_CASE("generic closure") {
  const ClosureReport c4 = generic_closure_check(load_group("c4.json"), vec({1, 0}));
  CHECK(c4.hat_order == 8);
  CHECK(c4.closed);
  CHECK(c4.certified);
  CHECK(c4.test_order == 8);
  const ClosureReport d4 = generic_closure_check(load_group("d4.json"), vec({2, 1}));
  CHECK(d4.hat_order == 8);
  CHECK(d4.closed);
}

TEST_CASE("property: generic group is contained in every specific group") {
  std::mt19937_64 rng(31);
  const auto groups = small_groups();
  int checked = 0;
  for (int trial = 0; trial < 28; ++trial) {
    const MatrixGroup& g = groups[static_cast<std::size_t>(trial) % groups.size()];
    const PermGroup generic = generic_linsym(g).group;
    const MatrixQ v = orbit_family(g, spanning_point(g, rng));
    const PermGroup specific = linsym_group<Rational>(v);
    CHECK(specific.order() % generic.order() == 0);
    for (const auto& s : generic.generators()) CHECK(specific.contains(s));
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("property: traces of realized generic symmetries agree across points") {
  std::mt19937_64 rng(32);
  const auto groups = small_groups();
  for (int trial = 0; trial < 28; ++trial) {
    const MatrixGroup& g = groups[static_cast<std::size_t>(trial) % groups.size()];
    const PermGroup generic = generic_linsym(g).group;
    const MatrixQ v = orbit_family(g, spanning_point(g, rng));
    const MatrixQ w = orbit_family(g, spanning_point(g, rng));
    for (const auto& s : generic.elements()) CHECK(realize(v, s).trace() == realize(w, s).trace());
  }
}

TEST_CASE("symbolic mode honours ORBITOPE_MAX_DIM") {
  const MatrixGroup c5 = load_group("c5.json");
  ::setenv("ORBITOPE_MAX_DIM", "2", 1);
  CHECK(symbolic_dim_cap() == 2);
  CHECK_THROWS_AS(generic_linsym(c5, {GenericMode::Exact}), DimensionTooLarge);
  const GenericResult mc = generic_linsym(c5);
  CHECK_FALSE(mc.exact);
  CHECK_FALSE(mc.verified);
  CHECK(mc.group.order() == 120);
  ::setenv("ORBITOPE_MAX_DIM", "lots", 1);
  CHECK_THROWS_AS(symbolic_dim_cap(), ParseError);
  ::unsetenv("ORBITOPE_MAX_DIM");
  CHECK(symbolic_dim_cap() == 4);
  CHECK(generic_linsym(c5).exact);
}
