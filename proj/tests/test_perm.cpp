#include "support.hpp"

#include "orbitope/colored_graph.hpp"
#include "orbitope/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace orbitope;
using namespace orbitope::test;

namespace {

std::set<std::vector<int>> brute_closure(int n, const std::vector<Permutation>& gens) {
  std::set<std::vector<int>> seen{Permutation::identity(n).images()};
  std::vector<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Permutation h = s * g;
        if (seen.insert(h.images()).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen;
}

Permutation random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

std::size_t brute_automorphisms(const ColoredGraph& g) {
  std::vector<int> img(static_cast<std::size_t>(g.size()));
  std::iota(img.begin(), img.end(), 0);
  std::size_t count = 0;
  do count += is_automorphism(g, Permutation(img));
  while (std::next_permutation(img.begin(), img.end()));
  return count;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation p = Permutation::from_cycles("(1 4 2 3)", 4);
  CHECK(p.str() == "[3,2,0,1]");
  CHECK(p.cycle_str() == "(1 4 2 3)");
  CHECK((p * p.inverse()).images() == Permutation::identity(4).images());
  const Permutation a({1, 0, 2});
  const Permutation b({0, 2, 1});
  CHECK((a * b)(1) == a(b(1)));
  CHECK(Permutation::identity(5).first_moved() < 0);
  CHECK(b.first_moved() == 1);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 5)", 4), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 2 1)", 4), ParseError);
  CHECK_THROWS_AS(Permutation::from_cycles("1 2", 4), ParseError);
}

TEST_CASE("symmetric and wreath orders") {
  CHECK(PermGroup::symmetric(8).order() == 40320);
  CHECK(PermGroup::symmetric(1).order() == 1);
  // C2 wr S4 on 8 points: blocks {2i, 2i+1}
  std::vector<Permutation> gens{Permutation::from_cycles("(1 2)", 8), Permutation::from_cycles("(1 3)(2 4)", 8),
                                Permutation::from_cycles("(1 3 5 7)(2 4 6 8)", 8)};
  CHECK(PermGroup(8, gens).order() == 384);
  // the same group acting on 16 points (a second, disjoint copy of every block)
  std::vector<Permutation> gens16;
  for (const auto& g : gens) {
    std::vector<int> img(16);
    for (int i = 0; i < 8; ++i) {
      img[static_cast<std::size_t>(i)] = g(i);
      img[static_cast<std::size_t>(i + 8)] = g(i) + 8;
    }
    gens16.emplace_back(img);
  }
  CHECK(PermGroup(16, gens16).order() == 384);
}

TEST_CASE("left action of D4 on a generic orbit has order 8") {
  const MatrixGroup d4 = load_group("d4.json");
  std::vector<Permutation> gens;
  for (int x : d4.generators()) gens.push_back(d4.left_mult(x));
  CHECK(PermGroup(8, gens).order() == 8);
}

TEST_CASE("Schreier-Sims agrees with brute-force closure") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 6;
    std::vector<Permutation> gens;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) {
      Permutation p = random_perm(rng, n);
      if (trial % 2 == 0) {
        std::vector<int> img = Permutation::identity(n).images();
        std::swap(img[0], img[static_cast<std::size_t>(p(0))]);
        p = Permutation(img);
      }
      gens.push_back(p);
    }
    const PermGroup g(n, gens);
    const auto elems = brute_closure(n, gens);
    CHECK(g.order() == elems.size());
    for (int probe = 0; probe < 10; ++probe) {
      const Permutation p = random_perm(rng, n);
      CHECK(g.contains(p) == (elems.count(p.images()) == 1));
    }
    const auto listed = g.elements();
    CHECK(std::set<std::vector<int>>(
              [&] {
                std::set<std::vector<int>> s;
                for (const auto& e : listed) s.insert(e.images());
                return s;
              }()) == elems);
    // orbit-stabilizer
    const auto orb = g.orbit(0);
    const PermGroup stab = g.point_stabilizer(0);
    CHECK(g.order() == stab.order() * orb.size());
    for (const auto& s : stab.generators()) CHECK(s(0) == 0);
  }
}

TEST_CASE("elements respects its limit") {
  CHECK_THROWS_AS(PermGroup::symmetric(8).elements(100), ResourceError);
}

TEST_CASE("automorphisms of colored graphs match brute force") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 5;
    const int colors = 1 + trial % 3;
    std::vector<int> table(static_cast<std::size_t>(n * n));
    std::uniform_int_distribution<int> dist(0, colors);
    for (int u = 0; u < n; ++u)
      for (int v = u; v < n; ++v) {
        const int c = u == v ? (trial % 4 == 0 ? dist(rng) : 0) : dist(rng);
        table[static_cast<std::size_t>(u * n + v)] = c;
        table[static_cast<std::size_t>(v * n + u)] = (trial % 3 == 0 && u != v) ? dist(rng) : c;
      }
    const auto g = ColoredGraph::from_table(n, table);
    const PermGroup aut = automorphism_group(g);
    CHECK(aut.order() == brute_automorphisms(g));
    for (const auto& s : aut.generators()) CHECK(is_automorphism(g, s));
  }
}

TEST_CASE("automorphisms of regular graphs") {
  // Petersen graph: outer 5-cycle, inner pentagram, spokes
  std::vector<int> petersen(100, 0);
  auto edge = [&](std::vector<int>& t, int n, int u, int v) { t[static_cast<std::size_t>(u * n + v)] = t[static_cast<std::size_t>(v * n + u)] = 1; };
  for (int i = 0; i < 5; ++i) {
    edge(petersen, 10, i, (i + 1) % 5);
    edge(petersen, 10, 5 + i, 5 + (i + 2) % 5);
    edge(petersen, 10, i, 5 + i);
  }
  CHECK(automorphism_group(ColoredGraph::from_table(10, petersen)).order() == 120);
  std::vector<int> cube(64, 0);
  for (int u = 0; u < 8; ++u)
    for (int b = 0; b < 3; ++b) edge(cube, 8, u, u ^ (1 << b));
  CHECK(automorphism_group(ColoredGraph::from_table(8, cube)).order() == 48);
  // complete graph on 9 vertices: refinement never splits anything
  CHECK(automorphism_group(ColoredGraph(9, [](int, int) { return 0; })).order() == 362880);
}

TEST_CASE("node limit raises a resource error") {
  CHECK_THROWS_AS(automorphism_group(ColoredGraph(12, [](int, int) { return 0; }), 3), ResourceError);
}
