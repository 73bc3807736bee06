#pragma once

#include "orbitope/io.hpp"

#include <optional>
#include <random>
#include <string>

namespace orbitope::test {

inline std::string data_path(const std::string& name) { return std::string(ORBITOPE_TEST_DATA) + "/" + name; }

inline const Json& reference() {
  static const Json j = Json::parse(read_file(std::string(ORBITOPE_TEST_ORACLE) + "/reference.json"));
  return j;
}

inline MatrixGroup load_group(const std::string& name) { return group_from_json(Json::parse(read_file(data_path(name)))); }

inline MatrixQ mat(std::initializer_list<std::initializer_list<long>> rows) {
  MatrixQ m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index k = 0;
    for (long x : r) m(i, k++) = Rational(x);
    ++i;
  }
  return m;
}

inline VectorQ vec(std::initializer_list<long> xs) {
  VectorQ v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

inline MatrixQ perm_matrix(const Permutation& p) {
  MatrixQ m = MatrixQ::Zero(p.degree(), p.degree());
  for (int i = 0; i < p.degree(); ++i) m(p(i), i) = 1;
  return m;
}

/// Small groups, |G| <= 12 and d <= 4, used by the randomized suites.
inline std::vector<MatrixGroup> small_groups() {
  std::vector<MatrixGroup> out;
  auto add = [&](int d, std::vector<MatrixQ> gens) { out.push_back(MatrixGroup::close(d, gens, 12)); };
  const MatrixQ t = mat({{0, -1}, {1, 0}});
  const MatrixQ s = mat({{1, 0}, {0, -1}});
  const MatrixQ r3 = mat({{0, -1}, {1, -1}});
  const MatrixQ r6 = mat({{1, -1}, {1, 0}});
  const MatrixQ swap = mat({{0, 1}, {1, 0}});
  add(2, {t});                                                 // C4
  add(2, {t, s});                                              // D4
  add(2, {r3});                                                // C3
  add(2, {r3, swap});                                          // S3 on the plane
  add(2, {r6});                                                // C6
  add(2, {r6, swap});                                          // D6
  add(2, {s, mat({{-1, 0}, {0, 1}})});                         // C2 x C2
  add(3, {perm_matrix(Permutation({1, 0, 2})), perm_matrix(Permutation({1, 2, 0}))});  // S3
  add(3, {mat({{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}), perm_matrix(Permutation({1, 2, 0}))});  // A4
  add(3, {mat({{0, -1, 0}, {1, 0, 0}, {0, 0, -1}})});          // C4 rotoreflection
  add(4, {mat({{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}})});  // C5
  add(4, {mat({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
          mat({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}})});  // Q8
  add(4, {perm_matrix(Permutation({1, 2, 3, 0}))});            // C4 regular
  add(3, {mat({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), mat({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}})});  // C2 x C2 in Q^3
  return out;
}

/// Random point with entries in [-bound, bound] whose orbit spans Q^d linearly.
inline VectorQ spanning_point(const MatrixGroup& g, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    VectorQ v(g.dim());
    for (Index i = 0; i < v.size(); ++i) v(i) = dist(rng);
    if (rank(orbit_family(g, v)) == g.dim()) return v;
  }
}

/// Random point with trivial stabilizer whose centered orbit spans the ambient space;
/// nullopt when the group has no such point (nonzero fixed space).
inline std::optional<VectorQ> generating_point(const MatrixGroup& g, std::mt19937_64& rng, int bound = 9) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (int tries = 0; tries < 50; ++tries) {
    VectorQ v(g.dim());
    for (Index i = 0; i < v.size(); ++i) v(i) = dist(rng);
    if (is_generating_point(g, v) && stabilizer_in_group(g, v).size() == 1) return v;
  }
  return std::nullopt;
}

}  // namespace orbitope::test
