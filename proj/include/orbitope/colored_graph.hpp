#pragma once

#include "orbitope/perm.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace orbitope {

/// Complete directed graph on {0, ..., n-1} with an integer color on every
/// ordered pair. color(v, v) is the vertex color. Colors must lie in [0, 2^21).
class ColoredGraph {
 public:
  using ColorFn = std::function<int(int, int)>;

  ColoredGraph(int n, ColorFn color) : n_(n), color_(std::move(color)) {}
  /// Row-major n x n color table.
  static ColoredGraph from_table(int n, std::vector<int> colors);

  int size() const { return n_; }
  int color(int u, int v) const { return color_(u, v); }

 private:
  int n_;
  ColorFn color_;
};

bool is_automorphism(const ColoredGraph& g, const Permutation& p);

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t generators = 0;
};

/// Full automorphism group by individualization-refinement: 1-dimensional
/// Weisfeiler-Leman refinement, branching on the smallest vertex of the first
/// largest non-singleton cell, orbit pruning with automorphisms already found.
/// Throws ResourceError after `node_limit` search nodes.
PermGroup automorphism_group(const ColoredGraph& g, std::size_t node_limit = 5'000'000,
                             SearchStats* stats = nullptr);

}  // namespace orbitope
