#include "orbitope/colored_graph.hpp"

#include "orbitope/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace orbitope {

ColoredGraph ColoredGraph::from_table(int n, std::vector<int> colors) {
  if (colors.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw PreconditionError("color table has wrong size");
  auto table = std::make_shared<std::vector<int>>(std::move(colors));
  return ColoredGraph(n, [table, n](int u, int v) {
    return (*table)[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
  });
}

bool is_automorphism(const ColoredGraph& g, const Permutation& p) {
  if (p.degree() != g.size()) return false;
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v)
      if (g.color(p(u), p(v)) != g.color(u, v)) return false;
  return true;
}

namespace {

constexpr int color_bits = 21;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return (h ^ x) * 0x100000001b3ULL + (h >> 17);
}

struct Partition {
  std::vector<int> cell;
  int cells = 0;
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

class Searcher {
 public:
  Searcher(const ColoredGraph& g, std::size_t limit)
      : g_(g), n_(g.size()), limit_(limit), sig_(static_cast<std::size_t>(n_)) {}

  PermGroup run() {
    if (n_ <= 1) return PermGroup::trivial(n_);
    Partition p;
    p.cell.assign(static_cast<std::size_t>(n_), 0);
    p.cells = 1;
    std::uint64_t h = refine(p);
    // First path: always the smallest vertex of the target cell.
    for (;;) {
      path_parts_.push_back(p);
      path_hash_.push_back(h);
      const auto target = target_members(p);
      if (target.empty()) break;
      path_vertex_.push_back(target.front());
      p = individualize(p, target.front());
      h = refine(p);
    }
    first_leaf_ = labels(path_parts_.back());

    DisjointSets orbits(n_);
    for (std::size_t level = path_vertex_.size(); level-- > 0;) {
      const int v = path_vertex_[level];
      std::vector<int> failed;
      for (int w : target_members(path_parts_[level])) {
        if (w == v || orbits.find(w) == orbits.find(v)) continue;
        const bool known_failure = std::any_of(failed.begin(), failed.end(),
                                               [&](int f) { return orbits.find(f) == orbits.find(w); });
        if (known_failure) continue;
        auto found = search(individualize(path_parts_[level], w), level + 1);
        if (!found) {
          failed.push_back(w);
          continue;
        }
        for (int i = 0; i < n_; ++i) orbits.unite(i, (*found)(i));
        generators_.push_back(std::move(*found));
      }
    }
    return PermGroup(n_, generators_);
  }

  std::size_t nodes() const { return nodes_; }
  std::size_t generator_count() const { return generators_.size(); }

 private:
  std::uint64_t pack(int cell, int a, int b) const {
    return (static_cast<std::uint64_t>(cell) << (2 * color_bits)) |
           (static_cast<std::uint64_t>(a) << color_bits) | static_cast<std::uint64_t>(b);
  }

  int checked_color(int u, int v) const {
    const int c = g_.color(u, v);
    if (c < 0 || c >= (1 << color_bits)) throw PreconditionError("graph color id out of range");
    return c;
  }

  // Splits cells by the multiset of (cell, color in, color out) seen from each
  // vertex until stable. Cells are renumbered canonically; returns a hash of
  // everything the splitting depended on.
  std::uint64_t refine(Partition& p) {
    ++nodes_;
    if (nodes_ > limit_) throw ResourceError("automorphism search exceeded its node limit");
    std::uint64_t h = static_cast<std::uint64_t>(p.cells);
    std::vector<int> order(static_cast<std::size_t>(n_));
    while (p.cells < n_) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig_[static_cast<std::size_t>(v)];
        s.clear();
        s.push_back(static_cast<std::uint64_t>(checked_color(v, v)));
        for (int u = 0; u < n_; ++u) {
          if (u == v) continue;
          s.push_back(pack(p.cell[static_cast<std::size_t>(u)], checked_color(v, u), checked_color(u, v)));
        }
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int ca = p.cell[static_cast<std::size_t>(a)];
        const int cb = p.cell[static_cast<std::size_t>(b)];
        if (ca != cb) return ca < cb;
        const auto& sa = sig_[static_cast<std::size_t>(a)];
        const auto& sb = sig_[static_cast<std::size_t>(b)];
        if (sa != sb) return sa < sb;
        return a < b;
      });
      std::vector<int> next(static_cast<std::size_t>(n_));
      int cells = -1;
      int prev = -1;
      for (int v : order) {
        const auto vi = static_cast<std::size_t>(v);
        if (prev < 0 || p.cell[vi] != p.cell[static_cast<std::size_t>(prev)] ||
            sig_[vi] != sig_[static_cast<std::size_t>(prev)]) {
          ++cells;
          h = mix(h, static_cast<std::uint64_t>(p.cell[vi]));
          for (std::uint64_t x : sig_[vi]) h = mix(h, x);
        }
        next[vi] = cells;
        prev = v;
      }
      ++cells;
      const bool stable = cells == p.cells;
      p.cell = std::move(next);
      p.cells = cells;
      h = mix(h, static_cast<std::uint64_t>(cells));
      if (stable) break;
    }
    return h;
  }

  Partition individualize(const Partition& p, int v) const {
    Partition q = p;
    const int c = p.cell[static_cast<std::size_t>(v)];
    for (int u = 0; u < n_; ++u) {
      int& x = q.cell[static_cast<std::size_t>(u)];
      if (x > c || (x == c && u != v)) ++x;
    }
    ++q.cells;
    return q;
  }

  std::vector<int> target_members(const Partition& p) const {
    std::vector<int> size(static_cast<std::size_t>(p.cells), 0);
    for (int c : p.cell) ++size[static_cast<std::size_t>(c)];
    int best = -1;
    for (int c = 0; c < p.cells; ++c) {
      if (size[static_cast<std::size_t>(c)] > 1 &&
          (best < 0 || size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(best)]))
        best = c;
    }
    std::vector<int> members;
    if (best < 0) return members;
    for (int v = 0; v < n_; ++v)
      if (p.cell[static_cast<std::size_t>(v)] == best) members.push_back(v);
    return members;
  }

  std::vector<int> labels(const Partition& p) const {
    std::vector<int> lab(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) lab[static_cast<std::size_t>(p.cell[static_cast<std::size_t>(v)])] = v;
    return lab;
  }

  // Looks below p (at `depth`) for a leaf equivalent to the first leaf.
  std::optional<Permutation> search(Partition p, std::size_t depth) {
    const std::uint64_t h = refine(p);
    if (depth >= path_hash_.size() || h != path_hash_[depth]) return std::nullopt;
    if (p.cells == n_) {
      const auto lab = labels(p);
      std::vector<int> images(static_cast<std::size_t>(n_));
      for (std::size_t i = 0; i < lab.size(); ++i) images[static_cast<std::size_t>(first_leaf_[i])] = lab[i];
      Permutation gamma(std::move(images));
      if (is_automorphism(g_, gamma)) return gamma;
      return std::nullopt;
    }
    for (int u : target_members(p)) {
      auto found = search(individualize(p, u), depth + 1);
      if (found) return found;
    }
    return std::nullopt;
  }

  const ColoredGraph& g_;
  int n_;
  std::size_t limit_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<std::uint64_t>> sig_;
  std::vector<Partition> path_parts_;
  std::vector<std::uint64_t> path_hash_;
  std::vector<int> path_vertex_;
  std::vector<int> first_leaf_;
  std::vector<Permutation> generators_;
};

}  // namespace

PermGroup automorphism_group(const ColoredGraph& g, std::size_t node_limit, SearchStats* stats) {
  Searcher s(g, node_limit);
  PermGroup group = s.run();
  if (stats) {
    stats->nodes = s.nodes();
    stats->generators = s.generator_count();
  }
  return group;
}

}  // namespace orbitope
