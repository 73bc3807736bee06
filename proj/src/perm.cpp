#include "orbitope/perm.hpp"

#include "orbitope/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace orbitope {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw PreconditionError("image list is not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) p.images_[static_cast<std::size_t>(i)] = i;
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw ParseError("expected a point in cycle notation");
      const int point = std::stoi(std::string(text.substr(pos, end - pos))) - 1;
      if (point < 0 || point >= degree) throw ParseError("cycle point out of range");
      if (used[static_cast<std::size_t>(point)]) throw ParseError("point repeated in cycle notation");
      used[static_cast<std::size_t>(point)] = true;
      cycle.push_back(point);
      pos = end;
      skip_space();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    skip_space();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

int Permutation::first_moved() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return static_cast<int>(i);
  return -1;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    p.images_[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw PreconditionError("permutation degree mismatch");
  Permutation p;
  p.images_.resize(b.images_.size());
  for (std::size_t i = 0; i < b.images_.size(); ++i)
    p.images_[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return p;
}

std::string Permutation::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

std::string Permutation::cycle_str() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = static_cast<std::size_t>(images_[j]);
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<int> base_prefix)
    : degree_(degree), base_(std::move(base_prefix)) {
  for (auto& g : generators) {
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
  for (int b : base_) {
    if (b < 0 || b >= degree) throw PreconditionError("base point out of range");
  }
  strong_ = generators_;
  for (const auto& g : strong_) {
    const bool fixes_base =
        std::all_of(base_.begin(), base_.end(), [&](int b) { return g(b) == b; });
    if (fixes_base) base_.push_back(g.first_moved());
  }
  levels_.resize(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) build_level(i);
  schreier_sims();
}

PermGroup PermGroup::symmetric(int degree) {
  if (degree < 2) return trivial(degree);
  std::vector<int> cycle(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % degree;
  std::vector<int> swap(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) swap[static_cast<std::size_t>(i)] = i;
  std::swap(swap[0], swap[1]);
  return PermGroup(degree, {Permutation(std::move(cycle)), Permutation(std::move(swap))});
}

std::vector<const Permutation*> PermGroup::level_generators(std::size_t level) const {
  std::vector<const Permutation*> out;
  for (const auto& s : strong_) {
    bool fixes = true;
    for (std::size_t i = 0; i < level && fixes; ++i) fixes = s(base_[i]) == base_[i];
    if (fixes) out.push_back(&s);
  }
  return out;
}

void PermGroup::build_level(std::size_t level) {
  Level& l = levels_[level];
  l.base_point = base_[level];
  l.orbit.assign(1, l.base_point);
  l.transversal.assign(static_cast<std::size_t>(degree_), Permutation());
  l.transversal[static_cast<std::size_t>(l.base_point)] = Permutation::identity(degree_);
  const auto gens = level_generators(level);
  for (std::size_t k = 0; k < l.orbit.size(); ++k) {
    const int x = l.orbit[k];
    for (const Permutation* s : gens) {
      const int y = (*s)(x);
      if (l.transversal[static_cast<std::size_t>(y)].degree() == 0) {
        l.transversal[static_cast<std::size_t>(y)] = *s * l.transversal[static_cast<std::size_t>(x)];
        l.orbit.push_back(y);
      }
    }
  }
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const int beta = g(base_[i]);
    const Permutation& u = levels_[i].transversal[static_cast<std::size_t>(beta)];
    if (u.degree() == 0) return {std::move(g), i};
    g = u.inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims() {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    bool extended = false;
    const auto gens = level_generators(level);
    const std::vector<int> orbit = levels_[level].orbit;
    for (std::size_t k = 0; k < orbit.size() && !extended; ++k) {
      const int beta = orbit[k];
      const Permutation& u_beta = levels_[level].transversal[static_cast<std::size_t>(beta)];
      for (const Permutation* s : gens) {
        const int image = (*s)(beta);
        const Permutation& u_image = levels_[level].transversal[static_cast<std::size_t>(image)];
        Permutation h = u_image.inverse() * (*s * u_beta);
        if (h.is_identity()) continue;
        auto [residue, j] = strip(std::move(h), level + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) {
          base_.push_back(residue.first_moved());
          levels_.emplace_back();
        }
        strong_.push_back(std::move(residue));
        for (std::size_t l = level + 1; l <= j; ++l) build_level(l);
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
}

Integer PermGroup::order() const {
  Integer n = 1;
  for (const auto& l : levels_) n *= static_cast<unsigned>(l.orbit.size());
  return n;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw PreconditionError("permutation degree mismatch");
  return strip(p, 0).first.is_identity();
}

PermGroup PermGroup::point_stabilizer(int point) const {
  if (point < 0 || point >= degree_) throw PreconditionError("stabilizer point out of range");
  PermGroup rebased(degree_, strong_, {point});
  std::vector<Permutation> gens;
  for (const auto& s : rebased.strong_)
    if (s(point) == point) gens.push_back(s);
  return PermGroup(degree_, std::move(gens));
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<int> out{point};
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : generators_) {
      const int y = g(out[k]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order() > limit) throw ResourceError("group too large to enumerate");
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // Products u_0 * u_1 * ... * u_k of transversal elements, deepest level first.
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->orbit.size());
    for (int x : it->orbit)
      for (const auto& e : out) next.push_back(it->transversal[static_cast<std::size_t>(x)] * e);
    out = std::move(next);
  }
  return out;
}

}  // namespace orbitope
