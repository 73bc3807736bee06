#include "orbitope/multipoly.hpp"

#include "orbitope/error.hpp"

#include <algorithm>
#include <sstream>

namespace orbitope {

namespace {

constexpr int shift_of(int var) { return 48 - 8 * var; }

}  // namespace

Monomial Monomial::variable(int index) {
  if (index < 0 || index >= max_vars)
    throw PreconditionError("polynomial variable index out of range (max 7 variables)");
  return Monomial((std::uint64_t{1} << 56) | (std::uint64_t{1} << shift_of(index)));
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(max_vars))
    throw PreconditionError("too many polynomial variables (max 7)");
  std::uint64_t key = 0;
  int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw PreconditionError("negative exponent");
    total += exponents[i];
    if (total > max_degree) throw ResourceError("monomial degree exceeds 255");
    key |= static_cast<std::uint64_t>(exponents[i]) << shift_of(static_cast<int>(i));
  }
  return Monomial(key | (static_cast<std::uint64_t>(total) << 56));
}

bool Monomial::divides(Monomial other) const {
  for (int v = 0; v < max_vars; ++v) {
    if (exponent(v) > other.exponent(v)) return false;
  }
  return true;
}

Monomial Monomial::operator*(Monomial other) const {
  // Each exponent is bounded by the total degree, so no field carries.
  if (degree() + other.degree() > max_degree) throw ResourceError("monomial degree exceeds 255");
  return Monomial(key_ + other.key_);
}

Monomial Monomial::quotient_of(Monomial dividend) const { return Monomial(dividend.key_ - key_); }

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace_back(Monomial(), constant);
}

MultiPoly MultiPoly::variable(int index) {
  MultiPoly p;
  p.terms_.emplace_back(Monomial::variable(index), Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first > b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().second.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.degree() == 0);
}

int MultiPoly::total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

int MultiPoly::variable_count() const {
  int count = 0;
  for (const auto& [m, c] : terms_) {
    for (int v = Monomial::max_vars - 1; v >= count; --v) {
      if (m.exponent(v) > 0) {
        count = v + 1;
        break;
      }
    }
  }
  return count;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < Monomial::max_vars; ++v) {
      const int e = m.exponent(v);
      if (e == 0) continue;
      if (static_cast<std::size_t>(v) >= point.size())
        throw PreconditionError("evaluation point has too few coordinates");
      for (int k = 0; k < e; ++k) term *= point[v];
    }
    sum += term;
  }
  return sum;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first > b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first > a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator/=(const MultiPoly& other) { return *this = *this / other; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  MultiPoly p;
  p.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) p.terms_.emplace_back(ma * mb, ca * cb);
  }
  p.normalize();
  return p;
}

std::pair<MultiPoly, MultiPoly> divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  const auto& [lead_m, lead_c] = b.terms().front();
  std::vector<MultiPoly::Term> quotient;
  std::vector<MultiPoly::Term> remainder;
  MultiPoly rest = a;
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.terms().front();
    if (lead_m.divides(m)) {
      MultiPoly::Term t{lead_m.quotient_of(m), c / lead_c};
      quotient.push_back(t);
      rest -= MultiPoly::from_terms({t}) * b;
    } else {
      remainder.push_back(rest.terms().front());
      rest -= MultiPoly::from_terms({rest.terms().front()});
    }
  }
  return {MultiPoly::from_terms(std::move(quotient)), MultiPoly::from_terms(std::move(remainder))};
}

MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_constant() && !b.is_zero()) {
    MultiPoly p = a;
    const Rational& c = b.terms().front().second;
    for (auto& t : p.terms_) t.second /= c;
    return p;
  }
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

bool operator<(const MultiPoly& a, const MultiPoly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const MultiPoly::Term& x, const MultiPoly::Term& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    if (!first) {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    } else if (coef < 0 && m.degree() > 0) {
      os << "-";
      coef = -coef;
    }
    first = false;
    const bool unit = coef == 1 && m.degree() > 0;
    if (!unit) os << to_string(coef);
    bool need_star = !unit;
    for (int v = 0; v < Monomial::max_vars; ++v) {
      const int e = m.exponent(v);
      if (e == 0) continue;
      if (need_star) os << "*";
      os << "x" << (v + 1);
      if (e > 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace orbitope
