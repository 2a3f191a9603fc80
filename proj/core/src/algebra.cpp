#include "bimehler/algebra.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <utility>

namespace bimehler {

namespace {

// Merges adjacent equal exponents of a sorted term list and removes zeros.
void compact_sorted(std::vector<Term>& terms) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term merged = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].exponent == merged.exponent) {
      merged.coeff += terms[j].coeff;
      ++j;
    }
    if (sgn(merged.coeff) != 0) terms[out++] = std::move(merged);
    i = j;
  }
  terms.resize(out);
}

}  // namespace

WeightPoly::WeightPoly(const Rational& constant) {
  if (sgn(constant) != 0) terms_.push_back({{0, 0}, constant});
}

WeightPoly::WeightPoly(long constant) : WeightPoly(Rational(constant)) {}

WeightPoly WeightPoly::monomial(const Rational& coeff, unsigned x_exp,
                                unsigned y_exp) {
  WeightPoly p;
  if (sgn(coeff) != 0) p.terms_.push_back({{x_exp, y_exp}, coeff});
  return p;
}

WeightPoly WeightPoly::from_terms(std::vector<Term> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  compact_sorted(terms);
  WeightPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Rational WeightPoly::coefficient(unsigned x_exp, unsigned y_exp) const {
  const Exponent key{x_exp, y_exp};
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), key,
      [](const Term& t, const Exponent& e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == key) return it->coeff;
  return 0;
}

unsigned WeightPoly::degree_x() const {
  return terms_.empty() ? 0 : terms_.back().exponent.x;
}

unsigned WeightPoly::degree_y() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponent.y);
  return d;
}

bool WeightPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return t.coeff.get_den() == 1;
  });
}

WeightPoly WeightPoly::swap_xy() const {
  std::vector<Term> swapped;
  swapped.reserve(terms_.size());
  for (const auto& t : terms_) swapped.push_back({{t.exponent.y, t.exponent.x}, t.coeff});
  return from_terms(std::move(swapped));
}

WeightPoly WeightPoly::drop_y() const {
  WeightPoly p;
  for (const auto& t : terms_) {
    if (t.exponent.y == 0) p.terms_.push_back(t);
  }
  return p;
}

Rational WeightPoly::evaluate(const Rational& x_value,
                              const Rational& y_value) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (unsigned i = 0; i < t.exponent.x; ++i) v *= x_value;
    for (unsigned j = 0; j < t.exponent.y; ++j) v *= y_value;
    total += v;
  }
  return total;
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& other) {
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::merge(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
             std::back_inserter(merged),
             [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  compact_sorted(merged);
  terms_ = std::move(merged);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& other) {
  return *this += -other;
}

WeightPoly& WeightPoly::operator*=(const WeightPoly& other) {
  *this = *this * other;
  return *this;
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const unsigned width_y = a.degree_y() + b.degree_y() + 1;
  const unsigned width_x = a.degree_x() + b.degree_x() + 1;
  std::vector<Rational> grid(static_cast<std::size_t>(width_x) * width_y);
  std::vector<bool> used(grid.size(), false);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      const std::size_t slot =
          static_cast<std::size_t>(ta.exponent.x + tb.exponent.x) * width_y +
          (ta.exponent.y + tb.exponent.y);
      grid[slot] += ta.coeff * tb.coeff;
      used[slot] = true;
    }
  }
  WeightPoly p;
  for (std::size_t slot = 0; slot < grid.size(); ++slot) {
    if (!used[slot] || sgn(grid[slot]) == 0) continue;
    p.terms_.push_back({{static_cast<unsigned>(slot / width_y),
                         static_cast<unsigned>(slot % width_y)},
                        std::move(grid[slot])});
  }
  return p;
}

WeightPoly operator-(const WeightPoly& a) {
  WeightPoly p = a;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

bool operator==(const WeightPoly& a, const WeightPoly& b) {
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                    [](const Term& s, const Term& t) {
                      return s.exponent == t.exponent && s.coeff == t.coeff;
                    });
}

WeightPoly scale(const WeightPoly& poly, const Rational& factor) {
  if (sgn(factor) == 0) return {};
  std::vector<Term> terms(poly.terms().begin(), poly.terms().end());
  for (auto& t : terms) t.coeff *= factor;
  return WeightPoly::from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const WeightPoly& poly) {
  return os << to_string(poly);
}

}  // namespace bimehler
