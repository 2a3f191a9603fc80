#pragma once

// Exact polynomials in the two relationship weights: x (marriage) and
// y (affair).

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bimehler {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent pair of the monomial x^x y^y. Ordered lexicographically.
struct Exponent {
  unsigned x = 0;
  unsigned y = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

struct Term {
  Exponent exponent;
  Rational coeff;
};

/// Sparse polynomial in x and y with exact rational coefficients.
///
/// Terms are kept sorted by exponent, with at most one term per exponent and
/// no zero coefficients, so equal polynomials have identical term lists.
class WeightPoly {
 public:
  WeightPoly() = default;
  WeightPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  WeightPoly(long constant);             // NOLINT(google-explicit-constructor)

  static WeightPoly monomial(const Rational& coeff, unsigned x_exp,
                             unsigned y_exp);
  static WeightPoly x() { return monomial(1, 1, 0); }
  static WeightPoly y() { return monomial(1, 0, 1); }

  /// Builds a canonical polynomial from arbitrary terms: like terms are
  /// merged and zero coefficients dropped.
  static WeightPoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(unsigned x_exp, unsigned y_exp) const;
  unsigned degree_x() const;
  unsigned degree_y() const;

  /// True when every coefficient has denominator 1.
  bool is_integral() const;

  /// Exchanges the roles of x and y.
  WeightPoly swap_xy() const;
  /// Substitutes y := 0.
  WeightPoly drop_y() const;
  Rational evaluate(const Rational& x_value, const Rational& y_value) const;

  WeightPoly& operator+=(const WeightPoly& other);
  WeightPoly& operator-=(const WeightPoly& other);
  WeightPoly& operator*=(const WeightPoly& other);

  friend WeightPoly operator+(WeightPoly a, const WeightPoly& b) { return a += b; }
  friend WeightPoly operator-(WeightPoly a, const WeightPoly& b) { return a -= b; }
  friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);
  friend WeightPoly operator-(const WeightPoly& a);
  friend bool operator==(const WeightPoly& a, const WeightPoly& b);

 private:
  std::vector<Term> terms_;
};

/// Multiplies every coefficient by `factor`.
WeightPoly scale(const WeightPoly& poly, const Rational& factor);

/// Renders e.g. "1 + 4*x + 2*x^2"; terms appear in lexicographic order of
/// (x-degree, y-degree) and the zero polynomial renders as "0".
std::string to_string(const WeightPoly& poly);

/// Parses the text form produced by `to_string`. Throws ParseError.
WeightPoly parse_weight_poly(std::string_view text);

std::ostream& operator<<(std::ostream& os, const WeightPoly& poly);

}  // namespace bimehler
