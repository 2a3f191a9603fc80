// Text form of WeightPoly.
//
//   poly  := term (("+" | "-") term)*
//   term  := [sign] (coeff ("*" factor){0,2} | factor ("*" factor)?)
//   coeff := digits ["/" digits]
//   factor:= ("x" | "y") ["^" digits]
//
// Whitespace is insignificant. Each variable may appear at most once per term.

#include <cctype>
#include <string>

#include "bimehler/algebra.hpp"
#include "bimehler/errors.hpp"

namespace bimehler {

namespace {

std::string monomial_text(const Exponent& e) {
  std::string out;
  auto append = [&out](char var, unsigned power) {
    if (power == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (power > 1) out += '^' + std::to_string(power);
  };
  append('x', e.x);
  append('y', e.y);
  return out;
}

// Renders a nonnegative coefficient together with its monomial.
std::string magnitude_text(const Rational& magnitude, const Exponent& e) {
  const std::string mono = monomial_text(e);
  if (mono.empty()) return magnitude.get_str();
  if (magnitude == 1) return mono;
  return magnitude.get_str() + "*" + mono;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  WeightPoly parse() {
    std::vector<Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    terms.push_back(parse_term(negate));
    skip_space();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      ++pos_;
      terms.push_back(parse_term(c == '-'));
      skip_space();
    }
    return WeightPoly::from_terms(std::move(terms));
  }

 private:
  Term parse_term(bool negate) {
    skip_space();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') negate = !negate;
      ++pos_;
      skip_space();
    }
    if (at_end()) fail("expected term");

    Term term{{0, 0}, 1};
    bool seen_x = false;
    bool seen_y = false;
    bool need_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      term.coeff = parse_coeff();
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    } else {
      need_factor = true;
    }

    while (need_factor) {
      skip_space();
      if (at_end()) fail("expected variable");
      const char var = peek();
      if (var != 'x' && var != 'y') fail(std::string("expected variable, found '") + var + "'");
      bool& seen = var == 'x' ? seen_x : seen_y;
      if (seen) fail(std::string("variable '") + var + "' repeated in term");
      seen = true;
      ++pos_;
      unsigned power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        power = parse_exponent();
      }
      (var == 'x' ? term.exponent.x : term.exponent.y) = power;
      skip_space();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    if (negate) term.coeff = -term.coeff;
    return term;
  }

  Rational parse_coeff() {
    Integer num(read_digits(), 10);
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected denominator");
      }
      const std::size_t den_pos = pos_;
      Integer den(read_digits(), 10);
      if (den == 0) throw ParseError("zero denominator", den_pos);
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  unsigned parse_exponent() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected nonnegative integer exponent");
    }
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.size() > 9) throw ParseError("exponent too large", start);
    return static_cast<unsigned>(std::stoul(digits));
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const WeightPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : poly.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    const Rational magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    out += magnitude_text(magnitude, t.exponent);
  }
  return out;
}

WeightPoly parse_weight_poly(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace bimehler
