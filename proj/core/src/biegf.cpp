#include "bimehler/biegf.hpp"

#include <algorithm>
#include <string>

#include "bimehler/combinatorics.hpp"
#include "bimehler/errors.hpp"

namespace bimehler {

namespace {

template <typename Coeff>
struct FlatTerm {
  unsigned x;
  unsigned y;
  Coeff coeff;
};

template <typename Coeff>
Coeff convert(const Rational& q);

template <>
Integer convert<Integer>(const Rational& q) {
  return q.get_num();
}

template <>
Rational convert<Rational>(const Rational& q) {
  return q;
}

template <typename Coeff>
std::vector<FlatTerm<Coeff>> flatten(const WeightPoly& p) {
  std::vector<FlatTerm<Coeff>> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) out.push_back({t.exponent.x, t.exponent.y, convert<Coeff>(t.coeff)});
  return out;
}

// Binomial convolution over a coefficient ring (Integer when both operands are
// integral, Rational otherwise). A single dense accumulator grid is reused for
// every output cell.
template <typename Coeff>
std::vector<WeightPoly> convolve(const std::vector<WeightPoly>& a,
                                 const std::vector<WeightPoly>& b,
                                 unsigned max_m, unsigned max_n) {
  const std::size_t stride = max_n + 1;
  auto cell = [stride](unsigned m, unsigned n) { return m * stride + n; };

  std::vector<std::vector<FlatTerm<Coeff>>> fa(a.size());
  std::vector<std::vector<FlatTerm<Coeff>>> fb(b.size());
  unsigned ax = 0, ay = 0, bx = 0, by = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    fa[i] = flatten<Coeff>(a[i]);
    fb[i] = flatten<Coeff>(b[i]);
    ax = std::max(ax, a[i].degree_x());
    ay = std::max(ay, a[i].degree_y());
    bx = std::max(bx, b[i].degree_x());
    by = std::max(by, b[i].degree_y());
  }
  const unsigned dx = ax + bx + 1;
  const unsigned dy = ay + by + 1;

  const BinomialTable binom(std::max(max_m, max_n));
  std::vector<Coeff> grid(static_cast<std::size_t>(dx) * dy);
  std::vector<char> used(grid.size(), 0);
  std::vector<std::size_t> touched;
  Coeff weight;
  Coeff scaled;

  std::vector<WeightPoly> out(a.size());
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned n = 0; n <= max_n; ++n) {
      for (unsigned k = 0; k <= m; ++k) {
        for (unsigned s = 0; s <= n; ++s) {
          const auto& ta = fa[cell(k, s)];
          const auto& tb = fb[cell(m - k, n - s)];
          if (ta.empty() || tb.empty()) continue;
          weight = binom(m, k) * binom(n, s);
          for (const auto& p : ta) {
            scaled = weight * p.coeff;
            for (const auto& q : tb) {
              const std::size_t slot = static_cast<std::size_t>(p.x + q.x) * dy + (p.y + q.y);
              if (!used[slot]) {
                used[slot] = 1;
                touched.push_back(slot);
              }
              grid[slot] += scaled * q.coeff;
            }
          }
        }
      }
      if (touched.empty()) continue;
      std::sort(touched.begin(), touched.end());
      std::vector<Term> terms;
      terms.reserve(touched.size());
      for (std::size_t slot : touched) {
        if (sgn(grid[slot]) != 0) {
          terms.push_back({{static_cast<unsigned>(slot / dy), static_cast<unsigned>(slot % dy)},
                           Rational(grid[slot])});
        }
        grid[slot] = 0;
        used[slot] = 0;
      }
      touched.clear();
      out[cell(m, n)] = WeightPoly::from_terms(std::move(terms));
    }
  }
  return out;
}

void require_zero_constant(const BiSeries& f, const char* op) {
  if (!f.has_zero_constant()) {
    throw ConstantTermError(std::string(op) +
                            ": argument has nonzero constant term " +
                            to_string(f.coeff(0, 0)));
  }
}

// sum_{k=1}^{K} weight(k) u^k with K = max_m + max_n, beyond which u^k
// vanishes identically under truncation.
template <typename WeightFn>
BiSeries power_sum(const BiSeries& u, WeightFn weight) {
  BiSeries total = BiSeries::zero(u.max_m(), u.max_n());
  BiSeries power = u;
  const unsigned max_power = u.max_m() + u.max_n();
  for (unsigned k = 1; k <= max_power && !power.is_zero(); ++k) {
    if (k > 1) power = power * u;
    total += scale(power, weight(k));
  }
  return total;
}

}  // namespace

BiSeries::BiSeries(unsigned max_m, unsigned max_n)
    : max_m_(max_m),
      max_n_(max_n),
      cells_(static_cast<std::size_t>(max_m + 1) * (max_n + 1)) {}

BiSeries BiSeries::one(unsigned max_m, unsigned max_n) {
  BiSeries f(max_m, max_n);
  f.cells_[0] = WeightPoly(1);
  return f;
}

BiSeries BiSeries::term(unsigned max_m, unsigned max_n, unsigned m, unsigned n,
                        const WeightPoly& labelled) {
  BiSeries f(max_m, max_n);
  if (m <= max_m && n <= max_n) f.cells_[f.index(m, n)] = labelled;
  return f;
}

BiSeries BiSeries::ordinary_term(unsigned max_m, unsigned max_n, unsigned m,
                                 unsigned n, const WeightPoly& ordinary) {
  return term(max_m, max_n, m, n,
              scale(ordinary, Rational(factorial(m) * factorial(n))));
}

const WeightPoly& BiSeries::coeff(unsigned m, unsigned n) const {
  if (m > max_m_ || n > max_n_) {
    throw IndexError("coefficient (" + std::to_string(m) + ", " + std::to_string(n) +
                     ") outside bounds (" + std::to_string(max_m_) + ", " +
                     std::to_string(max_n_) + ")");
  }
  return cells_[index(m, n)];
}

void BiSeries::set_coeff(unsigned m, unsigned n, WeightPoly value) {
  (void)coeff(m, n);
  cells_[index(m, n)] = std::move(value);
}

bool BiSeries::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const WeightPoly& p) { return p.is_zero(); });
}

bool BiSeries::is_integral() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const WeightPoly& p) { return p.is_integral(); });
}

BiSeries BiSeries::truncate(unsigned max_m, unsigned max_n) const {
  if (max_m > max_m_ || max_n > max_n_) {
    throw BoundMismatchError("truncate: cannot extend bounds");
  }
  BiSeries f(max_m, max_n);
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned n = 0; n <= max_n; ++n) f.cells_[f.index(m, n)] = coeff(m, n);
  }
  return f;
}

void BiSeries::require_same_bounds(const BiSeries& other, const char* op) const {
  if (max_m_ != other.max_m_ || max_n_ != other.max_n_) {
    throw BoundMismatchError(std::string(op) + ": bounds (" + std::to_string(max_m_) +
                             ", " + std::to_string(max_n_) + ") vs (" +
                             std::to_string(other.max_m_) + ", " +
                             std::to_string(other.max_n_) + ")");
  }
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
  require_same_bounds(other, "add");
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += other.cells_[i];
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& other) {
  require_same_bounds(other, "subtract");
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] -= other.cells_[i];
  return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  a.require_same_bounds(b, "multiply");
  BiSeries out(a.max_m_, a.max_n_);
  if (a.is_integral() && b.is_integral()) {
    out.cells_ = convolve<Integer>(a.cells_, b.cells_, a.max_m_, a.max_n_);
  } else {
    out.cells_ = convolve<Rational>(a.cells_, b.cells_, a.max_m_, a.max_n_);
  }
  return out;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  return a.max_m_ == b.max_m_ && a.max_n_ == b.max_n_ && a.cells_ == b.cells_;
}

BiSeries scale(const BiSeries& f, const Rational& factor) {
  BiSeries out(f.max_m(), f.max_n());
  for (unsigned m = 0; m <= f.max_m(); ++m) {
    for (unsigned n = 0; n <= f.max_n(); ++n) {
      out.set_coeff(m, n, scale(f.coeff(m, n), factor));
    }
  }
  return out;
}

BiSeries exp(const BiSeries& f) {
  require_zero_constant(f, "exp");
  return BiSeries::one(f.max_m(), f.max_n()) +
         power_sum(f, [](unsigned k) -> Rational { return Rational(1) / Rational(factorial(k)); });
}

BiSeries inv_one_minus(const BiSeries& u) {
  require_zero_constant(u, "inv_one_minus");
  return BiSeries::one(u.max_m(), u.max_n()) +
         power_sum(u, [](unsigned) -> Rational { return 1; });
}

BiSeries log_inv_one_minus(const BiSeries& u) {
  require_zero_constant(u, "log_inv_one_minus");
  BiSeries out = power_sum(u, [](unsigned k) -> Rational { return Rational(1, k); });
  if (u.is_integral() && !out.is_integral()) {
    for (unsigned m = 0; m <= out.max_m(); ++m) {
      for (unsigned n = 0; n <= out.max_n(); ++n) {
        if (!out.coeff(m, n).is_integral()) {
          throw IntegralityError("log_inv_one_minus: non-integral labelled coefficient (" +
                                 std::to_string(m) + ", " + std::to_string(n) +
                                 ") = " + to_string(out.coeff(m, n)));
        }
      }
    }
  }
  return out;
}

}  // namespace bimehler
