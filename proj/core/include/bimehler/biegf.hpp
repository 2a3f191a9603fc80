#pragma once

// Truncated bivariate exponential generating functions.
//
// A BiSeries with bounds (M, N) stands for
//
//     sum_{m<=M, n<=N} A[m][n] t^m s^n / (m! n!)
//
// and stores the labelled counts A[m][n] (weight enumerators of structures on
// m men and n women), never the ordinary coefficients A[m][n] / (m! n!).

#include <cstddef>
#include <vector>

#include "bimehler/algebra.hpp"

namespace bimehler {

class BiSeries {
 public:
  /// The zero series with the given truncation bounds.
  BiSeries(unsigned max_m, unsigned max_n);

  static BiSeries zero(unsigned max_m, unsigned max_n) { return {max_m, max_n}; }
  static BiSeries one(unsigned max_m, unsigned max_n);

  /// Series with the single labelled coefficient A[m][n] = `labelled`.
  /// Cells outside the bounds are truncated away.
  static BiSeries term(unsigned max_m, unsigned max_n, unsigned m, unsigned n,
                       const WeightPoly& labelled);

  /// Same as `term`, but the coefficient is given in ordinary form
  /// (the coefficient of t^m s^n) and converted by multiplying with m! n!.
  static BiSeries ordinary_term(unsigned max_m, unsigned max_n, unsigned m,
                                unsigned n, const WeightPoly& ordinary);

  unsigned max_m() const { return max_m_; }
  unsigned max_n() const { return max_n_; }

  /// Labelled coefficient A[m][n]. Throws IndexError out of range.
  const WeightPoly& coeff(unsigned m, unsigned n) const;
  void set_coeff(unsigned m, unsigned n, WeightPoly value);

  bool is_zero() const;
  bool has_zero_constant() const { return cells_.front().is_zero(); }
  bool is_integral() const;

  /// The same series read at smaller bounds.
  BiSeries truncate(unsigned max_m, unsigned max_n) const;

  BiSeries& operator+=(const BiSeries& other);
  BiSeries& operator-=(const BiSeries& other);

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  /// Labelled (binomial) convolution:
  ///   C[m][n] = sum_{k,s} binom(m,k) binom(n,s) A[k][s] B[m-k][n-s].
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend bool operator==(const BiSeries& a, const BiSeries& b);

 private:
  std::size_t index(unsigned m, unsigned n) const {
    return static_cast<std::size_t>(m) * (max_n_ + 1) + n;
  }
  void require_same_bounds(const BiSeries& other, const char* op) const;

  unsigned max_m_;
  unsigned max_n_;
  std::vector<WeightPoly> cells_;
};

BiSeries scale(const BiSeries& f, const Rational& factor);

/// exp(f) = sum_k f^k / k!. Requires A[0][0] = 0 (ConstantTermError).
BiSeries exp(const BiSeries& f);

/// (1 - u)^{-1} = sum_k u^k. Requires A[0][0] = 0.
BiSeries inv_one_minus(const BiSeries& u);

/// -log(1 - u) = sum_{k>=1} u^k / k. Requires A[0][0] = 0. When u has integer
/// coefficients the result must too; a violation throws IntegralityError.
BiSeries log_inv_one_minus(const BiSeries& u);

}  // namespace bimehler
