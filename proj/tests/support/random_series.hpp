#pragma once

// Seeded generators for property tests.

#include <random>

#include "bimehler/algebra.hpp"
#include "bimehler/biegf.hpp"

namespace bimehler::testing {

/// Integer polynomial with x/y degree <= max_degree and coefficients in
/// [-max_coeff, max_coeff]; each monomial is present with probability 1/2.
inline WeightPoly random_poly(std::mt19937_64& rng, unsigned max_degree = 2,
                              int max_coeff = 3) {
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::bernoulli_distribution present(0.5);
  std::vector<Term> terms;
  for (unsigned i = 0; i <= max_degree; ++i)
    for (unsigned j = 0; j <= max_degree; ++j)
      if (present(rng)) terms.push_back({{i, j}, coeff(rng)});
  return WeightPoly::from_terms(std::move(terms));
}

/// Rational polynomial with small numerators and denominators.
inline WeightPoly random_rational_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<unsigned> deg(0, 3);
  std::uniform_int_distribution<int> count(0, 5);
  std::vector<Term> terms;
  for (int t = count(rng); t > 0; --t) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    terms.push_back({{deg(rng), deg(rng)}, q});
  }
  return WeightPoly::from_terms(std::move(terms));
}

/// Random series; sparse cells (probability 1/2 of being zero). With
/// `zero_constant` the (0,0) cell is cleared.
inline BiSeries random_series(std::mt19937_64& rng, unsigned max_m, unsigned max_n,
                              bool zero_constant) {
  std::bernoulli_distribution present(0.5);
  BiSeries f(max_m, max_n);
  for (unsigned m = 0; m <= max_m; ++m)
    for (unsigned n = 0; n <= max_n; ++n)
      if (present(rng)) f.set_coeff(m, n, random_poly(rng, 1, 3));
  if (zero_constant) f.set_coeff(0, 0, WeightPoly());
  return f;
}

}  // namespace bimehler::testing
