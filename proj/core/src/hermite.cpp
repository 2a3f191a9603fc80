#include "bimehler/hermite.hpp"

#include <algorithm>

#include "bimehler/combinatorics.hpp"

namespace bimehler {

WeightPoly hermite_poly(unsigned m, unsigned n) {
  std::vector<Term> terms;
  const unsigned top = std::min(m, n);
  for (unsigned k = 0; k <= top; ++k) {
    terms.push_back({{k, 0}, Rational(binomial(m, k) * binomial(n, k) * factorial(k))});
  }
  return WeightPoly::from_terms(std::move(terms));
}

BiSeries hermite_biegf(unsigned max_m, unsigned max_n) {
  const BiSeries connected = BiSeries::term(max_m, max_n, 1, 0, 1) +
                             BiSeries::term(max_m, max_n, 0, 1, 1) +
                             BiSeries::term(max_m, max_n, 1, 1, WeightPoly::x());
  return exp(connected);
}

WeightPoly hermite_pair_poly(unsigned m, unsigned n) {
  const WeightPoly h = hermite_poly(m, n);
  return h * h.swap_xy();
}

}  // namespace bimehler
