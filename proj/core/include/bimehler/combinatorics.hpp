#pragma once

#include <cstddef>
#include <vector>

#include "bimehler/algebra.hpp"

namespace bimehler {

/// n!, exact. Values up to a fixed size come from a shared table built once.
Integer factorial(unsigned n);

/// binom(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);

/// Pascal triangle rows 0..max_n, built once and then read-only.
class BinomialTable {
 public:
  explicit BinomialTable(unsigned max_n);

  unsigned max_n() const { return max_n_; }
  const Integer& operator()(unsigned n, unsigned k) const;

 private:
  unsigned max_n_;
  std::vector<std::vector<Integer>> rows_;
};

}  // namespace bimehler
