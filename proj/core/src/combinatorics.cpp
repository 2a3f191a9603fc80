#include "bimehler/combinatorics.hpp"

#include <array>

#include "bimehler/errors.hpp"

namespace bimehler {

namespace {

constexpr unsigned kCachedFactorials = 128;

const std::array<Integer, kCachedFactorials>& factorial_cache() {
  static const auto table = [] {
    std::array<Integer, kCachedFactorials> t;
    t[0] = 1;
    for (unsigned i = 1; i < kCachedFactorials; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

}  // namespace

Integer factorial(unsigned n) {
  const auto& cache = factorial_cache();
  if (n < kCachedFactorials) return cache[n];
  Integer out = cache[kCachedFactorials - 1];
  for (unsigned i = kCachedFactorials; i <= n; ++i) out *= i;
  return out;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BinomialTable::BinomialTable(unsigned max_n) : max_n_(max_n), rows_(max_n + 1) {
  for (unsigned n = 0; n <= max_n; ++n) {
    rows_[n].resize(n + 1);
    rows_[n][0] = 1;
    rows_[n][n] = 1;
    for (unsigned k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

const Integer& BinomialTable::operator()(unsigned n, unsigned k) const {
  if (n > max_n_ || k > n) {
    throw IndexError("binomial table lookup (" + std::to_string(n) + ", " +
                     std::to_string(k) + ") outside table of size " +
                     std::to_string(max_n_));
  }
  return rows_[n][k];
}

}  // namespace bimehler
