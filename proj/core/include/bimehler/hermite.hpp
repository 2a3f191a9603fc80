#pragma once

#include "bimehler/algebra.hpp"
#include "bimehler/biegf.hpp"

namespace bimehler {

/// Straight Hermite polynomial
///   H_{m,n}(x) = sum_{k=0}^{min(m,n)} binom(m,k) binom(n,k) k! x^k,
/// the weight enumerator of partial matchings between m men and n women.
WeightPoly hermite_poly(unsigned m, unsigned n);

/// exp(t + s + x t s) truncated to (max_m, max_n); its labelled coefficient
/// (m, n) is H_{m,n}(x).
BiSeries hermite_biegf(unsigned max_m, unsigned max_n);

/// H_{m,n}(x) H_{m,n}(y): marriages and affairs chosen independently.
WeightPoly hermite_pair_poly(unsigned m, unsigned n);

}  // namespace bimehler
