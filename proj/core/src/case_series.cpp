#include "bimehler/biegf.hpp"
#include "bimehler/profiles.hpp"

namespace bimehler {

namespace {

// The geometric factor 1/(1 - xyts) shared by the four path cases.
BiSeries chain_factor(unsigned max_m, unsigned max_n) {
  return inv_one_minus(BiSeries::ordinary_term(max_m, max_n, 1, 1,
                                               WeightPoly::monomial(1, 1, 1)));
}

}  // namespace

BiSeries case_series(CaseTag tag, unsigned max_m, unsigned max_n) {
  const WeightPoly xy = WeightPoly::monomial(1, 1, 1);
  switch (tag) {
    case CaseTag::kI:
      return BiSeries::ordinary_term(max_m, max_n, 1, 0, 1);
    case CaseTag::kIa:
      return BiSeries::ordinary_term(max_m, max_n, 0, 1, 1);
    case CaseTag::kII:
      return BiSeries::ordinary_term(max_m, max_n, 1, 1, WeightPoly::x()) *
             chain_factor(max_m, max_n);
    case CaseTag::kIIa:
      return BiSeries::ordinary_term(max_m, max_n, 1, 1, WeightPoly::y()) *
             chain_factor(max_m, max_n);
    case CaseTag::kIII:
      return BiSeries::ordinary_term(max_m, max_n, 2, 1, xy) * chain_factor(max_m, max_n);
    case CaseTag::kIIIa:
      return BiSeries::ordinary_term(max_m, max_n, 1, 2, xy) * chain_factor(max_m, max_n);
    case CaseTag::kIV:
      return log_inv_one_minus(BiSeries::ordinary_term(max_m, max_n, 1, 1, xy));
  }
  return BiSeries::zero(max_m, max_n);
}

BiSeries all_components_series(unsigned max_m, unsigned max_n) {
  BiSeries total = BiSeries::zero(max_m, max_n);
  for (CaseTag tag : kAllCases) total += case_series(tag, max_m, max_n);
  return total;
}

}  // namespace bimehler
