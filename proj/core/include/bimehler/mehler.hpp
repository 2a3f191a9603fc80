#pragma once

// Three constructions of the BiEGF of marital-extramarital profiles, which
// the two-sex Mehler identity asserts are equal:
//
//   lhs:        sum H_{m,n}(x) H_{m,n}(y) t^m s^n / (m! n!)
//   component:  exp(t + s + (xts + yts + xyt^2s + xyts^2)/(1 - xyts) - log(1 - xyts))
//   closed:     (1 - xyts)^{-1} exp((t + s + xts + yts)/(1 - xyts))

#include <string>
#include <vector>

#include "bimehler/algebra.hpp"
#include "bimehler/biegf.hpp"

namespace bimehler {

BiSeries lhs_series(unsigned max_m, unsigned max_n);
BiSeries rhs_component_series(unsigned max_m, unsigned max_n);
BiSeries rhs_closed_series(unsigned max_m, unsigned max_n);

struct Mismatch {
  unsigned m = 0;
  unsigned n = 0;
  std::string forms;  // e.g. "lhs/closed"
  WeightPoly expected;
  WeightPoly actual;
};

struct FormTimings {
  double lhs_ms = 0;
  double component_ms = 0;
  double closed_ms = 0;
};

struct VerifyReport {
  unsigned max_m = 0;
  unsigned max_n = 0;
  std::vector<Mismatch> mismatches;
  FormTimings elapsed;

  bool passed() const { return mismatches.empty(); }
  unsigned cell_count() const { return (max_m + 1) * (max_n + 1); }
};

/// Builds the three forms (concurrently) and compares every pair cellwise.
/// Failures are reported as data, never thrown.
VerifyReport verify(unsigned max_m, unsigned max_n);

/// Cellwise comparison of two series with equal bounds; the first series
/// supplies `expected`.
std::vector<Mismatch> compare_series(const BiSeries& expected, const BiSeries& actual,
                                     const std::string& forms);

}  // namespace bimehler
