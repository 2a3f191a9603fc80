// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All comparisons are exact polynomial equality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bimehler/biegf.hpp"
#include "bimehler/hermite.hpp"
#include "bimehler/mehler.hpp"
#include "bimehler/profiles.hpp"
#include "support/profile_checks.hpp"
#include "support/random_series.hpp"

namespace bimehler {
namespace {

constexpr double kVerifySecondsLimit = 10.0;
constexpr double kFullEnumerationSecondsLimit = 30.0;
constexpr int kPropertyTrials = 100;
constexpr unsigned kPropertyBound = 4;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string cell(unsigned m, unsigned n) {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

Outcome mehler_three_way() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const VerifyReport report = verify(8, 8);
  const double took = seconds_since(start);
  if (!report.passed()) {
    const Mismatch& mm = report.mismatches.front();
    o.fail(std::to_string(report.mismatches.size()) + " mismatches, first at " + cell(mm.m, mm.n) +
           " " + mm.forms + ": " + to_string(mm.expected) + " vs " + to_string(mm.actual));
  }
  if (report.cell_count() != 81) o.fail("expected 81 cells");
  if (took >= kVerifySecondsLimit) o.fail("took " + std::to_string(took) + " s");
  o.detail = o.passed ? "81 cells x 3 forms equal, " + std::to_string(took) + " s" : o.detail;
  return o;
}

Outcome hermite_oracle() {
  Outcome o;
  unsigned cells = 0;
  for (unsigned m = 0; m <= 5; ++m) {
    for (unsigned n = 0; n <= 5; ++n) {
      ++cells;
      if (!(enumerate_marital(m, n) == hermite_poly(m, n))) o.fail("mismatch at " + cell(m, n));
    }
  }
  if (cells != 36) o.fail("expected 36 cells");
  if (to_string(enumerate_marital(2, 2)) != "1 + 4*x + 2*x^2") o.fail("H_{2,2} by enumeration");
  if (enumerate_marital(4, 4).evaluate(1, 0) != 209) o.fail("H_{4,4}(1) by enumeration != 209");
  if (o.passed) o.detail = "36 cells; H_{2,2} = 1 + 4*x + 2*x^2; H_{4,4}(1) = 209";
  return o;
}

Outcome full_model_oracle() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (unsigned m = 0; m <= 4; ++m) {
    for (unsigned n = 0; n <= 4; ++n) {
      if (!(enumerate_full(m, n) == hermite_pair_poly(m, n))) o.fail("mismatch at " + cell(m, n));
    }
  }
  const double took = seconds_since(start);
  if (enumerate_full(4, 4).evaluate(1, 1) != 43681) o.fail("cell (4,4) is not 43681 profiles");
  if (took >= kFullEnumerationSecondsLimit) o.fail("took " + std::to_string(took) + " s");
  if (o.passed) o.detail = "25 cells, (4,4) = 43681 profiles, " + std::to_string(took) + " s";
  return o;
}

Outcome biegf_consistency() {
  Outcome o;
  const BiSeries h = hermite_biegf(8, 8);
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned n = 0; n <= 8; ++n)
      if (!(h.coeff(m, n) == hermite_poly(m, n))) o.fail("mismatch at " + cell(m, n));
  if (o.passed) o.detail = "81 cells";
  return o;
}

Outcome decomposition_soundness() {
  Outcome o;
  std::size_t profiles = 0;
  for (unsigned m = 0; m <= 3; ++m) {
    for (unsigned n = 0; n <= 3; ++n) {
      testing::for_each_profile(m, n, [&](const Profile& p) {
        ++profiles;
        if (const auto err = testing::decomposition_error(p); !err.empty()) {
          o.fail(cell(m, n) + ": " + err);
        }
      });
    }
  }
  if (o.passed) o.detail = std::to_string(profiles) + " profiles";
  return o;
}

Outcome connected_census() {
  Outcome o;
  const BiSeries connected = all_components_series(3, 3);
  for (unsigned m = 0; m <= 3; ++m) {
    for (unsigned n = 0; n <= 3; ++n) {
      WeightPoly census;
      testing::for_each_profile(m, n, [&](const Profile& p) {
        if (decompose(p).size() == 1) census += profile_weight(p);
      });
      if (!(census == connected.coeff(m, n))) {
        o.fail(cell(m, n) + ": census " + to_string(census) + " vs series " +
               to_string(connected.coeff(m, n)));
      }
    }
  }
  if (o.passed) o.detail = "16 cells";
  return o;
}

Outcome series_properties() {
  Outcome o;
  std::mt19937_64 rng(0x5eed);
  const unsigned B = kPropertyBound;
  const BiSeries one = BiSeries::one(B, B);
  int checks = 0;
  for (int trial = 0; trial < kPropertyTrials; ++trial) {
    const BiSeries f = testing::random_series(rng, B, B, false);
    const BiSeries g = testing::random_series(rng, B, B, false);
    const BiSeries h = testing::random_series(rng, B, B, false);
    if (!(f * g == g * f)) o.fail("commutativity, trial " + std::to_string(trial));
    if (!((f * g) * h == f * (g * h))) o.fail("associativity, trial " + std::to_string(trial));

    const BiSeries u = testing::random_series(rng, B, B, true);
    const BiSeries v = testing::random_series(rng, B, B, true);
    if (!(exp(u + v) == exp(u) * exp(v))) o.fail("exp additivity, trial " + std::to_string(trial));
    if (!((one - u) * inv_one_minus(u) == one)) o.fail("(1-u) inv(1-u), trial " + std::to_string(trial));
    if (!(exp(log_inv_one_minus(u)) == inv_one_minus(u))) o.fail("exp of log, trial " + std::to_string(trial));
    checks += 5;
  }
  if (o.passed) o.detail = std::to_string(kPropertyTrials) + " trials x 5 laws at (4,4), " +
                           std::to_string(checks) + " checks";
  return o;
}

Outcome specialization_and_symmetry() {
  Outcome o;
  const BiSeries lhs = lhs_series(6, 6);
  const BiSeries component = rhs_component_series(6, 6);
  const BiSeries closed = rhs_closed_series(6, 6);
  for (unsigned m = 0; m <= 6; ++m) {
    for (unsigned n = 0; n <= 6; ++n) {
      if (!(lhs.coeff(m, n).drop_y() == hermite_poly(m, n))) o.fail("y:=0 at " + cell(m, n));
      for (const BiSeries* f : {&lhs, &component, &closed}) {
        if (!(f->coeff(m, n).swap_xy() == f->coeff(m, n))) o.fail("x<->y at " + cell(m, n));
        if (!(f->coeff(m, n) == f->coeff(n, m))) o.fail("m<->n at " + cell(m, n));
      }
    }
  }
  if (o.passed) o.detail = "49 cells";
  return o;
}

}  // namespace
}  // namespace bimehler

int main() {
  using namespace bimehler;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 Mehler three-way verification at (8,8)", mehler_three_way},
      {"2 Hermite enumeration oracle, m,n <= 5", hermite_oracle},
      {"3 Full-model enumeration oracle, m,n <= 4", full_model_oracle},
      {"4 Hermite BiEGF consistency at (8,8)", biegf_consistency},
      {"5 Decomposition soundness, m,n <= 3", decomposition_soundness},
      {"6 Connected-profile census, m,n <= 3", connected_census},
      {"7 Series-engine property suite", series_properties},
      {"8 Specialization and symmetry, m,n <= 6", specialization_and_symmetry},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s -- %s\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    if (!o.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
