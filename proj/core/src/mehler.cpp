#include "bimehler/mehler.hpp"

#include <chrono>
#include <future>
#include <utility>

#include "bimehler/hermite.hpp"
#include "bimehler/profiles.hpp"

namespace bimehler {

namespace {

template <typename Fn>
std::pair<BiSeries, double> timed(Fn build) {
  const auto start = std::chrono::steady_clock::now();
  BiSeries series = build();
  const std::chrono::duration<double, std::milli> took =
      std::chrono::steady_clock::now() - start;
  return {std::move(series), took.count()};
}

}  // namespace

BiSeries lhs_series(unsigned max_m, unsigned max_n) {
  BiSeries f(max_m, max_n);
  for (unsigned m = 0; m <= max_m; ++m) {
    for (unsigned n = 0; n <= max_n; ++n) f.set_coeff(m, n, hermite_pair_poly(m, n));
  }
  return f;
}

BiSeries rhs_component_series(unsigned max_m, unsigned max_n) {
  return exp(all_components_series(max_m, max_n));
}

BiSeries rhs_closed_series(unsigned max_m, unsigned max_n) {
  const BiSeries geometric = inv_one_minus(
      BiSeries::ordinary_term(max_m, max_n, 1, 1, WeightPoly::monomial(1, 1, 1)));
  const BiSeries numerator = BiSeries::ordinary_term(max_m, max_n, 1, 0, 1) +
                             BiSeries::ordinary_term(max_m, max_n, 0, 1, 1) +
                             BiSeries::ordinary_term(max_m, max_n, 1, 1,
                                                     WeightPoly::x() + WeightPoly::y());
  return geometric * exp(numerator * geometric);
}

std::vector<Mismatch> compare_series(const BiSeries& expected, const BiSeries& actual,
                                     const std::string& forms) {
  std::vector<Mismatch> out;
  for (unsigned m = 0; m <= expected.max_m(); ++m) {
    for (unsigned n = 0; n <= expected.max_n(); ++n) {
      const WeightPoly& e = expected.coeff(m, n);
      const WeightPoly& a = actual.coeff(m, n);
      if (!(e == a)) out.push_back({m, n, forms, e, a});
    }
  }
  return out;
}

VerifyReport verify(unsigned max_m, unsigned max_n) {
  auto lhs = std::async(std::launch::async, [=] {
    return timed([=] { return lhs_series(max_m, max_n); });
  });
  auto component = std::async(std::launch::async, [=] {
    return timed([=] { return rhs_component_series(max_m, max_n); });
  });
  auto closed = std::async(std::launch::async, [=] {
    return timed([=] { return rhs_closed_series(max_m, max_n); });
  });

  auto [lhs_f, lhs_ms] = lhs.get();
  auto [component_f, component_ms] = component.get();
  auto [closed_f, closed_ms] = closed.get();

  VerifyReport report;
  report.max_m = max_m;
  report.max_n = max_n;
  report.elapsed = {lhs_ms, component_ms, closed_ms};

  auto append = [&report](std::vector<Mismatch> found) {
    for (auto& mm : found) report.mismatches.push_back(std::move(mm));
  };
  append(compare_series(lhs_f, component_f, "lhs/component"));
  append(compare_series(lhs_f, closed_f, "lhs/closed"));
  append(compare_series(component_f, closed_f, "component/closed"));
  return report;
}

}  // namespace bimehler
