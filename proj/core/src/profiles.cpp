#include "bimehler/profiles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "bimehler/errors.hpp"

namespace bimehler {

namespace {

using Sex = InvalidProfileError::Sex;

void check_matching(const Profile& p, const Matching& edges, const char* partner) {
  std::vector<char> man_taken(static_cast<std::size_t>(p.m) + 1, 0);
  std::vector<char> woman_taken(static_cast<std::size_t>(p.n) + 1, 0);
  for (const Edge& e : edges) {
    if (e.man < 1 || e.man > p.m) {
      throw InvalidProfileError("man " + std::to_string(e.man) + " is outside 1.." +
                                    std::to_string(p.m),
                                Sex::kMan, e.man);
    }
    if (e.woman < 1 || e.woman > p.n) {
      throw InvalidProfileError("woman " + std::to_string(e.woman) + " is outside 1.." +
                                    std::to_string(p.n),
                                Sex::kWoman, e.woman);
    }
    if (man_taken[e.man]) {
      throw InvalidProfileError("man " + std::to_string(e.man) + " has more than one " +
                                    partner,
                                Sex::kMan, e.man);
    }
    if (woman_taken[e.woman]) {
      throw InvalidProfileError("woman " + std::to_string(e.woman) +
                                    " has more than one " + partner,
                                Sex::kWoman, e.woman);
    }
    man_taken[e.man] = 1;
    woman_taken[e.woman] = 1;
  }
}

void require_within(unsigned m, unsigned n, unsigned limit, const char* what) {
  if (m > limit || n > limit) {
    throw LimitExceededError(std::string(what) + " of " + std::to_string(m) + " men and " +
                             std::to_string(n) + " women exceeds the enumeration limit " +
                             std::to_string(limit));
  }
}

WeightPoly from_counts(const std::map<Exponent, std::uint64_t>& counts) {
  std::vector<Term> terms;
  for (const auto& [e, c] : counts) terms.push_back({e, Rational(static_cast<unsigned long>(c))});
  return WeightPoly::from_terms(std::move(terms));
}

void extend_matching(unsigned man, unsigned m, unsigned n, std::vector<char>& woman_used,
                     Matching& current, const std::function<void(const Matching&)>& visit) {
  if (man > m) {
    visit(current);
    return;
  }
  extend_matching(man + 1, m, n, woman_used, current, visit);
  for (unsigned w = 1; w <= n; ++w) {
    if (woman_used[w]) continue;
    woman_used[w] = 1;
    current.push_back({static_cast<int>(man), static_cast<int>(w)});
    extend_matching(man + 1, m, n, woman_used, current, visit);
    current.pop_back();
    woman_used[w] = 0;
  }
}

std::uint64_t matchings_of_size(unsigned m, unsigned n, unsigned k) {
  // binom(m,k) binom(n,k) k! = m!/(m-k)! * binom(n,k)
  std::uint64_t falling = 1;
  for (unsigned i = 0; i < k; ++i) falling *= (m - i);
  std::uint64_t choose = 1;
  for (unsigned i = 0; i < k; ++i) choose = choose * (n - i) / (i + 1);
  return falling * choose;
}

}  // namespace

void validate(const Profile& p) {
  if (p.m < 0) throw InvalidProfileError("negative number of men", Sex::kMan, p.m);
  if (p.n < 0) throw InvalidProfileError("negative number of women", Sex::kWoman, p.n);
  check_matching(p, p.marriages, "spouse");
  check_matching(p, p.affairs, "lover");
}

WeightPoly profile_weight(const Profile& p) {
  validate(p);
  return WeightPoly::monomial(1, static_cast<unsigned>(p.marriages.size()),
                              static_cast<unsigned>(p.affairs.size()));
}

void for_each_matching(unsigned m, unsigned n,
                       const std::function<void(const Matching&)>& visit) {
  std::vector<char> woman_used(n + 1, 0);
  Matching current;
  current.reserve(std::min(m, n));
  extend_matching(1, m, n, woman_used, current, visit);
}

std::vector<Matching> all_matchings(unsigned m, unsigned n) {
  std::vector<Matching> out;
  for_each_matching(m, n, [&out](const Matching& mt) { out.push_back(mt); });
  return out;
}

WeightPoly enumerate_marital(unsigned m, unsigned n, unsigned limit) {
  require_within(m, n, limit, "marital enumeration");
  std::map<Exponent, std::uint64_t> counts;
  for_each_matching(m, n, [&counts](const Matching& mt) {
    ++counts[{static_cast<unsigned>(mt.size()), 0}];
  });
  return from_counts(counts);
}

WeightPoly enumerate_full(unsigned m, unsigned n, unsigned limit) {
  require_within(m, n, limit, "full enumeration");
  const std::vector<Matching> matchings = all_matchings(m, n);
  std::map<Exponent, std::uint64_t> counts;
  Profile p{static_cast<int>(m), static_cast<int>(n), {}, {}};
  for (const Matching& marriages : matchings) {
    p.marriages = marriages;
    for (const Matching& affairs : matchings) {
      p.affairs = affairs;
      const WeightPoly w = profile_weight(p);
      ++counts[w.terms().front().exponent];
    }
  }
  return from_counts(counts);
}

Matching random_matching(unsigned m, unsigned n, std::mt19937_64& rng) {
  if (m > kRandomProfileLimit || n > kRandomProfileLimit) {
    throw LimitExceededError("random profiles support at most " +
                             std::to_string(kRandomProfileLimit) + " men and women");
  }
  const unsigned top = std::min(m, n);
  std::vector<std::uint64_t> sizes(top + 1);
  for (unsigned k = 0; k <= top; ++k) sizes[k] = matchings_of_size(m, n, k);
  const std::uint64_t total = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});

  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  std::uint64_t r = pick(rng);
  unsigned k = 0;
  while (r >= sizes[k]) r -= sizes[k++];

  std::vector<int> men(m);
  std::vector<int> women(n);
  std::iota(men.begin(), men.end(), 1);
  std::iota(women.begin(), women.end(), 1);
  std::shuffle(men.begin(), men.end(), rng);
  std::shuffle(women.begin(), women.end(), rng);

  Matching out;
  for (unsigned i = 0; i < k; ++i) out.push_back({men[i], women[i]});
  std::sort(out.begin(), out.end());
  return out;
}

Profile random_profile(unsigned m, unsigned n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Profile p{static_cast<int>(m), static_cast<int>(n), {}, {}};
  p.marriages = random_matching(m, n, rng);
  p.affairs = random_matching(m, n, rng);
  return p;
}

}  // namespace bimehler
