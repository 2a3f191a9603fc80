#pragma once

// The combinatorial model: m labelled men, n labelled women, a marriage
// matching and an independent affair matching. Labels are 1-based.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bimehler/algebra.hpp"
#include "bimehler/biegf.hpp"

namespace bimehler {

struct Edge {
  int man = 0;
  int woman = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A partial matching between men and women.
using Matching = std::vector<Edge>;

struct Profile {
  int m = 0;
  int n = 0;
  Matching marriages;
  Matching affairs;

  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Throws InvalidProfileError naming the first offending label: out of
/// range, two spouses, or two lovers. A pair that is both married and
/// lovers is legal.
void validate(const Profile& p);

/// x^{#marriages} y^{#affairs}.
WeightPoly profile_weight(const Profile& p);

inline constexpr unsigned kDefaultMaritalLimit = 6;
inline constexpr unsigned kDefaultFullLimit = 4;

/// Calls `visit` once for every partial matching of m men with n women.
/// Matchings are built by assigning each man in turn a free woman or nobody.
void for_each_matching(unsigned m, unsigned n,
                       const std::function<void(const Matching&)>& visit);

std::vector<Matching> all_matchings(unsigned m, unsigned n);

/// Brute-force sum of x^{|matching|} over all partial matchings. Throws
/// LimitExceededError when m or n exceeds `limit`.
WeightPoly enumerate_marital(unsigned m, unsigned n,
                             unsigned limit = kDefaultMaritalLimit);

/// Brute-force sum of x^k y^l over all (marriage, affair) matching pairs.
WeightPoly enumerate_full(unsigned m, unsigned n,
                          unsigned limit = kDefaultFullLimit);

/// Largest population accepted by random_profile.
inline constexpr unsigned kRandomProfileLimit = 16;

/// A matching drawn uniformly from all partial matchings of m men, n women.
Matching random_matching(unsigned m, unsigned n, std::mt19937_64& rng);

/// Marriages and affairs drawn independently and uniformly.
Profile random_profile(unsigned m, unsigned n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Connected components

enum class CaseTag { kI, kIa, kII, kIIa, kIII, kIIIa, kIV };

inline constexpr CaseTag kAllCases[] = {CaseTag::kI,   CaseTag::kIa,   CaseTag::kII,
                                        CaseTag::kIIa, CaseTag::kIII,  CaseTag::kIIIa,
                                        CaseTag::kIV};

std::string_view to_string(CaseTag tag);
/// "I", "Ia", ... "IV". Throws UnknownCaseError.
CaseTag parse_case_tag(std::string_view text);

/// One connected component of the two-coloured relationship graph.
///
/// `men` and `women` list the members in walk order:
///   I     lone man; k = 0
///   Ia    lone woman; k = 0
///   II    m1 =w1 ~m2 =w2 ... =wk        (= marriage, ~ affair)
///   IIa   m1 ~w1 =m2 ~w2 ... ~wk
///   III   m1 =w1 ~m2 =w2 ... ~m(k+1)    starts at the married end
///   IIIa  w1 =m1 ~w2 =m2 ... ~w(k+1)    starts at the married end
///   IV    m1 =w1 ~m2 =w2 ... =wk ~m1    m1 is the smallest man label
struct Component {
  CaseTag tag = CaseTag::kI;
  int k = 0;
  std::vector<int> men;
  std::vector<int> women;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Splits the profile into connected components. Paths are listed before
/// cycles; paths in order of their smallest endpoint (men before women),
/// cycles in order of their smallest man.
std::vector<Component> decompose(const Profile& p);

/// Monomial weight of a component: I, Ia -> 1; II -> x^k y^{k-1};
/// IIa -> x^{k-1} y^k; III, IIIa, IV -> x^k y^k.
WeightPoly component_weight(const Component& c);

struct ComponentEdges {
  Matching marriages;
  Matching affairs;
};

/// Rebuilds the edges of a component from its tag and member order.
ComponentEdges component_edges(const Component& c);

/// Exact truncated BiEGF of one component case:
///   I: t   Ia: s   II: xts/(1-xyts)   IIa: yts/(1-xyts)
///   III: xy t^2 s/(1-xyts)   IIIa: xy t s^2/(1-xyts)   IV: -log(1-xyts)
BiSeries case_series(CaseTag tag, unsigned max_m, unsigned max_n);

/// Sum of all seven case series: the BiEGF of connected profiles.
BiSeries all_components_series(unsigned max_m, unsigned max_n);

}  // namespace bimehler
