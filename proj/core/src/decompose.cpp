#include <algorithm>
#include <array>
#include <string>

#include "bimehler/errors.hpp"
#include "bimehler/profiles.hpp"

namespace bimehler {

namespace {

enum Color { kMarriage = 0, kAffair = 1 };

// Vertices 0..m-1 are men 1..m, vertices m..m+n-1 are women 1..n.
class RelationGraph {
 public:
  explicit RelationGraph(const Profile& p)
      : men_(p.m), partner_(static_cast<std::size_t>(p.m + p.n), {-1, -1}) {
    link(p.marriages, kMarriage);
    link(p.affairs, kAffair);
  }

  int size() const { return static_cast<int>(partner_.size()); }
  bool is_man(int v) const { return v < men_; }
  int label(int v) const { return is_man(v) ? v + 1 : v - men_ + 1; }
  int partner(int v, Color c) const { return partner_[v][c]; }
  int degree(int v) const { return (partner(v, kMarriage) >= 0) + (partner(v, kAffair) >= 0); }

 private:
  void link(const Matching& edges, Color c) {
    for (const Edge& e : edges) {
      const int man = e.man - 1;
      const int woman = men_ + e.woman - 1;
      partner_[man][c] = woman;
      partner_[woman][c] = man;
    }
  }

  int men_;
  std::vector<std::array<int, 2>> partner_;
};

Color other(Color c) { return c == kMarriage ? kAffair : kMarriage; }

Component make_component(const RelationGraph& g, CaseTag tag, int k,
                         const std::vector<int>& walk) {
  Component c{tag, k, {}, {}};
  for (int v : walk) (g.is_man(v) ? c.men : c.women).push_back(g.label(v));
  return c;
}

Component unroll_path(const RelationGraph& g, int start, std::vector<char>& visited) {
  std::vector<int> walk{start};
  visited[start] = 1;
  const Color first = g.partner(start, kMarriage) >= 0 ? kMarriage : kAffair;
  Color color = first;
  for (int v = g.partner(start, color); v >= 0; v = g.partner(v, color)) {
    walk.push_back(v);
    visited[v] = 1;
    color = other(color);
  }

  const int length = static_cast<int>(walk.size());
  if (length % 2 == 0) {
    // Odd number of edges: both ends carry the first colour.
    if (!g.is_man(walk.front())) std::reverse(walk.begin(), walk.end());
    return make_component(g, first == kMarriage ? CaseTag::kII : CaseTag::kIIa,
                          length / 2, walk);
  }
  // Even number of edges: the two ends carry different colours.
  if (first != kMarriage) std::reverse(walk.begin(), walk.end());
  return make_component(g, g.is_man(walk.front()) ? CaseTag::kIII : CaseTag::kIIIa,
                        (length - 1) / 2, walk);
}

Component unroll_cycle(const RelationGraph& g, int start, std::vector<char>& visited) {
  std::vector<int> walk;
  Color color = kMarriage;
  int v = start;
  do {
    walk.push_back(v);
    visited[v] = 1;
    v = g.partner(v, color);
    color = other(color);
  } while (v != start);
  return make_component(g, CaseTag::kIV, static_cast<int>(walk.size()) / 2, walk);
}

}  // namespace

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kI: return "I";
    case CaseTag::kIa: return "Ia";
    case CaseTag::kII: return "II";
    case CaseTag::kIIa: return "IIa";
    case CaseTag::kIII: return "III";
    case CaseTag::kIIIa: return "IIIa";
    case CaseTag::kIV: return "IV";
  }
  return "?";
}

CaseTag parse_case_tag(std::string_view text) {
  for (CaseTag tag : kAllCases) {
    if (to_string(tag) == text) return tag;
  }
  throw UnknownCaseError("unknown component case '" + std::string(text) +
                         "' (expected one of I, Ia, II, IIa, III, IIIa, IV)");
}

std::vector<Component> decompose(const Profile& p) {
  validate(p);
  const RelationGraph g(p);
  std::vector<char> visited(g.size(), 0);
  std::vector<Component> out;

  for (int v = 0; v < g.size(); ++v) {
    if (visited[v]) continue;
    if (g.degree(v) == 0) {
      visited[v] = 1;
      out.push_back(make_component(g, g.is_man(v) ? CaseTag::kI : CaseTag::kIa, 0, {v}));
    } else if (g.degree(v) == 1) {
      out.push_back(unroll_path(g, v, visited));
    }
  }
  // Every remaining vertex has one spouse and one lover, so lies on a cycle,
  // and every cycle contains a man.
  for (int v = 0; v < p.m; ++v) {
    if (!visited[v]) out.push_back(unroll_cycle(g, v, visited));
  }
  return out;
}

WeightPoly component_weight(const Component& c) {
  const auto k = static_cast<unsigned>(c.k);
  switch (c.tag) {
    case CaseTag::kI:
    case CaseTag::kIa:
      return WeightPoly(1);
    case CaseTag::kII:
      return WeightPoly::monomial(1, k, k - 1);
    case CaseTag::kIIa:
      return WeightPoly::monomial(1, k - 1, k);
    case CaseTag::kIII:
    case CaseTag::kIIIa:
    case CaseTag::kIV:
      return WeightPoly::monomial(1, k, k);
  }
  return {};
}

ComponentEdges component_edges(const Component& c) {
  ComponentEdges e;
  const auto& men = c.men;
  const auto& women = c.women;
  const std::size_t k = static_cast<std::size_t>(c.k);
  switch (c.tag) {
    case CaseTag::kI:
    case CaseTag::kIa:
      break;
    case CaseTag::kII:
      for (std::size_t i = 0; i < k; ++i) e.marriages.push_back({men[i], women[i]});
      for (std::size_t i = 0; i + 1 < k; ++i) e.affairs.push_back({men[i + 1], women[i]});
      break;
    case CaseTag::kIIa:
      for (std::size_t i = 0; i < k; ++i) e.affairs.push_back({men[i], women[i]});
      for (std::size_t i = 0; i + 1 < k; ++i) e.marriages.push_back({men[i + 1], women[i]});
      break;
    case CaseTag::kIII:
      for (std::size_t i = 0; i < k; ++i) {
        e.marriages.push_back({men[i], women[i]});
        e.affairs.push_back({men[i + 1], women[i]});
      }
      break;
    case CaseTag::kIIIa:
      for (std::size_t i = 0; i < k; ++i) {
        e.marriages.push_back({men[i], women[i]});
        e.affairs.push_back({men[i], women[i + 1]});
      }
      break;
    case CaseTag::kIV:
      for (std::size_t i = 0; i < k; ++i) {
        e.marriages.push_back({men[i], women[i]});
        e.affairs.push_back({men[(i + 1) % k], women[i]});
      }
      break;
  }
  return e;
}

}  // namespace bimehler
