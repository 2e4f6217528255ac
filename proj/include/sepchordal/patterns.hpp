#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordal.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "separators.hpp"

namespace sepchordal {

enum class Pattern : std::uint8_t { claw, p4, two_p3, gem, dart, butterfly, hajos };

inline constexpr std::array<Pattern, 7> all_patterns = {Pattern::claw, Pattern::p4,        Pattern::two_p3,
                                                        Pattern::gem,  Pattern::dart,      Pattern::butterfly,
                                                        Pattern::hajos};

inline std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::claw: return "claw";
    case Pattern::p4: return "P4";
    case Pattern::two_p3: return "2P3";
    case Pattern::gem: return "gem";
    case Pattern::dart: return "dart";
    case Pattern::butterfly: return "butterfly";
    case Pattern::hajos: return "hajos";
  }
  return "?";
}

inline std::optional<Pattern> pattern_from_string(std::string_view s) {
  for (auto p : all_patterns)
    if (to_string(p) == s) return p;
  return std::nullopt;
}

struct PatternGraph {
  Pattern name;
  Graph graph;
};

namespace named {

inline Graph claw() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline Graph p4() { return path_graph(4); }
inline Graph two_p3() { return Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}); }
/// Path 0-1-2-3 plus vertex 4 adjacent to all of it.
inline Graph gem() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }
/// Diamond on 0,1,2,3 (0 and 1 of degree three, 2 and 3 non-adjacent) with pendant 4 on vertex 1.
inline Graph dart() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}}); }
/// Centre 0 joined to two disjoint paths 1-2-3 and 4-5-6.
inline Graph butterfly() {
  return Graph(7, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}});
}
/// Triangle x=0, y=1, z=2 with a=3 on {x,y}, b=4 on {x,z}, c=5 on {y,z}.
inline Graph hajos() {
  return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 0}, {4, 2}, {5, 1}, {5, 2}});
}

inline Graph of(Pattern p) {
  switch (p) {
    case Pattern::claw: return claw();
    case Pattern::p4: return p4();
    case Pattern::two_p3: return two_p3();
    case Pattern::gem: return gem();
    case Pattern::dart: return dart();
    case Pattern::butterfly: return butterfly();
    case Pattern::hajos: return hajos();
  }
  return {};
}

}  // namespace named

/// The seven forbidden graphs. Held by value so that mutated catalogs can be tested against the real one.
struct Catalog {
  std::array<PatternGraph, 7> entries;

  const Graph& operator[](Pattern p) const { return entries[static_cast<std::size_t>(p)].graph; }
  Graph& operator[](Pattern p) { return entries[static_cast<std::size_t>(p)].graph; }
};

inline Catalog default_catalog() {
  Catalog c;
  for (auto p : all_patterns) c.entries[static_cast<std::size_t>(p)] = {p, named::of(p)};
  return c;
}

namespace detail {

inline std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

inline bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<vertex_t>& map, VertexSet used) {
  const int k = static_cast<int>(map.size());
  if (k == a.order()) return true;
  for (int cand = 0; cand < b.order(); ++cand) {
    if (used.contains(cand) || a.degree(k) != b.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < k && ok; ++prev) ok = a.adjacent(prev, k) == b.adjacent(map[prev], cand);
    if (!ok) continue;
    map.push_back(cand);
    if (extend_isomorphism(a, b, map, used.with(cand))) return true;
    map.pop_back();
  }
  return false;
}

}  // namespace detail

/// Isomorphism by degree-respecting backtracking over vertex maps.
inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (detail::sorted_degrees(a) != detail::sorted_degrees(b)) return false;
  std::vector<vertex_t> map;
  return detail::extend_isomorphism(a, b, map, VertexSet{});
}

/**
 * First vertex subset of g (lexicographic over sorted member lists) that
 * induces a copy of `pattern`, if any.
 */
inline std::optional<VertexSet> contains_induced(const Graph& g, const Graph& pattern) {
  const int k = pattern.order();
  if (k > g.order()) return std::nullopt;
  if (k == 0) return VertexSet{};
  const int edges = pattern.edge_count();
  const auto degrees = detail::sorted_degrees(pattern);

  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  const int n = g.order();
  while (true) {
    VertexSet s(pick);
    auto h = induced_subgraph(g, s);
    if (h.edge_count() == edges && detail::sorted_degrees(h) == degrees && is_isomorphic(h, pattern)) return s;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return std::nullopt;
}

inline std::optional<VertexSet> contains_induced(const Graph& g, const PatternGraph& p) {
  return contains_induced(g, p.graph);
}

struct PatternOccurrence {
  Pattern pattern;
  VertexSet vertices;
  bool operator==(const PatternOccurrence&) const = default;
};

/// Every catalog pattern occurring in g, with its first occurrence.
inline std::vector<PatternOccurrence> forbidden_profile(const Graph& g, const Catalog& catalog = default_catalog()) {
  std::vector<PatternOccurrence> out;
  for (const auto& entry : catalog.entries)
    if (auto hit = contains_induced(g, entry.graph)) out.push_back({entry.name, *hit});
  return out;
}

/**
 * One class of chordal graphs described two ways: by the forbidden patterns
 * and by the relation kinds allowed between separators of induced subgraphs.
 */
struct ClassDefinition {
  std::string id;
  std::vector<Pattern> forbidden;
  RelationSet allowed;
};

/// Classes i..vi, each a combination of allowed relation kinds.
inline std::vector<ClassDefinition> relation_classes() {
  using enum PairRelation;
  return {
      {"i", {Pattern::claw, Pattern::gem}, {disjoint}},
      {"ii", {Pattern::p4, Pattern::gem, Pattern::butterfly}, {equal}},
      {"iii", {Pattern::dart, Pattern::gem}, {disjoint, equal}},
      {"iv", {Pattern::gem, Pattern::butterfly}, {disjoint, equal, proper_containment}},
      {"v", {Pattern::dart}, {disjoint, equal, overlap}},
      {"vi", {Pattern::two_p3, Pattern::p4}, {equal, proper_containment}},
  };
}

/// Single-relation exclusions: each forbids exactly one kind.
inline std::vector<ClassDefinition> exclusion_classes() {
  using enum PairRelation;
  return {
      {"no-disjoint", {Pattern::p4, Pattern::two_p3}, {equal, proper_containment, overlap}},
      {"no-equal", {Pattern::claw}, {disjoint, proper_containment, overlap}},
      {"no-containment", {Pattern::dart}, {disjoint, equal, overlap}},
      {"no-overlap", {Pattern::gem, Pattern::butterfly}, {disjoint, equal, proper_containment}},
  };
}

struct ClassVerdict {
  std::string id;
  bool member = true;
  std::optional<PatternOccurrence> witness;
};

struct ClassReport {
  std::string graph6;
  bool chordal = true;
  std::vector<ClassVerdict> classes;  // relation classes in order, then "helly"

  const ClassVerdict& at(std::string_view id) const {
    for (const auto& c : classes)
      if (c.id == id) return c;
    throw domain_error("ClassReport: no class '" + std::string(id) + "'");
  }
};

/// Membership via forbidden patterns: the first forbidden pattern found is the witness.
inline ClassVerdict pattern_verdict(const std::string& id, const std::vector<Pattern>& forbidden,
                                    const std::vector<PatternOccurrence>& present) {
  ClassVerdict v{id, true, std::nullopt};
  for (auto p : forbidden)
    for (const auto& occ : present)
      if (occ.pattern == p) {
        v.member = false;
        v.witness = occ;
        return v;
      }
  return v;
}

inline ClassReport classify(const Graph& g, const Catalog& catalog = default_catalog(),
                            const std::vector<ClassDefinition>& classes = relation_classes()) {
  require_chordal(g, "classify");
  auto present = forbidden_profile(g, catalog);
  ClassReport r;
  r.graph6 = to_graph6(g);
  for (const auto& c : classes) r.classes.push_back(pattern_verdict(c.id, c.forbidden, present));
  r.classes.push_back(pattern_verdict("helly", {Pattern::hajos}, present));
  return r;
}

struct Containment {
  Pattern inner;
  Pattern outer;
  std::optional<VertexSet> occurrence;
};

/// Induced containments claw in dart, P4 in gem, dart in butterfly, 2P3 in butterfly.
inline std::vector<Containment> catalog_containments(const Catalog& catalog = default_catalog()) {
  std::vector<Containment> out = {{Pattern::claw, Pattern::dart, {}},
                                  {Pattern::p4, Pattern::gem, {}},
                                  {Pattern::dart, Pattern::butterfly, {}},
                                  {Pattern::two_p3, Pattern::butterfly, {}}};
  for (auto& c : out) c.occurrence = contains_induced(catalog[c.outer], catalog[c.inner]);
  return out;
}

inline bool remark_implications_check(const Catalog& catalog = default_catalog()) {
  auto all = catalog_containments(catalog);
  return std::all_of(all.begin(), all.end(), [](const auto& c) { return c.occurrence.has_value(); });
}

}  // namespace sepchordal
