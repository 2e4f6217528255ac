#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordal.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace sepchordal {

enum class PairRelation : std::uint8_t { disjoint, equal, proper_containment, overlap };

inline constexpr std::array<PairRelation, 4> all_relations = {PairRelation::disjoint, PairRelation::equal,
                                                              PairRelation::proper_containment, PairRelation::overlap};

inline std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::disjoint: return "disjoint";
    case PairRelation::equal: return "equal";
    case PairRelation::proper_containment: return "containment";
    case PairRelation::overlap: return "overlap";
  }
  return "?";
}

/// Subset of the four relation kinds.
class RelationSet {
public:
  constexpr RelationSet() = default;
  constexpr RelationSet(std::initializer_list<PairRelation> kinds) {
    for (auto k : kinds) bits_ |= mask(k);
  }

  constexpr bool contains(PairRelation k) const { return bits_ & mask(k); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(RelationSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr RelationSet& insert(PairRelation k) { bits_ |= mask(k); return *this; }
  constexpr RelationSet& operator|=(RelationSet o) { bits_ |= o.bits_; return *this; }
  constexpr bool operator==(const RelationSet&) const = default;
  constexpr std::uint8_t bits() const { return bits_; }

  std::vector<PairRelation> kinds() const {
    std::vector<PairRelation> out;
    for (auto k : all_relations)
      if (contains(k)) out.push_back(k);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    for (auto k : kinds()) s += (s.size() > 1 ? "," : "") + std::string(sepchordal::to_string(k));
    return s + "}";
  }

private:
  static constexpr std::uint8_t mask(PairRelation k) { return std::uint8_t(1U << static_cast<unsigned>(k)); }
  std::uint8_t bits_ = 0;
};

/**
 * How "overlap" is read. `exclusive` makes the four kinds a partition
 * (overlap = intersecting and incomparable). `literal` follows the bare
 * incomparability formula, so a disjoint pair realizes both disjoint and
 * overlap; it exists only as a mutant for the verification harness.
 */
enum class OverlapReading { exclusive, literal };

inline PairRelation classify_pair(VertexSet a, VertexSet b) {
  if (a == b) return PairRelation::equal;
  if (!a.intersects(b)) return PairRelation::disjoint;
  if (a.subset_of(b) || b.subset_of(a)) return PairRelation::proper_containment;
  return PairRelation::overlap;
}

inline RelationSet pair_kinds(VertexSet a, VertexSet b, OverlapReading reading = OverlapReading::exclusive) {
  RelationSet out{classify_pair(a, b)};
  if (reading == OverlapReading::literal && !a.subset_of(b) && !b.subset_of(a)) out.insert(PairRelation::overlap);
  return out;
}

/// Kinds realized over all unordered index pairs i != j.
inline RelationSet relation_profile(const SeparatorFamily& f, OverlapReading reading = OverlapReading::exclusive) {
  RelationSet out;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) out |= pair_kinds(f[i], f[j], reading);
  return out;
}

/// Allowed relation kinds for every separator pair of every induced subgraph.
struct PropertySpec {
  RelationSet allowed;

  explicit PropertySpec(RelationSet kinds) : allowed(kinds) {
    if (kinds.empty()) throw domain_error("PropertySpec: allowed set must be nonempty");
  }
};

/// Profile of one induced subgraph, identified by its vertex set in the host graph.
struct SubsetProfile {
  VertexSet vertices;
  SeparatorFamily family;  // host vertex ids
  RelationSet kinds;
};

/// Nonempty vertex subsets ordered by size, then lexicographically.
inline std::vector<VertexSet> subsets_by_size(VertexSet all) {
  std::vector<VertexSet> out;
  const std::uint64_t bits = all.bits();
  for (std::uint64_t m = bits; m != 0; m = (m - 1) & bits) out.emplace_back(m);
  std::sort(out.begin(), out.end(), [](VertexSet x, VertexSet y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

/// Separator family and relation profile of every induced subgraph, in counterexample order.
inline std::vector<SubsetProfile> induced_profiles(const Graph& g, OverlapReading reading = OverlapReading::exclusive) {
  require_chordal(g, "induced_profiles");
  if (g.order() > 16) throw unsupported_size("induced subgraph scans are limited to 16 vertices");
  std::vector<SubsetProfile> out;
  for (auto s : subsets_by_size(g.vertices())) {
    SubsetProfile p{s, separator_family(induced_subgraph(g, s)), {}};
    for (auto& sep : p.family.separators) sep = lift(sep, s);
    std::sort(p.family.separators.begin(), p.family.separators.end());
    p.kinds = relation_profile(p.family, reading);
    out.push_back(std::move(p));
  }
  return out;
}

struct HereditaryResult {
  bool holds = true;
  std::optional<VertexSet> counterexample;
};

inline HereditaryResult hereditary_property_holds(const std::vector<SubsetProfile>& profiles, const PropertySpec& p) {
  for (const auto& s : profiles)
    if (!s.kinds.subset_of(p.allowed)) return {false, s.vertices};
  return {};
}

/**
 * Whether every induced subgraph's separator pairs fall within `p.allowed`.
 * On failure the counterexample is the smallest violating vertex set
 * (ties broken lexicographically).
 */
inline HereditaryResult hereditary_property_holds(const Graph& g, const PropertySpec& p,
                                                  OverlapReading reading = OverlapReading::exclusive) {
  return hereditary_property_holds(induced_profiles(g, reading), p);
}

// Helly property

struct HellyReport {
  bool holds = true;
  std::vector<std::size_t> witness;                 // indices into the family
  std::optional<VertexSet> counterexample_vertices;  // set by the hereditary check only

  bool operator==(const HellyReport&) const = default;
};

/// Pairwise intersecting with empty total intersection.
inline bool is_helly_witness(const std::vector<VertexSet>& sets) {
  if (sets.empty()) return false;
  VertexSet meet = sets.front();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    meet &= sets[i];
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].intersects(sets[j])) return false;
  }
  return meet.empty();
}

inline std::vector<VertexSet> pick(const SeparatorFamily& f, const std::vector<std::size_t>& indices) {
  std::vector<VertexSet> out;
  for (auto i : indices) out.push_back(f[i]);
  return out;
}

namespace detail {

inline bool helly_search(const SeparatorFamily& f, std::size_t want, std::size_t next, VertexSet meet,
                         std::vector<std::size_t>& chosen) {
  if (chosen.size() == want) return meet.empty();
  for (std::size_t i = next; i + (want - chosen.size()) <= f.size(); ++i) {
    bool ok = true;
    for (auto c : chosen)
      if (!f[c].intersects(f[i])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(i);
    if (helly_search(f, want, i + 1, chosen.size() == 1 ? f[i] : (meet & f[i]), chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/**
 * Scans subfamilies of size two and up. The first witness found is the
 * smallest one, lexicographically first among those of its size.
 */
inline HellyReport helly_check_bruteforce(const SeparatorFamily& f) {
  if (f.size() > 24) throw unsupported_size("helly_check_bruteforce is limited to 24 sets");
  for (std::size_t k = 2; k <= f.size(); ++k) {
    std::vector<std::size_t> chosen;
    if (detail::helly_search(f, k, 0, VertexSet{}, chosen)) return {false, chosen, std::nullopt};
  }
  return {};
}

/**
 * Triple test: the family is Helly iff, for every three distinct points, the
 * members containing at least two of them have a common point. Those members
 * always intersect pairwise, so a failing subfamily is itself a witness.
 */
inline HellyReport helly_check_triples(const SeparatorFamily& f) {
  VertexSet ground;
  for (auto s : f.separators) ground |= s;
  auto pts = ground.members();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c) {
        VertexSet triple{pts[a], pts[b], pts[c]};
        std::vector<std::size_t> members;
        VertexSet meet = ground;
        for (std::size_t i = 0; i < f.size(); ++i)
          if ((f[i] & triple).size() >= 2) {
            members.push_back(i);
            meet &= f[i];
          }
        if (members.size() >= 2 && meet.empty()) return {false, members, std::nullopt};
      }
  return {};
}

/// Helly check over the separator family of every induced subgraph; reports the smallest failing subset.
inline HellyReport hereditary_helly(const std::vector<SubsetProfile>& profiles) {
  for (const auto& s : profiles) {
    auto r = helly_check_triples(s.family);
    if (!r.holds) {
      r.counterexample_vertices = s.vertices;
      return r;
    }
  }
  return {};
}

/// Labels of the clique-tree edges that touch a leaf, sorted.
inline SeparatorFamily leaf_separators(const CliqueTree& t) {
  if (t.cliques.size() < 2) throw domain_error("leaf_separators: tree has a single node");
  SeparatorFamily f;
  for (const auto& e : t.edges)
    if (t.is_leaf(e.a) || t.is_leaf(e.b)) f.separators.push_back(e.label);
  std::sort(f.separators.begin(), f.separators.end());
  return f;
}

}  // namespace sepchordal
