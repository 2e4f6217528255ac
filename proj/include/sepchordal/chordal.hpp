#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace sepchordal {

/// A permutation of 0..n-1; position 0 is eliminated first.
struct EliminationOrdering {
  std::vector<vertex_t> order;

  EliminationOrdering reversed() const { return {std::vector<vertex_t>(order.rbegin(), order.rend())}; }
  bool operator==(const EliminationOrdering&) const = default;
};

/**
 * Maximum cardinality search: repeatedly visit the unvisited vertex with the
 * most visited neighbours, smallest id first on ties. Returns the visit
 * order; its reverse is a perfect elimination ordering iff g is chordal.
 */
inline EliminationOrdering maximum_cardinality_search(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  VertexSet unvisited = g.vertices();
  EliminationOrdering out;
  out.order.reserve(n);
  while (!unvisited.empty()) {
    vertex_t best = unvisited.front();
    for (auto v : unvisited)
      if (weight[v] > weight[best]) best = v;
    out.order.push_back(best);
    unvisited = unvisited.without(best);
    for (auto w : g.neighbors(best) & unvisited) ++weight[w];
  }
  return out;
}

inline bool is_perfect_elimination_ordering(const Graph& g, const EliminationOrdering& o) {
  if (static_cast<int>(o.order.size()) != g.order())
    throw domain_error("elimination ordering has " + std::to_string(o.order.size()) + " entries for order " +
                       std::to_string(g.order()));
  VertexSet seen;
  for (auto v : o.order) {
    if (v < 0 || v >= g.order() || seen.contains(v)) throw domain_error("elimination ordering is not a permutation");
    seen = seen.with(v);
  }
  VertexSet later = g.vertices();
  for (auto v : o.order) {
    later = later.without(v);
    if (!g.is_clique(g.neighbors(v) & later)) return false;
  }
  return true;
}

inline bool is_chordal(const Graph& g) {
  return is_perfect_elimination_ordering(g, maximum_cardinality_search(g).reversed());
}

/// Does `s` induce a chordless cycle? (connected, every member has exactly two neighbours in s)
inline bool induces_cycle(const Graph& g, VertexSet s) {
  if (s.size() < 3) return false;
  for (auto v : s)
    if ((g.neighbors(v) & s).size() != 2) return false;
  return g.reach(s.front(), s) == s;
}

/// Exhaustive oracle: no subset of four or more vertices induces a cycle. Exponential in n.
inline bool is_chordal_bruteforce(const Graph& g) {
  if (g.order() > 20) throw unsupported_size("is_chordal_bruteforce is limited to 20 vertices");
  const std::uint64_t all = g.vertices().bits();
  for (std::uint64_t m = all; m != 0; m = (m - 1) & all) {
    VertexSet s(m);
    if (s.size() >= 4 && induces_cycle(g, s)) return false;
  }
  return true;
}

inline void require_chordal(const Graph& g, const char* who) {
  if (!is_chordal(g)) throw domain_error(std::string(who) + ": graph is not chordal");
}

/// Maximal cliques of a chordal graph in lexicographic order.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  require_chordal(g, "maximal_cliques");
  auto peo = maximum_cardinality_search(g).reversed();
  std::vector<VertexSet> candidates;
  VertexSet later = g.vertices();
  for (auto v : peo.order) {
    later = later.without(v);
    candidates.push_back((g.neighbors(v) & later).with(v));
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j)
      if (i != j && candidates[i].subset_of(candidates[j]) && (candidates[i] != candidates[j] || j < i))
        maximal = false;
    if (maximal) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct CliqueTreeEdge {
  int a = 0;
  int b = 0;
  VertexSet label;
  bool operator==(const CliqueTreeEdge&) const = default;
};

/// Tree on the maximal cliques; every edge is labelled with the intersection of its endpoints.
struct CliqueTree {
  std::vector<VertexSet> cliques;
  std::vector<CliqueTreeEdge> edges;

  int degree(int node) const {
    int d = 0;
    for (const auto& e : edges) d += (e.a == node) + (e.b == node);
    return d;
  }
  bool is_leaf(int node) const { return degree(node) == 1; }
};

/// Labels match endpoint intersections, edges form a spanning tree, and the
/// cliques containing any vertex induce a connected subtree.
inline bool is_valid_clique_tree(const CliqueTree& t) {
  const int k = static_cast<int>(t.cliques.size());
  if (k == 0) return t.edges.empty();
  if (static_cast<int>(t.edges.size()) != k - 1) return false;
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : t.edges) {
    if (e.a < 0 || e.b < 0 || e.a >= k || e.b >= k) return false;
    if (e.label != (t.cliques[e.a] & t.cliques[e.b])) return false;
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  VertexSet all;
  for (auto c : t.cliques) all |= c;
  for (auto v : all) {
    // nodes holding v, and tree edges joining two of them
    int nodes = 0, links = 0;
    for (auto c : t.cliques) nodes += c.contains(v);
    for (const auto& e : t.edges) links += e.label.contains(v);
    if (links != nodes - 1) return false;  // a forest on `nodes` vertices is connected iff it has nodes-1 edges
  }
  return true;
}

/**
 * Clique tree of a connected chordal graph as a maximum-weight spanning tree
 * of the clique intersection graph (weight = |Ci ∩ Cj|). Equal-weight
 * candidate edges are ordered by a shuffle seeded with `tie_break_seed`, so
 * different seeds may produce different (equally valid) trees.
 */
inline CliqueTree build_clique_tree(const Graph& g, std::uint64_t tie_break_seed = 0) {
  if (!is_connected(g)) throw domain_error("build_clique_tree: graph is not connected");
  CliqueTree t;
  t.cliques = maximal_cliques(g);
  const int k = static_cast<int>(t.cliques.size());

  std::vector<CliqueTreeEdge> candidates;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      auto meet = t.cliques[i] & t.cliques[j];
      if (!meet.empty()) candidates.push_back({i, j, meet});
    }
  std::mt19937_64 rng(tie_break_seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& x, const auto& y) { return x.label.size() > y.label.size(); });

  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : candidates) {
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) continue;
    parent[ra] = rb;
    t.edges.push_back(e);
  }
  std::sort(t.edges.begin(), t.edges.end(),
            [](const auto& x, const auto& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return t;
}

/// Indexed multiset of minimal vertex separators. Equal sets may repeat under distinct indices.
struct SeparatorFamily {
  std::vector<VertexSet> separators;

  std::size_t size() const { return separators.size(); }
  bool empty() const { return separators.empty(); }
  const VertexSet& operator[](std::size_t i) const { return separators[i]; }

  /// Distinct members in lexicographic order.
  std::vector<VertexSet> support() const {
    std::vector<VertexSet> out(separators);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool operator==(const SeparatorFamily&) const = default;
};

/// Edge labels of a clique tree, sorted so that trees of the same graph compare equal.
inline SeparatorFamily separator_multiset(const CliqueTree& t) {
  SeparatorFamily f;
  for (const auto& e : t.edges) f.separators.push_back(e.label);
  std::sort(f.separators.begin(), f.separators.end());
  return f;
}

/**
 * Separator multiset of a chordal graph that need not be connected: the
 * disjoint union of the multisets of its components, in original vertex ids.
 */
inline SeparatorFamily separator_family(const Graph& g, std::uint64_t tie_break_seed = 0) {
  require_chordal(g, "separator_family");
  SeparatorFamily f;
  for (auto comp : connected_components(g)) {
    if (comp.size() < 3) continue;  // at most one clique
    auto tree = build_clique_tree(induced_subgraph(g, comp), tie_break_seed);
    for (const auto& e : tree.edges) f.separators.push_back(lift(e.label, comp));
  }
  std::sort(f.separators.begin(), f.separators.end());
  return f;
}

namespace detail {

inline void add_full_neighbourhoods(const Graph& g, VertexSet within, VertexSet removed, std::set<VertexSet>& out,
                                    std::vector<VertexSet>& fresh) {
  for (auto c : connected_components(g, within - removed)) {
    auto s = g.neighbors(c) & within;
    if (!s.empty() && out.insert(s).second) fresh.push_back(s);
  }
}

}  // namespace detail

/**
 * All minimal vertex separators of g (any graph), deduplicated and sorted.
 *
 * Generated by closing the neighbourhoods N(C) of components C of G - N[v]
 * under S -> N(C) for components C of G - (S ∪ N(x)), x in S. Each graph
 * component is processed separately, so no empty set is ever reported.
 */
inline std::vector<VertexSet> minimal_separators_direct(const Graph& g) {
  std::set<VertexSet> found;
  for (auto comp : connected_components(g)) {
    std::vector<VertexSet> pending;
    for (auto v : comp) detail::add_full_neighbourhoods(g, comp, g.closed_neighbors(v), found, pending);
    while (!pending.empty()) {
      auto s = pending.back();
      pending.pop_back();
      for (auto x : s) detail::add_full_neighbourhoods(g, comp, s | g.neighbors(x), found, pending);
    }
  }
  return {found.begin(), found.end()};
}

/// Does removing `s` disconnect u from v?
inline bool separates(const Graph& g, VertexSet s, vertex_t u, vertex_t v) {
  return !g.reach(u, g.vertices() - s).contains(v);
}

/**
 * Slow double-check for minimal_separators_direct: for every non-adjacent
 * pair u, v in one component, scan every subset of the remaining vertices of
 * that component and keep the inclusion-minimal u,v-separators.
 */
inline std::vector<VertexSet> minimal_separators_exhaustive(const Graph& g) {
  if (g.order() > 14) throw unsupported_size("minimal_separators_exhaustive is limited to 14 vertices");
  std::set<VertexSet> found;
  for (auto comp : connected_components(g)) {
    for (auto u : comp)
      for (auto v : comp) {
        if (v <= u || g.adjacent(u, v)) continue;
        const std::uint64_t pool = comp.without(u).without(v).bits();
        for (std::uint64_t m = pool;; m = (m - 1) & pool) {
          VertexSet s(m);
          if (separates(g, s, u, v)) {
            bool minimal = true;
            for (auto x : s)
              if (separates(g, s.without(x), u, v)) {
                minimal = false;
                break;
              }
            if (minimal) found.insert(s);
          }
          if (m == 0) break;
        }
      }
  }
  return {found.begin(), found.end()};
}

/// DOT rendering: clique nodes labelled by members, edges by separators.
inline std::string to_dot(const CliqueTree& t, const std::vector<std::string>& names = {}) {
  auto show = [&](VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (auto v : s) {
      if (!first) out += ',';
      out += v < static_cast<int>(names.size()) ? names[v] : std::to_string(v);
      first = false;
    }
    return out + '}';
  };
  std::ostringstream os;
  os << "graph clique_tree {\n";
  for (std::size_t i = 0; i < t.cliques.size(); ++i)
    os << "  c" << i << " [label=\"" << show(t.cliques[i]) << "\"];\n";
  for (const auto& e : t.edges) os << "  c" << e.a << " -- c" << e.b << " [label=\"" << show(e.label) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace sepchordal
