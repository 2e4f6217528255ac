#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordal.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace sepchordal {

enum class GraphFilter { all, connected, chordal, connected_chordal };

inline std::string_view to_string(GraphFilter f) {
  switch (f) {
    case GraphFilter::all: return "all";
    case GraphFilter::connected: return "connected";
    case GraphFilter::chordal: return "chordal";
    case GraphFilter::connected_chordal: return "connected-chordal";
  }
  return "?";
}

inline std::optional<GraphFilter> filter_from_string(std::string_view s) {
  for (auto f : {GraphFilter::all, GraphFilter::connected, GraphFilter::chordal, GraphFilter::connected_chordal})
    if (to_string(f) == s) return f;
  return std::nullopt;
}

inline bool passes(const Graph& g, GraphFilter f) {
  switch (f) {
    case GraphFilter::all: return true;
    case GraphFilter::connected: return is_connected(g);
    case GraphFilter::chordal: return is_chordal(g);
    case GraphFilter::connected_chordal: return is_connected(g) && is_chordal(g);
  }
  return false;
}

/// Largest order accepted by the internal enumerator.
inline constexpr int max_enumeration_order = 8;

namespace detail {

/// Upper-triangle adjacency bits of g under `perm` (position -> vertex), column order, first pair most significant.
inline std::uint64_t adjacency_code(const Graph& g, const std::vector<vertex_t>& perm) {
  std::uint64_t code = 0;
  const int n = static_cast<int>(perm.size());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
  return code;
}

/**
 * Ordered partition of the vertices by iterated degree refinement. Cells are
 * ordered by their refinement signature, never by vertex id, so the
 * partition of relabelled copies of g corresponds cell by cell.
 */
inline std::vector<std::vector<vertex_t>> refined_cells(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = 0;
  while (true) {
    std::vector<std::pair<std::vector<int>, vertex_t>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      std::vector<int> nb;
      for (auto w : g.neighbors(v)) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, id] : rank) id = r++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v].first];
    if (r == classes) break;
    classes = r;
  }
  std::vector<std::vector<vertex_t>> cells(classes);
  for (int v = 0; v < n; ++v) cells[colour[v]].push_back(v);
  return cells;
}

inline void search_canonical(const Graph& g, const std::vector<std::vector<vertex_t>>& cells, std::size_t cell,
                             std::vector<vertex_t>& perm, std::uint64_t& best, std::vector<vertex_t>& best_perm) {
  if (cell == cells.size()) {
    auto code = adjacency_code(g, perm);
    if (best_perm.empty() || code < best) {
      best = code;
      best_perm = perm;
    }
    return;
  }
  auto members = cells[cell];
  do {
    auto base = perm.size();
    perm.insert(perm.end(), members.begin(), members.end());
    search_canonical(g, cells, cell + 1, perm, best, best_perm);
    perm.resize(base);
  } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace detail

/**
 * Canonical relabelling: among vertex orders consistent with the refined
 * degree partition, the one whose adjacency bit string is least. Two graphs
 * are isomorphic iff their canonical forms are equal.
 */
inline Graph canonical_form(const Graph& g) {
  if (g.order() > 11) throw unsupported_size("canonical_form is limited to 11 vertices");
  auto cells = detail::refined_cells(g);
  std::vector<vertex_t> perm, best_perm;
  std::uint64_t best = 0;
  detail::search_canonical(g, cells, 0, perm, best, best_perm);
  std::vector<vertex_t> to_pos(g.order());
  for (int p = 0; p < g.order(); ++p) to_pos[best_perm[p]] = p;
  return relabel(g, to_pos);
}

/**
 * One representative (in canonical form) of every isomorphism class of
 * graphs on exactly n vertices meeting `filter`, sorted by adjacency code.
 * Built by adding a vertex with every neighbourhood to each class of order
 * n-1 and deduplicating canonical forms.
 */
inline std::vector<Graph> enumerate_graphs(int n, GraphFilter filter = GraphFilter::all) {
  if (n > max_enumeration_order)
    throw unsupported_size("internal enumeration stops at " + std::to_string(max_enumeration_order) +
                           " vertices; supply a graph6 corpus for larger orders");
  if (n < 1) return {};
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<Graph> next;
    for (const auto& g : level) {
      const int m = k - 1;
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << m); ++nb) {
        auto rows = g.rows();
        rows.push_back(nb);
        for (auto v : VertexSet(nb)) rows[v] |= std::uint64_t{1} << m;
        auto c = canonical_form(Graph::from_rows(std::move(rows)));
        if (seen.insert(c.rows()).second) next.push_back(std::move(c));
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::uint64_t, Graph>> keyed;
  std::vector<vertex_t> id(n);
  for (int v = 0; v < n; ++v) id[v] = v;
  for (auto& g : level)
    if (passes(g, filter)) keyed.emplace_back(detail::adjacency_code(g, id), std::move(g));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [code, g] : keyed) out.push_back(std::move(g));
  return out;
}

/// Orders 1..max_n concatenated.
inline std::vector<Graph> enumerate_up_to(int max_n, GraphFilter filter = GraphFilter::all) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = enumerate_graphs(n, filter);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace sepchordal
