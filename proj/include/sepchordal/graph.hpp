#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace sepchordal {

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is stored as one neighbourhood word per vertex. Everything else
 * in the library treats it as the predicate adjacent(u, v) plus the
 * neighbourhood sets derived from it.
 */
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : rows_(check_order(n), 0) {}

  Graph(int n, const std::vector<std::pair<vertex_t, vertex_t>>& edges) : Graph(n) {
    for (auto [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw domain_error("self-loop on vertex " + std::to_string(u));
      rows_[u] |= std::uint64_t{1} << v;
      rows_[v] |= std::uint64_t{1} << u;
    }
  }

  /// Builds from neighbourhood words; the rows must already be symmetric and loop-free.
  static Graph from_rows(std::vector<std::uint64_t> rows) {
    Graph g;
    g.rows_ = std::move(rows);
    check_order(g.order());
    for (int u = 0; u < g.order(); ++u) {
      if ((g.rows_[u] >> u) & 1U) throw domain_error("self-loop on vertex " + std::to_string(u));
      if (g.rows_[u] & ~VertexSet::range(g.order()).bits())
        throw domain_error("neighbour out of range at vertex " + std::to_string(u));
      for (auto v : VertexSet(g.rows_[u]))
        if (!((g.rows_[v] >> u) & 1U)) throw domain_error("asymmetric adjacency rows");
    }
    return g;
  }

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  bool adjacent(vertex_t u, vertex_t v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(vertex_t v) const { return VertexSet(rows_[v]); }
  VertexSet closed_neighbors(vertex_t v) const { return neighbors(v).with(v); }
  int degree(vertex_t v) const { return neighbors(v).size(); }

  int edge_count() const {
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
  }

  std::vector<std::pair<vertex_t, vertex_t>> edges() const {
    std::vector<std::pair<vertex_t, vertex_t>> out;
    for (int u = 0; u < order(); ++u)
      for (auto v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Neighbours of any member of `s`, outside `s`.
  VertexSet neighbors(VertexSet s) const {
    VertexSet out;
    for (auto v : s) out |= neighbors(v);
    return out - s;
  }

  bool is_clique(VertexSet s) const {
    for (auto v : s)
      if (!(s.without(v)).subset_of(neighbors(v))) return false;
    return true;
  }

  /// Vertices reachable from `start` while staying inside `within`.
  VertexSet reach(vertex_t start, VertexSet within) const {
    VertexSet seen{start};
    VertexSet frontier{start};
    while (!frontier.empty()) {
      VertexSet next;
      for (auto v : frontier) next |= neighbors(v);
      next &= within;
      frontier = next - seen;
      seen |= frontier;
    }
    return seen;
  }

  const std::vector<std::uint64_t>& rows() const { return rows_; }

  bool operator==(const Graph&) const = default;

private:
  static int check_order(int n) {
    if (n < 0 || n > max_vertices)
      throw unsupported_size("graphs are limited to " + std::to_string(max_vertices) + " vertices, got " +
                             std::to_string(n));
    return n;
  }
  void check_vertex(vertex_t v) const {
    if (v < 0 || v >= order())
      throw domain_error("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
  }

  std::vector<std::uint64_t> rows_;
};

/// Components of the subgraph induced by `within`, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    auto c = g.reach(left.front(), within);
    out.push_back(c);
    left -= c;
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

inline bool is_connected(const Graph& g) {
  return g.order() == 0 || g.reach(0, g.vertices()) == g.vertices();
}

/**
 * Subgraph induced by `s`, relabelled 0..|s|-1 in increasing order of the
 * original identifiers. Vertex i of the result is s.members()[i].
 */
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices()))
    throw domain_error("induced_subgraph: vertex set " + s.to_string() + " exceeds order " +
                       std::to_string(g.order()));
  auto members = s.members();
  std::vector<std::uint64_t> rows(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) rows[i] |= std::uint64_t{1} << j;
  return Graph::from_rows(std::move(rows));
}

/// Maps a set of vertices of induced_subgraph(g, s) back to identifiers of g.
inline VertexSet lift(VertexSet local, VertexSet s) {
  auto members = s.members();
  VertexSet out;
  for (auto v : local) out = out.with(members[v]);
  return out;
}

/// Graph with vertex v renamed to perm[v].
inline Graph relabel(const Graph& g, const std::vector<vertex_t>& perm) {
  std::vector<std::uint64_t> rows(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    rows[perm[u]] |= std::uint64_t{1} << perm[v];
    rows[perm[v]] |= std::uint64_t{1} << perm[u];
  }
  return Graph::from_rows(std::move(rows));
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<vertex_t, vertex_t>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph path_graph(int n) {
  std::vector<std::pair<vertex_t, vertex_t>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  auto e = path_graph(n).edges();
  if (n >= 3) e.emplace_back(0, n - 1);
  return Graph(n, e);
}

}  // namespace sepchordal
