#pragma once

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace sepchordal {

// graph6: one size byte n+63 followed by the upper triangle of the adjacency
// matrix in column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// most significant bit first, each byte offset by 63.

inline Graph parse_graph6(std::string_view text) {
  constexpr int lo = 63, hi = 126;
  if (text.empty()) throw parse_error("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < lo || c > hi)
      throw parse_error("graph6: byte " + std::to_string(c) + " outside 63..126", i);
  }
  int n = static_cast<unsigned char>(text[0]) - lo;
  if (n > max_vertices) throw parse_error("graph6: multi-byte size field (n > 62) not supported", 0);

  std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t payload = (pairs + 5) / 6;
  if (text.size() - 1 < payload)
    throw parse_error("graph6: truncated payload, expected " + std::to_string(payload) + " bytes", text.size());
  if (text.size() - 1 > payload)
    throw parse_error("graph6: trailing bytes after payload", 1 + payload);

  std::vector<std::uint64_t> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = static_cast<unsigned char>(text[1 + k / 6]) - lo;
      if ((chunk >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

inline std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > max_vertices) throw unsupported_size("graph6: order " + std::to_string(n) + " exceeds 62");
  std::string out(1, static_cast<char>(n + 63));
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + 63);
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + 63);
  return out;
}

/// A graph together with the vertex names it was read with (names[i] names vertex i).
struct NamedGraph {
  Graph graph;
  std::vector<std::string> names;
  std::string title;

  std::string name_of(vertex_t v) const {
    return v < static_cast<int>(names.size()) ? names[v] : std::to_string(v);
  }
};

enum class InputFormat { automatic, graph6, edgelist };

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_index(std::string_view tok, int& value) {
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc{} && p == tok.data() + tok.size() && value >= 0;
}

struct EdgeListBlock {
  std::string title;
  std::vector<std::vector<std::string>> rows;  // one or two tokens each
  std::vector<std::size_t> offsets;
};

inline NamedGraph build_edge_list(const EdgeListBlock& block) {
  bool numeric = true;
  int max_id = -1;
  for (const auto& row : block.rows)
    for (const auto& tok : row) {
      int v = 0;
      if (is_index(tok, v)) max_id = std::max(max_id, v);
      else numeric = false;
    }

  NamedGraph out;
  out.title = block.title;
  std::map<std::string, int> ids;
  auto id_of = [&](const std::string& tok, std::size_t offset) -> int {
    if (numeric) return std::stoi(tok);
    auto [it, inserted] = ids.emplace(tok, static_cast<int>(out.names.size()));
    if (inserted) {
      if (static_cast<int>(out.names.size()) >= max_vertices)
        throw parse_error("edge list: more than 62 distinct vertices", offset);
      out.names.push_back(tok);
    }
    return it->second;
  };

  std::vector<std::pair<vertex_t, vertex_t>> edges;
  for (std::size_t r = 0; r < block.rows.size(); ++r) {
    const auto& row = block.rows[r];
    int u = id_of(row[0], block.offsets[r]);
    if (row.size() == 2) {
      int v = id_of(row[1], block.offsets[r]);
      if (u == v) throw parse_error("edge list: self-loop '" + row[0] + "'", block.offsets[r]);
      edges.emplace_back(u, v);
    }
  }
  int n = numeric ? max_id + 1 : static_cast<int>(out.names.size());
  if (n > max_vertices) throw parse_error("edge list: vertex id above 61", block.offsets.empty() ? 0 : block.offsets[0]);
  if (numeric)
    for (int v = 0; v < n; ++v) out.names.push_back(std::to_string(v));
  out.graph = Graph(n, edges);
  return out;
}

}  // namespace detail

/**
 * Edge-list text: one "u v" pair per line, a lone "u" declares an isolated
 * vertex, and a "# name" line starts a new graph. If every token is a
 * non-negative integer the tokens are the vertex ids; otherwise vertices are
 * numbered by first appearance and the tokens kept as names.
 */
inline std::vector<NamedGraph> parse_edge_list(std::string_view text) {
  std::vector<detail::EdgeListBlock> blocks(1);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = detail::trim(text.substr(pos, eol - pos));
    if (!line.empty()) {
      if (line.front() == '#') {
        if (!blocks.back().rows.empty() || !blocks.back().title.empty()) blocks.emplace_back();
        blocks.back().title = std::string(detail::trim(line.substr(1)));
      } else {
        std::istringstream tokens{std::string(line)};
        std::vector<std::string> row;
        for (std::string tok; tokens >> tok;) row.push_back(tok);
        if (row.size() > 2) throw parse_error("edge list: expected 'u v' or 'u'", pos);
        blocks.back().rows.push_back(std::move(row));
        blocks.back().offsets.push_back(pos);
      }
    }
    pos = eol + 1;
  }
  std::vector<NamedGraph> out;
  for (const auto& b : blocks)
    if (!b.rows.empty() || !b.title.empty()) out.push_back(detail::build_edge_list(b));
  return out;
}

/// One graph6 string per non-empty line; an optional ">>graph6<<" header is skipped.
inline std::vector<NamedGraph> parse_graph6_lines(std::string_view text) {
  std::vector<NamedGraph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    std::size_t lead = 0;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) {
      line.remove_prefix(1);
      ++lead;
    }
    line = detail::trim(line);
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) {
      line.remove_prefix(header.size());
      lead += header.size();
    }
    if (!line.empty()) {
      try {
        out.push_back({parse_graph6(line), {}, std::string(line)});
      } catch (const parse_error& e) {
        throw parse_error(e.message(), pos + lead + e.offset());
      }
    }
    pos = eol + 1;
  }
  return out;
}

inline InputFormat detect_format(std::string_view text) {
  auto first = detail::trim(text);
  if (first.empty()) return InputFormat::graph6;
  if (first.substr(0, 10) == ">>graph6<<") return InputFormat::graph6;
  auto c = static_cast<unsigned char>(first.front());
  return (c >= 63 && c <= 126) ? InputFormat::graph6 : InputFormat::edgelist;
}

inline std::vector<NamedGraph> read_graphs(std::string_view text, InputFormat format = InputFormat::automatic) {
  if (format == InputFormat::automatic) format = detect_format(text);
  return format == InputFormat::graph6 ? parse_graph6_lines(text) : parse_edge_list(text);
}

}  // namespace sepchordal
