#pragma once

// JSON and plain-text renderings of library results. Field names here are
// part of the command-line contract; change them only together with the
// golden tests.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "chordal.hpp"
#include "patterns.hpp"
#include "separators.hpp"
#include "verify.hpp"

namespace sepchordal {

using json = nlohmann::ordered_json;

inline json to_json(VertexSet s) { return s.members(); }

inline json to_json(const std::vector<VertexSet>& sets) {
  json out = json::array();
  for (auto s : sets) out.push_back(to_json(s));
  return out;
}

inline json to_json(const ClassVerdict& v) {
  json out{{"member", v.member}, {"witness", nullptr}};
  if (v.witness)
    out["witness"] = json{{"pattern", std::string(to_string(v.witness->pattern))}, {"vertices", to_json(v.witness->vertices)}};
  return out;
}

/// {graph6, chordal, classes: {i, ..., vi, helly: {member, witness}}}
inline json to_json(const ClassReport& r) {
  json classes = json::object();
  for (const auto& c : r.classes) classes[c.id] = to_json(c);
  return json{{"graph6", r.graph6}, {"chordal", r.chordal}, {"classes", classes}};
}

/// {holds, witness_indices, witness_sets, counterexample_vertices}
inline json to_json(const HellyReport& r, const SeparatorFamily& f) {
  json out{{"holds", r.holds}, {"witness_indices", r.witness}, {"witness_sets", to_json(pick(f, r.witness))},
           {"counterexample_vertices", nullptr}};
  if (r.counterexample_vertices) out["counterexample_vertices"] = to_json(*r.counterexample_vertices);
  return out;
}

/// Separator multiset with the relation of every ordered index pair (null on the diagonal).
inline json separators_json(const Graph& g, const SeparatorFamily& f) {
  json matrix = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.size(); ++j)
      row.push_back(i == j ? json(nullptr) : json(std::string(to_string(classify_pair(f[i], f[j])))));
    matrix.push_back(row);
  }
  return json{{"graph6", to_graph6(g)},
              {"separators", to_json(f.separators)},
              {"relations", matrix},
              {"profile", [&] {
                 json kinds = json::array();
                 for (auto k : relation_profile(f).kinds()) kinds.push_back(std::string(to_string(k)));
                 return kinds;
               }()}};
}

inline std::string verdict_of(const SuiteResult& s) {
  if (!s.passed()) return "fail";
  return s.vacuous() ? "vacuous" : "pass";
}

/// Deterministic: timing is left out so identical runs give identical bytes.
inline json to_json(const HarnessRun& run) {
  json suites = json::array();
  for (const auto& s : run.suites) {
    json failures = json::array();
    for (const auto& f : s.failures) failures.push_back({{"graph6", f.graph6}, {"diagnostic", f.diagnostic}});
    suites.push_back({{"claim", s.claim},
                      {"statement", s.statement},
                      {"graphs_tested", s.tested},
                      {"graphs_exercised", s.exercised},
                      {"verdict", verdict_of(s)},
                      {"failures", failures}});
  }
  return json{{"corpus", {{"source", run.corpus_source}, {"filter", run.corpus_filter}, {"size", run.corpus_size}}},
              {"passed", run.passed()},
              {"suites", suites}};
}

inline std::string to_text(const HarnessRun& run, std::size_t max_failures_shown = 5) {
  std::ostringstream os;
  os << "corpus: " << run.corpus_source << ", filter " << run.corpus_filter << ", " << run.corpus_size
     << " graphs\n\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-36s %-8s %8s %10s %10s\n", "claim", "verdict", "tested", "exercised", "ms");
  os << line;
  for (const auto& s : run.suites) {
    std::snprintf(line, sizeof line, "%-36s %-8s %8zu %10zu %10.1f\n", s.claim.c_str(), verdict_of(s).c_str(),
                  s.tested, s.exercised, s.elapsed_ms);
    os << line;
  }
  for (const auto& s : run.suites) {
    if (s.passed()) continue;
    os << "\n" << s.claim << ": " << s.statement << "\n";
    for (std::size_t i = 0; i < s.failures.size() && i < max_failures_shown; ++i)
      os << "  " << s.failures[i].graph6 << "  " << s.failures[i].diagnostic << "\n";
    if (s.failures.size() > max_failures_shown)
      os << "  ... " << s.failures.size() - max_failures_shown << " more\n";
  }
  os << "\n" << (run.passed() ? "all suites passed" : "SOME SUITES FAILED") << "\n";
  return os.str();
}

}  // namespace sepchordal
