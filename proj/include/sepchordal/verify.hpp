#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "chordal.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "patterns.hpp"
#include "separators.hpp"

namespace sepchordal {

struct Corpus {
  std::string source;  // "enumeration(max_n=7)" or "graph6"
  GraphFilter filter = GraphFilter::all;
  std::vector<Graph> graphs;
};

inline Corpus enumerated_corpus(int max_n, GraphFilter filter) {
  return {"enumeration(max_n=" + std::to_string(max_n) + ")", filter, enumerate_up_to(max_n, filter)};
}

/// Graph6 lines; graphs failing `filter` are dropped.
inline Corpus graph6_corpus(std::string_view text, GraphFilter filter) {
  Corpus c{"graph6", filter, {}};
  for (auto& ng : parse_graph6_lines(text))
    if (passes(ng.graph, filter)) c.graphs.push_back(std::move(ng.graph));
  return c;
}

struct Failure {
  std::string graph6;
  std::string diagnostic;
};

struct SuiteResult {
  std::string claim;
  std::string statement;
  std::size_t tested = 0;     // graphs examined
  std::size_t exercised = 0;  // graphs on which the property is not vacuous
  std::vector<Failure> failures;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  bool vacuous() const { return exercised == 0; }
};

/// Everything the equivalence suites compare against each other. Mutants edit a copy.
struct Theory {
  Catalog catalog = default_catalog();
  std::vector<ClassDefinition> classes = relation_classes();
  std::vector<ClassDefinition> exclusions = exclusion_classes();
  OverlapReading reading = OverlapReading::exclusive;
};

struct HarnessOptions {
  std::vector<std::uint64_t> seeds = default_seeds();

  static std::vector<std::uint64_t> default_seeds() {
    std::vector<std::uint64_t> s(20);
    std::iota(s.begin(), s.end(), 0);
    return s;
  }
};

namespace detail {

class SuiteClock {
public:
  explicit SuiteClock(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~SuiteClock() {
    r_.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point start_;
};

inline std::string show(const std::vector<VertexSet>& sets) {
  std::string s = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) s += (i ? "," : "") + sets[i].to_string();
  return s + "]";
}

inline bool connected_chordal(const Graph& g) { return is_connected(g) && is_chordal(g); }

/// Intersections C1 ∩ C2 of maximal-clique pairs that intercept every path between their private parts.
inline std::vector<VertexSet> separating_pair_intersections(const Graph& g) {
  auto cliques = maximal_cliques(g);
  std::set<VertexSet> out;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      auto meet = cliques[i] & cliques[j];
      if (meet.empty()) continue;
      auto rest = g.vertices() - meet;
      bool separated = true;
      for (auto v : cliques[i] - meet)
        if (g.reach(v, rest).intersects(cliques[j] - meet)) separated = false;
      if (separated) out.insert(meet);
    }
  return {out.begin(), out.end()};
}

}  // namespace detail

// ---------------------------------------------------------------- background

inline SuiteResult verify_chordal_recognition(const Corpus& corpus) {
  SuiteResult r{"chordal-recognition", "MCS/PEO chordality test agrees with the induced-cycle search"};
  detail::SuiteClock clock(r);
  for (const auto& g : corpus.graphs) {
    ++r.tested;
    bool fast = is_chordal(g), slow = is_chordal_bruteforce(g);
    if (!slow) ++r.exercised;
    if (fast != slow)
      r.failures.push_back({to_graph6(g), "is_chordal=" + std::to_string(fast) + " bruteforce=" + std::to_string(slow)});
  }
  return r;
}

inline SuiteResult verify_separator_enumeration(const Corpus& corpus) {
  SuiteResult r{"separator-enumeration", "closure enumeration of minimal separators matches the exhaustive subset scan"};
  detail::SuiteClock clock(r);
  for (const auto& g : corpus.graphs) {
    if (g.order() > 8) continue;
    ++r.tested;
    auto direct = minimal_separators_direct(g);
    if (!direct.empty()) ++r.exercised;
    auto slow = minimal_separators_exhaustive(g);
    if (direct != slow)
      r.failures.push_back({to_graph6(g), "direct=" + detail::show(direct) + " exhaustive=" + detail::show(slow)});
  }
  return r;
}

inline SuiteResult verify_dirac(const Corpus& corpus) {
  SuiteResult r{"dirac", "a graph is chordal iff all of its minimal separators are cliques"};
  detail::SuiteClock clock(r);
  for (const auto& g : corpus.graphs) {
    ++r.tested;
    auto seps = minimal_separators_direct(g);
    if (!seps.empty()) ++r.exercised;
    bool all_cliques = std::all_of(seps.begin(), seps.end(), [&](VertexSet s) { return g.is_clique(s); });
    if (all_cliques != is_chordal(g))
      r.failures.push_back({to_graph6(g), "chordal=" + std::to_string(is_chordal(g)) +
                                              " separators_all_cliques=" + std::to_string(all_cliques)});
  }
  return r;
}

inline SuiteResult verify_separating_pairs(const Corpus& corpus, std::uint64_t seed = 0) {
  SuiteResult r{"separating-pairs",
                "minimal separators of a chordal graph are exactly the separating-pair intersections and the "
                "distinct clique-tree labels"};
  detail::SuiteClock clock(r);
  for (const auto& g : corpus.graphs) {
    if (!detail::connected_chordal(g)) continue;
    ++r.tested;
    auto direct = minimal_separators_direct(g);
    if (!direct.empty()) ++r.exercised;
    auto labels = separator_multiset(build_clique_tree(g, seed)).support();
    auto pairs = detail::separating_pair_intersections(g);
    if (labels != direct || pairs != direct)
      r.failures.push_back({to_graph6(g), "direct=" + detail::show(direct) + " labels=" + detail::show(labels) +
                                              " separating_pairs=" + detail::show(pairs)});
  }
  return r;
}

inline SuiteResult verify_clique_tree_existence(const Corpus& corpus, const HarnessOptions& opt = {}) {
  SuiteResult r{"clique-tree-existence",
                "every connected chordal graph gets a valid clique tree; non-chordal graphs are rejected"};
  detail::SuiteClock clock(r);
  for (const auto& g : corpus.graphs) {
    if (!is_connected(g)) continue;
    ++r.tested;
    if (!is_chordal(g)) {
      bool rejected = false;
      try {
        build_clique_tree(g, 0);
      } catch (const domain_error&) {
        rejected = true;
      }
      if (!rejected) r.failures.push_back({to_graph6(g), "non-chordal graph received a clique tree"});
      continue;
    }
    bool exercised = false;
    for (auto seed : opt.seeds) {
      auto t = build_clique_tree(g, seed);
      exercised = exercised || t.cliques.size() >= 2;
      if (!is_valid_clique_tree(t)) {
        r.failures.push_back({to_graph6(g), "invalid clique tree for seed " + std::to_string(seed)});
        break;
      }
    }
    if (exercised) ++r.exercised;
  }
  return r;
}

inline SuiteResult verify_multiset_invariance(const Corpus& corpus, const HarnessOptions& opt = {}) {
  SuiteResult r{"separator-multiset-invariance", "all clique trees of a chordal graph carry the same label multiset"};
  detail::SuiteClock clock(r);
  for (const auto& g : corpus.graphs) {
    if (!detail::connected_chordal(g) || opt.seeds.empty()) continue;
    ++r.tested;
    std::set<std::vector<std::pair<int, int>>> shapes;
    auto first = separator_multiset(build_clique_tree(g, opt.seeds.front()));
    for (auto seed : opt.seeds) {
      auto t = build_clique_tree(g, seed);
      std::vector<std::pair<int, int>> shape;
      for (const auto& e : t.edges) shape.emplace_back(e.a, e.b);
      shapes.insert(shape);
      auto f = separator_multiset(t);
      if (f != first) {
        r.failures.push_back({to_graph6(g), "seed " + std::to_string(seed) + " gives " + detail::show(f.separators) +
                                                ", seed " + std::to_string(opt.seeds.front()) + " gives " +
                                                detail::show(first.separators)});
        break;
      }
    }
    if (shapes.size() >= 2) ++r.exercised;
  }
  return r;
}

/// For every minimal separator S and nonempty proper R ⊂ S, S - R is a minimal separator of G - R.
inline SuiteResult verify_separator_heredity(const Corpus& corpus) {
  SuiteResult r{"separator-heredity", "removing part R of a minimal separator S leaves S-R a minimal separator of G-R"};
  detail::SuiteClock clock(r);
  for (const auto& g : corpus.graphs) {
    if (!detail::connected_chordal(g)) continue;
    ++r.tested;
    bool exercised = false;
    for (auto s : minimal_separators_direct(g)) {
      const auto bits = s.bits();
      for (std::uint64_t m = (bits - 1) & bits; m != 0; m = (m - 1) & bits) {
        exercised = true;
        VertexSet removed(m);
        auto keep = g.vertices() - removed;
        std::vector<VertexSet> lifted;
        for (auto t : minimal_separators_direct(induced_subgraph(g, keep))) lifted.push_back(lift(t, keep));
        if (std::find(lifted.begin(), lifted.end(), s - removed) == lifted.end())
          r.failures.push_back({to_graph6(g), "S=" + s.to_string() + " R=" + removed.to_string() +
                                                  ": S-R not among " + detail::show(lifted)});
      }
    }
    if (exercised) ++r.exercised;
  }
  return r;
}

inline std::vector<SuiteResult> verify_background(const Corpus& corpus, const HarnessOptions& opt = {}) {
  return {verify_chordal_recognition(corpus),   verify_separator_enumeration(corpus),
          verify_dirac(corpus),                 verify_separating_pairs(corpus),
          verify_clique_tree_existence(corpus, opt), verify_multiset_invariance(corpus, opt),
          verify_separator_heredity(corpus)};
}

// ---------------------------------------------------------------- classes

namespace detail {

inline void compare_class(SuiteResult& r, const Graph& g, const ClassDefinition& c,
                          const std::vector<SubsetProfile>& profiles, const std::vector<PatternOccurrence>& present) {
  auto by_patterns = pattern_verdict(c.id, c.forbidden, present);
  auto by_separators = hereditary_property_holds(profiles, PropertySpec(c.allowed));
  if (by_patterns.member == by_separators.holds) return;
  std::string d = by_patterns.member ? "patterns: member" : "patterns: contains " +
                                                               std::string(to_string(by_patterns.witness->pattern)) +
                                                               " at " + by_patterns.witness->vertices.to_string();
  d += "; separators: ";
  if (by_separators.holds) {
    d += "member";
  } else {
    const auto& v = *by_separators.counterexample;
    auto it = std::find_if(profiles.begin(), profiles.end(), [&](const auto& p) { return p.vertices == v; });
    d += "induced subgraph " + v.to_string() + " realizes " + it->kinds.to_string() + " with family " +
         show(it->family.separators);
  }
  r.failures.push_back({to_graph6(g), d});
}

inline std::vector<SuiteResult> verify_class_list(const Corpus& corpus, const Theory& theory,
                                                  const std::vector<ClassDefinition>& classes,
                                                  const std::string& prefix) {
  std::vector<SuiteResult> out;
  for (const auto& c : classes) {
    std::string kinds = RelationSet(c.allowed).to_string();
    std::string pats;
    for (auto p : c.forbidden) pats += (pats.empty() ? "" : ",") + std::string(to_string(p));
    out.push_back({prefix + c.id, "separator pairs of every induced subgraph lie in " + kinds + " iff (" + pats +
                                      ")-free"});
  }
  auto start = std::chrono::steady_clock::now();
  for (const auto& g : corpus.graphs) {
    if (!connected_chordal(g)) continue;
    auto profiles = induced_profiles(g, theory.reading);
    auto present = forbidden_profile(g, theory.catalog);
    bool exercised = separator_family(g).size() >= 2;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      ++out[i].tested;
      if (exercised) ++out[i].exercised;
      compare_class(out[i], g, classes[i], profiles, present);
    }
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.elapsed_ms = ms / std::max<std::size_t>(1, out.size());
  return out;
}

}  // namespace detail

/// Classes i..vi: forbidden-pattern verdict vs hereditary separator verdict, one result per class.
inline std::vector<SuiteResult> verify_theorem6(const Corpus& corpus, const Theory& theory = {}) {
  return detail::verify_class_list(corpus, theory, theory.classes, "class.");
}

/// The four single-relation exclusions (no disjoint, no equal, no containment, no overlap pairs).
inline std::vector<SuiteResult> verify_exclusions(const Corpus& corpus, const Theory& theory = {}) {
  return detail::verify_class_list(corpus, theory, theory.exclusions, "exclusion.");
}

/**
 * Relation kinds realized across all induced subgraphs: containment should
 * force equality, overlap should force disjointness and equality. One result
 * per implication.
 */
inline std::vector<SuiteResult> verify_relation_heredity(const Corpus& corpus, const Theory& theory = {}) {
  using enum PairRelation;
  struct Implication {
    const char* claim;
    const char* statement;
    PairRelation given;
    PairRelation forced;
  };
  const Implication implications[] = {
      {"relation-heredity.containment-equal", "a graph realizing containment also realizes equality",
       proper_containment, equal},
      {"relation-heredity.overlap-disjoint", "a graph realizing overlap also realizes disjointness", overlap,
       disjoint},
      {"relation-heredity.overlap-equal", "a graph realizing overlap also realizes equality", overlap, equal},
  };
  std::vector<SuiteResult> out;
  for (const auto& imp : implications) out.push_back({imp.claim, imp.statement});
  auto start = std::chrono::steady_clock::now();
  for (const auto& g : corpus.graphs) {
    if (!is_chordal(g)) continue;
    RelationSet seen;
    for (const auto& p : induced_profiles(g, theory.reading)) seen |= p.kinds;
    for (std::size_t i = 0; i < out.size(); ++i) {
      ++out[i].tested;
      if (!seen.contains(implications[i].given)) continue;
      ++out[i].exercised;
      if (!seen.contains(implications[i].forced)) out[i].failures.push_back({to_graph6(g), "realized " + seen.to_string()});
    }
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : out) r.elapsed_ms = ms / static_cast<double>(out.size());
  return out;
}

inline SuiteResult verify_pattern_containments(const Theory& theory = {}) {
  SuiteResult r{"pattern-containments", "claw in dart, P4 in gem, dart in butterfly, 2P3 in butterfly (induced)"};
  detail::SuiteClock clock(r);
  for (const auto& c : catalog_containments(theory.catalog)) {
    ++r.tested;
    ++r.exercised;
    if (!c.occurrence)
      r.failures.push_back({to_graph6(theory.catalog[c.outer]), std::string(to_string(c.inner)) + " not induced in " +
                                                                    std::string(to_string(c.outer))});
  }
  return r;
}

// ---------------------------------------------------------------- Helly

inline SuiteResult verify_helly_theorem(const Corpus& corpus, const Theory& theory = {}) {
  SuiteResult r{"helly-hajos", "every induced subgraph's separator family is Helly iff the graph is hajos-free"};
  detail::SuiteClock clock(r);
  for (const auto& g : corpus.graphs) {
    if (!detail::connected_chordal(g)) continue;
    ++r.tested;
    if (separator_family(g).size() >= 2) ++r.exercised;
    auto hit = contains_induced(g, theory.catalog[Pattern::hajos]);
    auto helly = hereditary_helly(induced_profiles(g, theory.reading));
    if (hit.has_value() == !helly.holds) continue;
    std::string d = hit ? "hajos at " + hit->to_string() : "hajos-free";
    d += helly.holds ? "; all families Helly" : "; non-Helly family on " + helly.counterexample_vertices->to_string();
    r.failures.push_back({to_graph6(g), d});
  }
  return r;
}

/// Triple test and subfamily scan agree on every separator family of every induced subgraph.
inline SuiteResult verify_helly_agreement(const Corpus& corpus) {
  SuiteResult r{"helly-triples", "the triple Helly test agrees with the exhaustive subfamily scan"};
  detail::SuiteClock clock(r);
  std::size_t families = 0;
  for (const auto& g : corpus.graphs) {
    if (!is_chordal(g)) continue;
    ++r.tested;
    bool exercised = false;
    for (const auto& p : induced_profiles(g)) {
      if (p.family.size() > 12) continue;
      ++families;
      auto fast = helly_check_triples(p.family);
      auto slow = helly_check_bruteforce(p.family);
      exercised = exercised || !slow.holds;
      bool fast_ok = fast.holds || is_helly_witness(pick(p.family, fast.witness));
      bool slow_ok = slow.holds || is_helly_witness(pick(p.family, slow.witness));
      if (fast.holds != slow.holds || !fast_ok || !slow_ok) {
        r.failures.push_back({to_graph6(g), "family " + detail::show(p.family.separators) +
                                                " triples=" + std::to_string(fast.holds) +
                                                " bruteforce=" + std::to_string(slow.holds)});
        break;
      }
    }
    if (exercised) ++r.exercised;
  }
  r.statement += " (" + std::to_string(families) + " families)";
  return r;
}

/**
 * Graphs whose own separator family fails Helly while every proper induced
 * subgraph's family satisfies it: the leaf-edge labels of each generated
 * clique tree must form a witness.
 */
inline SuiteResult verify_leaf_witness(const Corpus& corpus, const HarnessOptions& opt = {}) {
  SuiteResult r{"leaf-witness", "for a minimal non-Helly graph, the leaf-edge labels of any clique tree are a witness"};
  detail::SuiteClock clock(r);
  for (const auto& g : corpus.graphs) {
    if (!detail::connected_chordal(g)) continue;
    ++r.tested;
    if (helly_check_triples(separator_family(g)).holds) continue;
    bool minimal = true;
    for (const auto& p : induced_profiles(g))
      if (p.vertices != g.vertices() && !helly_check_triples(p.family).holds) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    ++r.exercised;
    for (auto seed : opt.seeds) {
      auto leaves = leaf_separators(build_clique_tree(g, seed));
      if (!is_helly_witness(leaves.separators)) {
        r.failures.push_back({to_graph6(g), "seed " + std::to_string(seed) + ": leaf labels " +
                                                detail::show(leaves.separators) + " are not a witness"});
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------- everything

struct HarnessRun {
  std::string corpus_source;
  std::string corpus_filter;
  std::size_t corpus_size = 0;
  std::vector<SuiteResult> suites;

  bool passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const auto& s) { return s.passed(); });
  }
};

/**
 * All suites on one corpus. Background suites need the connected (not only
 * chordal) graphs; the class and Helly suites skip non-chordal members.
 */
inline HarnessRun run_all(const Corpus& corpus, const Theory& theory = {}, const HarnessOptions& opt = {}) {
  HarnessRun run{corpus.source, std::string(to_string(corpus.filter)), corpus.graphs.size(), {}};
  auto add = [&](std::vector<SuiteResult> v) {
    for (auto& s : v) run.suites.push_back(std::move(s));
  };
  add(verify_background(corpus, opt));
  add(verify_exclusions(corpus, theory));
  add(verify_relation_heredity(corpus, theory));
  run.suites.push_back(verify_pattern_containments(theory));
  add(verify_theorem6(corpus, theory));
  run.suites.push_back(verify_helly_theorem(corpus, theory));
  run.suites.push_back(verify_helly_agreement(corpus));
  run.suites.push_back(verify_leaf_witness(corpus, opt));
  return run;
}

// ---------------------------------------------------------------- mutants

struct Mutant {
  std::string name;
  std::string description;
  std::function<void(Theory&)> apply;
};

/// Deliberately wrong theories; each must make at least one suite fail on the n <= 7 corpus.
inline std::vector<Mutant> documented_mutants() {
  using enum PairRelation;
  auto set_allowed = [](std::string id, RelationSet kinds) {
    return [id, kinds](Theory& t) {
      for (auto& c : t.classes)
        if (c.id == id) c.allowed = kinds;
    };
  };
  return {
      {"butterfly-5", "butterfly replaced by two triangles sharing a vertex",
       [](Theory& t) { t.catalog[Pattern::butterfly] = Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }},
      {"overlap-literal", "overlap read as bare incomparability, so disjoint pairs also count as overlap",
       [](Theory& t) { t.reading = OverlapReading::literal; }},
      {"claw-k14", "claw replaced by the star K1,4",
       [](Theory& t) { t.catalog[Pattern::claw] = Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }},
      {"p4-p5", "P4 replaced by P5", [](Theory& t) { t.catalog[Pattern::p4] = path_graph(5); }},
      {"2p3-p3k2", "2P3 replaced by P3 plus a disjoint edge",
       [](Theory& t) { t.catalog[Pattern::two_p3] = Graph(5, {{0, 1}, {1, 2}, {3, 4}}); }},
      {"gem-fan3", "gem's dominating vertex misses one path end",
       [](Theory& t) { t.catalog[Pattern::gem] = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}}); }},
      {"dart-pendant-on-degree-2", "dart's pendant attached to a degree-2 vertex of the diamond",
       [](Theory& t) { t.catalog[Pattern::dart] = Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}}); }},
      {"hajos-two-ears", "hajos missing one of its three ears",
       [](Theory& t) { t.catalog[Pattern::hajos] = Graph(5, {{0, 1}, {0, 2}, {1, 2}, {3, 0}, {3, 1}, {4, 0}, {4, 2}}); }},
      {"iii-allows-containment", "class iii also allows proper containment",
       set_allowed("iii", {disjoint, equal, proper_containment})},
      {"vi-drops-equal", "class vi allows only proper containment", set_allowed("vi", {proper_containment})},
      {"i-allows-equal", "class i also allows equality", set_allowed("i", {disjoint, equal})},
  };
}

inline Theory mutated(const Mutant& m) {
  Theory t;
  m.apply(t);
  return t;
}

/// Claims that pass in `baseline` but fail in `mutant`; a mutant counts as detected when this is nonempty.
inline std::vector<std::string> newly_failing(const HarnessRun& baseline, const HarnessRun& mutant) {
  std::vector<std::string> out;
  for (const auto& m : mutant.suites) {
    if (m.passed()) continue;
    auto base = std::find_if(baseline.suites.begin(), baseline.suites.end(),
                             [&](const auto& b) { return b.claim == m.claim; });
    if (base == baseline.suites.end() || base->passed()) out.push_back(m.claim);
  }
  return out;
}

}  // namespace sepchordal
