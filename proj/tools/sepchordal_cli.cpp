#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "sepchordal/sepchordal.hpp"

using namespace sepchordal;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Options {
  std::string input = "-";
  std::string format = "auto";
  std::string output = "text";
  std::string filter;
  std::string seeds;
  std::string mutant;
  int max_n = 7;
  int min_n = 1;
  bool list_mutants = false;
};

/// Thrown for bad input; reported on stderr with exit status 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

InputFormat input_format(const std::string& s) {
  if (s == "graph6") return InputFormat::graph6;
  if (s == "edgelist") return InputFormat::edgelist;
  return InputFormat::automatic;
}

std::vector<NamedGraph> load(const Options& o) {
  auto graphs = read_graphs(read_input(o.input), input_format(o.format));
  if (graphs.empty()) throw usage_error("no graph in input");
  return graphs;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  if (text.empty()) return HarnessOptions::default_seeds();
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw usage_error("bad seed '" + tok + "'");
    }
  }
  if (out.empty()) throw usage_error("empty seed list");
  return out;
}

GraphFilter parse_filter(const std::string& s, GraphFilter fallback) {
  if (s.empty()) return fallback;
  if (auto f = filter_from_string(s)) return *f;
  throw usage_error("unknown filter '" + s + "'");
}

std::string show(VertexSet s, const NamedGraph& g) {
  std::string out = "{";
  for (auto v : s) out += (out.size() > 1 ? "," : "") + g.name_of(v);
  return out + "}";
}

std::string heading(const NamedGraph& g) {
  auto g6 = to_graph6(g.graph);
  return g.title.empty() ? g6 : g.title + " (" + g6 + ")";
}

void require_chordal_input(const NamedGraph& g) {
  if (!is_chordal(g.graph)) throw usage_error(heading(g) + " is not chordal");
}

// ---------------------------------------------------------------- commands

int cmd_classify(const Options& o) {
  auto graphs = load(o);
  for (const auto& g : graphs) require_chordal_input(g);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    auto report = classify(g.graph);
    if (o.output == "json") {
      std::cout << to_json(report).dump() << "\n";
      continue;
    }
    if (i > 0) std::cout << "\n";
    std::cout << heading(g) << "\n";
    for (const auto& c : report.classes) {
      std::cout << "  " << c.id << ": " << (c.member ? "member" : "not a member");
      if (c.witness) std::cout << ", " << to_string(c.witness->pattern) << " at " << show(c.witness->vertices, g);
      std::cout << "\n";
    }
  }
  return exit_ok;
}

int cmd_separators(const Options& o) {
  auto graphs = load(o);
  for (const auto& g : graphs) require_chordal_input(g);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    auto f = separator_family(g.graph, parse_seeds(o.seeds).front());
    if (o.output == "json") {
      std::cout << separators_json(g.graph, f).dump() << "\n";
      continue;
    }
    if (i > 0) std::cout << "\n";
    std::cout << heading(g) << "\n";
    if (f.empty()) std::cout << "  no minimal separators\n";
    for (std::size_t a = 0; a < f.size(); ++a) std::cout << "  S" << a << " = " << show(f[a], g) << "\n";
    for (std::size_t a = 0; a < f.size(); ++a)
      for (std::size_t b = a + 1; b < f.size(); ++b)
        std::cout << "  S" << a << " S" << b << ": " << to_string(classify_pair(f[a], f[b])) << "\n";
    std::cout << "  relations: " << relation_profile(f).to_string() << "\n";
  }
  return exit_ok;
}

int cmd_cliquetree(const Options& o) {
  auto graphs = load(o);
  for (const auto& g : graphs) require_chordal_input(g);
  auto seed = parse_seeds(o.seeds).front();
  for (const auto& g : graphs) {
    CliqueTree t;
    try {
      t = build_clique_tree(g.graph, seed);
    } catch (const domain_error& e) {
      throw usage_error(heading(g) + ": " + e.what());
    }
    if (o.output == "json") {
      json edges = json::array();
      for (const auto& e : t.edges) edges.push_back({{"a", e.a}, {"b", e.b}, {"label", to_json(e.label)}});
      std::cout << json{{"graph6", to_graph6(g.graph)}, {"cliques", to_json(t.cliques)}, {"edges", edges}}.dump()
                << "\n";
    } else {
      std::cout << to_dot(t, g.names);
    }
  }
  return exit_ok;
}

int cmd_helly(const Options& o) {
  auto graphs = load(o);
  for (const auto& g : graphs) require_chordal_input(g);
  for (const auto& g : graphs) {
    auto f = separator_family(g.graph);
    auto r = f.size() <= 24 ? helly_check_bruteforce(f) : helly_check_triples(f);
    if (o.output == "json") {
      std::cout << to_json(r, f).dump() << "\n";
      continue;
    }
    std::cout << heading(g) << ": ";
    if (r.holds) {
      std::cout << "Helly\n";
    } else {
      std::cout << "not Helly, witness";
      for (auto i : r.witness) std::cout << " " << show(f[i], g);
      std::cout << "\n";
    }
  }
  return exit_ok;
}

int cmd_patterns(const Options& o) {
  auto graphs = load(o);
  for (const auto& g : graphs) {
    auto present = forbidden_profile(g.graph);
    if (o.output == "json") {
      json hits = json::array();
      for (const auto& p : present) hits.push_back({{"pattern", to_string(p.pattern)}, {"vertices", to_json(p.vertices)}});
      std::cout << json{{"graph6", to_graph6(g.graph)}, {"patterns", hits}}.dump() << "\n";
      continue;
    }
    std::cout << heading(g) << ":";
    if (present.empty()) std::cout << " none";
    for (const auto& p : present) std::cout << " " << to_string(p.pattern) << "@" << show(p.vertices, g);
    std::cout << "\n";
  }
  return exit_ok;
}

int cmd_verify(const Options& o) {
  if (o.list_mutants) {
    for (const auto& m : documented_mutants()) std::cout << m.name << "  " << m.description << "\n";
    return exit_ok;
  }
  Theory theory;
  if (!o.mutant.empty()) {
    auto all = documented_mutants();
    auto it = std::find_if(all.begin(), all.end(), [&](const auto& m) { return m.name == o.mutant; });
    if (it == all.end()) throw usage_error("unknown mutant '" + o.mutant + "'");
    theory = mutated(*it);
  }
  HarnessOptions opt{parse_seeds(o.seeds)};
  auto filter = parse_filter(o.filter, GraphFilter::connected);
  Corpus corpus;
  if (o.input != "-") {
    corpus = graph6_corpus(read_input(o.input), filter);
    corpus.source = "graph6:" + o.input;
  } else {
    if (o.max_n < 1 || o.max_n > max_enumeration_order)
      throw usage_error("--max-n must be between 1 and " + std::to_string(max_enumeration_order));
    corpus = enumerated_corpus(o.max_n, filter);
  }
  auto run = run_all(corpus, theory, opt);
  if (o.output == "json")
    std::cout << to_json(run).dump(2) << "\n";
  else
    std::cout << to_text(run);
  return run.passed() ? exit_ok : exit_failed;
}

int cmd_enumerate(const Options& o) {
  if (o.max_n > max_enumeration_order) throw usage_error("internal enumeration stops at 8 vertices");
  auto filter = parse_filter(o.filter, GraphFilter::all);
  for (int n = std::max(o.min_n, 1); n <= o.max_n; ++n)
    for (const auto& g : enumerate_graphs(n, filter)) std::cout << to_graph6(g) << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chordal graph subclasses by minimal separator relations"};
  app.require_subcommand(1);
  Options o;

  auto graph_command = [&](const char* name, const char* help, std::vector<std::string> outputs) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "graph file, '-' or absent for stdin");
    sub->add_option("--format", o.format, "input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    sub->add_option("--output", o.output, "output format")->check(CLI::IsMember(outputs));
    return sub;
  };

  auto* classify_cmd = graph_command("classify", "membership in each class, with witnesses", {"text", "json"});
  auto* separators_cmd = graph_command("separators", "separator multiset and pairwise relations", {"text", "json"});
  separators_cmd->add_option("--seeds", o.seeds, "tie-break seed (first of a comma list)");
  // text output of cliquetree is the DOT rendering
  auto* tree_cmd = graph_command("cliquetree", "clique tree as DOT", {"dot", "text", "json"});
  tree_cmd->add_option("--seeds", o.seeds, "tie-break seed (first of a comma list)");
  auto* helly_cmd = graph_command("helly", "Helly check of the separator family", {"text", "json"});
  auto* patterns_cmd = graph_command("patterns", "catalog patterns present as induced subgraphs", {"text", "json"});

  auto* verify_cmd = app.add_subcommand("verify", "run every verification suite");
  verify_cmd->add_option("input", o.input, "graph6 corpus file (default: internal enumeration)");
  verify_cmd->add_option("--max-n", o.max_n, "largest order to enumerate");
  verify_cmd->add_option("--filter", o.filter, "corpus filter")
      ->check(CLI::IsMember({"all", "connected", "chordal", "connected-chordal"}));
  verify_cmd->add_option("--seeds", o.seeds, "tie-break seeds, comma separated");
  verify_cmd->add_option("--output", o.output, "report format")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--mutant", o.mutant, "run against a documented mutant theory");
  verify_cmd->add_flag("--list-mutants", o.list_mutants, "print the documented mutants");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "graph6 stream of isomorphism classes");
  enumerate_cmd->add_option("--max-n", o.max_n, "largest order")->check(CLI::Range(1, 64));
  enumerate_cmd->add_option("--min-n", o.min_n, "smallest order")->check(CLI::Range(1, 64));
  enumerate_cmd->add_option("--filter", o.filter, "graph filter")
      ->check(CLI::IsMember({"all", "connected", "chordal", "connected-chordal"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (separators_cmd->parsed()) return cmd_separators(o);
    if (tree_cmd->parsed()) return cmd_cliquetree(o);
    if (helly_cmd->parsed()) return cmd_helly(o);
    if (patterns_cmd->parsed()) return cmd_patterns(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (enumerate_cmd->parsed()) return cmd_enumerate(o);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const parse_error& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return exit_usage;
  } catch (const sepchordal::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
