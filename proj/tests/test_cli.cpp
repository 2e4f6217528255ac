#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace {

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = "printf '%s' '" + stdin_text + "' | " SEPCHORDAL_CLI " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const std::string data = SEPCHORDAL_DATA;

}  // namespace

TEST(Cli, ClassifyHajosJson) {
  auto r = run("classify --output json", "E}h_\n");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["graph6"], "E}h_");
  EXPECT_EQ(j["chordal"], true);
  EXPECT_EQ(j["classes"]["helly"]["member"], false);
  EXPECT_EQ(j["classes"]["helly"]["witness"]["pattern"], "hajos");
  EXPECT_EQ(j["classes"]["helly"]["witness"]["vertices"], nlohmann::json({0, 1, 2, 3, 4, 5}));
}

TEST(Cli, ClassifyTextUsesVertexNames) {
  auto r = run("classify " + data + "/named.edges");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("claw (Cs)"), std::string::npos);
  EXPECT_NE(r.out.find("helly: not a member, hajos at {x,y,z,a,b,c}"), std::string::npos);
}

TEST(Cli, SeparatorsOfCompleteGraphIsEmpty) {
  auto r = run("separators", "C~\n");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("no minimal separators"), std::string::npos);
  auto j = nlohmann::json::parse(run("separators --output json", "C~\n").out);
  EXPECT_TRUE(j["separators"].empty());
}

TEST(Cli, SeparatorsJsonForHajos) {
  auto j = nlohmann::json::parse(run("separators --output json", "E}h_\n").out);
  EXPECT_EQ(j["separators"], nlohmann::json::parse("[[0,1],[0,2],[1,2]]"));
  EXPECT_EQ(j["relations"][0][1], "overlap");
  EXPECT_TRUE(j["relations"][0][0].is_null());
}

TEST(Cli, CliqueTreeDot) {
  auto r = run("cliquetree", "E}h_\n");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("graph clique_tree {", 0), 0U);
  EXPECT_EQ(lines(r.out).size(), 1U + 4 + 3 + 1);
}

TEST(Cli, HellyAndPatterns) {
  auto r = run("helly --output json", "E}h_\n");
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["witness_indices"], nlohmann::json({0, 1, 2}));
  auto p = run("patterns", "C~\n");
  EXPECT_NE(p.out.find("none"), std::string::npos);
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(run("classify", "Cl\n").status, 2);                // C4 is not chordal
  EXPECT_EQ(run("classify --format graph6", "E}\n").status, 2);  // truncated
  EXPECT_EQ(run("classify /nonexistent/file").status, 2);
  EXPECT_EQ(run("cliquetree", "0 1\n2 3\n").status, 2);  // disconnected
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("verify --max-n 9").status, 2);
  EXPECT_EQ(run("verify --seeds 1,x").status, 2);
}

TEST(Cli, EnumerateStream) {
  auto r = run("enumerate --max-n 4 --filter connected-chordal");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out).size(), 9U);
  EXPECT_EQ(lines(run("enumerate --min-n 7 --max-n 7 --filter connected-chordal").out).size(), 272U);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify --max-n 4").status, 0);
  // the dart (5 vertices) breaks the equal-only class
  auto r = run("verify --max-n 6");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("class.ii"), std::string::npos);
}

TEST(Cli, VerifyJsonIsDeterministic) {
  auto a = run("verify --max-n 5 --output json --seeds 0,1,2");
  auto b = run("verify --max-n 5 --output json --seeds 0,1,2");
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["corpus"]["filter"], "connected");
}

TEST(Cli, VerifyGraph6Corpus) {
  auto r = run("verify " + data + "/connected_chordal_8.g6 --filter connected-chordal --output json");
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["corpus"]["size"], 1614);
  for (const auto& s : j["suites"])
    if (s["claim"] == "helly-hajos" || s["claim"] == "class.iv") EXPECT_EQ(s["verdict"], "pass") << s["claim"];
}

TEST(Cli, MutantsListed) {
  auto r = run("verify --list-mutants");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out).size(), 11U);
  EXPECT_EQ(run("verify --max-n 3 --mutant nope").status, 2);
}
