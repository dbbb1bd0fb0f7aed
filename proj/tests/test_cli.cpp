#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "grpx/cache.hpp"
#include "grpx/complexes.hpp"
#include "grpx/corpus.hpp"

using namespace grpx;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
  }
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

// Runs the CLI with a private cache directory; stderr is folded into out.
Run grpx_cli(const std::vector<std::string>& args, const std::string& env = {}) {
  static const fs::path cache = fs::temp_directory_path() / "grpx-cli-test-cache";
  std::string cmd = "GRPX_CACHE=" + quote(cache.string()) + " " + env + " " + quote(GRPX_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// "label: [..]" -> the map.
std::vector<std::uint32_t> certificate(const std::string& line) {
  return nlohmann::json::parse(line.substr(line.find('['))).get<std::vector<std::uint32_t>>();
}

}  // namespace

TEST(Cli, ComplexIsoCertificatesAreValid) {
  auto r = grpx_cli({"iso", "C(9) x C(3)", "ES27", "--on", "complex"});
  ASSERT_EQ(r.code, 0) << r.out;
  auto lines = r.lines();
  ASSERT_EQ(lines.size(), 2u);
  const auto& a = fixture::lattice("C9xC3");
  const auto& b = fixture::lattice("ES27");
  EXPECT_TRUE(is_complex_isomorphism(build_complex(a, ComplexKind::Independence),
                                     build_complex(b, ComplexKind::Independence), certificate(lines[0])));
  EXPECT_TRUE(is_complex_isomorphism(build_complex(a, ComplexKind::Strong), build_complex(b, ComplexKind::Strong),
                                     certificate(lines[1])));
}

TEST(Cli, LatticeIsoIndexPreserving) {
  auto r = grpx_cli({"iso", "C(9) x C(3)", "ES27", "--on", "lattice", "--index-preserving"});
  ASSERT_EQ(r.code, 0);
  auto m = certificate(r.out);
  const auto& a = fixture::lattice("C9xC3");
  const auto& b = fixture::lattice("ES27");
  ASSERT_EQ(m.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.order(i), b.order(m[i]));
}

TEST(Cli, OrderFortyTwoPair) {
  auto lat = grpx_cli({"iso", "G42_1", "G42_2", "--on", "lattice"});
  EXPECT_EQ(lat.code, 0);
  EXPECT_EQ(lat.out.find("NONE"), std::string::npos);
  auto idx = grpx_cli({"iso", "G42_1", "G42_2", "--on", "lattice", "--index-preserving"});
  EXPECT_EQ(idx.code, 0);
  EXPECT_NE(idx.out.find("NONE (exhausted)"), std::string::npos);
  auto cx = grpx_cli({"iso", "G42_1", "G42_2", "--on", "complex", "--kind", "ind"});
  EXPECT_EQ(cx.code, 0);
  EXPECT_NE(cx.out.find("NONE (exhausted) [element order census differs]"), std::string::npos);
}

TEST(Cli, GroupIso) {
  auto r = grpx_cli({"iso", "C(2) x C(3)", "C6", "--on", "group"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(certificate(r.out).size(), 6u);
  EXPECT_NE(grpx_cli({"iso", "C4", "V4", "--on", "group"}).out.find("NONE (exhausted)"), std::string::npos);
}

TEST(Cli, GraphIso) {
  auto r = grpx_cli({"iso", "C4", "V4", "--on", "graph"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.lines().size(), 3u);
  for (const auto& l : r.lines()) EXPECT_NE(l.find("NONE (exhausted)"), std::string::npos) << l;
}

TEST(Cli, PowerGraphOfCyclicFourIsComplete) {
  auto r = grpx_cli({"graph", "C(4)", "--kind", "power", "--out", "dot"});
  ASSERT_EQ(r.code, 0);
  std::size_t edges = 0;
  for (const auto& l : r.lines()) edges += l.find(" -- ") != std::string::npos;
  EXPECT_EQ(edges, 6u);
  auto j = nlohmann::json::parse(grpx_cli({"graph", "C(4)", "--out", "json"}).out);
  EXPECT_EQ(j["edges"].size(), 6u);
}

TEST(Cli, ComplexOutputs) {
  EXPECT_EQ(nlohmann::json::parse(grpx_cli({"complex", "V4"}).out), nlohmann::json({3, 3}));
  auto faces = grpx_cli({"complex", "V4", "--out", "faces"});
  EXPECT_EQ(faces.code, 0);
  EXPECT_EQ(faces.lines().size(), 3u + 6u);
  auto j = nlohmann::json::parse(grpx_cli({"complex", "C6", "--kind", "strong", "--out", "json"}).out);
  EXPECT_EQ(j["kind"], "strong");
}

TEST(Cli, ParseErrors) {
  auto r = grpx_cli({"build", "C("});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("column 3"), std::string::npos);
  EXPECT_EQ(grpx_cli({"analyze", "NoSuchGroup"}).code, 2);
  EXPECT_EQ(grpx_cli({"build", "SD(C(11) x C(11), C(5), mat[3 0 0])"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(grpx_cli({}).code, 1);
  EXPECT_EQ(grpx_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(grpx_cli({"graph", "C4", "--kind", "cubic"}).code, 1);
  EXPECT_EQ(grpx_cli({"iso", "C4"}).code, 1);
  EXPECT_EQ(grpx_cli({"iso", "C4", "V4", "--on", "graph", "--kind", "strong"}).code, 1);
  EXPECT_EQ(grpx_cli({"iso", "C4", "V4", "--on", "group", "--index-preserving"}).code, 1);
  EXPECT_EQ(grpx_cli({"verify", "--suite", "nonsense"}).code, 1);
  EXPECT_EQ(grpx_cli({"--help"}).code, 0);
}

TEST(Cli, BudgetExits) {
  auto r = grpx_cli({"iso", "G605_2", "G605_4", "--on", "group"}, "GRPX_BUDGET=5");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("UNKNOWN (budget)"), std::string::npos);
  EXPECT_EQ(grpx_cli({"complex", "BL3125", "--face-budget", "1000"}).code, 3);
}

TEST(Cli, BuildAndAnalyze) {
  auto b = grpx_cli({"build", "Q8"});
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(b.out.find("order: 8"), std::string::npos);
  auto a = grpx_cli({"analyze", "Q8"});
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("hamiltonian: yes"), std::string::npos);
}

TEST(Cli, AnalyzeFillsCache) {
  const fs::path dir = fs::temp_directory_path() / "grpx-cli-cache-fill";
  fs::remove_all(dir);
  EXPECT_EQ(grpx_cli({"analyze", "A4"}, "GRPX_CACHE=" + quote(dir.string())).code, 0);
  EXPECT_TRUE(fs::exists(lattice_cache_path(fixture::group("A4"), dir)));
  fs::remove_all(dir);
}

TEST(Cli, CorpusList) {
  auto r = grpx_cli({"corpus", "list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.lines().size(), corpus().size());
  for (const auto& e : corpus()) EXPECT_NE(r.out.find(e.key), std::string::npos) << e.key;
}

TEST(Cli, VerifyExitMatchesReport) {
  auto r = grpx_cli({"verify", "--suite", "iwasawa", "--json"});
  auto j = nlohmann::json::parse(r.out);
  std::size_t fails = 0;
  for (const auto& e : j) fails += e["status"] == "fail";
  EXPECT_FALSE(j.empty());
  EXPECT_EQ(r.code, fails == 0 ? 0 : 4);
  auto t = grpx_cli({"verify", "--suite", "q3", "--group", "Q8_C3", "--group", "S3"});
  EXPECT_EQ(t.code, 0) << t.out;
  EXPECT_NE(t.out.find("Q8_C3"), std::string::npos);
}
