#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rado/cli.hpp"
#include "rado/largeness.hpp"
#include "rado/mc.hpp"

using namespace rado;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rado_cli_" + name)).string();
}

}  // namespace

TEST(Cli, EdgeIsDeterministicAndMatchesOracle) {
  const auto a = run({"edge", "--seed", "7", "-u", "3", "-v", "5"});
  const auto b = run({"edge", "--seed", "7", "-u", "3", "-v", "5"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = json::parse(a.out);
  EXPECT_EQ(j["edge"].get<bool>(), EdgeOracle(7).edge(3, 5));
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["version"], cli::kVersion);
  EXPECT_EQ(j["config"]["u"], "3");
  EXPECT_EQ(j["command"], "edge");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"edge", "--bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"nosuch"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"edge", "-u", "3", "-v", "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"adj", "--host", "all"}).code, cli::kUsage);  // keyword host needs a bound
  EXPECT_FALSE(run({"edge", "--bogus"}).err.empty());
}

TEST(Cli, SeedFromEnvironment) {
  ::setenv("RADO_SEED", "7", 1);
  const auto a = run({"edge", "-u", "3", "-v", "5"});
  ::unsetenv("RADO_SEED");
  EXPECT_EQ(json::parse(a.out)["seed"], 7);
}

TEST(Cli, HexSeed) {
  EXPECT_EQ(json::parse(run({"edge", "--seed", "0x10", "-u", "1", "-v", "2"}).out)["seed"], 16);
}

TEST(Cli, AuditWeakPasses) {
  const auto r = run({"audit-weak", "--seed", "7", "--host", "1-512", "--kmax", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  std::size_t order4 = 0;
  for (const auto& p : j["patterns"])
    if (p["order"] == 4) {
      ++order4;
      EXPECT_EQ(p["outcome"], "found");
    }
  EXPECT_EQ(order4, 11u);
}

TEST(Cli, ThickThenAuditIsCertifiedNegative) {
  const auto t = run({"construct-thick", "--seed", "7", "--blocks", "3", "--prefix-bound", "200000"});
  ASSERT_EQ(t.code, 0) << t.out;
  const auto j = json::parse(t.out);
  EXPECT_TRUE(j["verified"].get<bool>());
  const auto members = j["members"].get<std::string>();
  const auto a = run({"audit-weak", "--seed", "7", "--host", members, "--kmax", "3"});
  EXPECT_EQ(a.code, cli::kCertifiedNegative);
  const auto c = run({"contains", "--seed", "7", "--host", members, "--pattern", "K2"});
  EXPECT_EQ(c.code, cli::kCertifiedNegative);
  EXPECT_EQ(json::parse(c.out)["outcome"], "absent");
}

TEST(Cli, LongThickSetExhaustsPrefix) {
  const auto t = run({"construct-thick", "--seed", "7", "--blocks", "5", "--prefix-bound", "200000"});
  EXPECT_EQ(t.code, cli::kExhausted);
  EXPECT_FALSE(json::parse(t.out)["verified"].get<bool>());
}

TEST(Cli, EmbedReport) {
  const auto r = run({"embed", "--seed", "1", "--target", "petersen", "--host", "even", "--prefix-bound", "32768"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  const auto images = j["images"].get<std::vector<Vertex>>();
  ASSERT_EQ(images.size(), 10u);
  const auto p = FiniteGraph::petersen();
  EdgeOracle g(1);
  for (std::size_t i = 0; i < 10; ++i) {
    EXPECT_EQ(images[i] % 2, 0u);
    for (std::size_t k = i + 1; k < 10; ++k) EXPECT_EQ(g.edge(images[i], images[k]), p.has_edge(i, k));
  }
  EXPECT_EQ(j["steps"].size(), 10u);
}

TEST(Cli, EmbedDeadEndExitsThree) {
  const auto r = run({"embed", "--seed", "1", "--target", "E50", "--host", "1-4096"});
  EXPECT_EQ(r.code, cli::kExhausted);
}

TEST(Cli, ExtensionExitCodes) {
  EXPECT_EQ(run({"extension", "--seed", "1", "--base", "1-8", "--bound", "4096"}).code, 0);
  EXPECT_EQ(run({"extension", "--seed", "1", "--base", "1-8", "--bound", "20"}).code, cli::kCertifiedNegative);
}

TEST(Cli, HostNotation) {
  EXPECT_EQ(cli::parse_host("even", 10, 0).elements(), (std::vector<Vertex>{2, 4, 6, 8, 10}));
  EXPECT_EQ(cli::parse_host("odd", 6, 0).elements(), (std::vector<Vertex>{1, 3, 5}));
  EXPECT_EQ(cli::parse_host("ap:3,7", 30, 0).elements(), (std::vector<Vertex>{3, 10, 17, 24}));
  EXPECT_EQ(cli::parse_host("1-3,8,10-11", 0, 0).elements(), (std::vector<Vertex>{1, 2, 3, 8, 10, 11}));
  EXPECT_EQ(cli::parse_host("1-3", 0, 0).prefix_bound(), 3u);
  EXPECT_EQ(cli::parse_host("mup:0.5", 1000, 9), sample_mu_p(0.5, 1000, 9));
  const auto path = temp_path("host.txt");
  std::ofstream(path) << "# members\n5\n2\n7-9\n";
  EXPECT_EQ(cli::parse_host("file:" + path, 0, 0).elements(), (std::vector<Vertex>{2, 5, 7, 8, 9}));
  EXPECT_THROW(cli::parse_host("all", 0, 0), ContractError);
}

TEST(Cli, PatternNotation) {
  EXPECT_EQ(cli::parse_pattern("K4"), FiniteGraph::complete(4));
  EXPECT_EQ(cli::parse_pattern("P3"), FiniteGraph::path(3));
  EXPECT_EQ(cli::parse_pattern("C5"), FiniteGraph::cycle(5));
  EXPECT_EQ(cli::parse_pattern("E6"), FiniteGraph(6));
  EXPECT_EQ(cli::parse_pattern("g6:D?{"), graph6_decode("D?{"));
  EXPECT_EQ(cli::parse_pattern("D?{"), graph6_decode("D?{"));
  const auto path = temp_path("pattern.txt");
  std::ofstream(path) << "3\n0 1\n1 2\n";
  EXPECT_EQ(cli::parse_pattern("file:" + path), FiniteGraph::path(3));
}

TEST(Cli, OutputFileAndCsv) {
  const auto path = temp_path("gfree.json");
  const auto r = run({"mc-gfree", "--seed", "2", "--pattern", "K3", "--n", "4,5", "--trials", "200", "--format", "csv",
                      "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const auto j = json::parse(f);
  EXPECT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["exact_count"], 41);
  std::ifstream csv(path + ".csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "n,estimate,stderr,exact_if_available,envelope");
}

TEST(Cli, EverySubcommandDeterministic) {
  const std::vector<std::vector<std::string>> calls = {
      {"adj", "--seed", "3", "--host", "1-20"},
      {"type", "--seed", "3", "--base", "1,2,3", "-m", "50"},
      {"gfree-max", "--seed", "3", "--window", "16-31", "--pattern", "K3"},
      {"dyadic-audit", "--seed", "3", "--pattern", "K2", "--kmax", "4", "--nparam", "100"},
      {"density", "--host", "odd", "--prefix-bound", "1000"},
      {"sum", "--host", "1-1000", "--weight", "power:0.5"},
      {"thick", "--host", "1-5,9-20"},
      {"ap", "--host", "1,4,7,10,12"},
      {"construct-thick-copy", "--seed", "3", "--target", "K3", "--blocks", "2", "--prefix-bound", "100000"},
      {"construct-pi02", "--seed", "3", "--levels", "2", "--prefix-bound", "100000"},
      {"mc-density", "--seed", "3", "--k", "2", "--n", "2", "--pool", "1000", "--trials", "5"},
      {"mc-fn", "--seed", "3", "--pattern", "K2", "--n", "8", "--trials", "50"},
      {"sample-mup", "--seed", "3", "--prob", "0.25", "--prefix-bound", "100"},
      {"typefreq", "--seed", "3", "--base", "1,2", "--prefix-bound", "10000"},
  };
  for (const auto& c : calls) {
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.code, 0) << c[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << c[0];
    const auto j = json::parse(a.out);
    EXPECT_TRUE(j.contains("seed") && j.contains("version") && j.contains("config")) << c[0];
  }
}

TEST(Cli, SumAndThicknessValues) {
  const auto s = json::parse(run({"sum", "--host", "1-4"}).out);
  EXPECT_NEAR(s["sum"].get<double>(), 25.0 / 12.0, 1e-11);
  const auto t = json::parse(run({"thick", "--host", "1-5,9-20"}).out);
  EXPECT_EQ(t["interval"]["start"], 9);
  EXPECT_EQ(t["interval"]["length"], 12);
}
