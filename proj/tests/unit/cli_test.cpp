#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sgcf/sgcf.hpp"
#include "sgcf_cli/cli.hpp"
#include "sgcf_cli/graph_file.hpp"

using namespace sgcf;
using nlohmann::json;

namespace {

const char* const kGPhi =
    "# worked example\n"
    "sink q\n"
    "edge q v1 +\n"
    "edge v1 v2 -\n"
    "edge v2 v3 +\n"
    "edge v3 q +\n"
    "edge q v2 +\n";

const char* const kHPhi =
    "vertex v1\nvertex v2\nvertex v3\n"
    "sink q\n"
    "edge v1 v2 -\nedge v1 v3 +\nedge v1 q +\nedge v2 v3 +\nedge v3 q +\n";

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("sgcf_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  struct Result {
    int code;
    std::string out, err;
    json doc() const { return json::parse(out); }
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path dir_;
};

std::size_t parse_error_line(const std::string& text) {
  try {
    cli::parse_graph_string(text);
  } catch (const cli::ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(ParseGraph, Examples) {
  const SignedGraph single = cli::parse_graph_string("sink q\nedge q v1 +\n");
  EXPECT_EQ(reduced_laplacians(single).signed_laplacian, (IntMatrix{{1}}));
  const SignedGraph g = cli::parse_graph_string(kGPhi);
  EXPECT_EQ(reduced_laplacians(g).signed_laplacian, (IntMatrix{{2, 1, 0}, {1, 3, -1}, {0, -1, 2}}));
  EXPECT_EQ(g.names(), (std::vector<std::string>{"q", "v1", "v2", "v3"}));
  EXPECT_EQ(cli::parse_graph_string(kHPhi), fixtures::h_phi());
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("sink q\nedge q a +\nsink a\n"), 3u);
  EXPECT_EQ(parse_error_line("edge q a +\n"), 2u);
  EXPECT_EQ(parse_error_line("sink q\nedge q a +\n# c\nedge a q -\n"), 4u);
  EXPECT_EQ(parse_error_line("sink q\nedge a a +\n"), 2u);
  EXPECT_EQ(parse_error_line("sink q\nedge q a *\n"), 2u);
  EXPECT_EQ(parse_error_line("sink q\nnode a\n"), 2u);
  EXPECT_EQ(parse_error_line("sink q\nedge q a\n"), 2u);
}

TEST(ParseGraph, RoundTrip) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedGraph g = fixtures::to_signed_graph(oracle::random_graph(rng, 2 + trial % 7, 0.4));
    const std::string text = cli::serialize_graph(g);
    const SignedGraph back = cli::parse_graph_string(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(cli::serialize_graph(back), text);
  }
}

TEST_F(CliTest, GroupAndStabilize) {
  const auto path = write("g.txt", kGPhi);
  auto r = run({"group", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc(), json::parse(R"({"order": 8, "invariant_factors": [8]})"));
  r = run({"stabilize", path, "--config", "6,6,2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.doc()["stable"], json::parse("[3,3,1]"));
  EXPECT_EQ(r.doc()["firing_vector"], json::parse("[1,1,1]"));
}

TEST_F(CliTest, EnumerationsAreSorted) {
  const auto path = write("g.txt", kGPhi);
  auto r = run({"criticals", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.doc()["criticals"],
            json::parse("[[2,3,0],[3,3,1],[3,4,0],[3,4,1],[4,4,1],[4,5,0],[4,5,1],[5,6,0]]"));
  r = run({"superstables", path, "--strategy", "box", "--jobs", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.doc()["superstables"],
            json::parse("[[0,0,0],[1,1,0],[1,1,1],[2,2,0],[2,2,1],[2,3,0],[3,3,0],[3,4,0]]"));
  r = run({"identity", path});
  EXPECT_EQ(r.doc()["identity"], json::parse("[3,3,1]"));
}

TEST_F(CliTest, ConfigurationChecks) {
  const auto g = write("g.txt", kGPhi);
  const auto h = write("h.txt", kHPhi);
  EXPECT_EQ(run({"check-critical", g, "--config", "4,5,0"}).doc()["critical"], true);
  EXPECT_EQ(run({"check-critical", g, "--config", "0,0,0"}).doc()["critical"], false);
  EXPECT_EQ(run({"check-superstable", g, "--config", "3,4,0"}).doc()["superstable"], true);
  const auto v = run({"valid", h, "--config", "1,0,1"}).doc();
  EXPECT_EQ(v["valid"], false);
  EXPECT_EQ(v["r_point"], json::parse(R"(["1","-1","1"])"));
  EXPECT_EQ(run({"valid", h, "--config", "7,5,0"}).doc()["r_point"], json::parse(R"(["8/3","5/6","0"])"));
}

TEST_F(CliTest, GraphCommands) {
  const auto g = write("g.txt", kGPhi);
  auto r = run({"balanced", g});
  EXPECT_EQ(r.doc()["balanced"], false);
  r = run({"switch", g, "--vertex", "v1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.doc()["edges"][0], json::parse(R"(["q","v1","-"])"));
  r = run({"canonical", g});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.doc()["canonical_edges"].size(), 5u);
  const auto c3 = write("c3.txt", "sink q\nedge q v1 +\nedge v1 v2 -\nedge v2 q +\n");
  r = run({"tu-count", c3});
  EXPECT_EQ(r.doc()["tu_total"], 3);
  EXPECT_EQ(r.doc()["tu_by_cycles"], json::parse(R"({"0": 3})"));
}

TEST_F(CliTest, Family) {
  auto r = run({"family", "--kind", "fan", "--n", "3", "--variant", "all_positive", "--verify"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["predicted"], json::parse("[8]"));
  EXPECT_EQ(r.doc()["matches"], true);
  r = run({"family", "--kind", "cycle", "--n", "4", "--variant", "explicit", "--signs", "+,-,-,+", "--verify"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["matches"], true);
  r = run({"family", "--kind", "complete", "--n", "4", "--variant", "explicit", "--signs", "-,+,+,+,+,+"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc()["error"]["code"], "unsupported");
}

TEST_F(CliTest, ExitCodes) {
  const auto g = write("g.txt", kGPhi);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate", g}).code, 2);
  EXPECT_EQ(run({"stabilize", g}).code, 2);
  EXPECT_EQ(run({"stabilize", g, "--config", "1,x,2"}).code, 2);
  EXPECT_EQ(run({"stabilize", g, "--config", "1,2"}).code, 2);
  EXPECT_EQ(run({"group", g, "--format", "yaml"}).code, 2);

  const auto h = write("h.txt", kHPhi);
  auto r = run({"stabilize", h, "--config", "1,0,1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc()["error"]["code"], "invalid_configuration");
  r = run({"switch", g, "--vertex", "nope"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc()["error"]["code"], "unknown_vertex");
  const auto bad = write("bad.txt", "sink q\nsink r\n");
  r = run({"group", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc()["error"]["code"], "parse");
  EXPECT_NE(r.doc()["error"]["message"].get<std::string>().find("line 2"), std::string::npos);
  r = run({"group", (dir_ / "missing.txt").string()});
  EXPECT_EQ(r.code, 1);
  r = run({"superstables", h, "--chi-cap", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.doc()["error"]["code"], "resource_limit");
}

TEST_F(CliTest, OutputIsDeterministic) {
  const auto h = write("h.txt", kHPhi);
  for (const auto& cmd : {"criticals", "superstables", "group", "identity", "canonical"}) {
    const auto a = run({cmd, h});
    const auto b = run({cmd, h, "--jobs", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}

TEST_F(CliTest, TextFormat) {
  const auto g = write("g.txt", kGPhi);
  auto r = run({"criticals", g, "--format", "text"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "criticals (8):\n"
            "  2 3 3 3 4 4 4 5\n"
            "  3 3 4 4 4 5 5 6\n"
            "  0 1 0 1 1 0 1 0\n");
  r = run({"group", g, "--format", "text"});
  EXPECT_EQ(r.out, "invariant_factors: 8\norder: 8\n");
  r = run({"stabilize", g, "--config", "6,6,2", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "firing_vector: 1 1 1\nstable: 3 3 1\n");
  r = run({"stabilize", g, "--config", "1,0,1", "--format", "text"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("invalid_configuration"), std::string::npos);
}

#ifdef SGCF_EXE
TEST_F(CliTest, ExecutableExitStatus) {
  const auto g = write("g.txt", kGPhi);
  const std::string exe = SGCF_EXE;
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  EXPECT_EQ(status(exe + " group " + g), 0);
  EXPECT_EQ(status(exe + " group " + g + " --format nope"), 2);
  EXPECT_EQ(status(exe + " stabilize " + g + " --config 9,-9,0"), 1);
}
#endif
