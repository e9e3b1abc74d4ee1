#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "blockseq/cli.hpp"
#include "blockseq/io.hpp"

using namespace blockseq;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("blockseq_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static cli::CommandResult run(std::vector<std::string> args) { return cli::run(args); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  int ok(std::vector<std::string> args) {
    const auto r = run(std::move(args));
    std::string log;
    for (const auto& line : r.log) log += line + "\n";
    EXPECT_EQ(r.exit_code, cli::kExitOk) << log;
    return r.exit_code;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ExtractHappyPathAndVerify) {
  ok({"gen", "--type", "seq", "--n", "200", "--seed", "3", "--out", path("seq.json")});
  const auto r = run({"extract", "--k", "3", "--in", path("seq.json"), "--out", path("w.json")});
  EXPECT_EQ(r.exit_code, cli::kExitOk);
  EXPECT_EQ(r.artifacts, std::vector<std::string>{path("w.json")});
  ok({"verify", "--witness", path("w.json"), "--in", path("seq.json"), "--k", "3"});
}

TEST_F(Cli, ExtractPreconditionExitCode) {
  io::write_file(path("seq4.json"), io::json{{"values", {1, 2, 3, 4}}});
  EXPECT_EQ(run({"extract", "--k", "3", "--in", path("seq4.json")}).exit_code, cli::kExitPrecondition);
}

TEST_F(Cli, CorruptedWitnessIsMismatch) {
  ok({"gen", "--type", "seq", "--n", "100", "--seed", "5", "--out", path("seq.json")});
  ok({"extract", "--k", "3", "--in", path("seq.json"), "--out", path("w.json")});
  io::json w = io::read_file(path("w.json"));
  auto& first = w["blocks"][0];
  auto& second = w["blocks"][1];
  std::swap(first[0], second[0]);
  io::write_file(path("bad.json"), w);
  EXPECT_EQ(run({"verify", "--witness", path("bad.json"), "--in", path("seq.json")}).exit_code,
            cli::kExitMismatch);
}

TEST_F(Cli, UnknownCommandAndSchemaErrors) {
  EXPECT_EQ(run({"frobnicate"}).exit_code, cli::kExitIo);
  EXPECT_EQ(run({}).exit_code, cli::kExitIo);
  EXPECT_EQ(run({"extract", "--k", "2", "--in", path("missing.json")}).exit_code, cli::kExitIo);
  std::ofstream(path("junk.json")) << "{ not json";
  EXPECT_EQ(run({"extract", "--k", "2", "--in", path("junk.json")}).exit_code, cli::kExitIo);
  EXPECT_EQ(run({"gen", "--type", "seq", "--kind", "bogus", "--out", path("x.json")}).exit_code, cli::kExitIo);
}

TEST_F(Cli, PartitionBothModes) {
  ok({"gen", "--type", "seq", "--n", "400", "--seed", "2", "--out", path("seq.json")});
  for (const char* mode : {"full", "greedy"}) {
    const std::string out = path(std::string(mode) + ".json");
    ok({"partition", "--k", "3", "--mode", mode, "--in", path("seq.json"), "--out", out, "--svg",
        path(std::string(mode) + ".svg")});
    ok({"verify", "--artifact", out, "--in", path("seq.json"), "--k", "3"});
    ok({"render", "--artifact", out, "--in", path("seq.json"), "--out", path("r.svg")});
  }
  EXPECT_EQ(run({"partition", "--k", "3", "--mode", "half", "--in", path("seq.json")}).exit_code, cli::kExitIo);
}

TEST_F(Cli, RamseyCommands) {
  ok({"ramsey", "generate", "--kind", "recursive", "--k", "3", "--q", "2", "--out", path("k32.json")});
  ok({"ramsey", "path", "--in", path("k32.json"), "--out", path("path.json")});
  EXPECT_EQ(io::read_file(path("path.json"))["vertices"].size(), 3u);
  ok({"verify", "--artifact", path("path.json"), "--in", path("k32.json")});
  ok({"ramsey", "generate", "--kind", "random", "--n", "60", "--q", "2", "--seed", "4", "--out", path("rnd.json")});
  ok({"ramsey", "search", "--in", path("rnd.json"), "--k", "2", "--s", "2", "--out", path("bp.json")});
  ok({"verify", "--artifact", path("bp.json"), "--in", path("rnd.json"), "--k", "2", "--s", "2"});
  EXPECT_EQ(run({"ramsey", "search", "--in", path("k32.json"), "--k", "3", "--s", "1"}).exit_code,
            cli::kExitPrecondition);
}

TEST_F(Cli, AvoidAndRender) {
  ok({"gen", "--type", "points", "--n", "300", "--seed", "1", "--out", path("pts.json")});
  ok({"avoid", "--k", "2", "--in", path("pts.json"), "--out", path("aw.json"), "--svg", path("aw.svg")});
  ok({"verify", "--artifact", path("aw.json")});
  ok({"verify", "--oracle", "avoiding", "--artifact", path("aw.json")});
  ok({"render", "--artifact", path("aw.json"), "--out", path("aw2.svg")});
  EXPECT_NE(slurp(path("aw2.svg")).find("<circle"), std::string::npos);
  ok({"gen", "--type", "points", "--n", "40", "--seed", "1", "--out", path("few.json")});
  EXPECT_EQ(run({"avoid", "--k", "2", "--in", path("few.json")}).exit_code, cli::kExitPrecondition);
}

TEST_F(Cli, PaginateVerifyAndOracle) {
  ok({"gen", "--type", "graph", "--n", "60", "--m", "300", "--seed", "9", "--out", path("g.json")});
  ok({"paginate", "--epsilon", "0.25", "--in", path("g.json"), "--out", path("pages.json"), "--svg",
      path("pages.svg")});
  ok({"verify", "--artifact", path("pages.json"), "--in", path("g.json")});
  ok({"verify", "--oracle", "crossings", "--artifact", path("pages.json")});
  EXPECT_NE(slurp(path("pages.svg")).find("<svg"), std::string::npos);

  io::json pj = io::read_file(path("pages.json"));
  pj["pages"][0]["edges"].erase(0);
  io::write_file(path("short.json"), pj);
  EXPECT_EQ(run({"verify", "--artifact", path("short.json"), "--in", path("g.json")}).exit_code, cli::kExitMismatch);
  EXPECT_EQ(run({"render", "--artifact", path("short.json"), "--in", path("g.json"), "--out", path("x.svg")}).exit_code,
            cli::kExitMismatch);
}

TEST_F(Cli, RenderSpecialCases) {
  io::write_file(path("empty.json"),
                 io::json{{"n", 5}, {"epsilon", 0.5}, {"k", 2}, {"page_count", 0}, {"pages", io::json::array()}});
  ok({"render", "--artifact", path("empty.json"), "--out", path("empty.svg")});
  const std::string empty = slurp(path("empty.svg"));
  EXPECT_NE(empty.find("<line"), std::string::npos);
  EXPECT_EQ(empty.find("<path"), std::string::npos);

  const io::json biarc{{"n", 10},
                       {"epsilon", 0.5},
                       {"k", 2},
                       {"page_count", 1},
                       {"pages",
                        {{{"groups", {{{"style", "biarcs"}, {"split", 4}, {"depth", 1}, {"block_size", 1}}}},
                          {"edges", {{2, 7, 0, 0}}}}}}};
  io::write_file(path("biarc.json"), biarc);
  ok({"render", "--artifact", path("biarc.json"), "--out", path("biarc.svg")});
  const std::string svg = slurp(path("biarc.svg"));
  EXPECT_NE(svg.find("M 2 0 A"), std::string::npos);
  EXPECT_NE(svg.find("4.765 0"), std::string::npos);
  EXPECT_NE(svg.find("M 4.765 0 A"), std::string::npos);
}

TEST_F(Cli, VerifyOracles) {
  ok({"gen", "--type", "seq", "--n", "14", "--seed", "8", "--out", path("s.json")});
  ok({"verify", "--oracle", "longest-monotone", "--in", path("s.json")});
  ok({"verify", "--oracle", "block-exists", "--in", path("s.json"), "--k", "2", "--s", "2"});
  ok({"verify", "--oracle", "max-blocksize", "--in", path("s.json"), "--k", "2"});
  EXPECT_EQ(run({"verify", "--oracle", "nope", "--in", path("s.json")}).exit_code, cli::kExitIo);
}

TEST_F(Cli, DeterministicArtifacts) {
  for (const char* tag : {"a", "b"}) {
    const std::string t(tag);
    ok({"gen", "--type", "seq", "--kind", "clustered", "--k", "3", "--s", "4", "--order", "random", "--seed", "12",
        "--out", path("seq" + t + ".json")});
    ok({"partition", "--k", "3", "--in", path("seq" + t + ".json"), "--out", path("p" + t + ".json")});
    ok({"gen", "--type", "graph", "--n", "30", "--m", "90", "--seed", "2", "--out", path("g" + t + ".json")});
    ok({"paginate", "--epsilon", "0.5", "--in", path("g" + t + ".json"), "--out", path("pg" + t + ".json")});
  }
  for (const char* base : {"seq", "p", "g", "pg"}) {
    EXPECT_EQ(slurp(path(std::string(base) + "a.json")), slurp(path(std::string(base) + "b.json"))) << base;
  }
}

TEST_F(Cli, ConstantFromEnvironment) {
  ok({"gen", "--type", "seq", "--n", "300", "--seed", "1", "--out", path("seq.json")});
  ::setenv("BLOCKSEQ_C", "not-a-number", 1);
  const int bad = run({"extract", "--k", "3", "--in", path("seq.json")}).exit_code;
  ::setenv("BLOCKSEQ_C", "2", 1);
  const int good = run({"extract", "--k", "3", "--in", path("seq.json")}).exit_code;
  const int flag = run({"extract", "--k", "3", "--c", "3", "--in", path("seq.json")}).exit_code;
  ::unsetenv("BLOCKSEQ_C");
  EXPECT_EQ(bad, cli::kExitIo);
  EXPECT_EQ(good, cli::kExitOk);
  EXPECT_EQ(flag, cli::kExitOk);
}
