#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

namespace minroots {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, Examples) {
  EXPECT_EQ(run({"build", test::data_path("tri343.cox")}).out, "N=7\n");
  EXPECT_EQ(run({"reduce", test::data_path("a2.cox"), "2 1 2"}).out, "1 2 1\n");
  EXPECT_EQ(run({"mult", test::data_path("a2.cox"), "1", "2 1"}).out, "1 2 1\n");
  EXPECT_EQ(run({"growth", test::data_path("i2_inf.cox"), "--max-len", "4"}).out, "1 2 2 2 2\n");
}

TEST(Cli, Stats) {
  const auto r = run({"stats", test::data_path("h3.cox")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("N=15\nmax_depth=7\ndepth 1: 3\n", 0), 0u);
}

TEST(Cli, Verify) {
  const auto r = run({"verify", test::data_path("tri343.cox"), "--ball", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("CHECK builders-agree PASS N=7"), std::string::npos);
}

TEST(Cli, AlgorithmsWriteIdenticalTables) {
  const auto dir = std::filesystem::temp_directory_path();
  for (const char* name : {"tri343.cox", "h3.cox", "affine_b2.cox", "i2_inf.cox", "f4.cox"}) {
    const std::string a = (dir / "minroots_naive.tab").string(), b = (dir / "minroots_brink.tab").string();
    ASSERT_EQ(run({"build", test::data_path(name), "--algo", "naive", "--out", a}).code, 0);
    ASSERT_EQ(run({"build", test::data_path(name), "--algo", "brink", "--out", b}).code, 0);
    EXPECT_EQ(slurp(a), slurp(b)) << name;
    EXPECT_FALSE(slurp(a).empty());
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"build", test::data_path("a2.cox"), "--algo", "fast"}).code, cli::kUsage);
  EXPECT_EQ(run({"reduce", test::data_path("a2.cox"), "3"}).code, cli::kUsage);
  EXPECT_EQ(run({"build", test::data_path("bad_asym.cox")}).code, cli::kInvalidMatrix);
  EXPECT_EQ(run({"build", test::data_path("missing.cox")}).code, cli::kInvalidMatrix);
  EXPECT_EQ(run({"--max-roots", "5", "build", test::data_path("h3.cox")}).code, cli::kResource);
  EXPECT_EQ(run({"--max-ball", "50", "growth", test::data_path("affine_a2.cox"), "--max-len", "20"}).code,
            cli::kResource);
  EXPECT_EQ(run({"--max-ball", "50", "verify", test::data_path("affine_a2.cox")}).code, cli::kResource);
}

}  // namespace
}  // namespace minroots
