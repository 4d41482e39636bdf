#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "polyiamond/cli.hpp"

namespace polyiamond {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "polyiamond");
  Outcome o;
  const cli::ParseOutcome parsed = cli::parse_args(static_cast<int>(args.size()), args.data());
  if (!parsed.config) {
    o.code = parsed.exit_code;
    o.err = parsed.message;
    return o;
  }
  std::ostringstream out, err;
  o.code = cli::run(*parsed.config, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

TEST(Cli, CountTable) {
  const Outcome o = invoke({"count", "--n-max", "3", "--representation", "triangle"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("3, 6\n"), std::string::npos);
  EXPECT_NE(o.out.find("1, 2\n"), std::string::npos);
}

TEST(Cli, CountHexJsonAndCsv) {
  Outcome o = invoke({"count", "--n-max", "4", "--representation", "hex", "--format", "json"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\"T\": [1, 3, 6, 14]"), std::string::npos);
  o = invoke({"count", "--n-max", "2", "--format", "csv"});
  EXPECT_EQ(o.out, "n,T\n1,2\n2,3\n");
}

TEST(Cli, MarkedDefaults) {
  const Outcome o = invoke({"marked", "--n-max", "4", "--format", "csv"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "n,G,H,K\n0,1,1,1\n1,1,1,1\n2,2,2,1\n3,5,4,2\n4,13,10,5\n");
}

TEST(Cli, RecurrenceHatAndHybrid) {
  Outcome o = invoke({"recurrence", "--n-max", "9", "--format", "json"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\"G_hat\": [1, 1, 2, 5, 13, 36, 104, 309, 939, 2905]"), std::string::npos);
  o = invoke({"recurrence", "--n-max", "11", "--cutoff", "10", "--format", "csv"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\n11,189252,"), std::string::npos);
}

TEST(Cli, HybridFromSeedFile) {
  const std::string path = ::testing::TempDir() + "seed.csv";
  {
    std::ofstream f(path);
    f << "n,T\n# triangle counts\n1,2\n2,3\n3,6\n4,14\n5,36\n6,94\n7,250\n8,675\n9,1838\n10,5053\n";
  }
  const Outcome o = invoke({"recurrence", "--seed", path.c_str(), "--n-max", "12", "--format", "csv"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\n12,709880,"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, BoundReport) {
  Outcome o = invoke({"bound", "--n-max", "10"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("lambda_upper < 3.6108: yes"), std::string::npos);
  o = invoke({"bound", "--n-max", "10", "--precision", "extended", "--format", "json"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\"lambda_upper\": 3.6107186132760393e+00"), std::string::npos);
  EXPECT_NE(o.out.find("newton+closed_form/extended"), std::string::npos);
}

TEST(Cli, VerifyPasses) {
  const Outcome o = invoke({"verify", "--n-max", "8"});
  EXPECT_EQ(o.code, 0) << o.out << o.err;
  EXPECT_NE(o.out.find("all checks passed"), std::string::npos);
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyFailsOnBrokenGeometry) {
  const std::string path = ::testing::TempDir() + "broken.json";
  {
    Geometry geo = default_geometry();
    geo.g.forbidden = {{0, -1}};  // only the South neighbor
    geo.g_prime.forbidden = {{1, 0}};
    geo.h.forbidden = {{-1, 0}};
    std::ofstream(path) << dump_geometry(geo);
  }
  const Outcome o = invoke({"verify", "--n-max", "8", "--geometry", path.c_str(), "--format", "json"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("\"passed\": false"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"count", "--n-max", "21"}).code, 3);
  EXPECT_EQ(invoke({"marked", "--n-max", "15"}).code, 3);
  EXPECT_EQ(invoke({"recurrence", "--n-max", "10001"}).code, 3);
  EXPECT_EQ(invoke({"count", "--n-max", "0"}).code, 2);
  EXPECT_EQ(invoke({"count", "--representation", "square"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"count", "--workers", "0"}).code, 2);
  EXPECT_EQ(invoke({"marked", "--geometry", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(invoke({"recurrence", "--cutoff", "1"}).code, 2);
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "counts.csv";
  const Outcome o = invoke({"count", "--n-max", "3", "--format", "csv", "--out", path.c_str()});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), "n,T\n1,2\n2,3\n3,6\n");
  std::remove(path.c_str());
}

}  // namespace
}  // namespace polyiamond
