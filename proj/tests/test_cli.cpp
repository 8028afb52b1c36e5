#include <gtest/gtest.h>

#include <sstream>

#include "ambi/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ambi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ambi::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

ambi::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--emit", "json"});
  auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return ambi::json::parse(r.out);
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"perm", "check", "--degree", "3", "--mu0", "(1 2 3)", "--mu1", "(1 2)"}).code, 0);
  EXPECT_EQ(run({"perm", "check", "--degree", "3", "--mu0", "(1 2)", "--mu1", "(1 2 3)"}).code, 1);
  EXPECT_EQ(run({"--catalog", "/nonexistent.json", "catalog", "show", "--row", "1"}).code, 1);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"budget", "table", "--part", "middle"}).code, 2);
  EXPECT_EQ(run({"fibers", "monodromy", "--matrix", "1,2,3"}).code, 2);
  EXPECT_EQ(run({"cong", "row", "--row", "9"}).code, 2);
  EXPECT_EQ(run({"--emit", "yaml", "budget", "dims"}).code, 2);
}

TEST(Cli, JsonIsByteStable) {
  std::vector<std::string> args = {"--emit", "json", "catalog", "verify", "--row", "38"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto j = ambi::json::parse(a.out);
  EXPECT_EQ(j["schema"], "ambi-report/1");
  EXPECT_FALSE(j.contains("seconds"));
  auto t = run({"--emit", "json", "--timing", "budget", "dims"});
  EXPECT_TRUE(ambi::json::parse(t.out).contains("seconds"));
}

TEST(Cli, BudgetTables) {
  EXPECT_EQ(run_json({"budget", "table", "--part", "low"})["tables"][0]["rows"].size(), 23u);
  EXPECT_EQ(run_json({"budget", "table", "--part", "high"})["tables"][0]["rows"].size(), 10u);
}

TEST(Cli, PermEnumerateDegreeNine) {
  auto j = run_json({"perm", "enumerate", "--degree", "9", "--e2", "1", "--e3", "0", "--genus", "0"});
  EXPECT_EQ(j["tables"][0]["rows"].size(), 4u);
}

TEST(Cli, LatticeCommands) {
  auto img = run({"lat", "image", "--row", "38"});
  EXPECT_EQ(img.code, 0) << img.err;
  auto g = run({"lat", "check-genus", "--row", "47"});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("384"), std::string::npos);
  auto iso = run_json({"lat", "isotropic", "--root", "8A1", "--type", "2", "--admissible"});
  EXPECT_TRUE(iso["ok"]);
}

TEST(Cli, OutputFormats) {
  for (const char* fmt : {"text", "md", "csv", "json"}) {
    auto r = run({"--emit", fmt, "ratfun", "weierstrass"});
    EXPECT_EQ(r.code, 0) << fmt;
    EXPECT_NE(r.out.find("11664"), std::string::npos) << fmt;
  }
  auto md = run({"--emit", "md", "budget", "table", "--part", "high"});
  EXPECT_NE(md.out.find("|---"), std::string::npos);
}

TEST(Cli, CatalogVerifyAndRederive) {
  auto v = run_json({"catalog", "verify", "--row", "6"});
  EXPECT_TRUE(v["ok"]);
  auto d = run_json({"catalog", "rederive", "--index", "12"});
  EXPECT_TRUE(d["ok"]);
}
