#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "dyckpop/cli.hpp"
#include "json.hpp"

using namespace dyckpop;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "dyckpop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, GfCsv) {
  auto r = run({"gf", "--pattern", "UD", "--max-n", "5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("n,k,count\n", 0), 0u);
  EXPECT_NE(r.out.find("\n5,3,9\n"), std::string::npos);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, GfIsDeterministic) {
  auto a = run({"--format", "json", "gf", "--pattern", "DDU", "--method", "all", "--max-n", "9"});
  auto b = run({"--format", "json", "gf", "--pattern", "DDU", "--method", "all", "--max-n", "9"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["counts"][9][2], 444);
  EXPECT_EQ(j["methods"].size(), 3u);
}

TEST(Cli, GfTextTableCapsK) {
  auto r = run({"gf", "--pattern", "UUD", "--max-n", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  // Largest k with a nonzero count at n <= 6 is 3.
  EXPECT_NE(r.out.find("\n  3 "), std::string::npos);
  EXPECT_EQ(r.out.find("\n  4 "), std::string::npos);
  EXPECT_NE(r.out.find("sum"), std::string::npos);
}

TEST(Cli, Popularity) {
  auto r = run({"popularity", "--pattern", "DDD", "--max-n", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "0,0,1,4,14,46,145,448,1365,4124,12387,37060\n");
  auto csv = run({"popularity", "--pattern", "UD", "--max-n", "3", "--format", "csv"});
  EXPECT_EQ(csv.out, "n,value\n1,1\n2,3\n3,8\n");
}

TEST(Cli, MapForwardAndInverse) {
  auto r = run({"map", "--direction", "forward", "UUUDDD"});
  EXPECT_EQ(r.out, "UFD\n");
  auto s = run({"map", "--direction", "inverse"}, "UUDDFUFD\nFFF\n");
  EXPECT_EQ(s.out, "UUUUDDDDUUUDDUDD\nUDUDUD\n");
  auto bad = run({"map", "UDUUDD"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("error"), std::string::npos);
}

TEST(Cli, Enumerate) {
  auto r = run({"enumerate", "--family", "constrained", "--n", "3"});
  EXPECT_EQ(r.out, "UUUDDD\nUUDUDD\nUUDDUD\nUDUDUD\n");
  auto m = run({"--format", "json", "enumerate", "--family", "motzkin", "--n", "4"});
  EXPECT_EQ(nlohmann::json::parse(m.out)["count"], 9);
}

TEST(Cli, Count) {
  auto r = run({"count", "--pattern", "UF+D + UD", "UFFDUD", "UFDF"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "2\n1\n");
  auto d = run({"count", "--pattern", "UU + UD", "UUDDUD"});
  EXPECT_EQ(d.out, "3\n");
  EXPECT_EQ(run({"count", "--pattern", "U(", "UD"}).code, 2);
}

TEST(Cli, CheckTransport) {
  auto r = run({"check-transport", "--rule", "DUD", "--max-n", "6", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("DUD,6,51,PASS"), std::string::npos);
  EXPECT_EQ(run({"check-transport", "--all", "--max-n", "7"}).code, 0);
  EXPECT_EQ(run({"check-transport", "--rule", "XYZ"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"gf"}).code, 2);
  EXPECT_EQ(run({"gf", "--pattern", "UXU"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "gf", "--pattern", "UD"}).code, 2);
  EXPECT_EQ(run({"gf", "--pattern", "DUD", "--method", "fixed"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyReportsAndExitCode) {
  auto r = run({"verify", "--max-n", "8", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(r.code, j["ok"].get<bool>() ? 0 : 1);
  // Rows of the popularity tables reach n=12 regardless of --max-n, so the
  // printed UU/DD term at n=11 is still compared.
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, VerifyWithSeedTables) {
  auto path = std::filesystem::temp_directory_path() / ("dyckpop-seed-" + std::to_string(std::random_device{}()));
  {
    std::ofstream out(path);
    out << "cell Mine UD 5 3 9\n";
  }
  auto r = run({"--seed-tables", path.string(), "verify", "--max-n", "6"});
  EXPECT_NE(r.out.find("[PASS] golden Mine"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(run({"--seed-tables", "/nonexistent/file", "verify"}).code, 2);
}

TEST(Cli, OeisFetchOffline) {
  auto dir = std::filesystem::temp_directory_path() / ("dyckpop-cli-" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  auto r = run({"--offline", "--oeis-cache", dir.string(), "oeis-fetch", "A025566"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("embedded"), std::string::npos);
  EXPECT_NE(r.out.find("1,3,8,22,61"), std::string::npos);
  {
    std::ofstream out(dir / "A025566.txt");
    out << "0 1\n1 1\n2 3\n";
  }
  auto c = run({"--offline", "--oeis-cache", dir.string(), "oeis-fetch", "A025566", "--format", "csv"});
  EXPECT_EQ(c.out, "n,value\n0,1\n1,1\n2,3\n");
  EXPECT_EQ(run({"--offline", "--oeis-cache", dir.string(), "oeis-fetch", "A000045"}).code, 1);
  EXPECT_EQ(run({"--offline", "oeis-fetch", "nope"}).code, 2);
  std::filesystem::remove_all(dir);
}
