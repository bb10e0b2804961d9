#include <gtest/gtest.h>

#include <sstream>

#include "dyckpop/genfun.hpp"
#include "dyckpop/verifier.hpp"
#include "json.hpp"

using namespace dyckpop;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

const VerificationReport& full_report() {
  static const VerificationReport r = run_full_verification(12);
  return r;
}

}  // namespace

TEST(CompareSequence, FullMatchAtNaturalAlignment) {
  SequenceRef ref{"A025567", 1, big({0, 1, 4, 13, 40, 120, 356, 1050, 3088, 9069, 26620, 78133}),
                  SequenceStatus::stated, "row"};
  auto g = integer_coefficients(popularity_gf(PatternId::DU, 12));
  std::vector<BigInt> computed(g.begin() + 1, g.end());
  auto r = compare_sequence(1, computed, ref);
  EXPECT_EQ(r.status, CheckStatus::pass);
  auto m = align_sequence(1, computed, ref);
  EXPECT_EQ(m.shift, 0);
  EXPECT_EQ(m.prefix, 12u);
}

TEST(CompareSequence, FindsShiftedOffset) {
  // Same values, but the reference claims they start at index 0.
  SequenceRef ref{"A000001", 0, big({1, 3, 8, 22, 61, 171}), SequenceStatus::stated, "x"};
  auto m = align_sequence(1, big({1, 3, 8, 22, 61, 171}), ref);
  EXPECT_EQ(m.shift, -1);
  EXPECT_TRUE(m.full());
  EXPECT_EQ(compare_sequence(1, big({1, 3, 8, 22, 61, 171}), ref).status, CheckStatus::pass);
}

TEST(CompareSequence, ConjecturesNeverFail) {
  SequenceRef ref{"A000002", 1, big({1, 2, 3, 4}), SequenceStatus::conjectured, "x"};
  EXPECT_EQ(compare_sequence(1, big({1, 2, 3, 4}), ref).status, CheckStatus::conjecture_consistent);
  auto broken = compare_sequence(1, big({1, 2, 9, 4}), ref);
  EXPECT_EQ(broken.status, CheckStatus::conjecture_broken);
  EXPECT_TRUE(broken.counterexample.has_value());
  SequenceRef stated = ref;
  stated.status = SequenceStatus::stated;
  EXPECT_EQ(compare_sequence(1, big({1, 2, 9, 4}), stated).status, CheckStatus::fail);
}

TEST(FullVerification, StructuralChecksPass) {
  const auto& r = full_report();
  for (const char* name : {"cardinality", "bijection", "transport UD", "transport DDD", "transport DD",
                           "system a.2", "system b.3", "motzkin UF=UF+D+UF+U", "motzkin F split",
                           "gf agreement DDD", "gf DD alias", "gf DU from UD", "golden Table1",
                           "golden Table5d", "golden totals", "popularity relations",
                           "popularity closed form UU", "UUD in DUU-avoiders", "UUD twice"}) {
    const auto* c = r.find(name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_EQ(c->status, CheckStatus::pass) << name << ": " << c->details;
  }
  EXPECT_NE(r.find("cardinality")->details.find("1,2,4,9,21,51,127,323,835,2188,5798,15511"), std::string::npos);
}

TEST(FullVerification, ConjecturesAndInformationalItems) {
  const auto& r = full_report();
  EXPECT_EQ(r.find("oeis A304011")->status, CheckStatus::conjecture_consistent);
  EXPECT_EQ(r.find("oeis A007562")->status, CheckStatus::conjecture_consistent);
  const auto* duu = r.find("DUU avoiders");
  ASSERT_NE(duu, nullptr);
  EXPECT_EQ(duu->status, CheckStatus::info);
  EXPECT_NE(duu->details.find("powers of two"), std::string::npos);
}

TEST(FullVerification, FlagsThePrintedUuPopularityTerm) {
  // The printed row has 31260 at n=11 where UU + UD = n M_n forces 31360.
  const auto& r = full_report();
  std::vector<std::string> failed;
  for (const auto& c : r.checks)
    if (c.status == CheckStatus::fail) failed.push_back(c.check);
  EXPECT_EQ(failed, (std::vector<std::string>{"popularity Table2 UU", "popularity Table2 DD"}));
  EXPECT_NE(r.find("popularity Table2 UU")->counterexample->find("n=11"), std::string::npos);
  EXPECT_FALSE(r.ok());
}

TEST(FullVerification, JsonRecords) {
  std::ostringstream out;
  full_report().write_json(out);
  auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["max_n"], 12);
  ASSERT_TRUE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("check"));
    EXPECT_TRUE(c.contains("status"));
    EXPECT_TRUE(c.contains("details"));
  }
}

TEST(FullVerification, ReplacedGoldenDataIsUsed) {
  auto data = embedded_reference_data();
  data.golden.cells = {{"Custom", PatternId::UD, 5, 3, BigInt(10)}};
  auto r = run_full_verification(6, data);
  ASSERT_NE(r.find("golden Custom"), nullptr);
  EXPECT_EQ(r.find("golden Custom")->status, CheckStatus::fail);
  EXPECT_THROW(run_full_verification(brute_force_bound + 1), std::out_of_range);
}
