#include <gtest/gtest.h>

#include "dyckpop/path.hpp"

using namespace dyckpop;

TEST(LatticePath, ParseAndPrint) {
  auto p = LatticePath::parse("UFD");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], Step::U);
  EXPECT_EQ(p[1], Step::F);
  EXPECT_EQ(p[2], Step::D);
  EXPECT_EQ(p.str(), "UFD");
  EXPECT_TRUE(LatticePath::parse("").empty());
}

TEST(LatticePath, RejectsUnknownLetter) {
  try {
    LatticePath::parse("UXD");
    FAIL();
  } catch (const PathSyntaxError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(LatticePath, LexOrderUsesUBeforeDBeforeF) {
  EXPECT_LT(LatticePath::parse("UD"), LatticePath::parse("UF"));
  EXPECT_LT(LatticePath::parse("DU"), LatticePath::parse("FU"));
  EXPECT_LT(LatticePath::parse("U"), LatticePath::parse("UD"));
}

TEST(MotzkinPath, Validation) {
  EXPECT_NO_THROW(MotzkinPath::parse("UFDF"));
  EXPECT_NO_THROW(MotzkinPath::parse(""));
  try {
    MotzkinPath::parse("UDDU");
    FAIL();
  } catch (const NotAMotzkinPath& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(MotzkinPath::parse("UUD"), NotAMotzkinPath);
}

TEST(DyckPath, Validation) {
  EXPECT_EQ(DyckPath::parse("UUDD").semilength(), 2u);
  EXPECT_THROW(DyckPath::parse("UFD"), NotADyckPath);
  EXPECT_THROW(DyckPath::parse("DU"), std::invalid_argument);
}

TEST(Height, Examples) {
  EXPECT_EQ(height(LatticePath::parse("")), 0);
  EXPECT_EQ(height(LatticePath::parse("UUDUDD")), 2);
  EXPECT_EQ(height(LatticePath::parse("UFFD")), 1);
}

TEST(FirstReturn, Decompose) {
  auto fr = first_return_decompose(DyckPath::parse("UUDDUD"));
  EXPECT_EQ(fr.alpha.str(), "UD");
  EXPECT_EQ(fr.beta.str(), "UD");
  EXPECT_THROW(first_return_decompose(DyckPath()), EmptyPath);
}

TEST(Constrained, Membership) {
  EXPECT_TRUE(is_constrained(DyckPath()));
  EXPECT_TRUE(is_constrained(DyckPath::parse("UDUD")));
  EXPECT_TRUE(is_constrained(DyckPath::parse("UUDDUD")));
  EXPECT_FALSE(is_constrained(DyckPath::parse("UDUUDD")));
  // Inner arch violates the rule even though the outer one is fine.
  EXPECT_FALSE(is_constrained(DyckPath::parse("UUDUUDDDUD")));
  EXPECT_TRUE(is_constrained(DyckPath::parse("UUUUDDDDUUUDDUDD")));
}

TEST(LastArch, Cases) {
  auto a = last_arch_decompose(DyckPath::parse("UUDDUD"));
  ASSERT_TRUE(std::holds_alternative<CaseAUD>(a));
  EXPECT_EQ(std::get<CaseAUD>(a).alpha.str(), "UUDD");

  auto b = last_arch_decompose(DyckPath::parse("UDUUDUDD"));
  ASSERT_TRUE(std::holds_alternative<CaseInner>(b));
  const auto& c = std::get<CaseInner>(b);
  EXPECT_EQ(c.alpha.str(), "UD");
  EXPECT_EQ(c.beta.str(), "");
  EXPECT_EQ(c.gamma.str(), "UD");
  EXPECT_THROW(last_arch_decompose(DyckPath()), EmptyPath);
}
