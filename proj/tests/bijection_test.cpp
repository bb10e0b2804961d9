#include <gtest/gtest.h>

#include <set>

#include "dyckpop/bijection.hpp"
#include "dyckpop/enumeration.hpp"

using namespace dyckpop;

TEST(Phi, MappingExamples) {
  EXPECT_EQ(phi(DyckPath::parse("UDUDUD")).str(), "FFF");
  EXPECT_EQ(phi(DyckPath::parse("UUDDUD")).str(), "UDF");
  EXPECT_EQ(phi(DyckPath::parse("UUDUDD")).str(), "FUD");
  EXPECT_EQ(phi(DyckPath::parse("UUUDDD")).str(), "UFD");
  EXPECT_EQ(phi(DyckPath::parse("UUUUDDDDUUUDDUDD")).str(), "UUDDFUFD");
}

TEST(Phi, EmptyAndSingle) {
  EXPECT_EQ(phi(DyckPath()).str(), "");
  EXPECT_EQ(phi(DyckPath::parse("UD")).str(), "F");
  EXPECT_EQ(phi(DyckPath::parse("UUDD")).str(), "UD");
}

TEST(Phi, RejectsNonMembers) { EXPECT_THROW(phi(DyckPath::parse("UDUUDD")), NotConstrained); }

TEST(PhiInverse, Examples) {
  EXPECT_EQ(phi_inverse(MotzkinPath::parse("UUDDFUFD")).str(), "UUUUDDDDUUUDDUDD");
  EXPECT_EQ(phi_inverse(MotzkinPath()).str(), "");
}

TEST(PhiInverse, BoundIsEnforced) {
  PhiInverter inv(4);
  EXPECT_NO_THROW(inv(MotzkinPath::parse("FFFF")));
  EXPECT_THROW(inv(MotzkinPath::parse("FFFFF")), LengthBeyondTableBound);
}

TEST(Phi, ImagesAreDistinctMotzkinPathsOfLengthN) {
  for (unsigned n = 0; n <= 10; ++n) {
    std::set<std::string> images;
    std::size_t count = 0;
    for (const auto& p : enumerate_constrained(n)) {
      auto m = phi(p);
      EXPECT_EQ(m.size(), n);
      images.insert(m.str());
      ++count;
    }
    EXPECT_EQ(images.size(), count);
    std::set<std::string> all;
    for (const auto& m : enumerate_motzkin(n)) all.insert(m.str());
    EXPECT_EQ(images, all);
  }
}

TEST(Phi, RoundTrip) {
  for (unsigned n = 0; n <= 9; ++n) {
    for (const auto& p : enumerate_constrained(n)) ASSERT_EQ(phi_inverse(phi(p)), p);
    for (const auto& m : enumerate_motzkin(n)) ASSERT_EQ(phi(phi_inverse(m)), m);
  }
}

TEST(Bijectivity, ReportAtTwelve) {
  auto r = check_bijectivity(12);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.domain, 15511u);
  EXPECT_EQ(r.image, 15511u);
  EXPECT_EQ(r.motzkin, 15511u);
}
