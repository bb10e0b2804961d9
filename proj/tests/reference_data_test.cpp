#include <gtest/gtest.h>

#include <sstream>

#include "dyckpop/reference_data.hpp"

using namespace dyckpop;

TEST(ReferenceData, EmbeddedTablesParse) {
  auto d = embedded_reference_data();
  EXPECT_GT(d.golden.cells.size(), 250u);
  EXPECT_EQ(d.popularity.size(), 12u);
  for (const auto& r : d.popularity) EXPECT_EQ(r.terms.size(), 12u) << r.table << ' ' << name(r.pattern);
  ASSERT_NE(d.sequence("A304011"), nullptr);
  EXPECT_EQ(d.sequence("A304011")->status, SequenceStatus::conjectured);
  EXPECT_EQ(d.sequence("A025566")->status, SequenceStatus::stated);
  EXPECT_EQ(d.sequence("A999999"), nullptr);
}

TEST(ReferenceData, NamedCells) {
  auto d = embedded_reference_data();
  auto cell = [&](PatternId p, int n, int k) -> std::optional<BigInt> {
    for (const auto& c : d.golden.cells)
      if (c.pattern == p && c.n == n && c.k == k) return c.count;
    return std::nullopt;
  };
  EXPECT_EQ(cell(PatternId::UD, 7, 4), BigInt(44));
  EXPECT_EQ(cell(PatternId::UD, 6, 3), BigInt(19));
  EXPECT_EQ(cell(PatternId::UDD, 8, 4), BigInt(9));
  EXPECT_EQ(cell(PatternId::UUU, 9, 3), BigInt(215));
  EXPECT_EQ(cell(PatternId::DUD, 9, 2), BigInt(199));
  EXPECT_EQ(cell(PatternId::UUD, 9, 2), BigInt(432));
  EXPECT_EQ(cell(PatternId::DUU, 9, 1), BigInt(432));
  EXPECT_EQ(cell(PatternId::DDD, 9, 1), BigInt(251));
  EXPECT_EQ(cell(PatternId::UDU, 9, 2), BigInt(200));
  EXPECT_EQ(cell(PatternId::DDU, 9, 2), BigInt(444));
  EXPECT_EQ(cell(PatternId::UDD, 9, 3), BigInt(417));
}

TEST(ReferenceData, Parsers) {
  std::istringstream g("# comment\ncell T1 UD 3 1 1  # trailing\n\ntotal T1 3 4\n");
  auto t = parse_golden_tables(g);
  ASSERT_EQ(t.cells.size(), 1u);
  EXPECT_EQ(t.cells[0].count, 1);
  ASSERT_EQ(t.totals.size(), 1u);

  std::istringstream s("seq A000001 conjectured 2 some_label 1 2 3\n");
  auto seqs = parse_sequences(s);
  ASSERT_EQ(seqs.size(), 1u);
  EXPECT_EQ(seqs[0].offset, 2);
  EXPECT_EQ(seqs[0].provenance, "some label");
}

TEST(ReferenceData, MalformedLinesReportLineNumber) {
  std::istringstream g("cell T1 UD 3 1 1\ncell T1 XY 3 1 1\n");
  try {
    parse_golden_tables(g);
    FAIL();
  } catch (const MalformedDataFile& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream bad("row T2 UD one 1 2\n");
  EXPECT_THROW(parse_popularity_rows(bad), MalformedDataFile);
  std::istringstream status("seq A1 maybe 1 x 1\n");
  EXPECT_THROW(parse_sequences(status), MalformedDataFile);
}
