#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyckpop/enumeration.hpp"
#include "dyckpop/genfun.hpp"

namespace dyckpop {

class MalformedDataFile : public std::runtime_error {
 public:
  MalformedDataFile(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One transcribed distribution cell: c(n, k) for a pattern.
struct GoldenCell {
  std::string table;
  PatternId pattern;
  int n;
  int k;
  BigInt count;
};

/// Column sum of a distribution table (the number of paths of semilength n).
struct GoldenTotal {
  std::string table;
  int n;
  BigInt count;
};

struct GoldenTables {
  std::vector<GoldenCell> cells;
  std::vector<GoldenTotal> totals;
};

struct PopularityRow {
  std::string table;
  PatternId pattern;
  int first_n;
  std::vector<BigInt> terms;
};

enum class SequenceStatus { stated, conjectured };

/// A reference integer sequence. `offset` is the index of the first term.
struct SequenceRef {
  std::string oeis_id;
  int offset = 0;
  std::vector<BigInt> terms;
  SequenceStatus status = SequenceStatus::stated;
  std::string provenance;  // table label, or the b-file it was read from
};

struct ReferenceData {
  GoldenTables golden;
  std::vector<PopularityRow> popularity;
  std::vector<SequenceRef> sequences;

  const SequenceRef* sequence(std::string_view id) const;
  SequenceRef* sequence(std::string_view id);
};

GoldenTables parse_golden_tables(std::istream& in);
std::vector<PopularityRow> parse_popularity_rows(std::istream& in);
std::vector<SequenceRef> parse_sequences(std::istream& in);

/// The tables compiled into the library.
ReferenceData embedded_reference_data();

namespace embedded {
extern const char* const golden_tables;
extern const char* const popularity_rows;
extern const char* const sequences;
}  // namespace embedded

}  // namespace dyckpop
