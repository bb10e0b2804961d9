#include "dyckpop/reference_data.hpp"

#include <sstream>

namespace dyckpop {

namespace {

// Calls fn(tokens, line_number) for each non-blank, non-comment line.
template <class Fn>
void for_each_record(std::istream& in, Fn fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    if (!tokens.empty()) fn(tokens, number);
  }
}

int to_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw MalformedDataFile(line, "expected an integer, got '" + s + "'");
  }
}

BigInt to_big(const std::string& s, std::size_t line) {
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0) throw MalformedDataFile(line, "bad integer '" + s + "'");
  return v;
}

PatternId to_pattern(const std::string& s, std::size_t line) {
  auto p = parse_pattern_id(s);
  if (!p) throw MalformedDataFile(line, "unknown pattern '" + s + "'");
  return *p;
}

}  // namespace

GoldenTables parse_golden_tables(std::istream& in) {
  GoldenTables g;
  for_each_record(in, [&](const std::vector<std::string>& t, std::size_t line) {
    if (t[0] == "cell" && t.size() == 6) {
      g.cells.push_back({t[1], to_pattern(t[2], line), to_int(t[3], line), to_int(t[4], line),
                         to_big(t[5], line)});
    } else if (t[0] == "total" && t.size() == 4) {
      g.totals.push_back({t[1], to_int(t[2], line), to_big(t[3], line)});
    } else {
      throw MalformedDataFile(line, "expected 'cell' or 'total' record");
    }
  });
  return g;
}

std::vector<PopularityRow> parse_popularity_rows(std::istream& in) {
  std::vector<PopularityRow> rows;
  for_each_record(in, [&](const std::vector<std::string>& t, std::size_t line) {
    if (t[0] != "row" || t.size() < 5) throw MalformedDataFile(line, "expected 'row' record");
    PopularityRow r{t[1], to_pattern(t[2], line), to_int(t[3], line), {}};
    for (std::size_t i = 4; i < t.size(); ++i) r.terms.push_back(to_big(t[i], line));
    rows.push_back(std::move(r));
  });
  return rows;
}

std::vector<SequenceRef> parse_sequences(std::istream& in) {
  std::vector<SequenceRef> seqs;
  for_each_record(in, [&](const std::vector<std::string>& t, std::size_t line) {
    if (t[0] != "seq" || t.size() < 6) throw MalformedDataFile(line, "expected 'seq' record");
    SequenceRef s;
    s.oeis_id = t[1];
    if (t[2] == "stated") s.status = SequenceStatus::stated;
    else if (t[2] == "conjectured") s.status = SequenceStatus::conjectured;
    else throw MalformedDataFile(line, "status must be stated or conjectured");
    s.offset = to_int(t[3], line);
    s.provenance = t[4];
    for (auto& c : s.provenance)
      if (c == '_') c = ' ';
    for (std::size_t i = 5; i < t.size(); ++i) s.terms.push_back(to_big(t[i], line));
    seqs.push_back(std::move(s));
  });
  return seqs;
}

const SequenceRef* ReferenceData::sequence(std::string_view id) const {
  for (const auto& s : sequences)
    if (s.oeis_id == id) return &s;
  return nullptr;
}

SequenceRef* ReferenceData::sequence(std::string_view id) {
  for (auto& s : sequences)
    if (s.oeis_id == id) return &s;
  return nullptr;
}

ReferenceData embedded_reference_data() {
  ReferenceData d;
  std::istringstream g(embedded::golden_tables);
  d.golden = parse_golden_tables(g);
  std::istringstream p(embedded::popularity_rows);
  d.popularity = parse_popularity_rows(p);
  std::istringstream s(embedded::sequences);
  d.sequences = parse_sequences(s);
  return d;
}

}  // namespace dyckpop
