#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyckpop/path.hpp"

namespace dyckpop {

class PatternSyntaxError : public std::invalid_argument {
 public:
  PatternSyntaxError(std::size_t position, const std::string& what)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EmptyPattern : public std::invalid_argument {
 public:
  EmptyPattern() : std::invalid_argument("empty pattern") {}
};

struct PatternAtom {
  Step step;
  bool repeated = false;  // X+ : one or more consecutive copies

  friend bool operator==(const PatternAtom&, const PatternAtom&) = default;
};

/// A consecutive-step pattern.
///
/// Text grammar:  pattern := '^'? atom+ '$'? | 'delta'
///                atom    := ('U' | 'D' | 'F') '+'?
/// '^' anchors the pattern at the start of the path, '$' at the end.
/// 'delta' is the indicator of the all-flat path F^n.
class Pattern {
 public:
  static Pattern parse(std::string_view text);
  static Pattern dirac();
  static Pattern word(std::string_view letters) { return parse(letters); }

  bool is_dirac() const { return dirac_; }
  bool start_anchored() const { return start_anchor_; }
  bool end_anchored() const { return end_anchor_; }
  const std::vector<PatternAtom>& atoms() const { return atoms_; }

  std::string str() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  bool dirac_ = false;
  bool start_anchor_ = false;
  bool end_anchor_ = false;
  std::vector<PatternAtom> atoms_;
};

/// Number of occurrences as consecutive steps, counted at every start
/// position (overlaps allowed). A repeated atom X+ contributes one occurrence
/// per expansion X^k, k >= 1. Anchored patterns report 0 or 1.
std::int64_t count_occurrences(const LatticePath& p, const Pattern& pat);

/// Which path family a statistic is evaluated on. Determines the value of N:
/// semilength on the Dyck side, length on the Motzkin side.
enum class Side { dyck, motzkin };

struct StatisticTerm {
  enum class Kind { pattern, one, size };
  Kind kind = Kind::one;
  Pattern pattern;

  friend bool operator==(const StatisticTerm&, const StatisticTerm&) = default;
};

/// Integer-linear combination of pattern statistics, the constant 1 and N.
///
/// Text grammar: terms joined by standalone '+' or '-' tokens (whitespace on
/// both sides), each term optionally prefixed by 'k*'. A term is a pattern,
/// 'delta', '1', an integer literal, or 'N'. Repetition '+' is never
/// surrounded by whitespace, so "UF+D + UD" reads as UF⁺D plus UD.
class Statistic {
 public:
  struct Summand {
    std::int64_t coefficient;
    StatisticTerm term;
  };

  Statistic() = default;
  explicit Statistic(std::vector<Summand> terms) : terms_(std::move(terms)) {}

  static Statistic parse(std::string_view text);
  static Statistic of(const Pattern& p) { return Statistic({{1, {StatisticTerm::Kind::pattern, p}}}); }

  const std::vector<Summand>& terms() const { return terms_; }
  std::string str() const;

 private:
  std::vector<Summand> terms_;
};

std::int64_t size_of(const LatticePath& p, Side side);

std::int64_t evaluate_statistic(const LatticePath& p, const Statistic& e, Side side);

/// A claimed identity dyck_side(P) = motzkin_side(phi(P)) for every
/// constrained P of semilength at least min_n.
struct TransportRule {
  std::string name;
  Statistic dyck_side;
  Statistic motzkin_side;
  std::size_t min_n = 0;
};

/// The fifteen registered rules: three for length-2 patterns, eight for
/// length-3 patterns, the U and D step counts, and the two start-anchored rules.
const std::vector<TransportRule>& transport_rules();

/// Looks a rule up by name. "DD" resolves to the UU rule with DD on the Dyck side.
std::optional<TransportRule> find_rule(std::string_view name);

struct TransportReport {
  std::string rule;
  std::size_t n = 0;
  std::size_t paths_checked = 0;
  bool passed = true;
  struct Counterexample {
    std::string dyck;
    std::string motzkin;
    std::int64_t lhs;
    std::int64_t rhs;
  };
  std::optional<Counterexample> counterexample;
};

/// Exhaustive check over the constrained family at semilength n.
TransportReport check_transport(const TransportRule& rule, std::size_t n);

}  // namespace dyckpop
