#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dyckpop/enumeration.hpp"
#include "dyckpop/reference_data.hpp"

namespace dyckpop {

enum class CheckStatus { pass, fail, conjecture_consistent, conjecture_broken, info };

std::string_view name(CheckStatus s);

struct CheckResult {
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::string details;
  std::optional<std::string> counterexample;
};

struct VerificationReport {
  int max_n = 0;
  std::vector<CheckResult> checks;

  /// True iff no check has status fail. Conjecture outcomes never fail.
  bool ok() const;
  std::size_t count(CheckStatus s) const;
  const CheckResult* find(std::string_view check) const;

  void write_text(std::ostream& out) const;
  void write_json(std::ostream& out) const;
};

/// Result of lining a computed sequence up against a reference.
struct SequenceMatch {
  int shift = 0;             // reference index = computed index + shift
  std::size_t overlap = 0;   // terms present on both sides under that shift
  std::size_t prefix = 0;    // leading overlapping terms that agree
  bool full() const { return overlap > 0 && prefix == overlap; }
};

/// Longest agreeing prefix over shifts in [-2, 2]; ties prefer the natural
/// alignment (shift 0), then the smaller |shift|.
SequenceMatch align_sequence(int first_index, const std::vector<BigInt>& computed,
                             const SequenceRef& ref);

/// pass/fail for stated references, conjecture_consistent/broken otherwise.
CheckResult compare_sequence(int first_index, const std::vector<BigInt>& computed,
                             const SequenceRef& ref);

/// The computed counterpart of a known reference sequence, indexed from
/// `first_index`; nullopt for identifiers the library does not compute.
struct ComputedSequence {
  int first_index;
  std::vector<BigInt> terms;
};
std::optional<ComputedSequence> computed_sequence(const std::string& oeis_id, int max_n);

/// Runs every check in a fixed order; failures are report contents.
VerificationReport run_full_verification(int max_n, const ReferenceData& data);
VerificationReport run_full_verification(int max_n);

}  // namespace dyckpop
