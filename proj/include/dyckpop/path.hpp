#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dyckpop {

// Canonical order U < D < F is used for every lexicographic stream.
enum class Step : std::uint8_t { U = 0, D = 1, F = 2 };

constexpr int step_height(Step s) {
  switch (s) {
    case Step::U: return 1;
    case Step::D: return -1;
    case Step::F: return 0;
  }
  return 0;
}

constexpr char to_char(Step s) {
  switch (s) {
    case Step::U: return 'U';
    case Step::D: return 'D';
    case Step::F: return 'F';
  }
  return '?';
}

class PathSyntaxError : public std::invalid_argument {
 public:
  PathSyntaxError(std::size_t position, char found);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotAMotzkinPath : public std::invalid_argument {
 public:
  NotAMotzkinPath(std::size_t position, const std::string& what);
  // Index of the first offending step, or the path length when only the
  // final height is wrong.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotADyckPath : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyPath : public std::invalid_argument {
 public:
  EmptyPath() : std::invalid_argument("operation requires a nonempty path") {}
};

/// A finite word over {U, D, F}. No validity is imposed at this level.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses the bare letter form ("UUDD"); the empty string is the empty path.
  static LatticePath parse(std::string_view text);

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  std::span<const Step> steps() const { return steps_; }

  std::string str() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend std::strong_ordering operator<=>(const LatticePath& a, const LatticePath& b) {
    return a.steps_ <=> b.steps_;
  }

 protected:
  std::vector<Step> steps_;
};

LatticePath concat(std::initializer_list<std::span<const Step>> parts);

/// A lattice path that stays weakly above the axis and ends on it.
class MotzkinPath : public LatticePath {
 public:
  MotzkinPath() = default;
  /// Throws NotAMotzkinPath at the first violation.
  explicit MotzkinPath(LatticePath p);

  static MotzkinPath parse(std::string_view text) { return MotzkinPath(LatticePath::parse(text)); }

  struct Unchecked {};
  MotzkinPath(LatticePath p, Unchecked) : LatticePath(std::move(p)) {}
};

/// A Motzkin path without flat steps. semilength() is the usual n.
class DyckPath : public MotzkinPath {
 public:
  DyckPath() = default;
  explicit DyckPath(LatticePath p);

  static DyckPath parse(std::string_view text) { return DyckPath(LatticePath::parse(text)); }

  DyckPath(LatticePath p, Unchecked u) : MotzkinPath(std::move(p), u) {}

  std::size_t semilength() const { return size() / 2; }
};

MotzkinPath validate_motzkin(const LatticePath& p);
DyckPath validate_dyck(const LatticePath& p);

/// Maximum prefix sum; 0 for the empty path.
int height(std::span<const Step> steps);
inline int height(const LatticePath& p) { return height(p.steps()); }

struct FirstReturn {
  DyckPath alpha;
  DyckPath beta;
};

/// Splits p = U alpha D beta at the first return to level 0.
FirstReturn first_return_decompose(const DyckPath& p);

/// Membership in the height-constrained family: every first-return
/// factorisation U alpha D beta satisfies h(U alpha D) >= h(beta), recursively.
bool is_constrained(const DyckPath& p);
bool is_constrained(std::span<const Step> dyck_steps);

/// p = alpha U D.
struct CaseAUD {
  DyckPath alpha;
};

/// p = alpha U U beta D gamma D, where U beta D gamma is the first-return
/// factorisation of the interior of the final arch.
struct CaseInner {
  DyckPath alpha;
  DyckPath beta;
  DyckPath gamma;
};

using LastArch = std::variant<CaseAUD, CaseInner>;

LastArch last_arch_decompose(const DyckPath& p);

}  // namespace dyckpop
