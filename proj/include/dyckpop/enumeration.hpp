#pragma once

#include <cstddef>
#include <iterator>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "dyckpop/path.hpp"

namespace dyckpop {

using BigInt = mpz_class;

namespace family {

// Each family is a prefix automaton: allows() must be exact, i.e. it accepts
// a step only if the extended prefix has at least one completion. The
// lexicographic stream relies on that to complete greedily without backtracking.

struct Motzkin {
  using path_type = MotzkinPath;
  static constexpr Step alphabet[] = {Step::U, Step::D, Step::F};
  struct State {
    int height = 0;
  };
  static std::size_t length(std::size_t n) { return n; }
  static bool allows(const State& s, Step step, std::size_t remaining_after);
  static State advance(State s, Step step);
};

struct Dyck {
  using path_type = DyckPath;
  static constexpr Step alphabet[] = {Step::U, Step::D};
  struct State {
    int height = 0;
  };
  static std::size_t length(std::size_t n) { return 2 * n; }
  static bool allows(const State& s, Step step, std::size_t remaining_after);
  static State advance(State s, Step step);
};

// A constrained path is a sequence of arches U alpha D with non-increasing
// heights, each alpha again constrained. The state tracks the open arches
// and the height bound for the next arch opened at the current level.
struct Constrained {
  using path_type = DyckPath;
  static constexpr Step alphabet[] = {Step::U, Step::D};
  static constexpr int unbounded = std::numeric_limits<int>::max();
  struct Arch {
    int bound;  // absolute height this arch may reach
    int peak;   // absolute height reached so far
  };
  struct State {
    int height = 0;
    int next_bound = unbounded;
    std::vector<Arch> open;
  };
  static std::size_t length(std::size_t n) { return 2 * n; }
  static bool allows(const State& s, Step step, std::size_t remaining_after);
  static State advance(State s, Step step);
};

}  // namespace family

/// Restartable, lexicographically ordered (U < D < F) stream over one family
/// at one size. Memory is O(length); nothing is materialised.
template <class Family>
class PathStream {
 public:
  using path_type = typename Family::path_type;

  explicit PathStream(std::size_t n) : n_(n) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = path_type;
    using difference_type = std::ptrdiff_t;
    using pointer = const path_type*;
    using reference = const path_type&;

    iterator() = default;

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      if (!next()) current_.reset();
      else materialise();
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) {
      return a.current_.has_value() == b.current_.has_value() &&
             (!a.current_ || a.steps_ == b.steps_);
    }

   private:
    friend class PathStream;

    explicit iterator(std::size_t length) : length_(length) {
      states_.reserve(length + 1);
      states_.emplace_back();
      steps_.reserve(length);
      if (complete()) materialise();
    }

    // Extends steps_ to full length greedily with the smallest allowed step.
    bool complete() {
      while (steps_.size() < length_) {
        if (!push_first_from(0)) return false;
      }
      return true;
    }

    bool push_first_from(std::size_t alphabet_index) {
      const auto& s = states_.back();
      std::size_t remaining_after = length_ - steps_.size() - 1;
      constexpr std::size_t k = std::size(Family::alphabet);
      for (std::size_t i = alphabet_index; i < k; ++i) {
        Step step = Family::alphabet[i];
        if (Family::allows(s, step, remaining_after)) {
          states_.push_back(Family::advance(s, step));
          steps_.push_back(step);
          return true;
        }
      }
      return false;
    }

    static std::size_t index_of(Step step) {
      constexpr std::size_t k = std::size(Family::alphabet);
      for (std::size_t i = 0; i < k; ++i)
        if (Family::alphabet[i] == step) return i;
      return k;
    }

    bool next() {
      while (!steps_.empty()) {
        Step last = steps_.back();
        steps_.pop_back();
        states_.pop_back();
        if (push_first_from(index_of(last) + 1)) {
          if (complete()) return true;
          // Exact automata never reach this point.
          return false;
        }
      }
      return false;
    }

    void materialise() {
      current_.emplace(LatticePath(steps_), MotzkinPath::Unchecked{});
    }

    std::size_t length_ = 0;
    std::vector<Step> steps_;
    std::vector<typename Family::State> states_;
    std::optional<path_type> current_;
  };

  iterator begin() const { return iterator(Family::length(n_)); }
  iterator end() const { return iterator(); }

 private:
  std::size_t n_;
};

using MotzkinStream = PathStream<family::Motzkin>;
using DyckStream = PathStream<family::Dyck>;
using ConstrainedStream = PathStream<family::Constrained>;

/// All paths of M_n (length n).
inline MotzkinStream enumerate_motzkin(std::size_t n) { return MotzkinStream(n); }
/// All paths of D_n (semilength n).
inline DyckStream enumerate_dyck(std::size_t n) { return DyckStream(n); }
/// All paths of the height-constrained family of semilength n.
inline ConstrainedStream enumerate_constrained(std::size_t n) { return ConstrainedStream(n); }

template <class Stream>
std::vector<typename Stream::path_type> collect(const Stream& s) {
  return {s.begin(), s.end()};
}

/// Memoised counts of constrained paths by semilength and exact height.
/// Not thread-safe; use one instance per thread.
class ConstrainedCounter {
 public:
  BigInt by_height(int n, int h);
  BigInt total(int n);

 private:
  // Paths of semilength n with height at most h.
  const BigInt& at_most(int n, int h);
  std::map<std::pair<int, int>, BigInt> memo_;
};

BigInt count_constrained_by_height(int n, int h);

}  // namespace dyckpop
