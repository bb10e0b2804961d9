#include "dyckpop/enumeration.hpp"

#include <algorithm>

namespace dyckpop {
namespace family {

bool Motzkin::allows(const State& s, Step step, std::size_t remaining_after) {
  const auto rem = static_cast<int>(remaining_after);
  switch (step) {
    case Step::U: return s.height + 1 <= rem;
    case Step::D: return s.height >= 1;
    case Step::F: return s.height <= rem;
  }
  return false;
}

Motzkin::State Motzkin::advance(State s, Step step) {
  s.height += step_height(step);
  return s;
}

bool Dyck::allows(const State& s, Step step, std::size_t remaining_after) {
  const auto rem = static_cast<int>(remaining_after);
  switch (step) {
    case Step::U: return s.height + 1 <= rem;
    case Step::D: return s.height >= 1;
    case Step::F: return false;
  }
  return false;
}

Dyck::State Dyck::advance(State s, Step step) {
  s.height += step_height(step);
  return s;
}

// Any prefix accepted here can be completed: close every open arch, then pad
// with UD arches at level 0, which never exceed the previous arch's height.
bool Constrained::allows(const State& s, Step step, std::size_t remaining_after) {
  const auto rem = static_cast<int>(remaining_after);
  switch (step) {
    case Step::U: return s.height + 1 <= s.next_bound && s.height + 1 <= rem;
    case Step::D: return s.height >= 1;
    case Step::F: return false;
  }
  return false;
}

Constrained::State Constrained::advance(State s, Step step) {
  if (step == Step::U) {
    s.open.push_back(Arch{s.next_bound, s.height + 1});
    ++s.height;
    // The first arch nested inside inherits the enclosing bound.
    s.next_bound = s.open.back().bound;
  } else {
    Arch closed = s.open.back();
    s.open.pop_back();
    --s.height;
    s.next_bound = closed.peak;
    if (!s.open.empty()) s.open.back().peak = std::max(s.open.back().peak, closed.peak);
  }
  return s;
}

}  // namespace family

const BigInt& ConstrainedCounter::at_most(int n, int h) {
  static const BigInt zero = 0;
  static const BigInt one = 1;
  if (h < 0) return zero;
  if (n == 0) return one;
  h = std::min(h, n);
  auto key = std::make_pair(n, h);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  BigInt sum = 0;
  // First arch has semilength m and exact height j; the rest is bounded by j.
  for (int m = 1; m <= n; ++m) {
    for (int j = 1; j <= std::min(h, m); ++j) {
      BigInt arches = at_most(m - 1, j - 1) - at_most(m - 1, j - 2);
      if (arches == 0) continue;
      sum += arches * at_most(n - m, j);
    }
  }
  return memo_.emplace(key, std::move(sum)).first->second;
}

BigInt ConstrainedCounter::by_height(int n, int h) {
  if (n < 0 || h < 0) return 0;
  return at_most(n, h) - at_most(n, h - 1);
}

BigInt ConstrainedCounter::total(int n) {
  if (n < 0) return 0;
  return at_most(n, n);
}

BigInt count_constrained_by_height(int n, int h) {
  ConstrainedCounter counter;
  return counter.by_height(n, h);
}

}  // namespace dyckpop
