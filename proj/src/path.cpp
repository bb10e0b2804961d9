#include "dyckpop/path.hpp"

#include <algorithm>

namespace dyckpop {

PathSyntaxError::PathSyntaxError(std::size_t position, char found)
    : std::invalid_argument("invalid step '" + std::string(1, found) + "' at position " +
                            std::to_string(position)),
      position_(position) {}

NotAMotzkinPath::NotAMotzkinPath(std::size_t position, const std::string& what)
    : std::invalid_argument(what), position_(position) {}

LatticePath LatticePath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::U); break;
      case 'D': steps.push_back(Step::D); break;
      case 'F': steps.push_back(Step::F); break;
      default: throw PathSyntaxError(i, text[i]);
    }
  }
  return LatticePath(std::move(steps));
}

std::string LatticePath::str() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s.push_back(to_char(st));
  return s;
}

LatticePath concat(std::initializer_list<std::span<const Step>> parts) {
  std::vector<Step> out;
  std::size_t total = 0;
  for (auto part : parts) total += part.size();
  out.reserve(total);
  for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
  return LatticePath(std::move(out));
}

MotzkinPath::MotzkinPath(LatticePath p) : LatticePath(std::move(p)) {
  int h = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    h += step_height(steps_[i]);
    if (h < 0)
      throw NotAMotzkinPath(i, "path goes below the axis at position " + std::to_string(i));
  }
  if (h != 0)
    throw NotAMotzkinPath(steps_.size(), "path ends at height " + std::to_string(h));
}

DyckPath::DyckPath(LatticePath p) : MotzkinPath(std::move(p)) {
  auto it = std::find(steps_.begin(), steps_.end(), Step::F);
  if (it != steps_.end())
    throw NotADyckPath("flat step at position " + std::to_string(it - steps_.begin()));
}

MotzkinPath validate_motzkin(const LatticePath& p) { return MotzkinPath(p); }
DyckPath validate_dyck(const LatticePath& p) { return DyckPath(p); }

int height(std::span<const Step> steps) {
  int h = 0;
  int best = 0;
  for (Step s : steps) {
    h += step_height(s);
    best = std::max(best, h);
  }
  return best;
}

namespace {

// Index of the D closing the U at `open`.
std::size_t matching_down(std::span<const Step> s, std::size_t open) {
  int h = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    h += step_height(s[i]);
    if (h == 0) return i;
  }
  return s.size();
}

DyckPath sub(std::span<const Step> s, std::size_t from, std::size_t to) {
  return DyckPath(LatticePath(std::vector<Step>(s.begin() + from, s.begin() + to)),
                  MotzkinPath::Unchecked{});
}

// Height of the constrained path, or -1 when some factorisation fails.
int constrained_height(std::span<const Step> s) {
  if (s.empty()) return 0;
  std::size_t ret = matching_down(s, 0);
  int ha = constrained_height(s.subspan(1, ret - 1));
  if (ha < 0) return -1;
  int hb = constrained_height(s.subspan(ret + 1));
  if (hb < 0) return -1;
  if (ha + 1 < hb) return -1;
  return ha + 1;
}

}  // namespace

FirstReturn first_return_decompose(const DyckPath& p) {
  if (p.empty()) throw EmptyPath();
  auto s = p.steps();
  std::size_t ret = matching_down(s, 0);
  return {sub(s, 1, ret), sub(s, ret + 1, s.size())};
}

bool is_constrained(std::span<const Step> dyck_steps) {
  return constrained_height(dyck_steps) >= 0;
}

bool is_constrained(const DyckPath& p) { return is_constrained(p.steps()); }

LastArch last_arch_decompose(const DyckPath& p) {
  if (p.empty()) throw EmptyPath();
  auto s = p.steps();
  // Right-to-left balance scan for the U matching the final D.
  int balance = 0;
  std::size_t open = s.size();
  for (std::size_t i = s.size(); i-- > 0;) {
    balance += step_height(s[i]);
    if (balance == 0) {
      open = i;
      break;
    }
  }
  std::size_t last = s.size() - 1;
  if (open + 1 == last) return CaseAUD{sub(s, 0, open)};
  // Interior s[open+1 .. last) = U beta D gamma.
  std::size_t ret = matching_down(s, open + 1);
  return CaseInner{sub(s, 0, open), sub(s, open + 2, ret), sub(s, ret + 1, last)};
}

}  // namespace dyckpop
