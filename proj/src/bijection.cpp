#include "dyckpop/bijection.hpp"

#include <unordered_set>

#include "dyckpop/enumeration.hpp"

namespace dyckpop {

namespace {

void phi_into(std::span<const Step> s, std::vector<Step>& out);

// Locates the U matching the final D by a right-to-left balance scan.
std::size_t last_arch_open(std::span<const Step> s) {
  int balance = 0;
  for (std::size_t i = s.size(); i-- > 0;) {
    balance += step_height(s[i]);
    if (balance == 0) return i;
  }
  return 0;
}

std::size_t first_return(std::span<const Step> s, std::size_t open) {
  int h = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    h += step_height(s[i]);
    if (h == 0) return i;
  }
  return s.size();
}

void phi_into(std::span<const Step> s, std::vector<Step>& out) {
  if (s.empty()) return;
  std::size_t last = s.size() - 1;
  std::size_t open = last_arch_open(s);
  if (open + 1 == last) {
    phi_into(s.first(open), out);
    out.push_back(Step::F);
    return;
  }
  std::size_t ret = first_return(s, open + 1);
  phi_into(s.first(open), out);                          // alpha
  phi_into(s.subspan(ret + 1, last - ret - 1), out);     // gamma
  out.push_back(Step::U);
  phi_into(s.subspan(open + 2, ret - open - 2), out);    // beta
  out.push_back(Step::D);
}

}  // namespace

MotzkinPath phi_unchecked(const DyckPath& p) {
  std::vector<Step> out;
  out.reserve(p.semilength());
  phi_into(p.steps(), out);
  return MotzkinPath(LatticePath(std::move(out)), MotzkinPath::Unchecked{});
}

MotzkinPath phi(const DyckPath& p) {
  if (!is_constrained(p)) throw NotConstrained(p.str());
  return phi_unchecked(p);
}

const PhiInverter::Table& PhiInverter::table(std::size_t n) const {
  std::lock_guard lock(mutex_);
  auto& slot = tables_[n];
  if (!slot) {
    auto t = std::make_unique<Table>();
    for (const auto& p : enumerate_constrained(n)) t->emplace(phi_unchecked(p).str(), p.str());
    slot = std::move(t);
  }
  return *slot;
}

DyckPath PhiInverter::operator()(const MotzkinPath& m) const {
  if (m.size() > bound_) throw LengthBeyondTableBound(m.size(), bound_);
  const auto& t = table(m.size());
  auto it = t.find(m.str());
  // Every Motzkin path has a preimage; a miss means the table is wrong.
  if (it == t.end()) throw std::logic_error("no preimage for " + m.str());
  return DyckPath(LatticePath::parse(it->second), MotzkinPath::Unchecked{});
}

DyckPath phi_inverse(const MotzkinPath& m) {
  static const PhiInverter inverter;
  return inverter(m);
}

BijectivityReport check_bijectivity(std::size_t n, const PhiInverter& inverter) {
  BijectivityReport r;
  r.n = n;
  auto note = [&r](std::string s) {
    if (r.examples.size() < 5) r.examples.push_back(std::move(s));
  };
  std::unordered_set<std::string> images;
  for (const auto& p : enumerate_constrained(n)) {
    ++r.domain;
    MotzkinPath m = phi(p);
    if (m.size() != n) {
      ++r.bad_lengths;
      note("length " + p.str());
    }
    if (!images.insert(m.str()).second) {
      ++r.collisions;
      note("collision " + p.str() + " -> " + m.str());
    }
    if (inverter(m) != p) {
      ++r.round_trip_failures;
      note("round trip " + p.str());
    }
  }
  r.image = images.size();
  for (const auto& m : enumerate_motzkin(n)) {
    ++r.motzkin;
    if (!images.count(m.str())) {
      ++r.misses;
      note("miss " + m.str());
    } else if (phi(inverter(m)) != m) {
      ++r.round_trip_failures;
      note("round trip " + m.str());
    }
  }
  return r;
}

BijectivityReport check_bijectivity(std::size_t n) {
  PhiInverter inverter(std::max(n, PhiInverter::default_bound));
  return check_bijectivity(n, inverter);
}

}  // namespace dyckpop
