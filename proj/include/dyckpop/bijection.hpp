#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dyckpop/path.hpp"

namespace dyckpop {

class NotConstrained : public std::invalid_argument {
 public:
  explicit NotConstrained(const std::string& path)
      : std::invalid_argument("path is not in the height-constrained family: " + path) {}
};

class LengthBeyondTableBound : public std::out_of_range {
 public:
  LengthBeyondTableBound(std::size_t n, std::size_t bound)
      : std::out_of_range("length " + std::to_string(n) + " exceeds inverse table bound " +
                          std::to_string(bound)) {}
};

/// The bijection onto Motzkin paths:
///   eps            -> eps
///   alpha U D      -> phi(alpha) F
///   alpha UU beta D gamma D -> phi(alpha) phi(gamma) U phi(beta) D
/// Checks membership first and throws NotConstrained otherwise.
MotzkinPath phi(const DyckPath& p);

/// Same recursion without the membership check.
MotzkinPath phi_unchecked(const DyckPath& p);

/// Inverts phi by tabulating it over the constrained family, one semilength
/// at a time on first use. Tables are read-only once built; lookups from
/// several threads are safe.
class PhiInverter {
 public:
  static constexpr std::size_t default_bound = 14;

  explicit PhiInverter(std::size_t bound = default_bound) : bound_(bound) {}

  std::size_t bound() const { return bound_; }

  DyckPath operator()(const MotzkinPath& m) const;

 private:
  using Table = std::unordered_map<std::string, std::string>;
  const Table& table(std::size_t n) const;

  std::size_t bound_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, std::unique_ptr<Table>> tables_;
};

/// Uses a process-wide inverter with the default bound.
DyckPath phi_inverse(const MotzkinPath& m);

struct BijectivityReport {
  std::size_t n = 0;
  std::size_t domain = 0;         // constrained paths of semilength n
  std::size_t image = 0;          // distinct images
  std::size_t motzkin = 0;        // |M_n|
  std::size_t collisions = 0;
  std::size_t misses = 0;         // Motzkin paths with no preimage
  std::size_t bad_lengths = 0;    // images whose length differs from n
  std::size_t round_trip_failures = 0;
  std::vector<std::string> examples;  // first few offending paths

  bool ok() const {
    return collisions == 0 && misses == 0 && bad_lengths == 0 && round_trip_failures == 0 &&
           domain == motzkin && image == motzkin;
  }
};

BijectivityReport check_bijectivity(std::size_t n, const PhiInverter& inverter);
BijectivityReport check_bijectivity(std::size_t n);

}  // namespace dyckpop
