#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyckpop/enumeration.hpp"
#include "dyckpop/series.hpp"

namespace dyckpop {

enum class PatternId { UD, UU, DD, DU, UUU, UUD, DUU, DUD, UDU, UDD, DDU, DDD };

inline constexpr std::array<PatternId, 12> all_patterns = {
    PatternId::UD,  PatternId::UU,  PatternId::DD,  PatternId::DU,
    PatternId::UUU, PatternId::UUD, PatternId::DUU, PatternId::DUD,
    PatternId::UDU, PatternId::UDD, PatternId::DDU, PatternId::DDD};

std::string_view name(PatternId p);
std::optional<PatternId> parse_pattern_id(std::string_view text);
inline bool is_length_two(PatternId p) { return name(p).size() == 2; }

enum class Method { closed_form, fixed_point, brute_force };
std::string_view name(Method m);

/// Distribution series: [x^n y^k] is the number of constrained paths of
/// semilength n with exactly k occurrences of the pattern.
struct GfResult {
  PatternId pattern;
  Method method;
  Series series;
  // Fixed-point systems split off the Motzkin paths ending in a flat step
  // and in a down step; 1 + ends_flat + ends_down = series.
  std::optional<Series> ends_flat;
  std::optional<Series> ends_down;
};

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MethodMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NonIntegralCoefficient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Largest semilength the brute-force oracle will enumerate.
inline constexpr int brute_force_bound = 14;

GfResult distribution_gf_closed(PatternId p, int max_n);

/// Patterns with a functional equation or system: UU (and DD), UUU, UDU, UDD, DDU, DDD.
bool has_fixed_point(PatternId p);
GfResult distribution_gf_fixed_point(PatternId p, int max_n);

GfResult distribution_brute_force(PatternId p, int max_n);

GfResult distribution_gf(PatternId p, Method m, int max_n);

/// d/dy at y = 1.
Series popularity_from_distribution(const Series& f);

/// Closed popularity forms; only the length-two patterns have one.
Series popularity_closed(PatternId p, int max_n);

/// Derivative route from the closed-form distribution. For length-two
/// patterns the closed popularity form is evaluated as well and must agree
/// (MethodMismatch otherwise).
Series popularity_gf(PatternId p, int max_n);

/// F_DU = 1 + (F_UD(x,y) - F_UD(x,0)) / y, checked against the closed DU form.
GfResult du_from_ud(int max_n);

/// Integer table c[n][k]; throws NonIntegralCoefficient on any fractional or
/// negative coefficient, or a y-degree above n.
std::vector<std::vector<BigInt>> distribution_table(const Series& f);

/// Univariate coefficients as integers; throws NonIntegralCoefficient otherwise.
std::vector<BigInt> integer_coefficients(const Series& f);

}  // namespace dyckpop
