#include "dyckpop/genfun.hpp"

#include <map>

#include "dyckpop/pattern.hpp"

namespace dyckpop {

std::string_view name(PatternId p) {
  switch (p) {
    case PatternId::UD: return "UD";
    case PatternId::UU: return "UU";
    case PatternId::DD: return "DD";
    case PatternId::DU: return "DU";
    case PatternId::UUU: return "UUU";
    case PatternId::UUD: return "UUD";
    case PatternId::DUU: return "DUU";
    case PatternId::DUD: return "DUD";
    case PatternId::UDU: return "UDU";
    case PatternId::UDD: return "UDD";
    case PatternId::DDU: return "DDU";
    case PatternId::DDD: return "DDD";
  }
  return "?";
}

std::optional<PatternId> parse_pattern_id(std::string_view text) {
  for (auto p : all_patterns)
    if (name(p) == text) return p;
  return std::nullopt;
}

std::string_view name(Method m) {
  switch (m) {
    case Method::closed_form: return "closed";
    case Method::fixed_point: return "fixed";
    case Method::brute_force: return "brute";
  }
  return "?";
}

namespace {

// Closed forms are assembled at a wider truncation so that the divisions by
// x^2 still leave max_n exact coefficients.
constexpr int guard = 4;

Series closed_form(PatternId p, int max_n) {
  const int w = max_n + guard;
  const Series x = Series::x(w);
  const Series y = Series::y(w);
  const Series x2 = x * x;
  const Series x3 = x2 * x;
  const Series y2 = y * y;

  switch (p) {
    case PatternId::UD: {
      Series inner = x2 * (y - 1) + x * y - 1;
      Series rad = -4 * x2 + inner * inner;
      return (x2 - x2 * y - x * y + 1 - sqrt_unit(rad)) / (2 * x2);
    }
    case PatternId::UU:
    case PatternId::DD: {
      Series inner = x2 * y * (y - 1) - x + 1;
      Series rad = -4 * x2 * y2 + inner * inner;
      return (x2 * y2 - x2 * y - x + 1 - sqrt_unit(rad)) / (2 * x2 * y2);
    }
    case PatternId::DU: {
      Series inner = x2 * (y - 1) + x * y - 1;
      Series rad = -4 * x2 + inner * inner;
      return (x2 * y - x2 - x * y + 1 - sqrt_unit(rad)) / (2 * x2 * y);
    }
    case PatternId::UUU: {
      Series rad = (x - x * y - 1) * (x2 - x * y + x - 1) *
                   (x3 - x3 * y + x2 * y2 + 2 * x2 * y - 2 * x * y - 2 * x + 1);
      return (x3 * y - x3 - x2 * y2 + 2 * x - 1 + sqrt_unit(rad)) / (2 * x2 * y2 * (x - 1));
    }
    case PatternId::UUD: {
      Series rad = (x2 * y - 1) * (x2 * y - 4 * x2 + 4 * x - 1);
      return (x2 * y - 2 * x2 + 2 * x - 1 + sqrt_unit(rad)) / (2 * x2 * (x - 1));
    }
    case PatternId::DUU: {
      Series rad = (x2 * y - 1) * (x2 * y - 4 * x2 + 4 * x - 1);
      return (2 * x - x2 * y - 1 + sqrt_unit(rad)) / (2 * x2 * y * (x - 1));
    }
    case PatternId::DUD: {
      Series rad = (x * y - x - 1) * (x2 + y * x - x - 1) *
                   (x3 * y - x3 + x2 * y2 + 2 * x2 * y - 2 * x * y - 2 * x + 1);
      return (x3 * y - x3 - x2 * y2 + 2 * x * y - 1 + sqrt_unit(rad)) / (2 * x2 * (x * y - 1));
    }
    case PatternId::UDU: {
      Series a = (x + 1) * (x2 * y - x2 + x * y - x - 1) *
                 (x3 * y - x3 - 2 * x2 * y + 2 * x2 + x * y + 2 * x - 1);
      return (1 + x * (x2 - x2 * y - y) - sqrt_unit(a)) / (2 * x2 * (x - x * y + 1));
    }
    case PatternId::UDD: {
      Series b = (x + 1) * (x2 * y - x2 + 1) * (x3 * y - x3 - 3 * x2 * y + 3 * x2 - 3 * x + 1);
      Series d = x * y - x + 1;
      return (1 + x * (x2 * y - x2 - x * y + x - 1) - sqrt_unit(b)) / (2 * x2 * d * d);
    }
    case PatternId::DDU: {
      Series c = (x + 1) * (x2 * y - x2 + 1) * (x3 * y - x3 - 3 * x2 * y + 3 * x2 - 3 * x + 1);
      return (1 + x * (2 * x2 * y2 - 3 * x2 * y + x2 + x * y - x - 1) - sqrt_unit(c)) /
             (2 * x2 * y * (x * y - x + 1));
    }
    case PatternId::DDD: {
      Series d = (x * y + 1) * (x2 * y - x2 - x * y + x - 1) *
                 (x3 * y2 - x3 * y - x2 * y2 - 2 * x2 * y + 3 * x2 + 2 * x * y + x - 1);
      Series e = x * y - x - y;
      return (1 - x * (x2 * y2 - x2 * y - x * y2 + x + 1) - sqrt_unit(d)) / (2 * x2 * e * e);
    }
  }
  throw std::logic_error("unknown pattern");
}

void require_unit_constant(const Series& f, PatternId p) {
  if (!(f[0] == Poly(Rational(1))))
    throw MethodMismatch("constant coefficient of " + std::string(name(p)) + " is not 1");
}

}  // namespace

GfResult distribution_gf_closed(PatternId p, int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  Series f = closed_form(p, max_n).truncated(max_n);
  require_unit_constant(f, p);
  return {p, Method::closed_form, std::move(f), std::nullopt, std::nullopt};
}

bool has_fixed_point(PatternId p) {
  switch (p) {
    case PatternId::UU:
    case PatternId::DD:
    case PatternId::UUU:
    case PatternId::UDU:
    case PatternId::UDD:
    case PatternId::DDU:
    case PatternId::DDD: return true;
    default: return false;
  }
}

namespace {

struct System {
  Series f, a, b;
  friend bool operator==(const System&, const System&) = default;
};

// Every unknown on a right-hand side carries at least one factor of x, so
// one sweep (a, then b, then f) fixes at least one more x-degree.
template <class Step>
System solve(int max_n, bool split, Step step) {
  System cur{Series(max_n), Series(max_n), Series(max_n)};
  const int limit = max_n + 2;
  for (int sweep = 1; sweep <= limit; ++sweep) {
    System next = step(cur);
    if (!split) next.a = next.b = Series(max_n);
    if (next == cur) return next;
    cur = std::move(next);
  }
  throw NoConvergence("fixed point not reached within " + std::to_string(limit) + " sweeps");
}

}  // namespace

GfResult distribution_gf_fixed_point(PatternId p, int max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  if (!has_fixed_point(p))
    throw std::invalid_argument("no functional equation for " + std::string(name(p)));
  const int w = max_n;
  const Series x = Series::x(w);
  const Series y = Series::y(w);
  const Series one = Series::constant(1, w);
  const Series x2 = x * x;
  const Series y2 = y * y;

  System sol;
  bool split = true;
  switch (p) {
    case PatternId::UU:
    case PatternId::DD:
      split = false;
      sol = solve(w, false, [&](const System& s) {
        const Series& m = s.f;
        return System{1 + x * m + x2 * y * m + x2 * y2 * (m - 1) * m, {}, {}};
      });
      break;
    case PatternId::UUU: {
      split = false;
      const Series flats = div_unit(one, 1 - x);  // 1/(1-x)
      sol = solve(w, false, [&](const System& s) {
        const Series& f = s.f;
        return System{1 + x * f + x2 * f + x2 * y * (x * flats) * f + x2 * y2 * (f - flats) * f,
                      {}, {}};
      });
      break;
    }
    case PatternId::UDU:
      sol = solve(w, true, [&](const System& s) {
        Series a = x + x * y * s.a + x * s.b;
        Series b = x2 + x2 * y * a + x2 * s.b + x2 * s.f * (s.f - 1);
        Series f = 1 + a + b;
        return System{std::move(f), std::move(a), std::move(b)};
      });
      break;
    case PatternId::UDD:
      sol = solve(w, true, [&](const System& s) {
        Series a = x * s.f;
        Series b = x2 * y * s.f + x2 * y * a + x2 * s.b + x2 * s.b * s.b + x2 * y * a * s.b +
                   x2 * y2 * a * a + x2 * y * a * s.b;
        Series f = 1 + a + b;
        return System{std::move(f), std::move(a), std::move(b)};
      });
      break;
    case PatternId::DDU:
      sol = solve(w, true, [&](const System& s) {
        Series a = x + x * s.a + x * y * s.b;
        Series b = x2 * s.f + x2 * y * a * (s.f - 1) + x2 * a + x2 * y * s.b * s.f;
        Series f = 1 + a + b;
        return System{std::move(f), std::move(a), std::move(b)};
      });
      break;
    case PatternId::DDD:
      sol = solve(w, true, [&](const System& s) {
        Series a = x * s.f;
        const Series& b0 = s.b;
        Series b = x2 * s.f + x2 * y2 * b0 + div_exact_monomial(x2 * y2 * a, 0, 1) +
                   div_exact_monomial(x2 * y2 * a * a, 0, 2) +
                   div_exact_monomial(x2 * y2 * a * b0, 0, 1) + x2 * y2 * b0 * b0 +
                   div_exact_monomial(x2 * y2 * a * b0, 0, 1);
        Series f = 1 + a + b;
        return System{std::move(f), std::move(a), std::move(b)};
      });
      break;
    default: break;
  }
  GfResult r{p, Method::fixed_point, std::move(sol.f), std::nullopt, std::nullopt};
  if (split) {
    r.ends_flat = std::move(sol.a);
    r.ends_down = std::move(sol.b);
  }
  return r;
}

GfResult distribution_brute_force(PatternId p, int max_n) {
  if (max_n < 0 || max_n > brute_force_bound)
    throw std::out_of_range("brute force limited to semilength " +
                            std::to_string(brute_force_bound));
  const Pattern pat = Pattern::word(name(p));
  Series f(max_n);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<Rational> counts;
    for (const auto& path : enumerate_constrained(static_cast<std::size_t>(n))) {
      auto k = static_cast<std::size_t>(count_occurrences(path, pat));
      if (k >= counts.size()) counts.resize(k + 1);
      counts[k] += 1;
    }
    f.set(n, Poly(std::move(counts)));
  }
  return {p, Method::brute_force, std::move(f), std::nullopt, std::nullopt};
}

GfResult distribution_gf(PatternId p, Method m, int max_n) {
  switch (m) {
    case Method::closed_form: return distribution_gf_closed(p, max_n);
    case Method::fixed_point: return distribution_gf_fixed_point(p, max_n);
    case Method::brute_force: return distribution_brute_force(p, max_n);
  }
  throw std::logic_error("unknown method");
}

Series popularity_from_distribution(const Series& f) { return eval_y(d_dy(f), 1); }

Series popularity_closed(PatternId p, int max_n) {
  const int w = max_n + guard;
  const Series x = Series::x(w);
  const Series x2 = x * x;
  const Series x3 = x2 * x;
  const Series s = sqrt_unit(1 - 2 * x - 3 * x2);
  Series g(0);
  switch (p) {
    case PatternId::UD:
      g = ((x - 1) * s - 3 * x2 - 2 * x + 1) / (2 * x * (3 * x - 1));
      break;
    case PatternId::UU:
    case PatternId::DD:
      g = (s * (x2 + 2 * x - 2) + x3 - 3 * x2 - 4 * x + 2) / (2 * x2 * s);
      break;
    case PatternId::DU:
      g = ((x2 - 1) * s - x3 - 3 * x2 - x + 1) / (2 * x2 * s);
      break;
    default:
      throw std::invalid_argument("no closed popularity form for " + std::string(name(p)));
  }
  return g.truncated(max_n);
}

Series popularity_gf(PatternId p, int max_n) {
  Series g = popularity_from_distribution(distribution_gf_closed(p, max_n).series);
  if (is_length_two(p)) {
    if (!(popularity_closed(p, max_n) == g))
      throw MethodMismatch("closed popularity form of " + std::string(name(p)) +
                           " disagrees with the derivative route");
  }
  return g;
}

GfResult du_from_ud(int max_n) {
  Series ud = distribution_gf_closed(PatternId::UD, max_n).series;
  Series du = 1 + div_exact_monomial(ud - eval_y(ud, 0), 0, 1);
  if (!(du == distribution_gf_closed(PatternId::DU, max_n).series))
    throw MethodMismatch("DU from UD disagrees with the closed DU form");
  return {PatternId::DU, Method::closed_form, std::move(du), std::nullopt, std::nullopt};
}

std::vector<std::vector<BigInt>> distribution_table(const Series& f) {
  std::vector<std::vector<BigInt>> table;
  for (int n = 0; n <= f.trunc(); ++n) {
    const auto& poly = f[n];
    if (poly.degree() > n)
      throw NonIntegralCoefficient("y-degree " + std::to_string(poly.degree()) + " exceeds n = " +
                                   std::to_string(n));
    std::vector<BigInt> row;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Rational& c = poly.coeffs()[k];
      if (c.get_den() != 1 || c < 0)
        throw NonIntegralCoefficient("coefficient " + c.get_str() + " at x^" + std::to_string(n) +
                                     " y^" + std::to_string(k));
      row.push_back(c.get_num());
    }
    table.push_back(std::move(row));
  }
  return table;
}

std::vector<BigInt> integer_coefficients(const Series& f) {
  std::vector<BigInt> out;
  for (int n = 0; n <= f.trunc(); ++n) {
    const auto& poly = f[n];
    if (poly.degree() > 0)
      throw NonIntegralCoefficient("series is not univariate at x^" + std::to_string(n));
    Rational c = poly[0];
    if (c.get_den() != 1)
      throw NonIntegralCoefficient("coefficient " + c.get_str() + " at x^" + std::to_string(n));
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace dyckpop
