#pragma once

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dyckpop {

using Rational = mpq_class;

class NonUnitDivisor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonSquareConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense polynomial in y with exact rational coefficients. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(Rational c);  // NOLINT: constants convert implicitly
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(Rational c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  /// Coefficient of y^k; zero beyond the degree.
  Rational operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Lowest k with a nonzero coefficient, or -1 for zero.
  int valuation() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Multiply-accumulate: *this += a * b.
  void add_product(const Poly& a, const Poly& b);

  /// Divides by c * y^shift; throws InexactDivision if a lower term is nonzero.
  Poly div_monomial(const Rational& c, std::size_t shift) const;

  Poly derivative() const;
  Rational evaluate(const Rational& y) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Bivariate formal power series sum_n P_n(y) x^n, truncated after x^trunc.
/// All arithmetic is exact. Binary operations on operands of different
/// truncation produce the smaller truncation.
class Series {
 public:
  Series() : Series(0) {}
  explicit Series(int trunc);
  Series(int trunc, std::vector<Poly> coeffs);

  static Series constant(const Rational& c, int trunc);
  static Series x(int trunc);
  static Series y(int trunc);
  /// c * x^i * y^j
  static Series monomial(const Rational& c, int i, int j, int trunc);

  int trunc() const { return trunc_; }
  const Poly& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  Rational coeff(int n, std::size_t k) const { return c_[static_cast<std::size_t>(n)][k]; }
  void set(int n, Poly p) { c_[static_cast<std::size_t>(n)] = std::move(p); }

  Series truncated(int n) const;
  /// Pads with zero coefficients up to a larger truncation.
  Series extended(int n) const;

  /// Lowest x-degree with a nonzero coefficient, or -1 if zero.
  int valuation() const;
  /// Largest y-degree over all retained coefficients.
  int y_degree() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& s);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) { return a *= Rational(-1); }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& s) { return a *= s; }
  friend Series operator*(const Rational& s, Series a) { return a *= s; }
  friend Series operator*(Series a, long s) { return a *= Rational(s); }
  friend Series operator*(long s, Series a) { return a *= Rational(s); }
  friend Series operator+(Series a, long s);
  friend Series operator+(long s, Series a) { return std::move(a) + s; }
  friend Series operator-(Series a, long s) { return std::move(a) + (-s); }
  friend Series operator-(long s, Series a) { return -std::move(a) + s; }
  /// General exact division; see div_exact.
  friend Series operator/(const Series& a, const Series& b);

  friend bool operator==(const Series& a, const Series& b) {
    return a.trunc_ == b.trunc_ && a.c_ == b.c_;
  }

 private:
  int trunc_;
  std::vector<Poly> c_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);

/// a / b where b has an invertible constant term (nonzero, free of y).
Series div_unit(const Series& a, const Series& b);

/// a / (x^x_shift y^y_shift). Truncation drops by x_shift.
Series div_exact_monomial(const Series& a, int x_shift, int y_shift);

/// a / b when the lowest nonzero x-coefficient of b is a single term c y^m.
/// The quotient must lie in Q[y][[x]]; any leftover y-remainder raises
/// InexactDivision. Reduces to div_unit when m = 0 and b(0) != 0.
Series div_exact(const Series& a, const Series& b);

/// Square root with constant term +1 by Newton iteration S <- (S + a/S)/2.
Series sqrt_unit(const Series& a);

Series d_dy(const Series& a);
Series eval_y(const Series& a, const Rational& y);

/// One line per x-degree: "n: c0 c1 c2 ..." with exact rationals p/q.
std::string dump(const Series& a);
std::ostream& operator<<(std::ostream& os, const Series& a);

}  // namespace dyckpop
