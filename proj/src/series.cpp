#include "dyckpop/series.hpp"

#include <algorithm>
#include <sstream>

namespace dyckpop {

Poly::Poly(Rational c) {
  c.canonicalize();
  if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::monomial(Rational c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<Rational> v(degree + 1);
  v[degree] = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

void Poly::add_product(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return;
  std::size_t need = a.c_.size() + b.c_.size() - 1;
  if (need > c_.size()) c_.resize(need);
  Rational t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      t = a.c_[i] * b.c_[j];
      c_[i + j] += t;
    }
  }
  trim();
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  r.add_product(a, b);
  return r;
}

Poly Poly::div_monomial(const Rational& c, std::size_t shift) const {
  if (c == 0) throw NonUnitDivisor("division by zero coefficient");
  for (std::size_t k = 0; k < std::min(shift, c_.size()); ++k)
    if (c_[k] != 0)
      throw InexactDivision("y^" + std::to_string(k) + " term not divisible by y^" +
                            std::to_string(shift));
  if (c_.size() <= shift) return {};
  std::vector<Rational> v(c_.begin() + static_cast<std::ptrdiff_t>(shift), c_.end());
  for (auto& x : v) x /= c;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * static_cast<long>(k);
  return Poly(std::move(v));
}

Rational Poly::evaluate(const Rational& y) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * y + c_[k];
  return acc;
}

Series::Series(int trunc) : trunc_(trunc), c_(static_cast<std::size_t>(std::max(trunc, -1) + 1)) {}

Series::Series(int trunc, std::vector<Poly> coeffs) : trunc_(trunc), c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(std::max(trunc, -1) + 1));
}

Series Series::constant(const Rational& c, int trunc) { return monomial(c, 0, 0, trunc); }
Series Series::x(int trunc) { return monomial(1, 1, 0, trunc); }
Series Series::y(int trunc) { return monomial(1, 0, 1, trunc); }

Series Series::monomial(const Rational& c, int i, int j, int trunc) {
  Series s(trunc);
  if (i <= trunc) s.c_[static_cast<std::size_t>(i)] = Poly::monomial(c, static_cast<std::size_t>(j));
  return s;
}

Series Series::truncated(int n) const {
  n = std::min(n, trunc_);
  return Series(n, std::vector<Poly>(c_.begin(), c_.begin() + (n + 1)));
}

Series Series::extended(int n) const {
  if (n <= trunc_) return *this;
  return Series(n, c_);
}

int Series::valuation() const {
  for (std::size_t n = 0; n < c_.size(); ++n)
    if (!c_[n].is_zero()) return static_cast<int>(n);
  return -1;
}

int Series::y_degree() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

Series& Series::operator+=(const Series& o) {
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (int n = 0; n <= trunc_; ++n) c_[n] += o.c_[n];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.trunc_ < trunc_) *this = truncated(o.trunc_);
  for (int n = 0; n <= trunc_; ++n) c_[n] -= o.c_[n];
  return *this;
}

Series& Series::operator*=(const Rational& s) {
  for (auto& p : c_) p *= s;
  return *this;
}

Series operator+(Series a, long s) {
  if (a.trunc_ >= 0) a.c_[0] += Poly(Rational(s));
  return a;
}

Series operator*(const Series& a, const Series& b) {
  int t = std::min(a.trunc_, b.trunc_);
  Series r(t);
  for (int i = 0; i <= t; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= t; ++j) r.c_[i + j].add_product(a.c_[i], b.c_[j]);
  }
  return r;
}

Series operator/(const Series& a, const Series& b) { return div_exact(a, b); }

Series add(const Series& a, const Series& b) { return a + b; }
Series sub(const Series& a, const Series& b) { return a - b; }
Series mul(const Series& a, const Series& b) { return a * b; }

Series div_exact_monomial(const Series& a, int x_shift, int y_shift) {
  for (int n = 0; n < std::min(x_shift, a.trunc() + 1); ++n)
    if (!a[n].is_zero())
      throw InexactDivision("x^" + std::to_string(n) + " term not divisible by x^" +
                            std::to_string(x_shift));
  Series r(a.trunc() - x_shift);
  for (int n = 0; n <= r.trunc(); ++n) {
    try {
      r.set(n, a[n + x_shift].div_monomial(1, static_cast<std::size_t>(y_shift)));
    } catch (const InexactDivision& e) {
      throw InexactDivision(std::string(e.what()) + " at x^" + std::to_string(n + x_shift));
    }
  }
  return r;
}

namespace {

// b(0) = c y^m with c != 0; returns the quotient to min(a, b) truncation.
Series divide_by_monomial_lead(const Series& a, const Series& b) {
  const Poly& lead = b[0];
  int m = lead.valuation();
  if (m < 0 || lead.degree() != m)
    throw NonUnitDivisor("divisor constant coefficient is not a single term c*y^m");
  Rational c = lead[static_cast<std::size_t>(m)];
  int t = std::min(a.trunc(), b.trunc());
  Series q(t);
  for (int n = 0; n <= t; ++n) {
    Poly acc = a[n];
    for (int i = 1; i <= n; ++i) {
      if (b[i].is_zero() || q[n - i].is_zero()) continue;
      acc -= b[i] * q[n - i];
    }
    try {
      q.set(n, acc.div_monomial(c, static_cast<std::size_t>(m)));
    } catch (const InexactDivision& e) {
      throw InexactDivision(std::string(e.what()) + " at x^" + std::to_string(n));
    }
  }
  return q;
}

}  // namespace

Series div_unit(const Series& a, const Series& b) {
  if (b.trunc() < 0 || b[0].degree() != 0)
    throw NonUnitDivisor("divisor constant term is not an invertible constant");
  return divide_by_monomial_lead(a, b);
}

Series div_exact(const Series& a, const Series& b) {
  int s = b.valuation();
  if (s < 0) throw NonUnitDivisor("division by the zero series");
  Series num = div_exact_monomial(a, s, 0);
  Series den = div_exact_monomial(b, s, 0);
  return divide_by_monomial_lead(num, den);
}

Series sqrt_unit(const Series& a) {
  if (a.trunc() < 0) return a;
  if (!(a[0] == Poly(Rational(1))))
    throw NonSquareConstantTerm("square root needs constant term 1");
  // Correct through x^(p-1) after each round; p doubles.
  Series s = Series::constant(1, 0);
  int p = 1;
  const Rational half(1, 2);
  while (p <= a.trunc()) {
    int p2 = std::min(2 * p, a.trunc() + 1);
    Series wide = s.extended(p2 - 1);
    s = (wide + div_unit(a.truncated(p2 - 1), wide)) * half;
    p = p2;
  }
  return s;
}

Series d_dy(const Series& a) {
  Series r(a.trunc());
  for (int n = 0; n <= a.trunc(); ++n) r.set(n, a[n].derivative());
  return r;
}

Series eval_y(const Series& a, const Rational& y) {
  Series r(a.trunc());
  for (int n = 0; n <= a.trunc(); ++n) r.set(n, Poly(a[n].evaluate(y)));
  return r;
}

std::string dump(const Series& a) {
  std::ostringstream os;
  for (int n = 0; n <= a.trunc(); ++n) {
    os << n << ':';
    const auto& cs = a[n].coeffs();
    if (cs.empty()) os << " 0";
    for (const auto& c : cs) os << ' ' << c.get_str();
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& a) { return os << dump(a); }

}  // namespace dyckpop
