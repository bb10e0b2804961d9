#include "dyckpop/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "dyckpop/bijection.hpp"
#include "dyckpop/genfun.hpp"
#include "dyckpop/pattern.hpp"
#include "json.hpp"

namespace dyckpop {

std::string_view name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::conjecture_consistent: return "CONJECTURE-CONSISTENT";
    case CheckStatus::conjecture_broken: return "CONJECTURE-BROKEN";
    case CheckStatus::info: return "INFO";
  }
  return "?";
}

bool VerificationReport::ok() const { return count(CheckStatus::fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

const CheckResult* VerificationReport::find(std::string_view check) const {
  for (const auto& c : checks)
    if (c.check == check) return &c;
  return nullptr;
}

void VerificationReport::write_text(std::ostream& out) const {
  for (const auto& c : checks) {
    out << '[' << name(c.status) << "] " << c.check << ": " << c.details << '\n';
    if (c.counterexample) out << "    counterexample: " << *c.counterexample << '\n';
  }
  out << "summary: max_n=" << max_n << ' ' << count(CheckStatus::pass) << " passed, "
      << count(CheckStatus::fail) << " failed, " << count(CheckStatus::conjecture_consistent)
      << " conjecture-consistent, " << count(CheckStatus::conjecture_broken)
      << " conjecture-broken, " << count(CheckStatus::info) << " informational\n";
}

void VerificationReport::write_json(std::ostream& out) const {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["check"] = c.check;
    r["status"] = name(c.status);
    r["details"] = c.details;
    if (c.counterexample) r["counterexample"] = *c.counterexample;
    records.push_back(std::move(r));
  }
  nlohmann::ordered_json doc;
  doc["max_n"] = max_n;
  doc["ok"] = ok();
  doc["checks"] = std::move(records);
  out << doc.dump(2) << '\n';
}

SequenceMatch align_sequence(int first_index, const std::vector<BigInt>& computed,
                             const SequenceRef& ref) {
  SequenceMatch best;
  bool have = false;
  for (int shift : {0, -1, 1, -2, 2}) {
    SequenceMatch m{shift, 0, 0};
    bool agreeing = true;
    for (std::size_t i = 0; i < computed.size(); ++i) {
      long r = static_cast<long>(first_index) + static_cast<long>(i) + shift - ref.offset;
      if (r < 0 || r >= static_cast<long>(ref.terms.size())) continue;
      ++m.overlap;
      if (agreeing && computed[i] == ref.terms[static_cast<std::size_t>(r)]) ++m.prefix;
      else agreeing = false;
    }
    if (!have || m.prefix > best.prefix || (m.prefix == best.prefix && m.full() && !best.full())) {
      best = m;
      have = true;
    }
  }
  return best;
}

namespace {

constexpr std::size_t min_overlap = 3;

std::string join(const std::vector<BigInt>& v, std::size_t limit = 12) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) s << (i ? "," : "") << v[i];
  if (v.size() > limit) s << ",...";
  return s.str();
}

}  // namespace

CheckResult compare_sequence(int first_index, const std::vector<BigInt>& computed,
                             const SequenceRef& ref) {
  auto m = align_sequence(first_index, computed, ref);
  bool good = m.full() && m.overlap >= std::min(min_overlap, computed.size());
  CheckResult r;
  r.check = "oeis " + ref.oeis_id;
  bool conj = ref.status == SequenceStatus::conjectured;
  r.status = good ? (conj ? CheckStatus::conjecture_consistent : CheckStatus::pass)
                  : (conj ? CheckStatus::conjecture_broken : CheckStatus::fail);
  std::ostringstream d;
  d << "vs " << ref.provenance << ": " << m.prefix << "/" << m.overlap
    << " overlapping terms agree, shift " << m.shift
    << (m.shift == 0 ? " (natural alignment)" : "");
  r.details = d.str();
  if (!good) {
    std::ostringstream c;
    c << "computed from n=" << first_index << ": " << join(computed) << "; reference from n="
      << ref.offset << ": " << join(ref.terms);
    r.counterexample = c.str();
  }
  return r;
}

namespace {

std::vector<BigInt> column(const std::vector<std::vector<BigInt>>& table, int from, int k) {
  std::vector<BigInt> out;
  for (int n = from; n < static_cast<int>(table.size()); ++n) {
    const auto& row = table[static_cast<std::size_t>(n)];
    out.push_back(k >= 0 && k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(k)] : BigInt(0));
  }
  return out;
}

std::vector<BigInt> tail_from(const std::vector<BigInt>& v, int from) {
  return {v.begin() + std::min<std::ptrdiff_t>(from, static_cast<std::ptrdiff_t>(v.size())), v.end()};
}

}  // namespace

std::optional<ComputedSequence> computed_sequence(const std::string& id, int max_n) {
  auto popularity = [&](PatternId p) {
    return ComputedSequence{1, tail_from(integer_coefficients(popularity_gf(p, max_n)), 1)};
  };
  auto col = [&](PatternId p, int from, int k) {
    return ComputedSequence{from, column(distribution_table(distribution_gf_closed(p, max_n).series), from, k)};
  };
  if (id == "A025566") return popularity(PatternId::UD);
  if (id == "A025567") return popularity(PatternId::DU);
  if (id == "A097861") return popularity(PatternId::UUD);
  if (id == "A304011") return popularity(PatternId::DUU);
  if (id == "A004148") return col(PatternId::UDU, 1, 0);
  if (id == "A026418") return col(PatternId::DDD, 1, 0);
  if (id == "A007562") return col(PatternId::DUD, 1, 0);
  if (id == "A001793") return col(PatternId::UUD, 1, 2);
  if (id == "A034851") return col(PatternId::UD, 1, 2);
  if (id == "A005994") return col(PatternId::UD, 1, 3);
  if (id == "A005900") {
    auto t = distribution_table(distribution_gf_closed(PatternId::UD, max_n).series);
    ComputedSequence s{4, {}};
    for (int n = 4; n <= max_n; ++n) {
      const auto& row = t[static_cast<std::size_t>(n)];
      auto k = static_cast<std::size_t>(n - 3);
      s.terms.push_back(k < row.size() ? row[k] : BigInt(0));
    }
    return s;
  }
  return std::nullopt;
}

namespace {

class Campaign {
 public:
  Campaign(int max_n, const ReferenceData& data) : max_n_(max_n), data_(data) { report_.max_n = max_n; }

  VerificationReport run() {
    cardinality();
    bijection();
    transport();
    identities();
    three_way();
    golden();
    popularity();
    structure();
    oeis();
    return std::move(report_);
  }

 private:
  void add(std::string check, CheckStatus status, std::string details,
           std::optional<std::string> counterexample = std::nullopt) {
    report_.checks.push_back({std::move(check), status, std::move(details), std::move(counterexample)});
  }

  // Guards a check body so that an exception becomes a failure record.
  template <class Fn>
  void guarded(const std::string& check, Fn fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      add(check, CheckStatus::fail, std::string("exception: ") + e.what());
    }
  }

  const std::vector<BigInt>& motzkin() {
    if (motzkin_.empty()) {
      const int top = std::max(max_n_, 24) + 1;
      motzkin_.assign(static_cast<std::size_t>(top + 1), BigInt(0));
      motzkin_[0] = 1;
      for (int n = 1; n <= top; ++n) {
        BigInt m = motzkin_[static_cast<std::size_t>(n - 1)];
        for (int k = 0; k <= n - 2; ++k)
          m += motzkin_[static_cast<std::size_t>(k)] * motzkin_[static_cast<std::size_t>(n - 2 - k)];
        motzkin_[static_cast<std::size_t>(n)] = m;
      }
    }
    return motzkin_;
  }

  const Series& closed(PatternId p, int n) {
    auto key = std::make_pair(p, n);
    auto it = closed_.find(key);
    if (it == closed_.end()) it = closed_.emplace(key, distribution_gf_closed(p, n).series).first;
    return it->second;
  }

  const Series& brute(PatternId p, int n) {
    auto key = std::make_pair(p, n);
    auto it = brute_.find(key);
    if (it == brute_.end()) it = brute_.emplace(key, distribution_brute_force(p, n).series).first;
    return it->second;
  }

  void cardinality() {
    guarded("cardinality", [&] {
      std::vector<BigInt> counts;
      std::optional<std::string> bad;
      for (int n = 0; n <= max_n_; ++n) {
        std::size_t c = 0;
        for (const auto& p : enumerate_constrained(static_cast<std::size_t>(n))) {
          (void)p;
          ++c;
        }
        counts.emplace_back(static_cast<unsigned long>(c));
        if (!bad && counts.back() != motzkin()[static_cast<std::size_t>(n)])
          bad = "n=" + std::to_string(n) + ": " + counts.back().get_str() + " paths, Motzkin number " +
                motzkin()[static_cast<std::size_t>(n)].get_str();
      }
      add("cardinality", bad ? CheckStatus::fail : CheckStatus::pass,
          "|D_n| for n=1.." + std::to_string(max_n_) + ": " + join(tail_from(counts, 1), 64), bad);
    });
  }

  void bijection() {
    guarded("bijection", [&] {
      std::size_t total = 0;
      for (int n = 0; n <= max_n_; ++n) {
        auto r = check_bijectivity(static_cast<std::size_t>(n));
        total += r.domain;
        if (!r.ok()) {
          std::ostringstream d;
          d << "n=" << n << ": domain " << r.domain << ", image " << r.image << ", Motzkin "
            << r.motzkin << ", collisions " << r.collisions << ", misses " << r.misses
            << ", round-trip failures " << r.round_trip_failures;
          add("bijection", CheckStatus::fail, d.str(),
              r.examples.empty() ? std::nullopt : std::optional<std::string>(r.examples.front()));
          return;
        }
      }
      add("bijection", CheckStatus::pass,
          "phi is a bijection onto Motzkin paths with phi^-1(phi(P)) = P for n=0.." +
              std::to_string(max_n_) + " (" + std::to_string(total) + " paths)");
    });
  }

  void transport_one(const TransportRule& rule) {
    std::string check = "transport " + rule.name;
    guarded(check, [&] {
      std::size_t checked = 0;
      for (int n = static_cast<int>(rule.min_n); n <= max_n_; ++n) {
        auto r = check_transport(rule, static_cast<std::size_t>(n));
        checked += r.paths_checked;
        if (!r.passed) {
          const auto& c = *r.counterexample;
          add(check, CheckStatus::fail, rule.dyck_side.str() + " -> " + rule.motzkin_side.str(),
              c.dyck + " -> " + c.motzkin + ": " + std::to_string(c.lhs) + " != " + std::to_string(c.rhs));
          return;
        }
      }
      add(check, CheckStatus::pass,
          rule.dyck_side.str() + " -> " + rule.motzkin_side.str() + " on " + std::to_string(checked) +
              " paths, n=" + std::to_string(rule.min_n) + ".." + std::to_string(max_n_));
    });
  }

  void transport() {
    for (const auto& rule : transport_rules()) transport_one(rule);
    if (auto dd = find_rule("DD")) transport_one(*dd);
  }

  // lhs(P) = rhs(P) for every path of the given family and size n in [min_n, max_n].
  template <class Enumerate>
  void identity(const std::string& check, std::string_view lhs, std::string_view rhs, Side side,
                int min_n, Enumerate enumerate, CheckStatus on_failure = CheckStatus::fail) {
    guarded(check, [&] {
      const Statistic l = Statistic::parse(lhs), r = Statistic::parse(rhs);
      std::size_t checked = 0;
      for (int n = min_n; n <= max_n_; ++n) {
        for (const auto& p : enumerate(static_cast<std::size_t>(n))) {
          ++checked;
          auto a = evaluate_statistic(p, l, side), b = evaluate_statistic(p, r, side);
          if (a != b) {
            add(check, on_failure, std::string(lhs) + " = " + std::string(rhs) + " does not hold",
                p.str() + ": " + std::to_string(a) + " != " + std::to_string(b));
            return;
          }
        }
      }
      add(check, CheckStatus::pass,
          std::string(lhs) + " = " + std::string(rhs) + " on " + std::to_string(checked) + " paths, n=" +
              std::to_string(min_n) + ".." + std::to_string(max_n_));
    });
  }

  void identities() {
    auto dyck = [](std::size_t n) { return enumerate_constrained(n); };
    auto motz = [](std::size_t n) { return enumerate_motzkin(n); };
    identity("identity UU+UD=N", "UU + UD", "N", Side::dyck, 0, dyck);
    identity("identity DU=UD-1", "DU", "UD - 1", Side::dyck, 1, dyck);
    identity("identity UU=DD", "UU", "DD", Side::dyck, 0, dyck);
    identity("system a.1", "UU", "UUU + UUD", Side::dyck, 0, dyck);
    identity("system a.2", "UU", "UUU + DUU + ^UU", Side::dyck, 0, dyck);
    identity("system a.3", "UD", "UUD + DUD + ^UD", Side::dyck, 0, dyck);
    identity("system a.4", "DU", "DUU + DUD", Side::dyck, 0, dyck);
    identity("system b.1", "DD", "DDD + UDD", Side::dyck, 0, dyck);
    identity("system b.2", "DD", "DDD + DDU + DD$", Side::dyck, 0, dyck);
    identity("system b.3", "UD", "UDD + UDU + UD$", Side::dyck, 0, dyck);
    identity("system b.4", "DU", "DDU + UDU", Side::dyck, 0, dyck);
    identity("motzkin U=D", "U", "D", Side::motzkin, 0, motz);
    identity("motzkin U+F+D=N", "U + F + D", "N", Side::motzkin, 0, motz);
    identity("motzkin UU+UF=FD+DD", "UU + UF", "FD + DD", Side::motzkin, 0, motz);
    identity("motzkin UF=UF+D+UF+U", "UF", "UF+D + UF+U", Side::motzkin, 0, motz);
    identity("motzkin F split", "F", "F$ + FF + FD + FUU + FUD + FUF", Side::motzkin, 0, motz);
    // With X+ summed over every expansion, UF+ itself counts each flat run
    // once per prefix length and so exceeds UF+D + UF+U on longer runs.
    identity("motzkin UF+=UF+D+UF+U (summed reading)", "UF+", "UF+D + UF+U", Side::motzkin, 0, motz,
             CheckStatus::info);
  }

  void three_way() {
    const int n = max_n_;
    for (PatternId p : all_patterns) {
      std::string check = "gf agreement " + std::string(name(p));
      guarded(check, [&] {
        const Series& c = closed(p, n);
        const Series& b = brute(p, n);
        distribution_table(c);
        std::string methods = "closed, brute";
        std::optional<std::string> bad;
        if (!(c == b)) bad = "closed form differs from brute force";
        if (has_fixed_point(p)) {
          auto f = distribution_gf_fixed_point(p, n);
          methods += ", fixed";
          if (!bad && !(f.series == c)) bad = "fixed point differs from closed form";
          if (!bad && f.ends_flat && f.ends_down && !(1 + *f.ends_flat + *f.ends_down == f.series))
            bad = "1 + A + B differs from F";
        }
        if (!bad) {
          Series at1 = eval_y(c, 1);
          for (int k = 0; k <= n; ++k)
            if (at1.coeff(k, 0) != Rational(motzkin()[static_cast<std::size_t>(k)])) {
              bad = "row sum at n=" + std::to_string(k) + " is " + at1.coeff(k, 0).get_str();
              break;
            }
        }
        add(check, bad ? CheckStatus::fail : CheckStatus::pass,
            methods + " agree on every coefficient for n<=" + std::to_string(n) +
                "; integral, nonnegative, row sums Motzkin",
            bad);
      });
    }
    guarded("gf DD alias", [&] {
      bool same = brute(PatternId::DD, max_n_) == closed(PatternId::UU, max_n_);
      add("gf DD alias", same ? CheckStatus::pass : CheckStatus::fail,
          "brute-force DD distribution equals the UU series for n<=" + std::to_string(max_n_));
    });
    guarded("gf DU from UD", [&] {
      du_from_ud(max_n_);
      add("gf DU from UD", CheckStatus::pass,
          "1 + (F_UD(x,y) - F_UD(x,0))/y equals F_DU for n<=" + std::to_string(max_n_));
    });
    guarded("avoidance UUU", [&] {
      auto col = column(distribution_table(closed(PatternId::UUU, max_n_)), 1, 0);
      std::vector<BigInt> fib;
      BigInt a = 1, b = 2;
      for (std::size_t i = 0; i < col.size(); ++i) {
        fib.push_back(a);
        BigInt t = a + b;
        a = b;
        b = t;
      }
      add("avoidance UUU", col == fib ? CheckStatus::pass : CheckStatus::fail,
          "UUU-avoiders for n=1..: " + join(col, 64) + " (Fibonacci)",
          col == fib ? std::nullopt : std::optional<std::string>("expected " + join(fib, 64)));
    });
  }

  void golden() {
    std::map<std::string, std::vector<const GoldenCell*>> by_table;
    for (const auto& c : data_.golden.cells) by_table[c.table].push_back(&c);
    for (const auto& [table, cells] : by_table) {
      std::string check = "golden " + table;
      guarded(check, [&] {
        int top = 0;
        for (const auto* c : cells) top = std::max(top, c->n);
        if (top > brute_force_bound) {
          add(check, CheckStatus::fail, "cell beyond semilength " + std::to_string(brute_force_bound));
          return;
        }
        std::map<PatternId, std::vector<std::pair<std::string, std::vector<std::vector<BigInt>>>>> tables;
        for (const auto* c : cells) {
          if (tables.count(c->pattern)) continue;
          auto& t = tables[c->pattern];
          t.emplace_back("closed", distribution_table(closed(c->pattern, top)));
          t.emplace_back("brute", distribution_table(brute(c->pattern, top)));
          if (has_fixed_point(c->pattern))
            t.emplace_back("fixed", distribution_table(distribution_gf_fixed_point(c->pattern, top).series));
        }
        for (const auto* c : cells) {
          for (const auto& [method, t] : tables[c->pattern]) {
            const auto& row = t[static_cast<std::size_t>(c->n)];
            BigInt got = c->k < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(c->k)] : BigInt(0);
            if (got != c->count) {
              add(check, CheckStatus::fail, "cell mismatch",
                  std::string(name(c->pattern)) + " n=" + std::to_string(c->n) + " k=" + std::to_string(c->k) +
                      ": table " + c->count.get_str() + ", " + method + " " + got.get_str());
              return;
            }
          }
        }
        add(check, CheckStatus::pass,
            std::to_string(cells.size()) + " cells match closed form, brute force" +
                (has_fixed_point(cells.front()->pattern) ? ", fixed point" : ""));
      });
    }
    guarded("golden totals", [&] {
      for (const auto& t : data_.golden.totals) {
        BigInt got = t.n < static_cast<int>(motzkin().size()) ? motzkin()[static_cast<std::size_t>(t.n)] : BigInt(-1);
        ConstrainedCounter counter;
        BigInt direct = counter.total(t.n);
        if (direct != t.count || got != t.count) {
          add("golden totals", CheckStatus::fail, "column total mismatch",
              t.table + " n=" + std::to_string(t.n) + ": table " + t.count.get_str() + ", counted " +
                  direct.get_str());
          return;
        }
      }
      add("golden totals", CheckStatus::pass,
          std::to_string(data_.golden.totals.size()) + " column totals match path counts");
    });
  }

  void popularity() {
    const int n = max_n_;
    for (const auto& row : data_.popularity) {
      std::string check = "popularity " + row.table + " " + std::string(name(row.pattern));
      guarded(check, [&] {
        int last = row.first_n + static_cast<int>(row.terms.size()) - 1;
        int top = std::max(n, last);
        auto g = integer_coefficients(popularity_gf(row.pattern, top));
        for (std::size_t i = 0; i < row.terms.size(); ++i) {
          int m = row.first_n + static_cast<int>(i);
          if (g[static_cast<std::size_t>(m)] != row.terms[i]) {
            add(check, CheckStatus::fail, "row mismatch",
                "n=" + std::to_string(m) + ": table " + row.terms[i].get_str() + ", computed " +
                    g[static_cast<std::size_t>(m)].get_str());
            return;
          }
        }
        add(check, CheckStatus::pass,
            std::to_string(row.terms.size()) + " terms match the derivative of the distribution at y=1");
      });
    }
    constexpr int closed_n = 24;
    for (PatternId p : all_patterns) {
      if (!is_length_two(p)) continue;
      std::string check = "popularity closed form " + std::string(name(p));
      guarded(check, [&] {
        Series a = popularity_closed(p, closed_n);
        Series b = popularity_from_distribution(closed(p, closed_n));
        add(check, a == b ? CheckStatus::pass : CheckStatus::fail,
            "closed popularity form equals the derivative route for n<=" + std::to_string(closed_n));
      });
    }
    guarded("popularity relations", [&] {
      auto ud = integer_coefficients(popularity_gf(PatternId::UD, n));
      auto du = integer_coefficients(popularity_gf(PatternId::DU, n));
      auto uu = integer_coefficients(popularity_gf(PatternId::UU, n));
      auto udu = integer_coefficients(popularity_gf(PatternId::UDU, n));
      const auto& m = motzkin();
      for (int k = 1; k <= n; ++k) {
        auto i = static_cast<std::size_t>(k);
        std::optional<std::string> bad;
        if (k + 1 <= n && udu[i + 1] != ud[i]) bad = "UDU(" + std::to_string(k + 1) + ") != UD(" + std::to_string(k) + ")";
        if (du[i] != ud[i] - m[i]) bad = "DU(n) != UD(n) - M_n at n=" + std::to_string(k);
        if (uu[i] + ud[i] != BigInt(k) * m[i]) bad = "UU(n) + UD(n) != n M_n at n=" + std::to_string(k);
        if (bad) {
          add("popularity relations", CheckStatus::fail, "derived relation broken", bad);
          return;
        }
      }
      add("popularity relations", CheckStatus::pass,
          "UDU(n+1) = UD(n), DU(n) = UD(n) - M_n, UU(n) + UD(n) = n M_n for n<=" + std::to_string(n));
    });
  }

  void structure() {
    const Pattern uud = Pattern::word("UUD"), duu = Pattern::word("DUU");
    guarded("UUD in DUU-avoiders", [&] {
      std::size_t avoiders = 0;
      for (int n = 0; n <= max_n_; ++n) {
        for (const auto& p : enumerate_constrained(static_cast<std::size_t>(n))) {
          if (count_occurrences(p, duu) != 0) continue;
          ++avoiders;
          if (count_occurrences(p, uud) > 1) {
            add("UUD in DUU-avoiders", CheckStatus::fail, "DUU-avoider with several UUD", p.str());
            return;
          }
        }
      }
      add("UUD in DUU-avoiders", CheckStatus::pass,
          "each of " + std::to_string(avoiders) + " DUU-avoiders with n<=" + std::to_string(max_n_) +
              " has at most one UUD");
    });
    if (const auto* ref = data_.sequence("A001793")) {
      guarded("UUD twice", [&] {
        std::vector<BigInt> counts;
        for (int n = 1; n <= max_n_; ++n) {
          std::size_t c = 0;
          for (const auto& p : enumerate_constrained(static_cast<std::size_t>(n)))
            if (count_occurrences(p, uud) == 2) ++c;
          counts.emplace_back(static_cast<unsigned long>(c));
        }
        auto r = compare_sequence(1, counts, *ref);
        r.check = "UUD twice";
        r.details = "paths with exactly two UUD: " + join(tail_from(counts, 3), 64) + " from n=4; " + r.details;
        report_.checks.push_back(std::move(r));
      });
    }
    guarded("DUU avoiders", [&] {
      auto col = column(distribution_table(brute(PatternId::DUU, max_n_)), 1, 0);
      std::optional<int> pow_break, sq_break;
      for (std::size_t i = 0; i < col.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        BigInt pow2 = BigInt(1) << static_cast<mp_bitcnt_t>(n - 1);
        if (!pow_break && col[i] != pow2) pow_break = n;
        if (!sq_break && !mpz_perfect_square_p(col[i].get_mpz_t())) sq_break = n;
      }
      std::ostringstream d;
      d << "DUU-avoiders for n=1.." << max_n_ << ": " << join(col, 64) << "; ";
      if (!pow_break) d << "powers of two 2^(n-1) throughout (agrees with the table row k=0)";
      else d << "not powers of two (first break at n=" << *pow_break << ")";
      d << "; ";
      if (!sq_break) d << "all perfect squares (agrees with the prose)";
      else d << "not integer squares (first non-square at n=" << *sq_break << ", contradicting the prose)";
      add("DUU avoiders", CheckStatus::info, d.str());
    });
  }

  void oeis() {
    for (const auto& ref : data_.sequences) {
      std::string check = "oeis " + ref.oeis_id;
      guarded(check, [&] {
        auto seq = computed_sequence(ref.oeis_id, max_n_);
        if (!seq) {
          add(check, CheckStatus::info, "no computed counterpart for " + ref.provenance);
          return;
        }
        report_.checks.push_back(compare_sequence(seq->first_index, seq->terms, ref));
      });
    }
  }

  int max_n_;
  const ReferenceData& data_;
  VerificationReport report_;
  std::vector<BigInt> motzkin_;
  std::map<std::pair<PatternId, int>, Series> closed_;
  std::map<std::pair<PatternId, int>, Series> brute_;
};

}  // namespace

VerificationReport run_full_verification(int max_n, const ReferenceData& data) {
  if (max_n < 1 || max_n > brute_force_bound)
    throw std::out_of_range("max_n must lie in 1.." + std::to_string(brute_force_bound));
  return Campaign(max_n, data).run();
}

VerificationReport run_full_verification(int max_n) {
  return run_full_verification(max_n, embedded_reference_data());
}

}  // namespace dyckpop
