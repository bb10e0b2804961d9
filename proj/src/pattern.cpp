#include "dyckpop/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "dyckpop/bijection.hpp"
#include "dyckpop/enumeration.hpp"

namespace dyckpop {

Pattern Pattern::parse(std::string_view text) {
  if (text.empty()) throw EmptyPattern();
  Pattern p;
  if (text == "delta") {
    p.dirac_ = true;
    return p;
  }
  std::size_t i = 0;
  if (text[0] == '^') {
    p.start_anchor_ = true;
    ++i;
  }
  for (; i < text.size(); ++i) {
    char c = text[i];
    switch (c) {
      case 'U': p.atoms_.push_back({Step::U}); break;
      case 'D': p.atoms_.push_back({Step::D}); break;
      case 'F': p.atoms_.push_back({Step::F}); break;
      case '+':
        if (p.atoms_.empty() || p.atoms_.back().repeated)
          throw PatternSyntaxError(i, "'+' must follow a step letter");
        // '+' binds to the letter immediately before it.
        if (text[i - 1] == '^' || text[i - 1] == '+')
          throw PatternSyntaxError(i, "'+' must follow a step letter");
        p.atoms_.back().repeated = true;
        break;
      case '$':
        if (i + 1 != text.size()) throw PatternSyntaxError(i, "'$' must end the pattern");
        p.end_anchor_ = true;
        break;
      default:
        if (std::isspace(static_cast<unsigned char>(c)))
          throw PatternSyntaxError(i, "whitespace inside pattern");
        throw PatternSyntaxError(i, std::string("unexpected character '") + c + "'");
    }
  }
  if (p.atoms_.empty()) throw EmptyPattern();
  return p;
}

Pattern Pattern::dirac() {
  Pattern p;
  p.dirac_ = true;
  return p;
}

std::string Pattern::str() const {
  if (dirac_) return "delta";
  std::string s;
  if (start_anchor_) s += '^';
  for (const auto& a : atoms_) {
    s += to_char(a.step);
    if (a.repeated) s += '+';
  }
  if (end_anchor_) s += '$';
  return s;
}

namespace {

// Number of ways to match atoms[ai..] starting exactly at position pos.
std::int64_t match_from(std::span<const Step> s, std::size_t pos,
                        const std::vector<PatternAtom>& atoms, std::size_t ai, bool end_anchor) {
  if (ai == atoms.size()) return (!end_anchor || pos == s.size()) ? 1 : 0;
  const auto& atom = atoms[ai];
  if (pos >= s.size() || s[pos] != atom.step) return 0;
  if (!atom.repeated) return match_from(s, pos + 1, atoms, ai + 1, end_anchor);
  std::int64_t total = 0;
  for (std::size_t k = pos; k < s.size() && s[k] == atom.step; ++k)
    total += match_from(s, k + 1, atoms, ai + 1, end_anchor);
  return total;
}

}  // namespace

std::int64_t count_occurrences(const LatticePath& p, const Pattern& pat) {
  auto s = p.steps();
  if (pat.is_dirac())
    return std::all_of(s.begin(), s.end(), [](Step st) { return st == Step::F; }) ? 1 : 0;
  const auto& atoms = pat.atoms();
  if (pat.start_anchored()) {
    return match_from(s, 0, atoms, 0, pat.end_anchored()) > 0 ? 1 : 0;
  }
  std::int64_t total = 0;
  for (std::size_t start = 0; start < s.size(); ++start)
    total += match_from(s, start, atoms, 0, pat.end_anchored());
  if (pat.end_anchored()) return total > 0 ? 1 : 0;
  return total;
}

Statistic Statistic::parse(std::string_view text) {
  struct Token {
    std::string_view text;
    std::size_t pos;
  };
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    tokens.push_back({text.substr(i, j - i), i});
    i = j;
  }
  if (tokens.empty()) throw EmptyPattern();

  auto sign_of = [](std::string_view t) -> int {
    if (t == "+") return 1;
    if (t == "-" || t == "\xE2\x88\x92") return -1;
    return 0;
  };

  std::vector<Summand> terms;
  std::size_t i = 0;
  int sign = 1;
  if (int s = sign_of(tokens[0].text); s != 0) {
    sign = s;
    ++i;
  }
  bool expect_term = true;
  for (; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    int op = sign_of(tok.text);
    if (!expect_term) {
      if (op == 0) throw PatternSyntaxError(tok.pos, "expected '+' or '-' between terms");
      sign = op;
      expect_term = true;
      continue;
    }
    if (op != 0) throw PatternSyntaxError(tok.pos, "expected a term");
    std::string_view body = tok.text;
    std::int64_t coeff = 1;
    std::size_t offset = tok.pos;
    if (auto star = body.find('*'); star != std::string_view::npos) {
      auto digits = body.substr(0, star);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), coeff);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw PatternSyntaxError(tok.pos, "bad coefficient");
      body = body.substr(star + 1);
      offset += star + 1;
    }
    StatisticTerm term;
    if (body == "N") {
      term.kind = StatisticTerm::Kind::size;
    } else if (!body.empty() && std::all_of(body.begin(), body.end(),
                                            [](char c) { return c >= '0' && c <= '9'; })) {
      std::int64_t k = 0;
      std::from_chars(body.data(), body.data() + body.size(), k);
      term.kind = StatisticTerm::Kind::one;
      coeff *= k;
    } else {
      term.kind = StatisticTerm::Kind::pattern;
      try {
        term.pattern = Pattern::parse(body);
      } catch (const PatternSyntaxError& e) {
        throw PatternSyntaxError(offset + e.position(), "invalid pattern '" + std::string(body) + "'");
      }
    }
    terms.push_back({sign * coeff, std::move(term)});
    expect_term = false;
  }
  if (expect_term) throw PatternSyntaxError(text.size(), "dangling operator");
  return Statistic(std::move(terms));
}

std::string Statistic::str() const {
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    auto c = terms_[i].coefficient;
    if (i == 0) {
      if (c < 0) s += "- ";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    auto mag = c < 0 ? -c : c;
    const auto& t = terms_[i].term;
    switch (t.kind) {
      case StatisticTerm::Kind::one: s += std::to_string(mag); break;
      case StatisticTerm::Kind::size:
        if (mag != 1) s += std::to_string(mag) + "*";
        s += "N";
        break;
      case StatisticTerm::Kind::pattern:
        if (mag != 1) s += std::to_string(mag) + "*";
        s += t.pattern.str();
        break;
    }
  }
  return s;
}

std::int64_t size_of(const LatticePath& p, Side side) {
  auto len = static_cast<std::int64_t>(p.size());
  return side == Side::dyck ? len / 2 : len;
}

std::int64_t evaluate_statistic(const LatticePath& p, const Statistic& e, Side side) {
  std::int64_t v = 0;
  for (const auto& [coeff, term] : e.terms()) {
    switch (term.kind) {
      case StatisticTerm::Kind::one: v += coeff; break;
      case StatisticTerm::Kind::size: v += coeff * size_of(p, side); break;
      case StatisticTerm::Kind::pattern: v += coeff * count_occurrences(p, term.pattern); break;
    }
  }
  return v;
}

const std::vector<TransportRule>& transport_rules() {
  static const std::vector<TransportRule> rules = [] {
    auto rule = [](std::string name, std::string_view dyck, std::string_view motzkin,
                   std::size_t min_n = 0) {
      return TransportRule{std::move(name), Statistic::parse(dyck), Statistic::parse(motzkin), min_n};
    };
    return std::vector<TransportRule>{
        rule("UD", "UD", "F + UD"),
        rule("UU", "UU", "U + UU + UF"),
        rule("DU", "DU", "FF + FU + DF + DU"),
        rule("UUD", "UUD", "UF+D + UD"),
        rule("UUU", "UUU", "UF+D + 2*UF+U + 2*UU"),
        rule("DUU", "DUU", "UF+D + UD + delta - 1", 1),
        rule("DUD", "DUD", "F - UF+D - delta", 1),
        rule("UDU", "UDU", "FF + FUD"),
        rule("UDD", "UDD", "FD + UD + FUU + FUF"),
        rule("DDU", "DDU", "DF + DU + FUU + FUF"),
        rule("DDD", "DDD", "2*UU + 2*UF - FD - FUU - FUF"),
        rule("U", "U", "U + D + F"),
        rule("D", "D", "U + D + F"),
        rule("^UD", "^UD", "delta", 1),
        rule("^UU", "^UU", "1 - delta", 1),
    };
  }();
  return rules;
}

std::optional<TransportRule> find_rule(std::string_view name) {
  const auto& rules = transport_rules();
  if (name == "DD") {
    auto uu = *find_rule("UU");
    uu.name = "DD";
    uu.dyck_side = Statistic::parse("DD");
    return uu;
  }
  for (const auto& r : rules)
    if (r.name == name) return r;
  return std::nullopt;
}

TransportReport check_transport(const TransportRule& rule, std::size_t n) {
  TransportReport report;
  report.rule = rule.name;
  report.n = n;
  for (const auto& p : enumerate_constrained(n)) {
    ++report.paths_checked;
    auto lhs = evaluate_statistic(p, rule.dyck_side, Side::dyck);
    auto image = phi_unchecked(p);
    auto rhs = evaluate_statistic(image, rule.motzkin_side, Side::motzkin);
    if (lhs != rhs) {
      report.passed = false;
      if (!report.counterexample) report.counterexample = {p.str(), image.str(), lhs, rhs};
    }
  }
  return report;
}

}  // namespace dyckpop
