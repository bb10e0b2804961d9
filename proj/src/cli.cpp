#include "dyckpop/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dyckpop/bijection.hpp"
#include "dyckpop/enumeration.hpp"
#include "dyckpop/genfun.hpp"
#include "dyckpop/oeis.hpp"
#include "dyckpop/pattern.hpp"
#include "dyckpop/reference_data.hpp"
#include "dyckpop/verifier.hpp"
#include "json.hpp"

namespace dyckpop {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

struct Globals {
  std::string format = "text";
  int max_n = 12;
  std::string seed_tables;
  std::string oeis_cache;
  bool offline = false;
};

std::filesystem::path cache_dir(const Globals& g) {
  return g.oeis_cache.empty() ? default_cache_dir() : std::filesystem::path(g.oeis_cache);
}

ReferenceData load_reference(const Globals& g) {
  ReferenceData d = embedded_reference_data();
  if (!g.seed_tables.empty()) {
    std::ifstream in(g.seed_tables);
    if (!in) throw UsageError("cannot read seed tables " + g.seed_tables);
    d.golden = parse_golden_tables(in);
  }
  return d;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t");
    lines.push_back(line.substr(b, e - b + 1));
  }
  return lines;
}

// Table with rows k and columns n, k capped at the largest k with a nonzero count.
void render_table(std::ostream& out, const std::vector<std::vector<BigInt>>& t) {
  std::size_t kmax = 0;
  for (const auto& row : t)
    for (std::size_t k = 0; k < row.size(); ++k)
      if (row[k] != 0) kmax = std::max(kmax, k);
  std::vector<std::vector<std::string>> cells(kmax + 2);
  std::vector<std::size_t> width(t.size() + 1, 0);
  auto put = [&](std::size_t r, std::string s) {
    std::size_t c = cells[r].size();
    width[c] = std::max(width[c], s.size());
    cells[r].push_back(std::move(s));
  };
  std::vector<std::string> header{"k\\n"};
  width[0] = header[0].size();
  for (std::size_t n = 0; n < t.size(); ++n) {
    header.push_back(std::to_string(n));
    width[n + 1] = std::max(width[n + 1], header.back().size());
  }
  for (std::size_t k = 0; k <= kmax; ++k) {
    put(k, std::to_string(k));
    for (const auto& row : t) put(k, k < row.size() && row[k] != 0 ? row[k].get_str() : "");
  }
  put(kmax + 1, "sum");
  for (const auto& row : t) {
    BigInt s = 0;
    for (const auto& c : row) s += c;
    put(kmax + 1, s.get_str());
  }
  auto line = [&](const std::vector<std::string>& r) {
    std::string text;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) text += ' ';
      text += std::string(width[c] - r[c].size(), ' ') + r[c];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  };
  line(header);
  for (const auto& r : cells) line(r);
}

PatternId require_pattern(const std::string& s) {
  auto p = parse_pattern_id(s);
  if (!p) throw UsageError("unknown pattern '" + s + "'");
  return *p;
}

int cmd_enumerate(const Globals& g, std::ostream& out, const std::string& fam, int n) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  std::vector<std::string> paths;
  auto take = [&](const auto& stream) {
    for (const auto& p : stream) paths.push_back(p.str());
  };
  auto size = static_cast<std::size_t>(n);
  if (fam == "motzkin") take(enumerate_motzkin(size));
  else if (fam == "dyck") take(enumerate_dyck(size));
  else take(enumerate_constrained(size));
  if (g.format == "json") {
    Json j;
    j["family"] = fam;
    j["n"] = n;
    j["count"] = paths.size();
    j["paths"] = paths;
    out << j.dump(2) << '\n';
  } else {
    if (g.format == "csv") out << "path\n";
    for (const auto& p : paths) out << p << '\n';
  }
  return 0;
}

int cmd_map(const Globals& g, std::istream& in, std::ostream& out, const std::string& direction,
            std::vector<std::string> args) {
  if (args.empty()) args = read_lines(in);
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& a : args) {
    std::string image = direction == "forward" ? phi(DyckPath::parse(a)).str()
                                               : phi_inverse(MotzkinPath::parse(a)).str();
    rows.emplace_back(a, image);
  }
  if (g.format == "json") {
    Json j = Json::array();
    for (const auto& [a, b] : rows) j.push_back({{"input", a}, {"image", b}});
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "input,image\n";
    for (const auto& [a, b] : rows) out << a << ',' << b << '\n';
  } else {
    for (const auto& r : rows) out << r.second << '\n';
  }
  return 0;
}

int cmd_count(const Globals& g, std::istream& in, std::ostream& out, const std::string& expr,
              const std::string& side_name, std::vector<std::string> args) {
  const Statistic stat = Statistic::parse(expr);
  if (args.empty()) args = read_lines(in);
  std::vector<std::pair<std::string, std::int64_t>> rows;
  for (const auto& a : args) {
    MotzkinPath p = MotzkinPath::parse(a);
    Side side;
    if (side_name == "dyck") side = Side::dyck;
    else if (side_name == "motzkin") side = Side::motzkin;
    else side = std::none_of(p.steps().begin(), p.steps().end(), [](Step s) { return s == Step::F; })
                    ? Side::dyck : Side::motzkin;
    if (side == Side::dyck) validate_dyck(p);
    rows.emplace_back(a, evaluate_statistic(p, stat, side));
  }
  if (g.format == "json") {
    Json j = Json::array();
    for (const auto& [a, v] : rows) j.push_back({{"path", a}, {"value", v}});
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "path,value\n";
    for (const auto& [a, v] : rows) out << a << ',' << v << '\n';
  } else {
    for (const auto& r : rows) out << r.second << '\n';
  }
  return 0;
}

int cmd_check_transport(const Globals& g, std::ostream& out, const std::string& rule_name, bool all) {
  std::vector<TransportRule> rules;
  if (all || rule_name.empty()) {
    rules = transport_rules();
    rules.push_back(*find_rule("DD"));
  } else {
    auto r = find_rule(rule_name);
    if (!r) throw UsageError("unknown rule '" + rule_name + "'");
    rules.push_back(*r);
  }
  bool ok = true;
  Json j = Json::array();
  if (g.format == "csv") out << "rule,n,paths,status\n";
  for (const auto& rule : rules) {
    for (int n = static_cast<int>(rule.min_n); n <= g.max_n; ++n) {
      auto r = check_transport(rule, static_cast<std::size_t>(n));
      ok = ok && r.passed;
      std::string status = r.passed ? "PASS" : "FAIL";
      if (g.format == "json") {
        Json e{{"rule", rule.name}, {"n", n}, {"paths", r.paths_checked}, {"status", status}};
        if (r.counterexample)
          e["counterexample"] = {{"dyck", r.counterexample->dyck},
                                 {"motzkin", r.counterexample->motzkin},
                                 {"lhs", r.counterexample->lhs},
                                 {"rhs", r.counterexample->rhs}};
        j.push_back(std::move(e));
      } else if (g.format == "csv") {
        out << rule.name << ',' << n << ',' << r.paths_checked << ',' << status << '\n';
      } else {
        out << '[' << status << "] " << rule.name << " n=" << n << " paths=" << r.paths_checked;
        if (r.counterexample)
          out << " counterexample " << r.counterexample->dyck << " -> " << r.counterexample->motzkin << " ("
              << r.counterexample->lhs << " != " << r.counterexample->rhs << ')';
        out << '\n';
      }
    }
  }
  if (g.format == "json") out << j.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_gf(const Globals& g, std::ostream& out, const std::string& pattern, const std::string& method) {
  PatternId p = require_pattern(pattern);
  if (g.max_n < 0) throw UsageError("--max-n must be nonnegative");
  std::vector<GfResult> results;
  std::vector<std::string> used;
  auto run = [&](Method m) {
    results.push_back(distribution_gf(p, m, g.max_n));
    used.emplace_back(name(m));
  };
  if (method == "closed") run(Method::closed_form);
  else if (method == "fixed") {
    if (!has_fixed_point(p)) throw UsageError("no functional equation registered for " + pattern);
    run(Method::fixed_point);
  } else if (method == "brute") {
    if (g.max_n > brute_force_bound)
      throw UsageError("brute force is limited to --max-n " + std::to_string(brute_force_bound));
    run(Method::brute_force);
  } else {
    run(Method::closed_form);
    if (has_fixed_point(p)) run(Method::fixed_point);
    if (g.max_n <= brute_force_bound) run(Method::brute_force);
    for (std::size_t i = 1; i < results.size(); ++i)
      if (!(results[i].series == results[0].series))
        throw MethodMismatch(used[i] + " disagrees with " + used[0] + " for " + pattern);
  }
  auto table = distribution_table(results.front().series);
  if (g.format == "csv") {
    out << "n,k,count\n";
    for (std::size_t n = 0; n < table.size(); ++n)
      for (std::size_t k = 0; k < table[n].size(); ++k) out << n << ',' << k << ',' << table[n][k] << '\n';
  } else if (g.format == "json") {
    Json j;
    j["pattern"] = std::string(name(p));
    j["methods"] = used;
    j["max_n"] = g.max_n;
    Json rows = Json::array();
    for (const auto& row : table) {
      Json r = Json::array();
      for (const auto& c : row) r.push_back(to_json(c));
      rows.push_back(std::move(r));
    }
    j["counts"] = std::move(rows);
    out << j.dump(2) << '\n';
  } else {
    out << "pattern " << name(p) << ", methods:";
    for (const auto& m : used) out << ' ' << m;
    out << '\n';
    render_table(out, table);
  }
  return 0;
}

int cmd_popularity(const Globals& g, std::ostream& out, const std::string& pattern) {
  PatternId p = require_pattern(pattern);
  if (g.max_n < 1) throw UsageError("--max-n must be at least 1");
  auto terms = integer_coefficients(popularity_gf(p, g.max_n));
  if (g.format == "csv") {
    out << "n,value\n";
    for (int n = 1; n <= g.max_n; ++n) out << n << ',' << terms[static_cast<std::size_t>(n)] << '\n';
  } else if (g.format == "json") {
    Json j;
    j["pattern"] = std::string(name(p));
    Json v = Json::array();
    for (int n = 1; n <= g.max_n; ++n) v.push_back(to_json(terms[static_cast<std::size_t>(n)]));
    j["first_n"] = 1;
    j["values"] = std::move(v);
    out << j.dump(2) << '\n';
  } else {
    for (int n = 1; n <= g.max_n; ++n) out << (n > 1 ? "," : "") << terms[static_cast<std::size_t>(n)];
    out << '\n';
  }
  return 0;
}

int cmd_verify(const Globals& g, std::ostream& out, bool with_bfiles) {
  ReferenceData data = load_reference(g);
  if (with_bfiles) {
    OeisClient client({cache_dir(g), true, false});
    for (auto& ref : data.sequences) {
      if (auto b = client.cached(ref.oeis_id)) {
        ref.offset = b->offset;
        ref.terms = std::move(b->terms);
        ref.provenance = client.cache_file(ref.oeis_id).string();
      }
    }
  }
  auto report = run_full_verification(g.max_n, data);
  if (g.format == "json") report.write_json(out);
  else if (g.format == "csv") {
    out << "check,status\n";
    for (const auto& c : report.checks) out << c.check << ',' << name(c.status) << '\n';
  } else {
    report.write_text(out);
  }
  return report.ok() ? 0 : 1;
}

int cmd_oeis_fetch(const Globals& g, std::ostream& out, const std::string& id, bool refresh) {
  if (!is_oeis_id(id)) throw UsageError("not an OEIS identifier: " + id);
  OeisClient client({cache_dir(g), g.offline, refresh});
  ReferenceData fallback = embedded_reference_data();
  auto r = client.fetch(id, &fallback);
  if (g.format == "json") {
    Json j;
    j["id"] = id;
    j["source"] = std::string(name(r.source));
    j["file"] = r.file.string();
    j["offset"] = r.data.offset;
    Json t = Json::array();
    for (const auto& v : r.data.terms) t.push_back(to_json(v));
    j["terms"] = std::move(t);
    out << j.dump(2) << '\n';
  } else if (g.format == "csv") {
    out << "n,value\n";
    for (std::size_t i = 0; i < r.data.terms.size(); ++i)
      out << r.data.offset + static_cast<int>(i) << ',' << r.data.terms[i] << '\n';
  } else {
    out << id << ": " << r.data.terms.size() << " terms from offset " << r.data.offset << " ("
        << name(r.source);
    if (!r.file.empty()) out << ' ' << r.file.string();
    out << ")\n";
    for (std::size_t i = 0; i < r.data.terms.size() && i < 20; ++i) out << (i ? "," : "") << r.data.terms[i];
    out << (r.data.terms.size() > 20 ? ",...\n" : "\n");
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Height-constrained Dyck paths, Motzkin paths and pattern statistics", "dyckpop"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--max-n", g.max_n, "Largest size considered");
  app.add_option("--seed-tables", g.seed_tables, "Golden distribution table file replacing the built-in one");
  app.add_option("--oeis-cache", g.oeis_cache, "b-file cache directory (overrides DYCKPOP_OEIS_CACHE)");
  app.add_flag("--offline", g.offline, "Never touch the network");

  std::string family = "constrained";
  int size = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List paths in lexicographic order (U < D < F)");
  enumerate->add_option("--family", family)->check(CLI::IsMember({"motzkin", "dyck", "constrained"}));
  enumerate->add_option("--n", size, "Semilength (Dyck) or length (Motzkin)")->required();

  std::string direction = "forward";
  std::vector<std::string> map_args;
  auto* map = app.add_subcommand("map", "Apply phi or its inverse to paths given as arguments or on stdin");
  map->add_option("--direction", direction)->check(CLI::IsMember({"forward", "inverse"}));
  map->add_option("paths", map_args);

  std::string expr, side = "auto";
  std::vector<std::string> count_args;
  auto* count = app.add_subcommand("count", "Evaluate a statistic on paths");
  count->add_option("--pattern", expr, "Statistic, e.g. 'UF+D + UD' or 'DU'")->required();
  count->add_option("--side", side)->check(CLI::IsMember({"auto", "dyck", "motzkin"}));
  count->add_option("--path,paths", count_args);

  std::string rule;
  bool all_rules = false;
  auto* transport = app.add_subcommand("check-transport", "Check transport rules exhaustively up to --max-n");
  transport->add_option("--rule", rule);
  transport->add_flag("--all", all_rules);

  std::string gf_pattern, method = "closed";
  auto* gf = app.add_subcommand("gf", "Distribution of a pattern");
  gf->add_option("--pattern", gf_pattern)->required();
  gf->add_option("--method", method)->check(CLI::IsMember({"closed", "fixed", "brute", "all"}));

  std::string pop_pattern;
  auto* pop = app.add_subcommand("popularity", "Total occurrences of a pattern for n = 1..max-n");
  pop->add_option("--pattern", pop_pattern)->required();

  bool with_bfiles = false;
  auto* verify = app.add_subcommand("verify", "Run the full verification campaign");
  verify->add_flag("--with-bfiles", with_bfiles, "Compare against cached b-files where present");

  std::string id;
  bool refresh = false;
  auto* fetch = app.add_subcommand("oeis-fetch", "Download and cache an OEIS b-file");
  fetch->add_option("id", id)->required();
  fetch->add_flag("--refresh", refresh);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) return cmd_enumerate(g, out, family, size);
    if (*map) return cmd_map(g, in, out, direction, map_args);
    if (*count) return cmd_count(g, in, out, expr, side, count_args);
    if (*transport) return cmd_check_transport(g, out, rule, all_rules);
    if (*gf) return cmd_gf(g, out, gf_pattern, method);
    if (*pop) return cmd_popularity(g, out, pop_pattern);
    if (*verify) return cmd_verify(g, out, with_bfiles);
    if (*fetch) return cmd_oeis_fetch(g, out, id, refresh);
  } catch (const MethodMismatch& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace dyckpop
