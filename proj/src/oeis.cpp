#include "dyckpop/oeis.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "httplib.h"

namespace dyckpop {

BFile parse_bfile(std::istream& in) {
  BFile b;
  std::string line;
  std::size_t number = 0;
  bool first = true;
  long expected = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ss(line);
    std::string idx_text, val_text, extra;
    if (!(ss >> idx_text >> val_text) || (ss >> extra))
      throw MalformedBFile(number, "expected 'index value'");
    long idx = 0;
    try {
      std::size_t used = 0;
      idx = std::stol(idx_text, &used);
      if (used != idx_text.size()) throw std::invalid_argument(idx_text);
    } catch (const std::exception&) {
      throw MalformedBFile(number, "bad index '" + idx_text + "'");
    }
    BigInt v;
    if (v.set_str(val_text, 10) != 0) throw MalformedBFile(number, "bad value '" + val_text + "'");
    if (first) {
      b.offset = static_cast<int>(idx);
      expected = idx;
      first = false;
    }
    if (idx != expected) throw MalformedBFile(number, "index " + idx_text + " out of sequence");
    ++expected;
    b.terms.push_back(std::move(v));
  }
  return b;
}

BFile parse_bfile(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in);
}

bool is_oeis_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i)
    if (id[i] < '0' || id[i] > '9') return false;
  return true;
}

std::string bfile_path(const std::string& id) { return "/" + id + "/b" + id.substr(1) + ".txt"; }

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("DYCKPOP_OEIS_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "dyckpop" / "oeis";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "dyckpop" / "oeis";
  return "oeis-cache";
}

std::string http_fetch(const std::string& path) {
  httplib::Client client("https://oeis.org");
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res) throw NetworkUnavailable("request for " + path + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw NetworkUnavailable("request for " + path + " returned HTTP " + std::to_string(res->status));
  return res->body;
}

std::filesystem::path OeisClient::cache_file(const std::string& id) const {
  return opts_.cache_dir / (id + ".txt");
}

std::optional<BFile> OeisClient::cached(const std::string& id) const {
  auto file = cache_file(id);
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  return parse_bfile(in);
}

OeisClient::Result OeisClient::fetch(const std::string& id, const ReferenceData* fallback) const {
  if (!is_oeis_id(id)) throw std::invalid_argument("not an OEIS identifier: " + id);
  auto file = cache_file(id);
  bool have_cache = std::filesystem::exists(file);
  if (have_cache && (!opts_.refresh || opts_.offline)) {
    std::ifstream in(file, std::ios::binary);
    return {parse_bfile(in), Source::cache, file};
  }
  if (opts_.offline) {
    if (fallback) {
      if (const auto* ref = fallback->sequence(id)) return {BFile{ref->offset, ref->terms}, Source::embedded, {}};
    }
    throw CacheMiss("no cached b-file for " + id + " in " + opts_.cache_dir.string());
  }
  std::string body = fetch_(bfile_path(id));
  BFile parsed = parse_bfile(body);  // validate before caching
  std::filesystem::create_directories(opts_.cache_dir);
  auto tmp = file;
  tmp += ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
  return {std::move(parsed), Source::network, file};
}

std::string_view name(OeisClient::Source s) {
  switch (s) {
    case OeisClient::Source::cache: return "cache";
    case OeisClient::Source::network: return "network";
    case OeisClient::Source::embedded: return "embedded";
  }
  return "?";
}

}  // namespace dyckpop
