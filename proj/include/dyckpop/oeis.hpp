#pragma once

#include <filesystem>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyckpop/enumeration.hpp"
#include "dyckpop/reference_data.hpp"

namespace dyckpop {

class MalformedBFile : public std::runtime_error {
 public:
  MalformedBFile(std::size_t line, const std::string& what)
      : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class NetworkUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheMiss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Terms of a b-file; offset is the index on the first data line.
struct BFile {
  int offset = 0;
  std::vector<BigInt> terms;
};

/// Parses "n a(n)" lines. '#' lines and blank lines are skipped anywhere.
/// Indices must be consecutive.
BFile parse_bfile(std::istream& in);
BFile parse_bfile(const std::string& text);

bool is_oeis_id(const std::string& id);

/// "A025566" -> "/A025566/b025566.txt"
std::string bfile_path(const std::string& id);

/// Cache directory: $DYCKPOP_OEIS_CACHE, else $XDG_CACHE_HOME/dyckpop/oeis,
/// else ~/.cache/dyckpop/oeis.
std::filesystem::path default_cache_dir();

/// HTTPS GET against oeis.org. Throws NetworkUnavailable.
std::string http_fetch(const std::string& path);

class OeisClient {
 public:
  struct Options {
    std::filesystem::path cache_dir;
    bool offline = false;
    bool refresh = false;  // re-download even when cached
  };
  using Fetcher = std::function<std::string(const std::string& path)>;

  enum class Source { cache, network, embedded };

  struct Result {
    BFile data;
    Source source;
    std::filesystem::path file;  // cache file, empty for embedded data
  };

  explicit OeisClient(Options opts, Fetcher fetcher = http_fetch)
      : opts_(std::move(opts)), fetch_(std::move(fetcher)) {}

  /// Cached file if present (unless refresh), else download and store
  /// verbatim. Offline: cache, then the embedded table prefixes in
  /// `fallback`, else CacheMiss.
  Result fetch(const std::string& id, const ReferenceData* fallback = nullptr) const;

  std::filesystem::path cache_file(const std::string& id) const;

  /// Returns the cached b-file for id without any network access, if present.
  std::optional<BFile> cached(const std::string& id) const;

 private:
  Options opts_;
  Fetcher fetch_;
};

std::string_view name(OeisClient::Source s);

}  // namespace dyckpop
