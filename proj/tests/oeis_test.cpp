#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "dyckpop/oeis.hpp"

using namespace dyckpop;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("dyckpop-oeis-" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* const sample = "# A025566 sample\n0 1\n1 1\n\n2 3\n# mid comment\n3 8\n4 22\n";

}  // namespace

TEST(BFile, Parse) {
  auto b = parse_bfile(std::string(sample));
  EXPECT_EQ(b.offset, 0);
  EXPECT_EQ(b.terms, (std::vector<BigInt>{1, 1, 3, 8, 22}));
  auto big = parse_bfile(std::string("5 123456789012345678901234567890\r\n"));
  EXPECT_EQ(big.offset, 5);
  EXPECT_EQ(big.terms[0], BigInt("123456789012345678901234567890"));
  EXPECT_TRUE(parse_bfile(std::string("# nothing\n")).terms.empty());
}

TEST(BFile, Malformed) {
  try {
    parse_bfile(std::string("0 1\nabc\n"));
    FAIL();
  } catch (const MalformedBFile& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_bfile(std::string("0 1\n2 5\n")), MalformedBFile);
  EXPECT_THROW(parse_bfile(std::string("0 x\n")), MalformedBFile);
  EXPECT_THROW(parse_bfile(std::string("0 1 2\n")), MalformedBFile);
}

TEST(OeisIds, Validation) {
  EXPECT_TRUE(is_oeis_id("A025566"));
  EXPECT_FALSE(is_oeis_id("A25566"));
  EXPECT_FALSE(is_oeis_id("B025566"));
  EXPECT_EQ(bfile_path("A025566"), "/A025566/b025566.txt");
}

TEST(OeisClient, DownloadsOnceAndCachesVerbatim) {
  TempDir dir;
  int calls = 0;
  std::string requested;
  auto fetcher = [&](const std::string& path) {
    ++calls;
    requested = path;
    return std::string(sample);
  };
  OeisClient client({dir.path(), false, false}, fetcher);
  auto r = client.fetch("A025566");
  EXPECT_EQ(r.source, OeisClient::Source::network);
  EXPECT_EQ(requested, "/A025566/b025566.txt");
  EXPECT_EQ(slurp(client.cache_file("A025566")), sample);
  auto again = client.fetch("A025566");
  EXPECT_EQ(again.source, OeisClient::Source::cache);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(again.data.terms, r.data.terms);

  OeisClient refreshing({dir.path(), false, true}, fetcher);
  EXPECT_EQ(refreshing.fetch("A025566").source, OeisClient::Source::network);
  EXPECT_EQ(calls, 2);
}

TEST(OeisClient, OfflineServesCacheByteIdentically) {
  TempDir dir;
  {
    std::ofstream out(dir.path() / "A025566.txt", std::ios::binary);
    out << sample;
  }
  auto never = [](const std::string&) -> std::string { throw NetworkUnavailable("offline test"); };
  OeisClient client({dir.path(), true, true}, never);
  auto r = client.fetch("A025566");
  EXPECT_EQ(r.source, OeisClient::Source::cache);
  EXPECT_EQ(slurp(r.file), sample);
}

TEST(OeisClient, OfflineFallsBackToEmbeddedOrMisses) {
  TempDir dir;
  auto never = [](const std::string&) -> std::string { throw NetworkUnavailable("offline test"); };
  OeisClient client({dir.path(), true, false}, never);
  auto data = embedded_reference_data();
  auto r = client.fetch("A025567", &data);
  EXPECT_EQ(r.source, OeisClient::Source::embedded);
  EXPECT_EQ(r.data.offset, 1);
  EXPECT_EQ(r.data.terms.size(), 12u);
  EXPECT_THROW(client.fetch("A000045", &data), CacheMiss);
  EXPECT_THROW(client.fetch("A025567"), CacheMiss);
}

TEST(OeisClient, NetworkErrorsPropagateAndLeaveNoCache) {
  TempDir dir;
  auto down = [](const std::string&) -> std::string { throw NetworkUnavailable("down"); };
  OeisClient client({dir.path(), false, false}, down);
  EXPECT_THROW(client.fetch("A025566"), NetworkUnavailable);
  EXPECT_FALSE(fs::exists(client.cache_file("A025566")));

  auto garbage = [](const std::string&) { return std::string("<html>not found</html>\n"); };
  OeisClient bad({dir.path(), false, false}, garbage);
  EXPECT_THROW(bad.fetch("A025566"), MalformedBFile);
  EXPECT_FALSE(fs::exists(bad.cache_file("A025566")));
}

TEST(OeisClient, CacheDirFromEnvironment) {
  ::setenv("DYCKPOP_OEIS_CACHE", "/tmp/some-cache", 1);
  EXPECT_EQ(default_cache_dir(), fs::path("/tmp/some-cache"));
  ::unsetenv("DYCKPOP_OEIS_CACHE");
  EXPECT_NE(default_cache_dir(), fs::path("/tmp/some-cache"));
}
