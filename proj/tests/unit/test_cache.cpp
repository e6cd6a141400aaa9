#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "../../tools/cli.hpp"
#include "pinched/cache.hpp"

using namespace pinched;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = fs::temp_directory_path() / ("pinched_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

int run(const std::vector<std::string>& args, std::string& out) {
  std::vector<const char*> argv{"pinched"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  return code;
}

BettiTable table_with(HomologyStore* store, const PinchConfig& c) {
  EngineOptions opts;
  opts.cache = store;
  return graded_betti(c, FieldSpec::default_field(), c.big_n() - 2, c.big_n() + 1, opts);
}

}  // namespace

TEST(ResultCache, FileNameIsNormalized) {
  EXPECT_EQ(ResultCache::file_name(PinchConfig(2, 5, Multidegree{1, 4}), FieldSpec::default_field()),
            "n2_d5_m4-1_gf32003.json");
  EXPECT_EQ(ResultCache::file_name(PinchConfig(3, 3, Multidegree{0, 1, 2}), FieldSpec::rationals()),
            "n3_d3_m2-1-0_qq.json");
}

TEST(ResultCache, RoundTrip) {
  TempDir dir("roundtrip");
  const PinchConfig c(2, 6, Multidegree{2, 4});
  BettiTable cold = [&] {
    ResultCache cache(dir.path(), c, FieldSpec::default_field());
    EXPECT_EQ(cache.size(), 0u);
    return table_with(&cache, c);
  }();
  ResultCache warm(dir.path(), c, FieldSpec::default_field());
  EXPECT_GT(warm.size(), 0u);
  EXPECT_EQ(warm.discarded(), 0u);
  EXPECT_EQ(table_with(&warm, c), cold);
  EXPECT_EQ(warm.hits(), warm.size());

  // The reversed pinch shares the file and hits every entry.
  const PinchConfig r(2, 6, Multidegree{4, 2});
  ResultCache mirror(dir.path(), r, FieldSpec::default_field());
  EXPECT_EQ(mirror.file(), warm.file());
  EXPECT_EQ(table_with(&mirror, r).entries(), cold.entries());
  EXPECT_EQ(mirror.hits(), mirror.size());
  for (const auto& entry : fs::directory_iterator(dir.path())) {
    EXPECT_EQ(entry.path().extension(), ".json") << entry.path();
  }
}

TEST(ResultCache, FieldsDoNotShareFiles) {
  TempDir dir("fields");
  const PinchConfig c(2, 5, Multidegree{2, 3});
  {
    ResultCache a(dir.path(), c, FieldSpec::default_field());
    a.store(Multidegree{10, 0}, HomologyProfile({0, 1}));
  }
  ResultCache b(dir.path(), c, FieldSpec::prime(2));
  EXPECT_EQ(b.size(), 0u);
}

TEST(ResultCache, CorruptFileIsDiscarded) {
  TempDir dir("corrupt");
  const PinchConfig c(2, 5, Multidegree{2, 3});
  const fs::path file = dir.path() / ResultCache::file_name(c, FieldSpec::default_field());
  std::ofstream(file) << "{ not json";
  ResultCache cache(dir.path(), c, FieldSpec::default_field());
  EXPECT_EQ(cache.size(), 0u);
  EXPECT_EQ(cache.discarded(), 1u);
  const auto cold = table_with(nullptr, c);
  EXPECT_EQ(table_with(&cache, c), cold);
  cache.flush();
  std::ifstream in(file);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["schema_version"], kCacheSchemaVersion);
}

TEST(ResultCache, HeaderMismatchIsDiscarded) {
  TempDir dir("header");
  const PinchConfig c(2, 5, Multidegree{2, 3});
  const fs::path file = dir.path() / ResultCache::file_name(c, FieldSpec::default_field());
  nlohmann::json doc = {{"schema_version", kCacheSchemaVersion + 1}, {"n", 2}, {"d", 5},
                        {"m", {3, 2}}, {"field", "GF(32003)"}, {"entries", {{"10,0", {0, 1}}}}};
  std::ofstream(file) << doc.dump();
  ResultCache cache(dir.path(), c, FieldSpec::default_field());
  EXPECT_EQ(cache.size(), 0u);
  EXPECT_EQ(cache.discarded(), 1u);
}

TEST(ResultCache, BadEntriesAreDiscardedIndividually) {
  TempDir dir("entries");
  const PinchConfig c(2, 5, Multidegree{2, 3});
  const fs::path file = dir.path() / ResultCache::file_name(c, FieldSpec::default_field());
  nlohmann::json doc = {{"schema_version", kCacheSchemaVersion}, {"n", 2}, {"d", 5}, {"m", {3, 2}},
                        {"field", "GF(32003)"},
                        {"entries",
                         {{Multidegree{10, 0}.str(), {0, 1}},
                          {Multidegree{9, 0}.str(), {1}},
                          {Multidegree{5, 5}.str(), "junk"},
                          {Multidegree{6, 4}.str(), {0, -1}},
                          {Multidegree{4, 6}.str(), {1, 0}}}}};
  std::ofstream(file) << doc.dump();
  ResultCache cache(dir.path(), c, FieldSpec::default_field());
  EXPECT_EQ(cache.size(), 1u);
  EXPECT_EQ(cache.discarded(), 4u);
  EXPECT_EQ(cache.lookup(Multidegree{10, 0}), HomologyProfile({0, 1}));
  EXPECT_FALSE(cache.lookup(Multidegree{5, 5}));
}

TEST(ResultCache, ResolveDirectory) {
  ::unsetenv(kCacheDirEnv);
  EXPECT_FALSE(resolve_cache_dir(std::nullopt));
  EXPECT_EQ(resolve_cache_dir(std::string("/tmp/x")), fs::path("/tmp/x"));
  ::setenv(kCacheDirEnv, "/tmp/y", 1);
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/y"));
  EXPECT_EQ(resolve_cache_dir(std::string("/tmp/x")), fs::path("/tmp/x"));
  ::setenv(kCacheDirEnv, "", 1);
  EXPECT_FALSE(resolve_cache_dir(std::nullopt));
  ::unsetenv(kCacheDirEnv);
}

TEST(ResultCache, WarmCliOutputIsByteIdentical) {
  TempDir dir("cli");
  for (const std::string format : {"text", "json", "csv"}) {
    std::string plain, cold, warm;
    const std::vector<std::string> base{"verify", "-d", "6", "--m", "2,4", "--format", format};
    auto cached = base;
    cached.insert(cached.end(), {"--cache-dir", dir.path().string()});
    run(base, plain);
    run(cached, cold);
    run(cached, warm);
    EXPECT_EQ(cold, plain) << format;
    EXPECT_EQ(warm, plain) << format;
  }
  EXPECT_TRUE(fs::exists(dir.path() / "n2_d6_m4-2_gf32003.json"));
}

TEST(ResultCache, EnvironmentVariableEnablesTheCache) {
  TempDir dir("env");
  ::setenv(kCacheDirEnv, dir.path().c_str(), 1);
  std::string out;
  EXPECT_EQ(run({"betti", "-d", "5", "--m", "1,4"}, out), kOk);
  ::unsetenv(kCacheDirEnv);
  EXPECT_TRUE(fs::exists(dir.path() / "n2_d5_m4-1_gf32003.json"));
}
