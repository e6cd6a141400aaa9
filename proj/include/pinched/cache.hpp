#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "pinched/betti.hpp"

namespace pinched {

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCacheDirEnv = "PINCHED_CACHE_DIR";

/// One JSON file of homology profiles per (n, d, normalized m, field), keyed
/// by normalized h. Loading discards a file whose header does not match and
/// any entry that fails to parse. Changes are written on flush() and on
/// destruction, through a temporary file renamed into place.
class ResultCache : public HomologyStore {
 public:
  ResultCache(std::filesystem::path dir, const PinchConfig& config, const FieldSpec& field);
  ~ResultCache() override;
  ResultCache(const ResultCache&) = delete;
  ResultCache& operator=(const ResultCache&) = delete;

  std::optional<HomologyProfile> lookup(const Multidegree& normalized_h) override;
  void store(const Multidegree& normalized_h, const HomologyProfile& profile) override;
  void flush();

  const std::filesystem::path& file() const { return file_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t discarded() const { return discarded_; }
  std::size_t hits() const { return hits_; }

  static std::string file_name(const PinchConfig& config, const FieldSpec& field);

 private:
  void load();

  std::filesystem::path file_;
  PinchConfig config_;
  FieldSpec field_;
  std::map<std::string, HomologyProfile> entries_;
  bool dirty_ = false;
  std::size_t discarded_ = 0;
  std::size_t hits_ = 0;
};

/// Explicit directory if given, else $PINCHED_CACHE_DIR if set and nonempty.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& explicit_dir);

}  // namespace pinched
