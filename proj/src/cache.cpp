#include "pinched/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include <json.hpp>

namespace pinched {

using nlohmann::json;

namespace {

json header(const PinchConfig& normalized, const FieldSpec& field) {
  return {{"schema_version", kCacheSchemaVersion},
          {"n", normalized.n()},
          {"d", normalized.d()},
          {"m", normalized.m().coords()},
          {"field", field.str()}};
}

}  // namespace

std::string ResultCache::file_name(const PinchConfig& config, const FieldSpec& field) {
  const PinchConfig norm = config.normalized();
  std::string m;
  for (int v : norm.m().coords()) m += (m.empty() ? "" : "-") + std::to_string(v);
  const std::string f = field.kind() == FieldSpec::Kind::Rationals
                            ? "qq"
                            : "gf" + std::to_string(field.characteristic());
  return "n" + std::to_string(norm.n()) + "_d" + std::to_string(norm.d()) + "_m" + m + "_" + f +
         ".json";
}

ResultCache::ResultCache(std::filesystem::path dir, const PinchConfig& config, const FieldSpec& field)
    : file_(std::move(dir) / file_name(config, field)), config_(config.normalized()), field_(field) {
  load();
}

ResultCache::~ResultCache() {
  try {
    flush();
  } catch (...) {
  }
}

void ResultCache::load() {
  std::ifstream in(file_);
  if (!in) return;
  json doc = json::parse(in, nullptr, false);
  const json want = header(config_, field_);
  bool ok = doc.is_object();
  for (auto it = want.begin(); ok && it != want.end(); ++it) {
    ok = doc.contains(it.key()) && doc[it.key()] == it.value();
  }
  if (!ok || !doc.contains("entries") || !doc["entries"].is_object()) {
    ++discarded_;
    dirty_ = true;
    return;
  }
  for (auto it = doc["entries"].begin(); it != doc["entries"].end(); ++it) {
    try {
      const Multidegree h = Multidegree::parse(it.key());
      if (h.size() != config_.n() || h.total() % config_.d() != 0) throw std::invalid_argument("h");
      if (!it.value().is_array()) throw std::invalid_argument("dims");
      std::vector<std::int64_t> dims;
      for (const auto& v : it.value()) {
        if (!v.is_number_integer()) throw std::invalid_argument("dims");
        dims.push_back(v.get<std::int64_t>());
      }
      HomologyProfile p(std::move(dims));
      if (p.raw().size() != it.value().size()) throw std::invalid_argument("untrimmed");
      entries_.emplace(h.str(), std::move(p));
    } catch (const std::exception&) {
      ++discarded_;
      dirty_ = true;
    }
  }
}

std::optional<HomologyProfile> ResultCache::lookup(const Multidegree& normalized_h) {
  auto it = entries_.find(normalized_h.str());
  if (it == entries_.end()) return std::nullopt;
  ++hits_;
  return it->second;
}

void ResultCache::store(const Multidegree& normalized_h, const HomologyProfile& profile) {
  entries_.insert_or_assign(normalized_h.str(), profile);
  dirty_ = true;
}

void ResultCache::flush() {
  if (!dirty_) return;
  json doc = header(config_, field_);
  json entries = json::object();
  for (const auto& [key, p] : entries_) entries[key] = p.raw();
  doc["entries"] = std::move(entries);

  std::filesystem::create_directories(file_.parent_path());
  std::filesystem::path tmp = file_;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file_);
  dirty_ = false;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return std::filesystem::path(*explicit_dir);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace pinched
