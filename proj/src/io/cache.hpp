#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace powerclose::io {

/// Directory of small text blobs keyed by arbitrary strings. Writes go through a
/// temporary file and a rename, so readers never see a partial entry.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const noexcept { return directory_; }

  std::optional<std::string> load(const std::string& key) const;
  void store(const std::string& key, const std::string& value) const;

 private:
  std::filesystem::path pathFor(const std::string& key) const;

  std::filesystem::path directory_;
};

/// POWERCLOSE_CACHE_DIR, when set and non-empty.
std::optional<std::filesystem::path> cacheDirectoryFromEnvironment();

}  // namespace powerclose::io
