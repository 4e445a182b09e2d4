#include "cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "error.hpp"
#include "family_io.hpp"

namespace powerclose::io {

ResultCache::ResultCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (ec || !std::filesystem::is_directory(directory_)) fail(ErrorCode::kIoError, "cannot use cache directory " + directory_.string());
}

std::filesystem::path ResultCache::pathFor(const std::string& key) const { return directory_ / (sha256Hex(key) + ".entry"); }

std::optional<std::string> ResultCache::load(const std::string& key) const {
  std::ifstream in(pathFor(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream body;
  body << in.rdbuf();
  // the key is stored on the first line, guarding against hash collisions and stray files
  const std::string text = body.str();
  const auto newline = text.find('\n');
  if (newline == std::string::npos || text.compare(0, newline, key) != 0) return std::nullopt;
  return text.substr(newline + 1);
}

void ResultCache::store(const std::string& key, const std::string& value) const {
  if (key.find('\n') != std::string::npos) fail(ErrorCode::kInternal, "cache keys must be single-line");
  const auto target = pathFor(key);
  auto temp = target;
  temp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << key << '\n' << value;
    if (!out) fail(ErrorCode::kIoError, "cannot write cache entry " + temp.string());
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) fail(ErrorCode::kIoError, "cannot install cache entry " + target.string());
}

std::optional<std::filesystem::path> cacheDirectoryFromEnvironment() {
  const char* value = std::getenv("POWERCLOSE_CACHE_DIR");
  if (!value || !*value) return std::nullopt;
  return std::filesystem::path(value);
}

}  // namespace powerclose::io
