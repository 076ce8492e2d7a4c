#include "cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>

namespace jk::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string engine_version, std::ostream* warn)
    : dir_(std::move(dir)), version_(std::move(engine_version)), warn_(warn) {}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  return dir_ / (sha256_hex(version_ + "\n" + key) + ".json");
}

std::optional<nlohmann::ordered_json> ResultCache::get(const std::string& key) const {
  const auto path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  auto miss = [&](const char* why) -> std::optional<nlohmann::ordered_json> {
    if (warn_) *warn_ << "warning: ignoring cache entry " << path.string() << ": " << why << "\n";
    return std::nullopt;
  };
  nlohmann::ordered_json entry;
  try {
    entry = nlohmann::ordered_json::parse(buf.str());
  } catch (const nlohmann::json::exception&) {
    return miss("not valid JSON");
  }
  if (!entry.is_object() || !entry.contains("payload") || !entry.contains("checksum")) return miss("missing fields");
  if (entry.value("version", "") != version_) return std::nullopt;
  if (entry.value("key", "") != key) return miss("key mismatch");
  if (entry["checksum"] != sha256_hex(entry["payload"].dump())) return miss("checksum mismatch");
  return entry["payload"];
}

void ResultCache::put(const std::string& key, const nlohmann::ordered_json& payload) const {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(dir_);
  nlohmann::ordered_json entry;
  entry["key"] = key;
  entry["version"] = version_;
  entry["checksum"] = sha256_hex(payload.dump());
  entry["payload"] = payload;
  const auto target = path_for(key);
  const auto tmp = dir_ / (target.filename().string() + ".tmp." + std::to_string(::getpid()) + "." +
                           std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << entry.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace jk::cli
