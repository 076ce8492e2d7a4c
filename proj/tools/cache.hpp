#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

namespace jk::cli {

std::string sha256_hex(const std::string& bytes);

// One JSON file per entry, named by the hash of the key. Entries carry the
// engine version and a checksum of the payload; anything that does not
// validate is a miss.
class ResultCache {
 public:
  ResultCache(std::filesystem::path dir, std::string engine_version, std::ostream* warn = nullptr);

  std::optional<nlohmann::ordered_json> get(const std::string& key) const;
  // Writes a temporary file and renames it over the entry.
  void put(const std::string& key, const nlohmann::ordered_json& payload) const;
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
  std::ostream* warn_;
};

}  // namespace jk::cli
