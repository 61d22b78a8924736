#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "aspectsim/corpus_ingest.hpp"
#include "aspectsim/metadata_client.hpp"

namespace aspectsim {

/// Flat view of a TOML document: "table.key" -> value. Covers the subset
/// used by run configs: tables, strings, integers, floats, booleans and
/// single-line arrays.
class TomlDocument {
 public:
  using Value = std::variant<std::string, std::int64_t, double, bool, std::vector<std::string>>;

  static TomlDocument parse(std::string_view text);
  static TomlDocument load(const std::filesystem::path& path);

  [[nodiscard]] bool contains(const std::string& key) const { return values_.contains(key); }
  [[nodiscard]] std::optional<std::string> get_string(const std::string& key) const;
  [[nodiscard]] std::optional<std::int64_t> get_int(const std::string& key) const;
  [[nodiscard]] std::optional<double> get_double(const std::string& key) const;
  [[nodiscard]] std::optional<bool> get_bool(const std::string& key) const;
  [[nodiscard]] const std::map<std::string, Value>& values() const { return values_; }

 private:
  std::map<std::string, Value> values_;
};

struct BuildConfig {
  std::filesystem::path corpus_path;
  CorpusFormat format = CorpusFormat::kAclStyle;
  std::string corpus_name;
  std::filesystem::path variants_path;  // empty = built-in table
  double negative_ratio = 0.5;
  std::uint64_t seed = 42;
  std::size_t folds = 4;
  std::size_t top_k = 9;
  bool enrich = false;
  MetadataClientConfig metadata;

  /// Applies [corpus], [labels], [negatives], [folds] and [metadata] tables.
  void apply(const TomlDocument& doc);

  /// Reproducibility-relevant settings only (no timestamps, no secrets).
  [[nodiscard]] nlohmann::ordered_json to_json() const;
  [[nodiscard]] std::string hash() const;
};

/// Hex FNV-1a of the canonical JSON dump.
std::string config_hash(const nlohmann::ordered_json& config);

}  // namespace aspectsim
