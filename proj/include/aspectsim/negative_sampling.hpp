#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "aspectsim/aspect_pairs.hpp"
#include "aspectsim/paper_record.hpp"

namespace aspectsim {

/// Read-only lookup tables for the four dissimilarity constraints. Built once
/// from the retained record store.
class NegativeConstraintIndex {
 public:
  explicit NegativeConstraintIndex(const std::vector<PaperRecord>& records);

  [[nodiscard]] bool contains(std::string_view paper_id) const;
  /// Citation between a and b in either direction.
  [[nodiscard]] bool is_positive_pair(std::string_view a, std::string_view b) const;
  /// Some paper in the store cites both a and b.
  [[nodiscard]] bool are_cocited(std::string_view a, std::string_view b) const;
  [[nodiscard]] bool share_author(std::string_view a, std::string_view b) const;
  [[nodiscard]] bool same_venue(std::string_view a, std::string_view b) const;

  [[nodiscard]] const std::vector<std::string>& paper_ids() const { return ids_; }
  [[nodiscard]] std::size_t positive_pair_count() const { return positive_pairs_.size(); }

 private:
  struct PaperInfo {
    std::set<std::string> authors;  // normalized
    std::string venue;              // normalized, empty = unknown
    std::set<std::size_t> cited_by;
  };
  [[nodiscard]] const PaperInfo& info(std::string_view id) const;
  static std::uint64_t pair_key(std::size_t a, std::size_t b);

  std::vector<std::string> ids_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<PaperInfo> info_;
  std::unordered_set<std::uint64_t> positive_pairs_;
};

enum class NegativeVerdict {
  kValid,
  kPositivePair,
  kCocited,
  kSharedAuthor,
  kSameVenue,
};

std::string_view to_string(NegativeVerdict verdict);

/// First failing constraint, or kValid. Throws std::invalid_argument for
/// a == b or unknown keys.
NegativeVerdict check_negative(std::string_view a, std::string_view b, const NegativeConstraintIndex& index);
bool is_valid_negative(std::string_view a, std::string_view b, const NegativeConstraintIndex& index);

struct SamplerReport {
  std::size_t requested = 0;
  std::size_t produced = 0;
  std::size_t attempts = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> rejections;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

class SamplingError : public std::runtime_error {
 public:
  SamplingError(const std::string& what, SamplerReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  [[nodiscard]] const SamplerReport& report() const { return report_; }

 private:
  SamplerReport report_;
};

/// Attempts allowed per requested negative before giving up.
inline constexpr std::size_t kAttemptsPerNegative = 100;

/// Uniform rejection sampling of `count` distinct None pairs, stored with
/// seed_id < target_id. Deterministic for a given (index, count, seed).
std::vector<DocumentPair> sample_negatives(const NegativeConstraintIndex& index, std::size_t none_index,
                                           std::size_t count, std::uint64_t rng_seed,
                                           SamplerReport* report = nullptr);

/// round(ratio * positives), halves rounded up.
std::size_t negative_count_for(std::size_t positive_pairs, double ratio);

}  // namespace aspectsim
