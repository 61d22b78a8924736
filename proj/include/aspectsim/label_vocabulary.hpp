#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aspectsim/label_set.hpp"

namespace aspectsim {

/// The label space: top-k canonical section classes (by descending training
/// frequency), then Other, then None. Index assignment follows that order.
class LabelVocabulary {
 public:
  static constexpr std::string_view kOther = "Other";
  static constexpr std::string_view kNone = "None";

  LabelVocabulary() = default;
  explicit LabelVocabulary(std::vector<std::string> positive_classes);

  [[nodiscard]] const std::vector<std::string>& positive_classes() const { return positive_; }
  [[nodiscard]] std::size_t size() const { return positive_.size() + 2; }
  [[nodiscard]] std::size_t other_index() const { return positive_.size(); }
  [[nodiscard]] std::size_t none_index() const { return positive_.size() + 1; }

  [[nodiscard]] const std::string& name(std::size_t index) const;
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view class_name) const;
  /// Positive class index for a canonical section, Other otherwise.
  [[nodiscard]] std::size_t class_for_section(std::string_view canonical_section) const;
  [[nodiscard]] std::vector<std::string> class_names() const;

  /// "related work" -> "Related Work"; Other/None unchanged.
  [[nodiscard]] std::string display_name(std::size_t index) const;

  [[nodiscard]] std::vector<std::string> names_of(LabelSet labels) const;
  /// Throws std::invalid_argument on an unknown class name.
  [[nodiscard]] LabelSet labels_from_names(const std::vector<std::string>& names) const;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
  static LabelVocabulary from_json(const nlohmann::json& j);

  friend bool operator==(const LabelVocabulary& a, const LabelVocabulary& b) { return a.positive_ == b.positive_; }

 private:
  std::vector<std::string> positive_;
  std::vector<std::string> all_;
};

}  // namespace aspectsim
