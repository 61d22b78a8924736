#include "aspectsim/label_vocabulary.hpp"

#include <set>
#include <stdexcept>

namespace aspectsim {

LabelVocabulary::LabelVocabulary(std::vector<std::string> positive_classes) : positive_(std::move(positive_classes)) {
  if (size() > LabelSet::kMaxClasses) throw std::invalid_argument("label vocabulary too large");
  std::set<std::string> seen;
  for (const auto& c : positive_) {
    if (c.empty() || c == kOther || c == kNone || !seen.insert(c).second) {
      throw std::invalid_argument("invalid or duplicate positive class: '" + c + "'");
    }
  }
  all_ = positive_;
  all_.emplace_back(kOther);
  all_.emplace_back(kNone);
}

const std::string& LabelVocabulary::name(std::size_t index) const { return all_.at(index); }

std::optional<std::size_t> LabelVocabulary::index_of(std::string_view class_name) const {
  for (std::size_t i = 0; i < all_.size(); ++i) {
    if (all_[i] == class_name) return i;
  }
  return std::nullopt;
}

std::size_t LabelVocabulary::class_for_section(std::string_view canonical_section) const {
  for (std::size_t i = 0; i < positive_.size(); ++i) {
    if (positive_[i] == canonical_section) return i;
  }
  return other_index();
}

std::vector<std::string> LabelVocabulary::class_names() const { return all_; }

std::string LabelVocabulary::display_name(std::size_t index) const {
  std::string out = name(index);
  bool word_start = true;
  for (auto& c : out) {
    if (word_start && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    word_start = c == ' ';
  }
  return out;
}

std::vector<std::string> LabelVocabulary::names_of(LabelSet labels) const {
  std::vector<std::string> out;
  for (auto i : labels.indices()) out.push_back(name(i));
  return out;
}

LabelSet LabelVocabulary::labels_from_names(const std::vector<std::string>& names) const {
  LabelSet out;
  for (const auto& n : names) {
    auto idx = index_of(n);
    if (!idx) throw std::invalid_argument("unknown label class: '" + n + "'");
    out.insert(*idx);
  }
  return out;
}

nlohmann::ordered_json LabelVocabulary::to_json() const {
  nlohmann::ordered_json j;
  j["positive_classes"] = positive_;
  j["other_class"] = kOther;
  j["none_class"] = kNone;
  nlohmann::ordered_json index = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < all_.size(); ++i) index[all_[i]] = i;
  j["class_index"] = std::move(index);
  return j;
}

LabelVocabulary LabelVocabulary::from_json(const nlohmann::json& j) {
  LabelVocabulary vocab(j.at("positive_classes").get<std::vector<std::string>>());
  if (auto it = j.find("class_index"); it != j.end()) {
    for (const auto& [name, idx] : it->items()) {
      if (vocab.index_of(name) != idx.get<std::size_t>()) throw std::invalid_argument("inconsistent class_index for " + name);
    }
  }
  return vocab;
}

}  // namespace aspectsim
