#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aspectsim/label_set.hpp"
#include "aspectsim/label_vocabulary.hpp"
#include "aspectsim/paper_record.hpp"
#include "aspectsim/section_normalizer.hpp"

namespace aspectsim {

/// Ordered (seed cites target) pair with its label set.
struct DocumentPair {
  std::string seed_id;
  std::string target_id;
  LabelSet labels;

  friend bool operator==(const DocumentPair&, const DocumentPair&) = default;
};

/// Maps citation target references onto paper ids of the record store:
/// exact paper_id, "<scheme>:<id>" external ids (case-insensitive) and
/// "title:<normalized title>|<year>".
class CitationResolver {
 public:
  explicit CitationResolver(const std::vector<PaperRecord>& records);
  [[nodiscard]] std::optional<std::string> resolve(std::string_view target_ref) const;

  static std::string external_key(std::string_view scheme, std::string_view value);
  static std::string title_key(std::string_view title, int year);

 private:
  std::unordered_map<std::string, std::string> exact_;
  std::unordered_map<std::string, std::string> keyed_;
};

/// One distinct (seed, target, canonical section) citation instance.
struct CitationInstance {
  std::string seed_id;
  std::string target_id;
  std::string section;

  friend bool operator==(const CitationInstance&, const CitationInstance&) = default;
};

struct PairingDiagnostics {
  std::size_t citations = 0;
  std::size_t unresolved = 0;
  std::size_t self_citations = 0;
  std::size_t empty_sections = 0;
  std::size_t pairs_without_labels = 0;
};

/// Resolved, de-duplicated citation instances in first-occurrence order.
std::vector<CitationInstance> collect_citation_instances(const std::vector<PaperRecord>& records,
                                                         const SectionNormalizer& normalizer,
                                                         PairingDiagnostics* diagnostics = nullptr);

/// Canonical section -> number of citation instances, sorted by descending
/// count, ties lexicographic.
std::vector<std::pair<std::string, std::size_t>> count_sections(const std::vector<CitationInstance>& instances);

/// Top-k sections become the positive classes. Throws std::invalid_argument
/// when fewer than top_k distinct sections exist.
LabelVocabulary build_vocabulary(const std::vector<CitationInstance>& instances, std::size_t top_k = 9);

/// One pair per cited (seed, target) with the union of its section classes.
std::vector<DocumentPair> build_positive_pairs(const std::vector<CitationInstance>& instances,
                                               const LabelVocabulary& vocab);
std::vector<DocumentPair> build_positive_pairs(const std::vector<PaperRecord>& records, const LabelVocabulary& vocab,
                                               const SectionNormalizer& normalizer,
                                               PairingDiagnostics* diagnostics = nullptr);

/// Per-class label counts over a pair list, in vocabulary order.
std::vector<std::size_t> class_counts(const std::vector<DocumentPair>& pairs, const LabelVocabulary& vocab);

/// "class,count" CSV in vocabulary order (the label distribution table).
std::string label_distribution_csv(const std::vector<DocumentPair>& pairs, const LabelVocabulary& vocab);

}  // namespace aspectsim
