#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aspectsim/aspect_pairs.hpp"
#include "aspectsim/label_vocabulary.hpp"

namespace aspectsim {

/// A dataset sample: the pair plus denormalized title/abstract text.
struct Sample {
  DocumentPair pair;
  std::string seed_title;
  std::string seed_abstract;
  std::string target_title;
  std::string target_abstract;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct Provenance {
  std::string corpus;
  std::string build_timestamp;
  std::string config_hash;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct SampleSet {
  std::vector<Sample> samples;
  LabelVocabulary vocab;
  Provenance provenance;

  friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Joins pairs with the record store text.
std::vector<Sample> attach_text(const std::vector<DocumentPair>& pairs, const std::vector<PaperRecord>& records);

/// JSONL: seed_id, target_id, seed_title, seed_abstract, target_title,
/// target_abstract, labels (class names in vocabulary order).
void save_samples(const std::vector<Sample>& samples, const LabelVocabulary& vocab, const std::filesystem::path& path);
/// Errors are reported as "line N: ..." DatasetErrors.
std::vector<Sample> load_samples(const std::filesystem::path& path, const LabelVocabulary& vocab);

/// Directory layout: samples.jsonl, vocab.json, provenance.json.
void save_dataset(const SampleSet& set, const std::filesystem::path& dir);
SampleSet load_dataset(const std::filesystem::path& dir);

struct FoldAssignment {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> fold_of;  // sample index -> fold

  [[nodiscard]] std::vector<std::size_t> test_indices(std::size_t fold) const;
  [[nodiscard]] std::vector<std::size_t> train_indices(std::size_t fold) const;
  [[nodiscard]] std::vector<std::size_t> fold_sizes() const;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
  static FoldAssignment from_json(const nlohmann::json& j);

  friend bool operator==(const FoldAssignment&, const FoldAssignment&) = default;
};

struct StratificationWarnings {
  std::vector<std::size_t> sparse_classes;  // classes with fewer than k samples
};

/// Iterative multi-label stratification: the rarest remaining label is
/// distributed first, each sample going to the fold that still needs that
/// label most (then the fold needing the most samples, then a seeded draw).
FoldAssignment stratified_folds(const std::vector<LabelSet>& labels, std::size_t num_classes, std::size_t k,
                                std::uint64_t rng_seed, StratificationWarnings* warnings = nullptr);
FoldAssignment stratified_folds(const SampleSet& set, std::size_t k, std::uint64_t rng_seed,
                                StratificationWarnings* warnings = nullptr);

void save_folds(const FoldAssignment& folds, const std::filesystem::path& path);
FoldAssignment load_folds(const std::filesystem::path& path);

struct DatasetStats {
  std::vector<std::string> classes;
  std::vector<std::size_t> class_counts;
  /// samples with 1, 2 and >=3 labels
  std::size_t one_label = 0;
  std::size_t two_labels = 0;
  std::size_t three_plus_labels = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
  [[nodiscard]] std::string to_csv() const;
  /// Two-column label distribution table, Markdown.
  [[nodiscard]] std::string to_markdown(const LabelVocabulary& vocab) const;
};

DatasetStats dataset_stats(const SampleSet& set);

}  // namespace aspectsim
