#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aspectsim::models {

struct SubwordEmbeddingConfig {
  std::size_t dim = 100;
  std::size_t min_n = 3;
  std::size_t max_n = 6;
  std::size_t buckets = 100000;
  std::size_t window = 5;
  std::size_t negatives = 5;
  std::size_t epochs = 5;
  std::size_t min_count = 1;
  double learning_rate = 0.05;
  std::uint64_t seed = 1;
  /// Feed the classifier vectors minus the corpus mean vector.
  bool center = true;
};

/// Static word vectors with character n-gram composition, trained as a
/// skip-gram with negative sampling. A word's vector is the mean of its own
/// vector (if in vocabulary) and its hashed n-gram vectors, so unseen words
/// still get a vector from their n-grams.
class SubwordEmbeddings {
 public:
  SubwordEmbeddings() = default;

  static SubwordEmbeddings train(const std::vector<std::vector<std::string>>& sentences,
                                 const SubwordEmbeddingConfig& config);

  [[nodiscard]] std::vector<float> vector(std::string_view word) const;
  /// Token-weighted mean word vector of the training corpus.
  [[nodiscard]] const std::vector<float>& mean() const { return mean_; }
  [[nodiscard]] std::size_t dim() const { return config_.dim; }
  [[nodiscard]] bool in_vocabulary(std::string_view word) const { return word_ids_.contains(std::string(word)); }
  [[nodiscard]] const std::vector<std::string>& words() const { return words_; }
  [[nodiscard]] const SubwordEmbeddingConfig& config() const { return config_; }

  /// Cosine similarity of two word vectors.
  [[nodiscard]] double similarity(std::string_view a, std::string_view b) const;

  void save(const std::filesystem::path& path) const;
  static SubwordEmbeddings load(const std::filesystem::path& path);

  /// Hashed n-gram bucket rows (offset by vocabulary size) for a word.
  [[nodiscard]] std::vector<std::size_t> subword_rows(std::string_view word) const;

 private:
  SubwordEmbeddingConfig config_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> word_ids_;
  std::vector<float> input_;  // (words + buckets) x dim
  std::vector<float> mean_;
};

}  // namespace aspectsim::models
