#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "aspectsim/dataset_store.hpp"
#include "aspectsim/label_vocabulary.hpp"
#include "aspectsim/models/encoded_pair.hpp"
#include "aspectsim/models/model_config.hpp"
#include "aspectsim/models/tokenizer.hpp"

namespace aspectsim::models {

struct PredictionRecord {
  std::string seed_id;
  std::string target_id;
  std::vector<double> probabilities;  // one per class, vocabulary order
  LabelSet predicted;

  [[nodiscard]] nlohmann::ordered_json to_json(const LabelVocabulary& vocab) const;
  static PredictionRecord from_json(const nlohmann::json& j, const LabelVocabulary& vocab);
};

struct TrainingLogEntry {
  std::size_t step = 0;
  std::size_t epoch = 0;
  double loss = 0.0;
  double learning_rate = 0.0;
};

struct TrainingHistory {
  std::vector<TrainingLogEntry> steps;
  std::vector<double> epoch_losses;  // mean step loss per epoch
};

/// Raised on a non-finite loss; the message names epoch, step and the batch.
class TrainingError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Padded batch tensors in the layout the network expects.
struct Batch {
  torch::Tensor ids;       // [B,T] int64 (transformer) / special kinds (lstm)
  torch::Tensor segments;  // [B,T] int64 (transformer)
  torch::Tensor mask;      // [B,T] int64 (transformer) / lengths [B] (lstm)
  torch::Tensor features;  // [B,T,D] float (lstm)
};

/// A pair classifier: tokenizer + network + label vocabulary + config.
class PairModel {
 public:
  /// Builds an untrained model. Transformers resolve and load the pretrained
  /// checkpoint (ModelError if it cannot be found). The LSTM baseline loads
  /// word vectors from config.checkpoint when it names a file, otherwise
  /// trains them on the abstracts of `corpus`.
  static PairModel initialize(const ModelConfig& config, const LabelVocabulary& vocab,
                              std::span<const Sample> corpus = {});

  [[nodiscard]] const ModelConfig& config() const;
  [[nodiscard]] const LabelVocabulary& vocab() const;
  [[nodiscard]] const Tokenizer& tokenizer() const;
  [[nodiscard]] const TrainingHistory& history() const;
  TrainingHistory& history();

  [[nodiscard]] EncodedPair encode(const Sample& sample) const;
  [[nodiscard]] Batch collate(std::span<const EncodedPair> pairs) const;
  /// Logits [B, |vocab|].
  torch::Tensor forward(const Batch& batch, bool training);
  std::vector<torch::Tensor> trainable_parameters();

  /// Throws ModelError when `expected` differs from the model's vocabulary.
  [[nodiscard]] std::vector<PredictionRecord> predict(std::span<const Sample> pairs, const LabelVocabulary& expected,
                                                      std::size_t batch_size = 16) const;

  /// Artifact directory: config.json, vocab.json, weights.safetensors,
  /// training_log.jsonl and tokenizer / embedding files.
  void save(const std::filesystem::path& dir) const;
  static PairModel load(const std::filesystem::path& dir);

  struct State;

 private:
  std::shared_ptr<State> state_;
};

struct TrainOptions {
  std::function<void(const TrainingLogEntry&)> on_step;
  /// Appends one JSON line {step, epoch, loss, learning_rate} per step.
  std::optional<std::filesystem::path> log_path;
};

/// Fine-tunes a fresh model on `train_pairs` with the config's optimizer
/// settings. Throws std::invalid_argument on an empty set or labels outside
/// the vocabulary, ModelError on an unresolvable checkpoint and
/// TrainingError on a non-finite loss.
PairModel train(const ModelConfig& config, std::span<const Sample> train_pairs, const LabelVocabulary& vocab,
                const TrainOptions& options = {});
/// Continues training an initialized model in place.
void train_model(PairModel& model, std::span<const Sample> train_pairs, const TrainOptions& options = {});

/// Micro-F1 of the model's thresholded predictions against the samples' labels.
double micro_f1_on(const PairModel& model, std::span<const Sample> samples);

}  // namespace aspectsim::models
