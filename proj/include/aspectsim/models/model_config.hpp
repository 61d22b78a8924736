#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aspectsim/models/subword_embeddings.hpp"

namespace aspectsim::models {

enum class ModelKind { kTransformer, kLstm };

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ModelConfig {
  ModelKind kind = ModelKind::kTransformer;
  /// Registry name ("scibert", "lstm-baseline", ...).
  std::string name;
  /// Checkpoint identifier or directory (transformer only).
  std::string checkpoint;
  std::size_t epochs = 4;
  double learning_rate = 2e-5;
  std::size_t batch_size = 8;
  double adam_epsilon = 1e-8;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double weight_decay = 0.0;
  /// "linear" (decay to zero) or "constant"
  std::string schedule = "linear";
  std::size_t warmup_steps = 0;
  double max_grad_norm = 1.0;  // <= 0 disables clipping
  double dropout = 0.1;
  std::size_t hidden_size = 100;  // lstm
  std::size_t num_layers = 2;     // lstm
  bool attention = true;          // lstm
  double classification_threshold = 0.5;
  std::uint64_t seed = 42;
  std::size_t max_len = 512;
  SubwordEmbeddingConfig embeddings;  // lstm

  /// Fine-tuning defaults: 4 epochs, lr 2e-5, batch 8, Adam eps 1e-8.
  static ModelConfig transformer_defaults(std::string name, std::string checkpoint);
  /// Baseline defaults: 10 epochs, lr 1e-5, batch 8, 2 BiLSTM layers of 100, attention, dropout 0.1.
  static ModelConfig lstm_defaults();

  [[nodiscard]] nlohmann::ordered_json to_json() const;
  static ModelConfig from_json(const nlohmann::json& j);
  [[nodiscard]] std::string hash() const;
};

struct RegistryEntry {
  std::string name;
  ModelKind kind;
  std::string checkpoint;
  /// Architectures the encoder implementation can load.
  bool supported;
};

/// bert-base, scibert, covid-bert, roberta, xlnet, electra-discriminator, lstm-baseline.
const std::vector<RegistryEntry>& model_registry();
std::optional<RegistryEntry> find_model(std::string_view name);

/// Registry name -> defaults for that model. Unknown names throw ModelError.
ModelConfig config_for_model(std::string_view name);

/// Locates a checkpoint directory holding config.json, vocab.txt and weights
/// (model.safetensors or pytorch_model.bin): an existing path, then
/// $ASPECTSIM_MODEL_DIR/<id>, then the Hugging Face hub cache. Throws
/// ModelError naming the searched locations.
std::filesystem::path resolve_checkpoint(const std::string& checkpoint);

}  // namespace aspectsim::models
