#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

namespace aspectsim::models {

/// Hyperparameters of a BERT-family encoder, read from a checkpoint's
/// config.json. ELECTRA discriminators share the layout, plus an optional
/// embedding projection when embedding_size != hidden_size.
struct BertConfig {
  std::string model_type = "bert";
  std::int64_t vocab_size = 30522;
  std::int64_t hidden_size = 768;
  std::int64_t embedding_size = 768;
  std::int64_t num_hidden_layers = 12;
  std::int64_t num_attention_heads = 12;
  std::int64_t intermediate_size = 3072;
  std::int64_t max_position_embeddings = 512;
  std::int64_t type_vocab_size = 2;
  double hidden_dropout_prob = 0.1;
  double attention_probs_dropout_prob = 0.1;
  double layer_norm_eps = 1e-12;
  std::string hidden_act = "gelu";

  static BertConfig from_json(const nlohmann::json& j);
  [[nodiscard]] nlohmann::ordered_json to_json() const;
  [[nodiscard]] bool is_electra() const { return model_type == "electra"; }
};

// Module and parameter names mirror the Hugging Face layout so checkpoint
// keys map onto named_parameters() by prefix.

struct BertEmbeddingsImpl : torch::nn::Module {
  explicit BertEmbeddingsImpl(const BertConfig& c);
  torch::Tensor forward(const torch::Tensor& input_ids, const torch::Tensor& token_type_ids);

  torch::nn::Embedding word_embeddings{nullptr}, position_embeddings{nullptr}, token_type_embeddings{nullptr};
  torch::nn::LayerNorm LayerNorm{nullptr};
  torch::nn::Dropout dropout{nullptr};
};
TORCH_MODULE(BertEmbeddings);

struct BertSelfAttentionImpl : torch::nn::Module {
  explicit BertSelfAttentionImpl(const BertConfig& c);
  torch::Tensor forward(const torch::Tensor& hidden, const torch::Tensor& additive_mask);

  std::int64_t heads, head_dim;
  torch::nn::Linear query{nullptr}, key{nullptr}, value{nullptr};
  torch::nn::Dropout dropout{nullptr};
};
TORCH_MODULE(BertSelfAttention);

/// dense -> dropout -> residual LayerNorm
struct BertResidualOutputImpl : torch::nn::Module {
  BertResidualOutputImpl(std::int64_t in, std::int64_t out, const BertConfig& c);
  torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& residual);

  torch::nn::Linear dense{nullptr};
  torch::nn::LayerNorm LayerNorm{nullptr};
  torch::nn::Dropout dropout{nullptr};
};
TORCH_MODULE(BertResidualOutput);

struct BertAttentionImpl : torch::nn::Module {
  explicit BertAttentionImpl(const BertConfig& c);
  torch::Tensor forward(const torch::Tensor& hidden, const torch::Tensor& additive_mask);

  BertSelfAttention self{nullptr};
  BertResidualOutput output{nullptr};
};
TORCH_MODULE(BertAttention);

struct BertIntermediateImpl : torch::nn::Module {
  explicit BertIntermediateImpl(const BertConfig& c);
  torch::Tensor forward(const torch::Tensor& x);

  std::string act;
  torch::nn::Linear dense{nullptr};
};
TORCH_MODULE(BertIntermediate);

struct BertLayerImpl : torch::nn::Module {
  explicit BertLayerImpl(const BertConfig& c);
  torch::Tensor forward(const torch::Tensor& hidden, const torch::Tensor& additive_mask);

  BertAttention attention{nullptr};
  BertIntermediate intermediate{nullptr};
  BertResidualOutput output{nullptr};
};
TORCH_MODULE(BertLayer);

struct BertEncoderImpl : torch::nn::Module {
  explicit BertEncoderImpl(const BertConfig& c);
  torch::Tensor forward(torch::Tensor hidden, const torch::Tensor& additive_mask);

  torch::nn::ModuleList layer{nullptr};
};
TORCH_MODULE(BertEncoder);

/// Embeddings + encoder stack (+ pooler for BERT). Returns the last hidden
/// states [batch, seq, hidden].
struct BertModelImpl : torch::nn::Module {
  explicit BertModelImpl(const BertConfig& c);
  torch::Tensor forward(const torch::Tensor& input_ids, const torch::Tensor& token_type_ids,
                        const torch::Tensor& attention_mask);

  BertConfig config;
  BertEmbeddings embeddings{nullptr};
  torch::nn::Linear embeddings_project{nullptr};  // electra with embedding_size != hidden_size
  BertEncoder encoder{nullptr};
};
TORCH_MODULE(BertModel);

/// Sequence-pair classifier: encoder, then the checkpoint family's usual
/// head on the first token (BERT: tanh pooler; ELECTRA: dense + GELU),
/// dropout and a linear layer with one logit per class.
struct TransformerPairClassifierImpl : torch::nn::Module {
  TransformerPairClassifierImpl(const BertConfig& c, std::int64_t num_classes, double classifier_dropout);
  torch::Tensor forward(const torch::Tensor& input_ids, const torch::Tensor& token_type_ids,
                        const torch::Tensor& attention_mask);

  BertConfig config;
  BertModel encoder{nullptr};
  torch::nn::Linear pooler{nullptr};
  torch::nn::Dropout dropout{nullptr};
  torch::nn::Linear classifier{nullptr};
};
TORCH_MODULE(TransformerPairClassifier);

/// Copies pretrained encoder (and pooler, where present) weights into the
/// classifier. Returns the number of tensors loaded; throws ModelError when
/// an encoder tensor is missing or has the wrong shape.
std::size_t load_pretrained_encoder(TransformerPairClassifier& model, const std::map<std::string, torch::Tensor>& weights);

}  // namespace aspectsim::models
