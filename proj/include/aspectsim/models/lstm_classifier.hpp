#pragma once

#include <cstdint>

#include <torch/torch.h>

namespace aspectsim::models {

/// Special-token rows for the LSTM input: 0 = ordinary word (frozen subword
/// vector), 1..3 = start / separator / end (learned vectors).
enum class LstmSpecial : std::int64_t { kNone = 0, kStart = 1, kSeparator = 2, kEnd = 3 };

/// Stacked bidirectional LSTM over static word vectors, attention pooling
/// (or mean pooling when attention is off), dropout and a linear layer.
struct LstmPairClassifierImpl : torch::nn::Module {
  LstmPairClassifierImpl(std::int64_t input_dim, std::int64_t hidden_size, std::int64_t num_layers, double dropout,
                         bool attention, std::int64_t num_classes);

  /// inputs [B,T,D] float, specials [B,T] int64, lengths [B] int64 -> logits [B,C]
  torch::Tensor forward(const torch::Tensor& inputs, const torch::Tensor& specials, const torch::Tensor& lengths);

  bool use_attention;
  torch::nn::Embedding special_embeddings{nullptr};
  torch::nn::LSTM lstm{nullptr};
  torch::nn::Linear attention_proj{nullptr};
  torch::nn::Linear attention_score{nullptr};
  torch::nn::Dropout dropout{nullptr};
  torch::nn::Linear classifier{nullptr};
};
TORCH_MODULE(LstmPairClassifier);

}  // namespace aspectsim::models
