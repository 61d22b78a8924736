#include "aspectsim/models/lstm_classifier.hpp"

#include <limits>

namespace aspectsim::models {

LstmPairClassifierImpl::LstmPairClassifierImpl(std::int64_t input_dim, std::int64_t hidden_size,
                                               std::int64_t num_layers, double dropout_p, bool attention,
                                               std::int64_t num_classes)
    : use_attention(attention) {
  special_embeddings =
      register_module("special_embeddings", torch::nn::Embedding(torch::nn::EmbeddingOptions(4, input_dim).padding_idx(0)));
  lstm = register_module("lstm", torch::nn::LSTM(torch::nn::LSTMOptions(input_dim, hidden_size)
                                                     .num_layers(num_layers)
                                                     .bidirectional(true)
                                                     .batch_first(true)
                                                     .dropout(num_layers > 1 ? dropout_p : 0.0)));
  if (use_attention) {
    attention_proj = register_module("attention_proj", torch::nn::Linear(2 * hidden_size, 2 * hidden_size));
    attention_score = register_module("attention_score", torch::nn::Linear(torch::nn::LinearOptions(2 * hidden_size, 1).bias(false)));
  }
  dropout = register_module("dropout", torch::nn::Dropout(dropout_p));
  classifier = register_module("classifier", torch::nn::Linear(2 * hidden_size, num_classes));
}

torch::Tensor LstmPairClassifierImpl::forward(const torch::Tensor& inputs, const torch::Tensor& specials,
                                              const torch::Tensor& lengths) {
  namespace rnn = torch::nn::utils::rnn;
  auto x = inputs + special_embeddings(specials);
  auto packed = rnn::pack_padded_sequence(x, lengths.to(torch::kInt64), /*batch_first=*/true, /*enforce_sorted=*/false);
  auto out_packed = std::get<0>(lstm->forward_with_packed_input(packed));
  auto out = std::get<0>(rnn::pad_packed_sequence(out_packed, /*batch_first=*/true, 0.0, inputs.size(1)));

  const auto steps = out.size(1);
  auto valid = torch::arange(steps, torch::kInt64).unsqueeze(0) < lengths.unsqueeze(1);  // [B,T]
  torch::Tensor pooled;
  if (use_attention) {
    auto scores = attention_score(torch::tanh(attention_proj(out))).squeeze(-1);
    scores = scores.masked_fill(valid.logical_not(), -std::numeric_limits<float>::infinity());
    auto alpha = torch::softmax(scores, 1).unsqueeze(-1);
    pooled = (alpha * out).sum(1);
  } else {
    auto m = valid.unsqueeze(-1).to(out.dtype());
    pooled = (out * m).sum(1) / m.sum(1).clamp_min(1.0);
  }
  return classifier(dropout(pooled));
}

}  // namespace aspectsim::models
