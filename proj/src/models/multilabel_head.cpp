#include "aspectsim/models/multilabel_head.hpp"

#include <cmath>
#include <stdexcept>

namespace aspectsim::models {

namespace {

// log(1 + e^z) without overflow
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

std::vector<double> head_logits(std::span<const double> weight, std::span<const double> bias,
                                std::span<const double> input) {
  const std::size_t classes = bias.size();
  if (classes == 0 || weight.size() != classes * input.size()) {
    throw std::invalid_argument("head weight must be classes x inputs");
  }
  std::vector<double> z(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    double s = bias[c];
    for (std::size_t i = 0; i < input.size(); ++i) s += weight[c * input.size() + i] * input[i];
    z[c] = s;
  }
  return z;
}

}  // namespace

torch::Tensor multilabel_loss(const torch::Tensor& logits, const torch::Tensor& targets) {
  if (logits.sizes() != targets.sizes() || logits.dim() != 2) {
    throw std::invalid_argument("logits and targets must both be [batch, classes]");
  }
  auto per_class = torch::binary_cross_entropy_with_logits(logits, targets.to(logits.dtype()), {}, {},
                                                           torch::Reduction::None);
  return per_class.sum(1).mean();
}

torch::Tensor targets_from_labels(std::span<const LabelSet> labels, std::size_t num_classes) {
  auto t = torch::zeros({static_cast<std::int64_t>(labels.size()), static_cast<std::int64_t>(num_classes)});
  auto acc = t.accessor<float, 2>();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (auto c : labels[i].indices()) {
      if (c >= num_classes) throw std::invalid_argument("label index outside the vocabulary");
      acc[static_cast<std::int64_t>(i)][static_cast<std::int64_t>(c)] = 1.0f;
    }
  }
  return t;
}

LabelSet threshold_predictions(std::span<const double> probabilities, double threshold) {
  LabelSet out;
  for (std::size_t c = 0; c < probabilities.size(); ++c) {
    if (probabilities[c] >= threshold) out.insert(c);
  }
  return out;
}

double head_loss(std::span<const double> weight, std::span<const double> bias, std::span<const double> input,
                 std::span<const double> targets) {
  const auto z = head_logits(weight, bias, input);
  if (targets.size() != z.size()) throw std::invalid_argument("one target per class");
  double loss = 0.0;
  for (std::size_t c = 0; c < z.size(); ++c) loss += softplus(z[c]) - targets[c] * z[c];
  return loss;
}

HeadGradient head_loss_and_gradient(std::span<const double> weight, std::span<const double> bias,
                                    std::span<const double> input, std::span<const double> targets) {
  const auto z = head_logits(weight, bias, input);
  if (targets.size() != z.size()) throw std::invalid_argument("one target per class");
  const std::size_t n = input.size();
  HeadGradient g;
  g.d_weight.assign(weight.size(), 0.0);
  g.d_bias.assign(z.size(), 0.0);
  g.d_input.assign(n, 0.0);
  for (std::size_t c = 0; c < z.size(); ++c) {
    g.loss += softplus(z[c]) - targets[c] * z[c];
    const double delta = sigmoid(z[c]) - targets[c];
    g.d_bias[c] = delta;
    for (std::size_t i = 0; i < n; ++i) {
      g.d_weight[c * n + i] = delta * input[i];
      g.d_input[i] += delta * weight[c * n + i];
    }
  }
  return g;
}

}  // namespace aspectsim::models
