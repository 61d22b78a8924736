#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <torch/torch.h>

#include "aspectsim/label_set.hpp"

namespace aspectsim::models {

/// Binary cross-entropy per class, summed over classes, mean over the batch.
/// logits, targets: [batch, classes].
torch::Tensor multilabel_loss(const torch::Tensor& logits, const torch::Tensor& targets);

torch::Tensor targets_from_labels(std::span<const LabelSet> labels, std::size_t num_classes);

/// {classes with probability >= threshold}; may be empty.
LabelSet threshold_predictions(std::span<const double> probabilities, double threshold);

/// Closed-form loss and gradients of a linear multi-label head
/// z = W x + b, L = sum_c BCE(sigmoid(z_c), y_c). W is row-major classes x inputs.
struct HeadGradient {
  double loss = 0.0;
  std::vector<double> d_weight;
  std::vector<double> d_bias;
  std::vector<double> d_input;
};

double head_loss(std::span<const double> weight, std::span<const double> bias, std::span<const double> input,
                 std::span<const double> targets);
HeadGradient head_loss_and_gradient(std::span<const double> weight, std::span<const double> bias,
                                    std::span<const double> input, std::span<const double> targets);

}  // namespace aspectsim::models
