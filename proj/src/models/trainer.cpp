#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "aspectsim/log.hpp"

#include "aspectsim/metrics.hpp"
#include "aspectsim/models/multilabel_head.hpp"
#include "aspectsim/models/pair_model.hpp"
#include "aspectsim/rng.hpp"

namespace aspectsim::models {

namespace {

double scheduled_lr(const ModelConfig& c, std::size_t step, std::size_t total) {
  const double base = c.learning_rate;
  if (step < c.warmup_steps) return base * static_cast<double>(step) / static_cast<double>(std::max<std::size_t>(1, c.warmup_steps));
  if (c.schedule == "constant") return base;
  const double remaining = static_cast<double>(total) - static_cast<double>(step);
  const double span = static_cast<double>(std::max<std::size_t>(1, total - std::min(total, c.warmup_steps)));
  return base * std::max(0.0, remaining / span);
}

}  // namespace

void train_model(PairModel& model, std::span<const Sample> train_pairs, const TrainOptions& options) {
  if (train_pairs.empty()) throw std::invalid_argument("no training pairs");
  const auto& config = model.config();
  const std::size_t classes = model.vocab().size();
  for (const auto& s : train_pairs) {
    if ((s.pair.labels.bits() >> classes) != 0) {
      throw std::invalid_argument("pair " + s.pair.seed_id + " -> " + s.pair.target_id + " has labels outside the vocabulary");
    }
  }

  std::vector<EncodedPair> encoded;
  encoded.reserve(train_pairs.size());
  for (const auto& s : train_pairs) encoded.push_back(model.encode(s));
  std::vector<LabelSet> labels;
  for (const auto& s : train_pairs) labels.push_back(s.pair.labels);

  torch::manual_seed(config.seed);
  auto params = model.trainable_parameters();
  torch::optim::AdamW optimizer(params, torch::optim::AdamWOptions(config.learning_rate)
                                            .betas({config.adam_beta1, config.adam_beta2})
                                            .eps(config.adam_epsilon)
                                            .weight_decay(config.weight_decay));

  const std::size_t batch_size = std::max<std::size_t>(1, config.batch_size);
  const std::size_t per_epoch = (encoded.size() + batch_size - 1) / batch_size;
  const std::size_t total = per_epoch * config.epochs;

  std::ofstream log;
  if (options.log_path) {
    log.open(*options.log_path, std::ios::trunc);
    if (!log) throw ModelError("cannot write training log " + options.log_path->string());
  }

  auto& history = model.history();
  SeededRng rng(config.seed);
  std::vector<std::size_t> order(encoded.size());
  std::size_t step = history.steps.empty() ? 0 : history.steps.back().step + 1;
  std::size_t local_step = 0;
  const std::size_t first_epoch = history.epoch_losses.size();
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<std::size_t>(order));
    double epoch_sum = 0.0;
    for (std::size_t b = 0; b < per_epoch; ++b, ++step, ++local_step) {
      const std::size_t lo = b * batch_size;
      const std::size_t hi = std::min(order.size(), lo + batch_size);
      std::vector<EncodedPair> batch_pairs;
      std::vector<LabelSet> batch_labels;
      for (std::size_t i = lo; i < hi; ++i) {
        batch_pairs.push_back(encoded[order[i]]);
        batch_labels.push_back(labels[order[i]]);
      }
      const double lr = scheduled_lr(config, local_step, total);
      for (auto& group : optimizer.param_groups()) static_cast<torch::optim::AdamWOptions&>(group.options()).lr(lr);

      auto logits = model.forward(model.collate(batch_pairs), /*training=*/true);
      auto loss = multilabel_loss(logits, targets_from_labels(batch_labels, classes));
      const double value = loss.item<double>();
      if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "non-finite loss " << value << " at epoch " << first_epoch + epoch << ", step " << step << " (lr " << lr
            << "); batch:";
        for (std::size_t i = lo; i < hi; ++i) {
          msg << " " << train_pairs[order[i]].pair.seed_id << "->" << train_pairs[order[i]].pair.target_id;
        }
        throw TrainingError(msg.str());
      }
      optimizer.zero_grad();
      loss.backward();
      if (config.max_grad_norm > 0) torch::nn::utils::clip_grad_norm_(params, config.max_grad_norm);
      optimizer.step();

      TrainingLogEntry entry{step, first_epoch + epoch, value, lr};
      history.steps.push_back(entry);
      epoch_sum += value;
      if (log.is_open()) {
        log << nlohmann::ordered_json{{"step", entry.step}, {"epoch", entry.epoch}, {"loss", entry.loss},
                                      {"learning_rate", entry.learning_rate}}
                   .dump()
            << "\n";
      }
      if (options.on_step) options.on_step(entry);
    }
    history.epoch_losses.push_back(epoch_sum / static_cast<double>(per_epoch));
    log::debug("epoch " + std::to_string(first_epoch + epoch) + " mean loss " + std::to_string(history.epoch_losses.back()));
  }
}

PairModel train(const ModelConfig& config, std::span<const Sample> train_pairs, const LabelVocabulary& vocab,
                const TrainOptions& options) {
  if (train_pairs.empty()) throw std::invalid_argument("no training pairs");
  auto model = PairModel::initialize(config, vocab, train_pairs);
  train_model(model, train_pairs, options);
  return model;
}

double micro_f1_on(const PairModel& model, std::span<const Sample> samples) {
  auto preds = model.predict(samples, model.vocab());
  std::vector<LabelSet> gold, pred;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    gold.push_back(samples[i].pair.labels);
    pred.push_back(preds[i].predicted);
  }
  return metrics::prf_micro(gold, pred).f1;
}

}  // namespace aspectsim::models
