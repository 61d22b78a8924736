#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <torch/torch.h>

#include "aspectsim/models/multilabel_head.hpp"
#include "aspectsim/models/pair_model.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using namespace aspectsim;
using namespace aspectsim::models;
namespace st = aspectsim::testing;

namespace {

ModelConfig tiny_transformer() {
  auto c = ModelConfig::transformer_defaults("tiny", (fs::path(ASPECTSIM_FIXTURES) / "tiny_bert").string());
  c.epochs = 2;
  c.learning_rate = 1e-3;
  c.max_len = 64;
  return c;
}

ModelConfig tiny_lstm() {
  auto c = ModelConfig::lstm_defaults();
  c.epochs = 2;
  c.learning_rate = 1e-3;
  c.hidden_size = 16;
  c.num_layers = 1;
  c.max_len = 64;
  c.embeddings.dim = 16;
  c.embeddings.buckets = 1000;
  c.embeddings.epochs = 1;
  return c;
}

const SampleSet& toy() {
  static const SampleSet set = [] {
    auto s = st::topical_sample_set(24, 3);
    return s;
  }();
  return set;
}

}  // namespace

TEST(MultilabelHead, LossIsSummedBceAveragedOverBatch) {
  const auto logits = torch::tensor({{0.3, -1.2, 2.0}, {-0.5, 0.0, 1.5}}, torch::kFloat64);
  const auto targets = torch::tensor({{1.0, 0.0, 1.0}, {0.0, 0.0, 1.0}}, torch::kFloat64);
  double manual = 0;
  for (int i = 0; i < 2; ++i) {
    for (int c = 0; c < 3; ++c) {
      const double z = logits[i][c].item<double>();
      const double y = targets[i][c].item<double>();
      const double p = 1 / (1 + std::exp(-z));
      manual -= y * std::log(p) + (1 - y) * std::log(1 - p);
    }
  }
  EXPECT_NEAR(multilabel_loss(logits, targets).item<double>(), manual / 2, 1e-12);
}

TEST(MultilabelHead, ClosedFormGradientMatchesFiniteDifferences) {
  const std::vector<double> w{0.1, -0.2, 0.3, 0.05, 0.4, -0.6};  // 2 classes x 3 inputs
  const std::vector<double> b{0.01, -0.02};
  const std::vector<double> x{1.0, -0.5, 2.0};
  const std::vector<double> y{1.0, 0.0};
  const auto g = head_loss_and_gradient(w, b, x, y);
  EXPECT_NEAR(g.loss, head_loss(w, b, x, y), 1e-14);
  const double h = 1e-6;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto up = w, down = w;
    up[i] += h;
    down[i] -= h;
    EXPECT_NEAR(g.d_weight[i], (head_loss(up, b, x, y) - head_loss(down, b, x, y)) / (2 * h), 1e-7);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto up = x, down = x;
    up[i] += h;
    down[i] -= h;
    EXPECT_NEAR(g.d_input[i], (head_loss(w, b, up, y) - head_loss(w, b, down, y)) / (2 * h), 1e-7);
  }
}

TEST(MultilabelHead, Thresholding) {
  const std::vector<double> p{0.5, 0.49, 0.9, 0.0};
  EXPECT_EQ(threshold_predictions(p, 0.5), (LabelSet{0, 2}));
  const std::vector<double> low{0.1, 0.2};
  EXPECT_TRUE(threshold_predictions(low, 0.5).empty());
  const std::vector<LabelSet> labels{LabelSet{1}, LabelSet{0, 2}};
  const auto t = targets_from_labels(labels, 3);
  EXPECT_TRUE(torch::equal(t, torch::tensor({{0.0f, 1.0f, 0.0f}, {1.0f, 0.0f, 1.0f}})));
}

TEST(Training, EmptyTrainingSetThrows) {
  EXPECT_THROW(train(tiny_lstm(), std::span<const Sample>{}, toy().vocab), std::invalid_argument);
}

TEST(Training, LabelsOutsideVocabularyThrow) {
  auto samples = toy().samples;
  samples[0].pair.labels.insert(40);
  EXPECT_THROW(train(tiny_lstm(), samples, toy().vocab), std::invalid_argument);
}

TEST(Training, TransformerIsDeterministicForASeed) {
  torch::set_num_threads(1);
  const std::span<const Sample> few(toy().samples.data(), 8);
  const auto a = train(tiny_transformer(), few, toy().vocab);
  const auto b = train(tiny_transformer(), few, toy().vocab);
  ASSERT_EQ(a.history().epoch_losses.size(), 2U);
  EXPECT_NEAR(a.history().epoch_losses[0], b.history().epoch_losses[0], 1e-6);
  EXPECT_EQ(a.history().steps.size(), 2U);
  // linear decay without warmup
  EXPECT_DOUBLE_EQ(a.history().steps[0].learning_rate, 1e-3);
  EXPECT_DOUBLE_EQ(a.history().steps[1].learning_rate, 5e-4);
}

TEST(Training, SaveLoadKeepsPredictions) {
  for (const auto& config : {tiny_lstm(), tiny_transformer()}) {
    const auto model = train(config, toy().samples, toy().vocab);
    const auto dir = fs::temp_directory_path() / ("aspectsim_model_" + config.name);
    fs::remove_all(dir);
    model.save(dir);
    const auto loaded = PairModel::load(dir);
    const auto p1 = model.predict(toy().samples, toy().vocab);
    const auto p2 = loaded.predict(toy().samples, toy().vocab);
    ASSERT_EQ(p1.size(), toy().samples.size());
    for (std::size_t i = 0; i < p1.size(); ++i) {
      EXPECT_EQ(p1[i].predicted, p2[i].predicted);
      for (std::size_t c = 0; c < p1[i].probabilities.size(); ++c) {
        EXPECT_NEAR(p1[i].probabilities[c], p2[i].probabilities[c], 1e-6);
      }
    }
    EXPECT_EQ(loaded.history().epoch_losses, model.history().epoch_losses);
  }
}

TEST(Training, VocabularyMismatchIsRejected) {
  auto config = tiny_lstm();
  config.epochs = 1;
  const auto model = train(config, toy().samples, toy().vocab);
  EXPECT_THROW((void)model.predict(toy().samples, LabelVocabulary({"methods"})), ModelError);
}

TEST(Training, PredictionRecordsRoundTrip) {
  PredictionRecord r{"a", "b", std::vector<double>(toy().vocab.size(), 0.25), LabelSet{1}};
  r.probabilities[1] = 0.75;
  const auto back = PredictionRecord::from_json(r.to_json(toy().vocab), toy().vocab);
  EXPECT_EQ(back.seed_id, "a");
  EXPECT_EQ(back.predicted, r.predicted);
  EXPECT_EQ(back.probabilities, r.probabilities);
}

TEST(Training, LogFileGetsOneLinePerStep) {
  const auto log = fs::temp_directory_path() / "aspectsim_train_log.jsonl";
  fs::remove(log);
  auto config = tiny_lstm();
  config.batch_size = 8;
  std::size_t callbacks = 0;
  TrainOptions opts;
  opts.log_path = log;
  opts.on_step = [&](const TrainingLogEntry&) { ++callbacks; };
  (void)train(config, toy().samples, toy().vocab, opts);
  std::ifstream in(log);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_EQ(callbacks, 6U);  // 24 samples / 8 x 2 epochs
  EXPECT_EQ(lines, callbacks);
}
