#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include <torch/torch.h>

#include "aspectsim/models/cross_validation.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using namespace aspectsim;
using namespace aspectsim::models;
namespace st = aspectsim::testing;

namespace {

ModelConfig tiny_lstm() {
  auto c = ModelConfig::lstm_defaults();
  c.epochs = 1;
  c.learning_rate = 1e-3;
  c.hidden_size = 8;
  c.num_layers = 1;
  c.max_len = 48;
  c.embeddings.dim = 8;
  c.embeddings.buckets = 500;
  c.embeddings.epochs = 1;
  return c;
}

class CrossValidation : public ::testing::Test {
 protected:
  void SetUp() override {
    torch::set_num_threads(1);
    set_ = st::topical_sample_set(40, 8);
    folds_ = stratified_folds(set_, 4, 1);
    dir_ = fs::temp_directory_path() / ("aspectsim_cv_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }

  SampleSet set_;
  FoldAssignment folds_;
  fs::path dir_;
};

}  // namespace

TEST_F(CrossValidation, EverySampleIsPredictedOnce) {
  CrossValidationOptions opts;
  opts.output_dir = dir_;
  const auto result = run_cross_validation(set_, folds_, tiny_lstm(), opts);
  ASSERT_EQ(result.folds.size(), 4U);
  EXPECT_EQ(result.failed(), 0U);
  std::multiset<std::pair<std::string, std::string>> seen;
  for (std::size_t f = 0; f < 4; ++f) {
    const auto preds = load_predictions(dir_ / ("fold_" + std::to_string(f)) / "predictions.jsonl", set_.vocab);
    EXPECT_EQ(preds.size(), folds_.test_indices(f).size());
    for (const auto& p : preds) seen.insert({p.seed_id, p.target_id});
  }
  std::multiset<std::pair<std::string, std::string>> all;
  for (const auto& s : set_.samples) all.insert({s.pair.seed_id, s.pair.target_id});
  EXPECT_EQ(seen, all);
  ASSERT_TRUE(result.report);
  EXPECT_EQ(result.report->samples, 40U);
  EXPECT_TRUE(fs::exists(dir_ / "report" / "report.md"));
}

TEST_F(CrossValidation, FailingFoldDoesNotStopTheRest) {
  CrossValidationOptions opts;
  opts.output_dir = dir_;
  opts.before_fold = [](std::size_t fold) {
    if (fold == 2) throw std::runtime_error("injected");
  };
  const auto result = run_cross_validation(set_, folds_, tiny_lstm(), opts);
  EXPECT_EQ(result.failed(), 1U);
  EXPECT_FALSE(result.folds[2].ok);
  EXPECT_NE(result.folds[2].error.find("injected"), std::string::npos);
  ASSERT_TRUE(result.report);
  EXPECT_EQ(result.report->per_fold.size(), 3U);
}

TEST_F(CrossValidation, ResumeTrainsOnlyMissingFolds) {
  CrossValidationOptions first;
  first.output_dir = dir_;
  first.only_folds = {0, 1};
  const auto partial = run_cross_validation(set_, folds_, tiny_lstm(), first);
  EXPECT_EQ(partial.folds.size(), 2U);

  std::vector<std::size_t> trained;
  CrossValidationOptions resume;
  resume.output_dir = dir_;
  resume.resume = true;
  resume.before_fold = [&](std::size_t fold) { trained.push_back(fold); };
  const auto full = run_cross_validation(set_, folds_, tiny_lstm(), resume);
  EXPECT_EQ(trained, (std::vector<std::size_t>{2, 3}));
  ASSERT_EQ(full.folds.size(), 4U);
  EXPECT_TRUE(full.folds[0].resumed);
  EXPECT_TRUE(full.folds[1].resumed);
  EXPECT_FALSE(full.folds[3].resumed);
  EXPECT_EQ(full.report->samples, 40U);

  // a different config invalidates the finished folds
  auto changed = tiny_lstm();
  changed.learning_rate = 2e-3;
  trained.clear();
  (void)run_cross_validation(set_, folds_, changed, resume);
  EXPECT_EQ(trained, (std::vector<std::size_t>{0, 1, 2, 3}));
}
