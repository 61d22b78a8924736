#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aspectsim/dataset_store.hpp"
#include "aspectsim/evaluation_report.hpp"
#include "aspectsim/models/model_config.hpp"
#include "aspectsim/models/pair_model.hpp"

namespace aspectsim::models {

struct FoldOutcome {
  std::size_t fold = 0;
  bool ok = false;
  bool resumed = false;
  std::string error;
  std::vector<std::size_t> test_indices;
  std::vector<PredictionRecord> predictions;
};

struct CrossValidationOptions {
  /// fold_<f>/predictions.jsonl and fold_<f>/status.json; report/ when set.
  std::optional<std::filesystem::path> output_dir;
  /// Reuse folds whose status.json says complete.
  bool resume = false;
  bool save_models = false;
  /// Restrict the run to these folds (all when empty).
  std::vector<std::size_t> only_folds;
  MacroMode macro_mode = MacroMode::kAllClasses;
  /// Called before a fold trains; throwing marks that fold failed.
  std::function<void(std::size_t fold)> before_fold;
};

struct CrossValidationResult {
  std::vector<FoldOutcome> folds;
  /// Built from the successful folds; empty when none succeeded.
  std::optional<EvaluationReport> report;

  [[nodiscard]] std::size_t failed() const;
};

/// Trains one model per fold on the other folds and predicts the held-out
/// fold. A failing fold is recorded and the remaining folds still run.
CrossValidationResult run_cross_validation(const SampleSet& dataset, const FoldAssignment& folds,
                                           const ModelConfig& config, const CrossValidationOptions& options = {});

std::vector<PredictionRecord> load_predictions(const std::filesystem::path& path, const LabelVocabulary& vocab);
void save_predictions(const std::vector<PredictionRecord>& predictions, const LabelVocabulary& vocab,
                      const std::filesystem::path& path);

}  // namespace aspectsim::models
