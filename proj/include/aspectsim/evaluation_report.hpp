#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aspectsim/label_vocabulary.hpp"
#include "aspectsim/metrics.hpp"

namespace aspectsim {

enum class MacroMode { kAllClasses, kExcludeNone };

struct FoldMetrics {
  std::size_t samples = 0;
  std::size_t empty_predictions = 0;
  metrics::Prf micro;
  metrics::Prf macro;
  std::vector<metrics::LabelMetrics> per_label;
  metrics::LabelCountBreakdown by_label_count;
};

FoldMetrics evaluate_fold(std::span<const LabelSet> gold, std::span<const LabelSet> pred, const LabelVocabulary& vocab,
                          MacroMode mode = MacroMode::kAllClasses);

/// Mean and population standard deviation.
struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};
MeanStd mean_std(std::span<const double> values);

struct AggregatedPrf {
  MeanStd f1;
  double precision = 0.0;
  double recall = 0.0;
};

struct PerLabelRow {
  std::string label;
  std::size_t samples = 0;
  AggregatedPrf prf;
};

struct LabelCountRow {
  std::string bucket;  // "1 label", "2 labels", ">=3 labels"
  std::size_t samples = 0;
  std::size_t folds_with_samples = 0;
  AggregatedPrf prf;  // meaningful only when folds_with_samples > 0
};

/// Cross-validation report: overall micro/macro scores with std over folds,
/// per-label scores, the gold-cardinality breakdown and the label-set
/// confusion summed over folds.
struct EvaluationReport {
  LabelVocabulary vocab;
  MacroMode macro_mode = MacroMode::kAllClasses;
  std::vector<FoldMetrics> per_fold;
  AggregatedPrf micro;
  AggregatedPrf macro;
  std::vector<PerLabelRow> per_label;
  std::vector<LabelCountRow> by_label_count;
  metrics::LabelSetConfusion labelset_confusion;
  std::size_t samples = 0;
  std::size_t empty_predictions = 0;

  [[nodiscard]] nlohmann::ordered_json to_json() const;
  /// Markdown tables: overall, per label, label-set confusion (rows and
  /// columns restricted to cells/sets with at least `confusion_floor` samples).
  [[nodiscard]] std::string to_markdown(std::size_t confusion_floor = 1) const;
  [[nodiscard]] std::string overall_csv() const;
  [[nodiscard]] std::string per_label_csv() const;
  [[nodiscard]] std::string labelset_confusion_csv() const;

  /// report.json, report.md, overall.csv, per_label.csv, labelset_confusion.csv
  void write(const std::filesystem::path& dir) const;
};

/// One (gold, pred) list per fold.
EvaluationReport build_report(const std::vector<std::vector<LabelSet>>& fold_gold,
                              const std::vector<std::vector<LabelSet>>& fold_pred, const LabelVocabulary& vocab,
                              MacroMode mode = MacroMode::kAllClasses);

/// "{Discussion, Introduction}"; "{}" for the empty set.
std::string labelset_name(LabelSet set, const LabelVocabulary& vocab);

}  // namespace aspectsim
