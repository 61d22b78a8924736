#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "aspectsim/label_set.hpp"

namespace aspectsim::metrics {

/// Precision, recall, F1. Any zero denominator yields 0.
struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

Prf prf_from_counts(std::size_t tp, std::size_t fp, std::size_t fn);

/// Pooled over every (sample, class) decision. Throws std::invalid_argument
/// on length mismatch.
Prf prf_micro(std::span<const LabelSet> gold, std::span<const LabelSet> pred);

/// Unweighted mean of per-class P, R and F1 over classes [0, num_classes),
/// skipping `excluded` when given. Classes absent from both sides count as 0.
Prf prf_macro(std::span<const LabelSet> gold, std::span<const LabelSet> pred, std::size_t num_classes,
              std::optional<std::size_t> excluded = std::nullopt);

struct LabelMetrics {
  std::size_t samples = 0;  // gold occurrences
  Prf prf;
};

std::vector<LabelMetrics> per_label_report(std::span<const LabelSet> gold, std::span<const LabelSet> pred,
                                           std::size_t num_classes);

/// Samples grouped by gold cardinality 1, 2, >=3. An empty bucket has no
/// metrics (reported as n/a).
struct CardinalityBucket {
  std::size_t samples = 0;
  std::optional<Prf> prf;
};
using LabelCountBreakdown = std::array<CardinalityBucket, 3>;

LabelCountBreakdown by_label_count_report(std::span<const LabelSet> gold, std::span<const LabelSet> pred);

/// (gold set, predicted set) -> count
using LabelSetConfusion = std::map<std::pair<LabelSet, LabelSet>, std::size_t>;

LabelSetConfusion labelset_confusion(std::span<const LabelSet> gold, std::span<const LabelSet> pred);

/// Row totals per gold label set.
std::map<LabelSet, std::size_t> confusion_row_sums(const LabelSetConfusion& confusion);

}  // namespace aspectsim::metrics
