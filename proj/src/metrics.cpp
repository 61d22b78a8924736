#include "aspectsim/metrics.hpp"

#include <stdexcept>
#include <string>

namespace aspectsim::metrics {

namespace {

void require_same_length(std::span<const LabelSet> gold, std::span<const LabelSet> pred) {
  if (gold.size() != pred.size()) {
    throw std::invalid_argument("gold/pred length mismatch: " + std::to_string(gold.size()) + " vs " +
                                std::to_string(pred.size()));
  }
}

struct Counts {
  std::size_t tp = 0, fp = 0, fn = 0;
};

}  // namespace

Prf prf_from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
  Prf out;
  const double dtp = static_cast<double>(tp);
  if (tp + fp > 0) out.precision = dtp / static_cast<double>(tp + fp);
  if (tp + fn > 0) out.recall = dtp / static_cast<double>(tp + fn);
  if (out.precision + out.recall > 0) out.f1 = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  return out;
}

Prf prf_micro(std::span<const LabelSet> gold, std::span<const LabelSet> pred) {
  require_same_length(gold, pred);
  Counts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    c.tp += (gold[i] & pred[i]).size();
    c.fp += pred[i].size() - (gold[i] & pred[i]).size();
    c.fn += gold[i].size() - (gold[i] & pred[i]).size();
  }
  return prf_from_counts(c.tp, c.fp, c.fn);
}

namespace {

std::vector<Counts> per_class_counts(std::span<const LabelSet> gold, std::span<const LabelSet> pred,
                                     std::size_t num_classes) {
  std::vector<Counts> counts(num_classes);
  for (std::size_t i = 0; i < gold.size(); ++i) {
    for (std::size_t c = 0; c < num_classes; ++c) {
      const bool g = gold[i].contains(c);
      const bool p = pred[i].contains(c);
      if (g && p) {
        ++counts[c].tp;
      } else if (p) {
        ++counts[c].fp;
      } else if (g) {
        ++counts[c].fn;
      }
    }
  }
  return counts;
}

}  // namespace

Prf prf_macro(std::span<const LabelSet> gold, std::span<const LabelSet> pred, std::size_t num_classes,
              std::optional<std::size_t> excluded) {
  require_same_length(gold, pred);
  const auto counts = per_class_counts(gold, pred, num_classes);
  Prf sum;
  std::size_t used = 0;
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (excluded && *excluded == c) continue;
    const auto prf = prf_from_counts(counts[c].tp, counts[c].fp, counts[c].fn);
    sum.precision += prf.precision;
    sum.recall += prf.recall;
    sum.f1 += prf.f1;
    ++used;
  }
  if (used == 0) return {};
  const double n = static_cast<double>(used);
  return {sum.precision / n, sum.recall / n, sum.f1 / n};
}

std::vector<LabelMetrics> per_label_report(std::span<const LabelSet> gold, std::span<const LabelSet> pred,
                                           std::size_t num_classes) {
  require_same_length(gold, pred);
  const auto counts = per_class_counts(gold, pred, num_classes);
  std::vector<LabelMetrics> out(num_classes);
  for (std::size_t c = 0; c < num_classes; ++c) {
    out[c].samples = counts[c].tp + counts[c].fn;
    out[c].prf = prf_from_counts(counts[c].tp, counts[c].fp, counts[c].fn);
  }
  return out;
}

LabelCountBreakdown by_label_count_report(std::span<const LabelSet> gold, std::span<const LabelSet> pred) {
  require_same_length(gold, pred);
  std::array<Counts, 3> counts{};
  LabelCountBreakdown out{};
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto n = gold[i].size();
    if (n == 0) continue;
    const std::size_t bucket = n >= 3 ? 2 : n - 1;
    ++out[bucket].samples;
    const auto hit = (gold[i] & pred[i]).size();
    counts[bucket].tp += hit;
    counts[bucket].fp += pred[i].size() - hit;
    counts[bucket].fn += n - hit;
  }
  for (std::size_t b = 0; b < 3; ++b) {
    if (out[b].samples > 0) out[b].prf = prf_from_counts(counts[b].tp, counts[b].fp, counts[b].fn);
  }
  return out;
}

LabelSetConfusion labelset_confusion(std::span<const LabelSet> gold, std::span<const LabelSet> pred) {
  require_same_length(gold, pred);
  LabelSetConfusion out;
  for (std::size_t i = 0; i < gold.size(); ++i) ++out[{gold[i], pred[i]}];
  return out;
}

std::map<LabelSet, std::size_t> confusion_row_sums(const LabelSetConfusion& confusion) {
  std::map<LabelSet, std::size_t> out;
  for (const auto& [cell, n] : confusion) out[cell.first] += n;
  return out;
}

}  // namespace aspectsim::metrics
