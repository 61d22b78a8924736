#include "aspectsim/evaluation_report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aspectsim {

using nlohmann::ordered_json;

namespace {

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

ordered_json prf_json(const metrics::Prf& p) {
  ordered_json j;
  j["precision"] = p.precision;
  j["recall"] = p.recall;
  j["f1"] = p.f1;
  return j;
}

ordered_json agg_json(const AggregatedPrf& a) {
  ordered_json j;
  j["f1"] = a.f1.mean;
  j["f1_std"] = a.f1.std;
  j["precision"] = a.precision;
  j["recall"] = a.recall;
  return j;
}

AggregatedPrf aggregate(const std::vector<metrics::Prf>& values) {
  AggregatedPrf out;
  if (values.empty()) return out;
  std::vector<double> f1;
  for (const auto& v : values) {
    f1.push_back(v.f1);
    out.precision += v.precision;
    out.recall += v.recall;
  }
  out.f1 = mean_std(f1);
  out.precision /= static_cast<double>(values.size());
  out.recall /= static_cast<double>(values.size());
  return out;
}

const char* kBucketNames[3] = {"1 label", "2 labels", ">=3 labels"};

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace

MeanStd mean_std(std::span<const double> values) {
  MeanStd out;
  if (values.empty()) return out;
  for (double v : values) out.mean += v;
  out.mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - out.mean) * (v - out.mean);
  out.std = std::sqrt(var / static_cast<double>(values.size()));
  return out;
}

FoldMetrics evaluate_fold(std::span<const LabelSet> gold, std::span<const LabelSet> pred, const LabelVocabulary& vocab,
                          MacroMode mode) {
  FoldMetrics m;
  m.samples = gold.size();
  for (const auto& p : pred) m.empty_predictions += p.empty() ? 1 : 0;
  m.micro = metrics::prf_micro(gold, pred);
  m.macro = metrics::prf_macro(gold, pred, vocab.size(),
                               mode == MacroMode::kExcludeNone ? std::optional(vocab.none_index()) : std::nullopt);
  m.per_label = metrics::per_label_report(gold, pred, vocab.size());
  m.by_label_count = metrics::by_label_count_report(gold, pred);
  return m;
}

EvaluationReport build_report(const std::vector<std::vector<LabelSet>>& fold_gold,
                              const std::vector<std::vector<LabelSet>>& fold_pred, const LabelVocabulary& vocab,
                              MacroMode mode) {
  if (fold_gold.size() != fold_pred.size()) throw std::invalid_argument("fold count mismatch between gold and pred");
  EvaluationReport r;
  r.vocab = vocab;
  r.macro_mode = mode;
  for (std::size_t f = 0; f < fold_gold.size(); ++f) {
    r.per_fold.push_back(evaluate_fold(fold_gold[f], fold_pred[f], vocab, mode));
    for (const auto& [cell, n] : metrics::labelset_confusion(fold_gold[f], fold_pred[f])) r.labelset_confusion[cell] += n;
  }
  std::vector<metrics::Prf> micro, macro;
  for (const auto& fm : r.per_fold) {
    micro.push_back(fm.micro);
    macro.push_back(fm.macro);
    r.samples += fm.samples;
    r.empty_predictions += fm.empty_predictions;
  }
  r.micro = aggregate(micro);
  r.macro = aggregate(macro);

  for (std::size_t c = 0; c < vocab.size(); ++c) {
    PerLabelRow row;
    row.label = vocab.display_name(c);
    std::vector<metrics::Prf> values;
    for (const auto& fm : r.per_fold) {
      row.samples += fm.per_label[c].samples;
      values.push_back(fm.per_label[c].prf);
    }
    row.prf = aggregate(values);
    r.per_label.push_back(std::move(row));
  }
  for (std::size_t b = 0; b < 3; ++b) {
    LabelCountRow row;
    row.bucket = kBucketNames[b];
    std::vector<metrics::Prf> values;
    for (const auto& fm : r.per_fold) {
      row.samples += fm.by_label_count[b].samples;
      if (fm.by_label_count[b].prf) values.push_back(*fm.by_label_count[b].prf);
    }
    row.folds_with_samples = values.size();
    row.prf = aggregate(values);
    r.by_label_count.push_back(std::move(row));
  }
  return r;
}

std::string labelset_name(LabelSet set, const LabelVocabulary& vocab) {
  std::string out = "{";
  for (auto c : set.indices()) {
    if (out.size() > 1) out += ", ";
    out += vocab.display_name(c);
  }
  return out + "}";
}

ordered_json EvaluationReport::to_json() const {
  ordered_json j;
  j["folds"] = per_fold.size();
  j["samples"] = samples;
  j["empty_predictions"] = empty_predictions;
  j["empty_prediction_rate"] = samples ? static_cast<double>(empty_predictions) / static_cast<double>(samples) : 0.0;
  j["macro_mode"] = macro_mode == MacroMode::kAllClasses ? "all_classes" : "exclude_none";
  ordered_json overall;
  overall["macro"] = agg_json(macro);
  overall["micro"] = agg_json(micro);
  j["overall"] = std::move(overall);

  ordered_json folds = ordered_json::array();
  for (std::size_t f = 0; f < per_fold.size(); ++f) {
    ordered_json fj;
    fj["fold"] = f;
    fj["samples"] = per_fold[f].samples;
    fj["empty_predictions"] = per_fold[f].empty_predictions;
    fj["micro"] = prf_json(per_fold[f].micro);
    fj["macro"] = prf_json(per_fold[f].macro);
    folds.push_back(std::move(fj));
  }
  j["per_fold"] = std::move(folds);

  ordered_json labels = ordered_json::array();
  for (const auto& row : per_label) {
    ordered_json lj;
    lj["label"] = row.label;
    lj["samples"] = row.samples;
    lj["f1"] = row.prf.f1.mean;
    lj["f1_std"] = row.prf.f1.std;
    lj["precision"] = row.prf.precision;
    lj["recall"] = row.prf.recall;
    labels.push_back(std::move(lj));
  }
  j["per_label"] = std::move(labels);

  ordered_json buckets = ordered_json::array();
  for (const auto& row : by_label_count) {
    ordered_json bj;
    bj["bucket"] = row.bucket;
    bj["samples"] = row.samples;
    if (row.folds_with_samples == 0) {
      bj["f1"] = nullptr;
      bj["f1_std"] = nullptr;
      bj["precision"] = nullptr;
      bj["recall"] = nullptr;
    } else {
      bj["f1"] = row.prf.f1.mean;
      bj["f1_std"] = row.prf.f1.std;
      bj["precision"] = row.prf.precision;
      bj["recall"] = row.prf.recall;
    }
    buckets.push_back(std::move(bj));
  }
  j["by_label_count"] = std::move(buckets);

  ordered_json confusion = ordered_json::array();
  for (const auto& [cell, n] : labelset_confusion) {
    ordered_json cj;
    cj["gold"] = vocab.names_of(cell.first);
    cj["predicted"] = vocab.names_of(cell.second);
    cj["count"] = n;
    confusion.push_back(std::move(cj));
  }
  j["labelset_confusion"] = std::move(confusion);
  return j;
}

std::string EvaluationReport::overall_csv() const {
  std::ostringstream out;
  out << "fold,macro_f1,macro_precision,macro_recall,micro_f1,micro_precision,micro_recall\n";
  for (std::size_t f = 0; f < per_fold.size(); ++f) {
    const auto& m = per_fold[f];
    out << f << ',' << fmt6(m.macro.f1) << ',' << fmt6(m.macro.precision) << ',' << fmt6(m.macro.recall) << ','
        << fmt6(m.micro.f1) << ',' << fmt6(m.micro.precision) << ',' << fmt6(m.micro.recall) << '\n';
  }
  out << "mean," << fmt6(macro.f1.mean) << ',' << fmt6(macro.precision) << ',' << fmt6(macro.recall) << ','
      << fmt6(micro.f1.mean) << ',' << fmt6(micro.precision) << ',' << fmt6(micro.recall) << '\n';
  out << "std," << fmt6(macro.f1.std) << ",,," << fmt6(micro.f1.std) << ",,\n";
  return out.str();
}

std::string EvaluationReport::per_label_csv() const {
  std::ostringstream out;
  out << "label,samples,f1,f1_std,precision,recall\n";
  for (const auto& row : per_label) {
    out << csv_quote(row.label) << ',' << row.samples << ',' << fmt6(row.prf.f1.mean) << ',' << fmt6(row.prf.f1.std)
        << ',' << fmt6(row.prf.precision) << ',' << fmt6(row.prf.recall) << '\n';
  }
  for (const auto& row : by_label_count) {
    out << csv_quote(row.bucket) << ',' << row.samples << ',';
    if (row.folds_with_samples == 0) {
      out << "n/a,n/a,n/a,n/a\n";
    } else {
      out << fmt6(row.prf.f1.mean) << ',' << fmt6(row.prf.f1.std) << ',' << fmt6(row.prf.precision) << ','
          << fmt6(row.prf.recall) << '\n';
    }
  }
  return out.str();
}

std::string EvaluationReport::labelset_confusion_csv() const {
  std::ostringstream out;
  out << "gold,predicted,count\n";
  for (const auto& [cell, n] : labelset_confusion) {
    out << csv_quote(labelset_name(cell.first, vocab)) << ',' << csv_quote(labelset_name(cell.second, vocab)) << ','
        << n << '\n';
  }
  return out.str();
}

std::string EvaluationReport::to_markdown(std::size_t confusion_floor) const {
  std::ostringstream out;
  out << "## Overall (" << per_fold.size() << " folds, " << samples << " test samples)\n\n";
  out << "| | macro F1 (std) | macro P | macro R | micro F1 (std) | micro P | micro R |\n";
  out << "|---|---:|---:|---:|---:|---:|---:|\n";
  for (std::size_t f = 0; f < per_fold.size(); ++f) {
    const auto& m = per_fold[f];
    out << "| fold " << f << " | " << fmt3(m.macro.f1) << " | " << fmt3(m.macro.precision) << " | "
        << fmt3(m.macro.recall) << " | " << fmt3(m.micro.f1) << " | " << fmt3(m.micro.precision) << " | "
        << fmt3(m.micro.recall) << " |\n";
  }
  out << "| **mean** | " << fmt3(macro.f1.mean) << " ±" << fmt3(macro.f1.std) << " | " << fmt3(macro.precision)
      << " | " << fmt3(macro.recall) << " | " << fmt3(micro.f1.mean) << " ±" << fmt3(micro.f1.std) << " | "
      << fmt3(micro.precision) << " | " << fmt3(micro.recall) << " |\n\n";
  out << "Empty predictions: " << empty_predictions << " of " << samples << "\n\n";

  out << "## Per label\n\n| Label | Samples | F1 (Std) | P | R |\n|---|---:|---:|---:|---:|\n";
  for (const auto& row : per_label) {
    out << "| " << row.label << " | " << row.samples << " | " << fmt3(row.prf.f1.mean) << " ± " << fmt3(row.prf.f1.std)
        << " | " << fmt3(row.prf.precision) << " | " << fmt3(row.prf.recall) << " |\n";
  }
  for (const auto& row : by_label_count) {
    out << "| " << row.bucket << " | " << row.samples << " | ";
    if (row.folds_with_samples == 0) {
      out << "n/a | n/a | n/a |\n";
    } else {
      out << fmt3(row.prf.f1.mean) << " ± " << fmt3(row.prf.f1.std) << " | " << fmt3(row.prf.precision) << " | "
          << fmt3(row.prf.recall) << " |\n";
    }
  }

  const auto rows = metrics::confusion_row_sums(labelset_confusion);
  std::set<LabelSet> shown_rows;
  for (const auto& [gold, n] : rows) {
    if (n >= confusion_floor) shown_rows.insert(gold);
  }
  std::map<LabelSet, std::size_t> column_totals;
  for (const auto& [cell, n] : labelset_confusion) {
    if (shown_rows.contains(cell.first)) column_totals[cell.second] += n;
  }
  std::vector<LabelSet> columns;
  for (const auto& [pred, n] : column_totals) {
    if (n >= confusion_floor) columns.push_back(pred);
  }
  out << "\n## Label-set confusion\n\n| Gold | Samples |";
  for (const auto& c : columns) out << ' ' << labelset_name(c, vocab) << " |";
  out << "\n|---|---:|";
  for (std::size_t i = 0; i < columns.size(); ++i) out << "---:|";
  out << '\n';
  for (const auto& gold : shown_rows) {
    out << "| " << labelset_name(gold, vocab) << " | " << rows.at(gold) << " |";
    for (const auto& c : columns) {
      auto it = labelset_confusion.find({gold, c});
      out << ' ' << (it == labelset_confusion.end() ? std::string("-") : std::to_string(it->second)) << " |";
    }
    out << '\n';
  }
  return out.str();
}

void EvaluationReport::write(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  auto put = [&](const char* name, const std::string& content) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << content;
  };
  put("report.json", to_json().dump(2) + "\n");
  put("report.md", to_markdown());
  put("overall.csv", overall_csv());
  put("per_label.csv", per_label_csv());
  put("labelset_confusion.csv", labelset_confusion_csv());
}

}  // namespace aspectsim
