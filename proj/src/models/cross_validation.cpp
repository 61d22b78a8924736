#include "aspectsim/models/cross_validation.hpp"

#include <algorithm>
#include <fstream>

#include "aspectsim/log.hpp"

namespace aspectsim::models {

namespace fs = std::filesystem;

namespace {

fs::path fold_dir(const fs::path& root, std::size_t fold) { return root / ("fold_" + std::to_string(fold)); }

void write_status(const fs::path& dir, const FoldOutcome& outcome, const std::string& config_hash) {
  nlohmann::ordered_json j{{"fold", outcome.fold},
                           {"status", outcome.ok ? "complete" : "failed"},
                           {"config_hash", config_hash},
                           {"test_samples", outcome.test_indices.size()}};
  if (!outcome.ok) j["error"] = outcome.error;
  std::ofstream out(dir / "status.json");
  out << j.dump(2) << "\n";
}

// A fold trained under another config is not reusable.
bool fold_complete(const fs::path& dir, const std::string& config_hash) {
  std::ifstream in(dir / "status.json");
  if (!in || !fs::exists(dir / "predictions.jsonl")) return false;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.value("config_hash", "") != config_hash) {
      log::warn(dir.string() + ": config changed since this fold ran, retraining");
      return false;
    }
    return j.value("status", "") == "complete";
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

}  // namespace

std::size_t CrossValidationResult::failed() const {
  return static_cast<std::size_t>(std::count_if(folds.begin(), folds.end(), [](const auto& f) { return !f.ok; }));
}

void save_predictions(const std::vector<PredictionRecord>& predictions, const LabelVocabulary& vocab,
                      const fs::path& path) {
  const auto tmp = fs::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ModelError("cannot write " + path.string());
    for (const auto& p : predictions) out << p.to_json(vocab).dump() << "\n";
    if (!out) throw ModelError("failed writing " + path.string());
  }
  fs::rename(tmp, path);
}

std::vector<PredictionRecord> load_predictions(const fs::path& path, const LabelVocabulary& vocab) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read " + path.string());
  std::vector<PredictionRecord> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      out.push_back(PredictionRecord::from_json(nlohmann::json::parse(line), vocab));
    } catch (const std::exception& e) {
      throw ModelError(path.string() + " line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

CrossValidationResult run_cross_validation(const SampleSet& dataset, const FoldAssignment& folds,
                                           const ModelConfig& config, const CrossValidationOptions& options) {
  if (folds.fold_of.size() != dataset.samples.size()) {
    throw std::invalid_argument("fold assignment covers " + std::to_string(folds.fold_of.size()) + " samples, dataset has " +
                                std::to_string(dataset.samples.size()));
  }
  if (folds.k < 2) throw std::invalid_argument("cross-validation needs at least two folds");
  if (folds.k > dataset.samples.size()) throw std::invalid_argument("more folds than samples");

  std::vector<std::size_t> run;
  for (std::size_t f = 0; f < folds.k; ++f) {
    if (options.only_folds.empty() ||
        std::find(options.only_folds.begin(), options.only_folds.end(), f) != options.only_folds.end()) {
      run.push_back(f);
    }
  }

  const auto hash = config.hash();
  CrossValidationResult result;
  for (std::size_t f : run) {
    FoldOutcome outcome;
    outcome.fold = f;
    outcome.test_indices = folds.test_indices(f);
    std::optional<fs::path> dir;
    if (options.output_dir) {
      dir = fold_dir(*options.output_dir, f);
      fs::create_directories(*dir);
    }

    if (dir && options.resume && fold_complete(*dir, hash)) {
      try {
        outcome.predictions = load_predictions(*dir / "predictions.jsonl", dataset.vocab);
        if (outcome.predictions.size() != outcome.test_indices.size()) throw ModelError("stale predictions");
        for (std::size_t i = 0; i < outcome.test_indices.size(); ++i) {
          const auto& pair = dataset.samples[outcome.test_indices[i]].pair;
          if (outcome.predictions[i].seed_id != pair.seed_id || outcome.predictions[i].target_id != pair.target_id) {
            throw ModelError("stale predictions");
          }
        }
        outcome.ok = true;
        outcome.resumed = true;
        log::info("fold " + std::to_string(f) + ": reusing saved predictions");
        result.folds.push_back(std::move(outcome));
        continue;
      } catch (const std::exception& e) {
        log::warn("fold " + std::to_string(f) + ": cannot resume (" + e.what() + "), retraining");
        outcome.predictions.clear();
      }
    }

    try {
      if (options.before_fold) options.before_fold(f);
      std::vector<Sample> train_set, test_set;
      for (auto i : folds.train_indices(f)) train_set.push_back(dataset.samples[i]);
      for (auto i : outcome.test_indices) test_set.push_back(dataset.samples[i]);
      log::info("fold " + std::to_string(f) + ": training on " + std::to_string(train_set.size()) + " pairs, testing on " +
                std::to_string(test_set.size()));
      TrainOptions topts;
      if (dir) topts.log_path = *dir / "training_log.jsonl";
      auto model = train(config, train_set, dataset.vocab, topts);
      outcome.predictions = model.predict(test_set, dataset.vocab);
      if (dir) {
        save_predictions(outcome.predictions, dataset.vocab, *dir / "predictions.jsonl");
        if (options.save_models) model.save(*dir / "model");
      }
      outcome.ok = true;
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.error = e.what();
      outcome.predictions.clear();
      log::warn("fold " + std::to_string(f) + " failed: " + e.what() + "; continuing with the remaining folds");
    }
    if (dir) write_status(*dir, outcome, hash);
    result.folds.push_back(std::move(outcome));
  }

  std::vector<std::vector<LabelSet>> gold, pred;
  for (const auto& o : result.folds) {
    if (!o.ok) continue;
    std::vector<LabelSet> g, p;
    for (std::size_t i = 0; i < o.test_indices.size(); ++i) {
      g.push_back(dataset.samples[o.test_indices[i]].pair.labels);
      p.push_back(o.predictions[i].predicted);
    }
    gold.push_back(std::move(g));
    pred.push_back(std::move(p));
  }
  if (!gold.empty()) {
    result.report = build_report(gold, pred, dataset.vocab, options.macro_mode);
    if (options.output_dir) result.report->write(*options.output_dir / "report");
  }
  if (options.output_dir) {
    nlohmann::ordered_json summary;
    summary["k"] = folds.k;
    summary["model"] = config.to_json();
    summary["config_hash"] = config.hash();
    summary["folds"] = nlohmann::ordered_json::array();
    for (const auto& o : result.folds) {
      nlohmann::ordered_json f{{"fold", o.fold}, {"status", o.ok ? "complete" : "failed"}, {"resumed", o.resumed},
                               {"test_samples", o.test_indices.size()}};
      if (!o.ok) f["error"] = o.error;
      summary["folds"].push_back(f);
    }
    summary["failed_folds"] = result.failed();
    std::ofstream out(*options.output_dir / "cv_summary.json");
    out << summary.dump(2) << "\n";
  }
  return result;
}

}  // namespace aspectsim::models
