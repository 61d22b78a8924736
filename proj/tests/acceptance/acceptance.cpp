// Acceptance runner. Usage: acceptance [criterion ...]; no arguments runs 1-9.
// Prints one "C<n> PASS|FAIL: ..." line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "aspectsim/aspect_pairs.hpp"
#include "aspectsim/dataset_store.hpp"
#include "aspectsim/evaluation_report.hpp"
#include "aspectsim/metrics.hpp"
#include "aspectsim/models/cross_validation.hpp"
#include "aspectsim/models/model_config.hpp"
#include "aspectsim/models/multilabel_head.hpp"
#include "aspectsim/models/pair_model.hpp"
#include "aspectsim/models/subword_embeddings.hpp"
#include "aspectsim/models/tokenizer.hpp"
#include "aspectsim/negative_sampling.hpp"
#include "aspectsim/rng.hpp"
#include "aspectsim/section_normalizer.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using namespace aspectsim;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

std::string sci(double v) {
  std::ostringstream s;
  s.setf(std::ios::scientific);
  s.precision(2);
  s << v;
  return s.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("aspectsim_acceptance_" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// ---- C1 --------------------------------------------------------------------

Outcome golden_dataset() {
  const fs::path src = ASPECTSIM_SOURCE_DIR;
  const fs::path golden = src / "tests/fixtures/golden";
  const auto out = scratch("c1") / "out";
  const auto t0 = Clock::now();
  const std::string cmd = "cd '" + src.string() + "' && env -i PATH=\"$PATH\" SOURCE_DATE_EPOCH=0 '" +
                          std::string(ASPECTSIM_CLI) +
                          "' --log-level warn build-dataset --corpus tests/fixtures/golden/corpus --name golden --out '" +
                          out.string() + "' > /dev/null";
  if (std::system(cmd.c_str()) != 0) return {false, "build-dataset exited nonzero"};
  const double secs = seconds_since(t0);

  std::vector<std::string> diffs;
  std::set<std::string> expected_files;
  for (const auto& e : fs::directory_iterator(golden / "expected_output")) {
    const auto name = e.path().filename().string();
    expected_files.insert(name);
    if (!fs::exists(out / name) || slurp(e.path()) != slurp(out / name)) diffs.push_back(name);
  }
  for (const auto& e : fs::directory_iterator(out)) {
    if (!expected_files.contains(e.path().filename().string())) diffs.push_back("+" + e.path().filename().string());
  }

  // independent oracle: pairs, label sets and class counts
  const auto oracle = nlohmann::json::parse(slurp(golden / "expected_positives.json"));
  const auto set = load_dataset(out);
  std::map<std::pair<std::string, std::string>, std::set<std::string>> built;
  std::size_t negatives = 0;
  for (const auto& s : set.samples) {
    if (s.pair.labels == LabelSet{set.vocab.none_index()}) {
      ++negatives;
      continue;
    }
    auto names = set.vocab.names_of(s.pair.labels);
    built[{s.pair.seed_id, s.pair.target_id}] = {names.begin(), names.end()};
  }
  std::map<std::pair<std::string, std::string>, std::set<std::string>> expected;
  for (const auto& p : oracle.at("pairs")) {
    auto labels = p.at("labels").get<std::vector<std::string>>();
    expected[{p.at("seed_id").get<std::string>(), p.at("target_id").get<std::string>()}] = {labels.begin(), labels.end()};
  }
  if (built != expected) diffs.push_back("positive pairs differ from oracle");
  if (negatives != oracle.at("negatives").get<std::size_t>()) diffs.push_back("negative count differs from oracle");
  if (set.vocab.positive_classes() != oracle.at("positive_classes").get<std::vector<std::string>>()) {
    diffs.push_back("vocabulary differs from oracle");
  }
  if (slurp(out / "label_distribution.csv") != slurp(golden / "expected_label_distribution.csv")) {
    diffs.push_back("label distribution differs from oracle");
  }

  std::string detail = std::to_string(expected.size()) + " positive pairs, " + std::to_string(negatives) +
                       " negatives, " + std::to_string(expected_files.size()) + " golden files, " + fmt(secs, 2) + " s";
  for (const auto& d : diffs) detail += "; mismatch: " + d;
  return {diffs.empty() && secs < 10.0, detail};
}

// ---- C2 --------------------------------------------------------------------

Outcome normalization_table() {
  const std::vector<std::pair<std::string, std::set<std::string>>> cases = {
      {"Conclusion and Future Work", {"conclusion", "future work"}},
      {"Introduction", {"introduction"}},
      {"5. RESULTS:", {"results"}},
      {"Method", {"methods"}},
      {"Methods", {"methods"}},
      {"1 Introduction", {"introduction"}},
      {"2. Related Works", {"related work"}},
      {"RELATED WORK", {"related work"}},
      {"Results and Discussion", {"results", "discussion"}},
      {"Results & Discussion", {"results", "discussion"}},
      {"RESULTS AND DISCUSSION.", {"results", "discussion"}},
      {"Experiments", {"experiment"}},
      {"4.2 Experimental Setup", {"experimental setup"}},
      {"Conclusions", {"conclusion"}},
      {"7 Conclusion", {"conclusion"}},
      {"Background and Related Work", {"background", "related work"}},
      {"Related Work and Conclusion and Future Work", {"related work", "conclusion", "future work"}},
      {"", {}},
      {"1.2.3", {}},
      {"   ", {}},
      {"And", {}},
      {"Evaluation:", {"evaluation"}},
      {"Acknowledgements", {"acknowledgements"}},
      {"Materials and Methods", {"materials", "methods"}},
      {"Material & Method", {"materials", "methods"}},
      {"Discussion and Conclusions", {"discussion", "conclusion"}},
      {"Future Works", {"future work"}},
      {"Android Apps", {"android apps"}},
      {"Related-Work", {"related work"}},
      {"Introduction\tand\nMotivation", {"introduction", "motivation"}},
  };
  const SectionNormalizer normalizer;
  std::size_t exact = 0, idempotent = 0, outputs = 0;
  std::string failures;
  for (const auto& [raw, want] : cases) {
    const auto got = normalizer.normalize(raw);
    if (got == want) {
      ++exact;
    } else {
      failures += " '" + raw + "'";
    }
    for (const auto& s : got) {
      ++outputs;
      if (normalizer.normalize(s) == std::set<std::string>{s}) {
        ++idempotent;
      } else {
        failures += " not idempotent: '" + s + "'";
      }
    }
  }
  return {exact == cases.size() && idempotent == outputs,
          std::to_string(exact) + "/" + std::to_string(cases.size()) + " exact, " + std::to_string(idempotent) + "/" +
              std::to_string(outputs) + " idempotent" + (failures.empty() ? "" : ";" + failures)};
}

// ---- C3 --------------------------------------------------------------------

std::string serialize_pairs(const std::vector<DocumentPair>& pairs) {
  std::string out;
  for (const auto& p : pairs) out += p.seed_id + "\t" + p.target_id + "\t" + std::to_string(p.labels.bits()) + "\n";
  return out;
}

Outcome negative_audit() {
  testing::CorpusShape shape;
  shape.papers = 1500;
  const auto records = testing::synthetic_corpus(shape, 11);
  const std::size_t none = 10;
  const auto t0 = Clock::now();
  const NegativeConstraintIndex index(records);
  SamplerReport report;
  const auto first = sample_negatives(index, none, 10000, 2021, &report);
  const auto second = sample_negatives(NegativeConstraintIndex(records), none, 10000, 2021);
  const double sample_secs = seconds_since(t0);
  const auto audit = testing::audit_negatives(records, first, none);
  const double secs = seconds_since(t0);

  const bool identical = serialize_pairs(first) == serialize_pairs(second);
  std::string rejected;
  for (const auto& [reason, n] : report.rejections) rejected += " " + reason + "=" + std::to_string(n);
  std::string violations;
  for (const auto& [reason, n] : audit.violations) violations += " " + reason + "=" + std::to_string(n);
  return {first.size() == 10000 && audit.all_passed() && identical && secs < 30.0,
          std::to_string(audit.passed) + "/" + std::to_string(audit.checked) + " pass the re-check, runs " +
              (identical ? "byte-identical" : "DIFFER") + ", sampling " + fmt(sample_secs, 2) + " s, total " +
              fmt(secs, 2) + " s, rejections:" + rejected + (violations.empty() ? "" : ", violations:" + violations)};
}

// ---- C4 --------------------------------------------------------------------

Outcome metrics_oracle() {
  const auto t0 = Clock::now();
  SeededRng rng(4);
  double worst = 0.0;
  std::size_t structural = 0;
  auto cmp = [&](double a, double b) { worst = std::max(worst, std::abs(a - b)); };
  auto cmp_prf = [&](const metrics::Prf& a, const testing::OraclePrf& b) {
    cmp(a.precision, b.p);
    cmp(a.recall, b.r);
    cmp(a.f1, b.f);
  };
  for (int instance = 0; instance < 1000; ++instance) {
    const std::size_t c = 1 + rng.uniform_index(11);
    const std::size_t n = 1 + rng.uniform_index(50);
    const double density = 0.05 + 0.5 * rng.uniform01();
    std::vector<LabelSet> gold(n), pred(n);
    std::vector<std::vector<bool>> g(n, std::vector<bool>(c)), p(n, std::vector<bool>(c));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < c; ++k) {
        if (rng.uniform01() < density) {
          gold[i].insert(k);
          g[i][k] = true;
        }
        // predictions correlated with gold half the time
        const bool copy = rng.uniform_index(2) == 0;
        if (copy ? g[i][k] : rng.uniform01() < density) {
          pred[i].insert(k);
          p[i][k] = true;
        }
      }
    }
    const auto o = testing::oracle_metrics(g, p);
    cmp_prf(metrics::prf_micro(gold, pred), o.micro);
    cmp_prf(metrics::prf_macro(gold, pred, c), o.macro_all);
    if (c > 1) cmp_prf(metrics::prf_macro(gold, pred, c, c - 1), o.macro_without_last);
    const auto per = metrics::per_label_report(gold, pred, c);
    for (std::size_t k = 0; k < c; ++k) {
      cmp_prf(per[k].prf, o.per_class[k]);
      if (per[k].samples != o.support[k]) ++structural;
    }
    const auto by = metrics::by_label_count_report(gold, pred);
    for (std::size_t b = 0; b < 3; ++b) {
      if (by[b].samples != o.cardinality_samples[b] || by[b].prf.has_value() != o.by_cardinality[b].has_value()) {
        ++structural;
      } else if (by[b].prf) {
        cmp_prf(*by[b].prf, *o.by_cardinality[b]);
      }
    }
    std::map<std::pair<std::string, std::string>, std::size_t> confusion;
    for (const auto& [cell, count] : metrics::labelset_confusion(gold, pred)) {
      auto bits = [c](LabelSet s) {
        std::string out;
        for (std::size_t k = 0; k < c; ++k) out.push_back(s.contains(k) ? '1' : '0');
        return out;
      };
      confusion[{bits(cell.first), bits(cell.second)}] = count;
    }
    if (confusion != o.confusion) ++structural;
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-9 && structural == 0 && secs < 60.0,
          "1000 instances, max abs deviation " + sci(worst) + ", " + std::to_string(structural) +
              " count/confusion mismatches, " + fmt(secs, 2) + " s"};
}

// ---- C5 --------------------------------------------------------------------

Outcome stratification() {
  const auto t0 = Clock::now();
  const auto labels = testing::skewed_label_sets(5000, 5);
  const std::size_t classes = 11, k = 4;
  const auto folds = stratified_folds(labels, classes, k, 42);
  const double secs = seconds_since(t0);

  std::vector<std::size_t> total(classes, 0);
  std::vector<std::vector<std::size_t>> per_fold(k, std::vector<std::size_t>(classes, 0));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (auto c : labels[i].indices()) {
      ++total[c];
      ++per_fold[folds.fold_of[i]][c];
    }
  }
  const auto sizes = folds.fold_sizes();
  double worst = 0.0;
  std::size_t checked = 0;
  for (std::size_t c = 0; c < classes; ++c) {
    if (total[c] < 40) continue;
    ++checked;
    const double global = static_cast<double>(total[c]) / static_cast<double>(labels.size());
    for (std::size_t f = 0; f < k; ++f) {
      const double local = static_cast<double>(per_fold[f][c]) / static_cast<double>(sizes[f]);
      worst = std::max(worst, std::abs(local - global));
    }
  }
  std::string size_list;
  for (auto s : sizes) size_list += (size_list.empty() ? "" : "/") + std::to_string(s);
  return {worst <= 0.01 && secs < 30.0,
          std::to_string(checked) + " classes with >=40 samples, max deviation " + fmt(100.0 * worst, 3) +
              " pp, fold sizes " + size_list + ", " + fmt(secs, 2) + " s"};
}

// ---- C6 --------------------------------------------------------------------

double relative_error(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-8});
  return std::abs(a - b) / scale;
}

Outcome gradient_check() {
  const std::size_t classes = 3, inputs = 4;
  std::vector<double> w = {0.3, -0.2, 0.5, 0.1, -0.4, 0.25, 0.05, -0.3, 0.15, 0.35, -0.1, 0.2};
  std::vector<double> b = {0.05, -0.1, 0.2};
  std::vector<double> x = {1.2, -0.7, 0.4, 2.0};
  const std::vector<double> y = {1.0, 0.0, 1.0};
  const double h = 1e-6;

  auto numeric = [&](std::vector<double>& v, std::size_t i) {
    const double keep = v[i];
    v[i] = keep + h;
    const double up = models::head_loss(w, b, x, y);
    v[i] = keep - h;
    const double down = models::head_loss(w, b, x, y);
    v[i] = keep;
    return (up - down) / (2 * h);
  };

  // closed form
  const auto g = models::head_loss_and_gradient(w, b, x, y);
  double worst_closed = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) worst_closed = std::max(worst_closed, relative_error(g.d_weight[i], numeric(w, i)));
  for (std::size_t i = 0; i < b.size(); ++i) worst_closed = std::max(worst_closed, relative_error(g.d_bias[i], numeric(b, i)));
  for (std::size_t i = 0; i < x.size(); ++i) worst_closed = std::max(worst_closed, relative_error(g.d_input[i], numeric(x, i)));

  // the training loss through autograd
  auto opts = torch::TensorOptions().dtype(torch::kFloat64);
  auto tw = torch::tensor(w, opts).reshape({3, 4}).requires_grad_(true);
  auto tb = torch::tensor(b, opts).requires_grad_(true);
  auto tx = torch::tensor(x, opts).reshape({1, 4});
  auto ty = torch::tensor(y, opts).reshape({1, 3});
  auto loss = models::multilabel_loss(torch::addmm(tb.unsqueeze(0), tx, tw.t()), ty);
  loss.backward();
  auto gw = tw.grad().contiguous();
  auto gb = tb.grad().contiguous();
  double worst_autograd = relative_error(loss.item<double>(), models::head_loss(w, b, x, y));
  for (std::size_t i = 0; i < classes * inputs; ++i) {
    worst_autograd = std::max(worst_autograd, relative_error(gw.data_ptr<double>()[i], numeric(w, i)));
  }
  for (std::size_t i = 0; i < classes; ++i) {
    worst_autograd = std::max(worst_autograd, relative_error(gb.data_ptr<double>()[i], numeric(b, i)));
  }
  return {worst_closed <= 1e-4 && worst_autograd <= 1e-4,
          "max relative error: closed form " + sci(worst_closed) + ", autograd " + sci(worst_autograd)};
}

// ---- C7 --------------------------------------------------------------------

Outcome overfit() {
  const auto t0 = Clock::now();
  // word vectors pretrained on the abstracts of the whole corpus, classifier fit on 64 pairs
  const auto corpus = testing::topical_sample_set(2000, 7);
  std::vector<std::vector<std::string>> sentences;
  for (const auto& s : corpus.samples) {
    sentences.push_back(models::WordTokenizer::split_words(s.seed_title + ": " + s.seed_abstract));
    sentences.push_back(models::WordTokenizer::split_words(s.target_title + ": " + s.target_abstract));
  }
  auto config = models::config_for_model("lstm-baseline");
  const auto vectors = scratch("c7") / "vectors.bin";
  models::SubwordEmbeddings::train(sentences, config.embeddings).save(vectors);

  const std::vector<Sample> subset(corpus.samples.begin(), corpus.samples.begin() + 64);
  config.checkpoint = vectors.string();
  config.epochs = 50;
  config.learning_rate = 3e-3;
  auto model = models::train(config, subset, corpus.vocab);
  const double f1 = models::micro_f1_on(model, subset);
  const auto& losses = model.history().epoch_losses;

  // trend: every 5-epoch window mean below the previous one
  std::vector<double> windows;
  for (std::size_t e = 0; e + 5 <= losses.size(); e += 5) {
    double m = 0;
    for (std::size_t j = e; j < e + 5; ++j) m += losses[j] / 5.0;
    windows.push_back(m);
  }
  std::size_t rises = 0;
  for (std::size_t i = 1; i < windows.size(); ++i) rises += windows[i] > windows[i - 1];
  const bool downward = !losses.empty() && losses.back() < losses.front() && rises == 0;
  return {f1 >= 0.9 && downward && losses.size() == 50,
          "training micro-F1 " + fmt(f1) + " after " + std::to_string(losses.size()) + " epochs, epoch loss " +
              fmt(losses.empty() ? 0 : losses.front()) + " -> " + fmt(losses.empty() ? 0 : losses.back()) + ", " +
              std::to_string(rises) + " rising 5-epoch windows, " + fmt(seconds_since(t0), 1) + " s"};
}

// ---- C8 --------------------------------------------------------------------

Outcome learning_gate() {
  std::vector<std::string> candidates = {"scibert", "bert-base", "covid-bert", "electra-discriminator"};
  if (const char* m = std::getenv("ASPECTSIM_C8_MODEL"); m && *m) candidates = {m};
  std::optional<models::ModelConfig> config;
  std::string misses;
  for (const auto& name : candidates) {
    try {
      auto c = models::config_for_model(name);
      models::resolve_checkpoint(c.checkpoint);
      config = c;
      break;
    } catch (const std::exception& e) {
      misses += " [" + name + ": " + e.what() + "]";
    }
  }
  if (!config) return {false, "no BASE-size pretrained checkpoint available:" + misses};

  SampleSet data;
  if (const char* d = std::getenv("ASPECTSIM_C8_DATASET"); d && *d) {
    data = load_dataset(d);
  } else {
    data = testing::topical_sample_set(2000, 8);
  }
  SeededRng rng(8);
  std::span<Sample> all(data.samples);
  rng.shuffle(all);
  if (data.samples.size() > 2000) data.samples.resize(2000);
  const auto folds = stratified_folds(data, 4, 42);
  std::vector<Sample> train_set, test_set;
  for (auto i : folds.train_indices(0)) train_set.push_back(data.samples[i]);
  for (auto i : folds.test_indices(0)) test_set.push_back(data.samples[i]);

  const auto t0 = Clock::now();
  auto model = models::train(*config, train_set, data.vocab);
  const auto predictions = model.predict(test_set, data.vocab);
  std::vector<LabelSet> gold, pred;
  for (std::size_t i = 0; i < test_set.size(); ++i) {
    gold.push_back(test_set[i].pair.labels);
    pred.push_back(predictions[i].predicted);
  }
  std::vector<std::size_t> counts(data.vocab.size(), 0);
  for (const auto& s : train_set) {
    for (auto c : s.pair.labels.indices()) ++counts[c];
  }
  const auto top = static_cast<std::size_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
  const std::vector<LabelSet> constant(gold.size(), LabelSet{top});
  const double f1 = metrics::prf_micro(gold, pred).f1;
  const double baseline = metrics::prf_micro(gold, constant).f1;
  const double none_f1 = metrics::per_label_report(gold, pred, data.vocab.size())[data.vocab.none_index()].prf.f1;
  return {f1 >= baseline + 0.10 && none_f1 >= 0.80,
          config->name + " on " + std::to_string(train_set.size()) + "/" + std::to_string(test_set.size()) +
              " pairs: micro-F1 " + fmt(f1) + " vs most-frequent baseline " + fmt(baseline) + ", None F1 " +
              fmt(none_f1) + ", " + fmt(seconds_since(t0) / 3600.0, 2) + " h"};
}

// ---- C9 --------------------------------------------------------------------

Outcome protocol() {
  const auto set = testing::topical_sample_set(80, 9);
  const auto folds = stratified_folds(set, 4, 42);
  auto config = models::config_for_model("lstm-baseline");
  config.epochs = 3;
  config.learning_rate = 1e-3;
  const auto dir = scratch("c9");
  models::CrossValidationOptions options;
  options.output_dir = dir;
  const auto result = models::run_cross_validation(set, folds, config, options);
  std::vector<std::string> problems;
  if (result.failed() != 0) problems.push_back(std::to_string(result.failed()) + " folds failed");
  if (!result.report) return {false, "no report"};
  const auto& report = *result.report;

  for (const auto* f : {"report.json", "report.md", "overall.csv", "per_label.csv", "labelset_confusion.csv"}) {
    if (!fs::exists(dir / "report" / f)) problems.push_back(std::string("missing ") + f);
  }
  const auto md = slurp(dir / "report" / "report.md");
  for (const auto* section : {"## Overall", "## Per label", "1 label", "2 labels", "## Label-set confusion"}) {
    if (md.find(section) == std::string::npos) problems.push_back(std::string("report lacks '") + section + "'");
  }
  const auto j = nlohmann::json::parse(slurp(dir / "report" / "report.json"));
  for (const auto* key : {"overall", "per_fold", "per_label", "by_label_count", "labelset_confusion"}) {
    if (!j.contains(key) || j.at(key).empty()) problems.push_back(std::string("report.json lacks ") + key);
  }

  // partition: the fold prediction files cover every pair exactly once
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  for (std::size_t f = 0; f < 4; ++f) {
    for (const auto& p : models::load_predictions(dir / ("fold_" + std::to_string(f)) / "predictions.jsonl", set.vocab)) {
      ++seen[{p.seed_id, p.target_id}];
    }
  }
  std::size_t covered = 0;
  for (const auto& s : set.samples) covered += seen.count({s.pair.seed_id, s.pair.target_id}) && seen[{s.pair.seed_id, s.pair.target_id}] == 1;
  if (covered != set.samples.size() || seen.size() != set.samples.size()) problems.push_back("predictions do not partition the dataset");

  // std over exactly four folds
  std::vector<double> micro, macro;
  for (const auto& f : report.per_fold) {
    micro.push_back(f.micro.f1);
    macro.push_back(f.macro.f1);
  }
  if (report.per_fold.size() != 4) problems.push_back(std::to_string(report.per_fold.size()) + " folds aggregated");
  if (std::abs(report.micro.f1.std - testing::oracle_std(micro)) > 1e-12 ||
      std::abs(report.macro.f1.std - testing::oracle_std(macro)) > 1e-12) {
    problems.push_back("aggregate std differs from a 4-fold population std");
  }
  std::string detail = std::to_string(covered) + "/" + std::to_string(set.samples.size()) + " pairs covered once, " +
                       std::to_string(report.per_fold.size()) + " folds aggregated, micro-F1 " +
                       fmt(report.micro.f1.mean) + " +- " + fmt(report.micro.f1.std);
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::function<Outcome()>> criteria = {
      {1, golden_dataset}, {2, normalization_table}, {3, negative_audit}, {4, metrics_oracle}, {5, stratification},
      {6, gradient_check}, {7, overfit},             {8, learning_gate},  {9, protocol}};
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  if (selected.empty()) {
    for (const auto& [n, _] : criteria) selected.push_back(n);
  }

  torch::set_num_threads(1);
  int failures = 0;
  for (int n : selected) {
    auto it = criteria.find(n);
    Outcome o;
    if (it == criteria.end()) {
      o = {false, "unknown criterion"};
    } else {
      try {
        o = it->second();
      } catch (const std::exception& e) {
        o = {false, std::string("error: ") + e.what()};
      }
    }
    std::cout << "C" << n << (o.pass ? " PASS: " : " FAIL: ") << o.detail << std::endl;
    failures += !o.pass;
  }
  fs::remove_all(fs::temp_directory_path() / ("aspectsim_acceptance_" + std::to_string(::getpid())));
  return failures == 0 ? 0 : 1;
}
