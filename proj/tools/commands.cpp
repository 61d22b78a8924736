#include "commands.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aspectsim/dataset_builder.hpp"
#include "aspectsim/dataset_store.hpp"
#include "aspectsim/evaluation_report.hpp"
#include "aspectsim/log.hpp"
#include "aspectsim/metadata_client.hpp"
#include "aspectsim/models/cross_validation.hpp"
#include "aspectsim/models/pair_model.hpp"
#include "aspectsim/run_config.hpp"
#include "aspectsim/text_util.hpp"

namespace aspectsim::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<TomlDocument> load_toml(const std::string& path) {
  if (path.empty()) return std::nullopt;
  if (!fs::exists(path)) throw UsageError("config file " + path + " does not exist");
  return TomlDocument::load(path);
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return std::string(v);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

// Content hash of a file, or of every file under a directory (sorted by
// relative path).
std::string hash_input(const fs::path& path) {
  if (!fs::exists(path)) return "missing";
  if (fs::is_regular_file(path)) return text::hex64(text::fnv1a64(read_file(path)));
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(path)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::string acc;
  for (const auto& f : files) {
    acc += fs::relative(f, path).generic_string() + '\0' + text::hex64(text::fnv1a64(read_file(f))) + '\n';
  }
  return text::hex64(text::fnv1a64(acc));
}

void write_manifest(const fs::path& dir, const std::string& command, const json& config,
                    const std::map<std::string, std::uint64_t>& seeds, const std::vector<fs::path>& inputs) {
  json m;
  m["command"] = command;
  m["version"] = kVersion;
  m["config"] = config;
  m["config_hash"] = config_hash(config);
  m["seeds"] = seeds;
  json in = json::object();
  for (const auto& p : inputs) in[p.generic_string()] = hash_input(p);
  m["inputs"] = in;
  write_file(dir / "manifest.json", m.dump(2) + "\n");
}

// Scratch directory beside `out`; renamed into place on success.
class StagedOutput {
 public:
  explicit StagedOutput(fs::path out) : out_(std::move(out)) {
    const auto parent = out_.has_parent_path() ? out_.parent_path() : fs::path(".");
    fs::create_directories(parent);
    tmp_ = parent / ("." + out_.filename().string() + ".tmp-" + std::to_string(::getpid()));
    fs::remove_all(tmp_);
    fs::create_directories(tmp_);
  }
  ~StagedOutput() {
    std::error_code ec;
    if (!committed_) fs::remove_all(tmp_, ec);
  }
  StagedOutput(const StagedOutput&) = delete;
  StagedOutput& operator=(const StagedOutput&) = delete;

  [[nodiscard]] const fs::path& dir() const { return tmp_; }

  void commit() {
    if (fs::exists(out_)) {
      if (!fs::exists(out_ / "manifest.json")) {
        throw std::runtime_error(out_.string() + " exists and was not written by aspectsim; refusing to replace it");
      }
      fs::remove_all(out_);
    }
    fs::rename(tmp_, out_);
    committed_ = true;
  }

 private:
  fs::path out_;
  fs::path tmp_;
  bool committed_ = false;
};

struct ModelFlags {
  std::optional<std::string> model;
  std::optional<std::string> checkpoint;
  std::optional<std::size_t> epochs;
  std::optional<double> lr;
  std::optional<std::size_t> batch_size;
  std::optional<double> threshold;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_len;

  void add_to(CLI::App* app) {
    app->add_option("--model", model, "registry name (bert-base, scibert, covid-bert, roberta, xlnet, "
                                      "electra-discriminator, lstm-baseline)");
    app->add_option("--checkpoint", checkpoint, "checkpoint id/directory, or word-vector file for lstm-baseline");
    app->add_option("--epochs", epochs);
    app->add_option("--lr", lr, "learning rate");
    app->add_option("--batch-size", batch_size)->check(CLI::PositiveNumber);
    app->add_option("--threshold", threshold, "classification threshold in (0,1)")->check(CLI::Range(0.0, 1.0));
    app->add_option("--seed", seed);
    app->add_option("--max-len", max_len);
  }
};

// registry defaults < TOML [model] < environment < flags
models::ModelConfig resolve_model_config(const ModelFlags& flags, const std::optional<TomlDocument>& doc) {
  std::string name = "scibert";
  if (doc) {
    if (auto v = doc->get_string("model.name")) name = *v;
  }
  if (auto v = env("ASPECTSIM_MODEL")) name = *v;
  if (flags.model) name = *flags.model;
  auto c = models::config_for_model(name);
  if (doc) {
    if (auto v = doc->get_string("model.checkpoint")) c.checkpoint = *v;
    if (auto v = doc->get_int("model.epochs")) c.epochs = static_cast<std::size_t>(*v);
    if (auto v = doc->get_double("model.learning_rate")) c.learning_rate = *v;
    if (auto v = doc->get_int("model.batch_size")) c.batch_size = static_cast<std::size_t>(*v);
    if (auto v = doc->get_double("model.threshold")) c.classification_threshold = *v;
    if (auto v = doc->get_int("model.seed")) c.seed = static_cast<std::uint64_t>(*v);
    if (auto v = doc->get_int("model.max_len")) c.max_len = static_cast<std::size_t>(*v);
    if (auto v = doc->get_double("model.dropout")) c.dropout = *v;
    if (auto v = doc->get_string("model.schedule")) c.schedule = *v;
    if (auto v = doc->get_int("model.warmup_steps")) c.warmup_steps = static_cast<std::size_t>(*v);
    if (auto v = doc->get_int("model.hidden_size")) c.hidden_size = static_cast<std::size_t>(*v);
    if (auto v = doc->get_int("model.num_layers")) c.num_layers = static_cast<std::size_t>(*v);
    if (auto v = doc->get_bool("model.attention")) c.attention = *v;
    if (auto v = doc->get_int("model.embedding_dim")) c.embeddings.dim = static_cast<std::size_t>(*v);
    if (auto v = doc->get_int("model.embedding_epochs")) c.embeddings.epochs = static_cast<std::size_t>(*v);
  }
  if (auto v = env("ASPECTSIM_CHECKPOINT")) c.checkpoint = *v;
  if (auto v = env("ASPECTSIM_SEED")) c.seed = std::stoull(*v);
  if (flags.checkpoint) c.checkpoint = *flags.checkpoint;
  if (flags.epochs) c.epochs = *flags.epochs;
  if (flags.lr) c.learning_rate = *flags.lr;
  if (flags.batch_size) c.batch_size = *flags.batch_size;
  if (flags.threshold) c.classification_threshold = *flags.threshold;
  if (flags.seed) c.seed = *flags.seed;
  if (flags.max_len) c.max_len = *flags.max_len;
  if (!(c.classification_threshold > 0.0 && c.classification_threshold < 1.0)) {
    throw UsageError("--threshold must lie strictly between 0 and 1");
  }
  return c;
}

fs::path require_dataset(const std::string& dir) {
  if (dir.empty()) throw UsageError("missing dataset directory (--dataset)");
  if (!fs::exists(fs::path(dir) / "samples.jsonl")) throw UsageError(dir + " holds no dataset (samples.jsonl)");
  return dir;
}

// ---------------------------------------------------------------- build-dataset

struct BuildFlags {
  std::string out;
  std::optional<std::string> corpus, format, name, variants;
  std::optional<double> ratio;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> folds, top_k;
  bool enrich = false;
  bool offline = false;
  std::optional<std::string> cache_dir;
};

int cmd_build_dataset(const BuildFlags& f, const std::optional<TomlDocument>& doc) {
  BuildConfig cfg;
  if (doc) cfg.apply(*doc);
  cfg.metadata.apply_env();
  if (auto v = env("ASPECTSIM_CORPUS")) cfg.corpus_path = *v;
  if (auto v = env("ASPECTSIM_SEED")) cfg.seed = std::stoull(*v);
  if (f.corpus) cfg.corpus_path = *f.corpus;
  if (f.format) cfg.format = parse_corpus_format(*f.format);
  if (f.name) cfg.corpus_name = *f.name;
  if (f.variants) cfg.variants_path = *f.variants;
  if (f.ratio) cfg.negative_ratio = *f.ratio;
  if (f.seed) cfg.seed = *f.seed;
  if (f.folds) cfg.folds = *f.folds;
  if (f.top_k) cfg.top_k = *f.top_k;
  if (f.enrich) cfg.enrich = true;
  if (f.offline) cfg.metadata.offline = true;
  if (f.cache_dir) cfg.metadata.cache_dir = *f.cache_dir;

  if (cfg.corpus_path.empty()) throw UsageError("missing corpus path (--corpus or [corpus] path)");
  if (!fs::exists(cfg.corpus_path)) throw UsageError("corpus path " + cfg.corpus_path.string() + " does not exist");
  if (f.out.empty()) throw UsageError("missing output directory (--out)");
  if (cfg.corpus_name.empty()) cfg.corpus_name = cfg.corpus_path.filename().string();

  StagedOutput staged(f.out);
  std::unique_ptr<HttpMetadataClient> client;
  if (cfg.enrich) client = std::make_unique<HttpMetadataClient>(cfg.metadata);
  auto result = build_dataset(cfg, client.get());
  write_build_outputs(result, staged.dir());
  std::vector<fs::path> inputs{cfg.corpus_path};
  if (!cfg.variants_path.empty()) inputs.push_back(cfg.variants_path);
  write_manifest(staged.dir(), "build-dataset", cfg.to_json(), {{"negatives", cfg.seed}, {"folds", cfg.seed}}, inputs);
  staged.commit();

  std::cout << "papers: " << result.records.size() << "\n"
            << "pairs: " << result.set.samples.size() << " (" << result.stats.positives << " positive, "
            << result.stats.negatives << " negative)\n"
            << "config hash: " << cfg.hash() << "\n"
            << "written to " << f.out << "\n";
  return 0;
}

// ---------------------------------------------------------------- stats

int cmd_stats(const std::string& dataset_dir, const std::string& out) {
  const auto dir = require_dataset(dataset_dir);
  const auto set = load_dataset(dir);
  const auto stats = dataset_stats(set);
  std::cout << stats.to_markdown(set.vocab);
  if (!out.empty()) {
    StagedOutput staged(out);
    write_file(staged.dir() / "stats.json", stats.to_json().dump(2) + "\n");
    write_file(staged.dir() / "stats.csv", stats.to_csv());
    write_file(staged.dir() / "stats.md", stats.to_markdown(set.vocab));
    json cfg{{"dataset", dir.generic_string()}};
    write_manifest(staged.dir(), "stats", cfg, {}, {dir / "samples.jsonl", dir / "vocab.json"});
    staged.commit();
  }
  return 0;
}

// ---------------------------------------------------------------- train

FoldAssignment dataset_folds(const fs::path& dir, const SampleSet& set, std::optional<std::size_t> k,
                             std::uint64_t seed) {
  if (!k && fs::exists(dir / "folds.json")) return load_folds(dir / "folds.json");
  return stratified_folds(set, k.value_or(4), seed);
}

int cmd_train(const std::string& dataset_dir, const std::string& out, const ModelFlags& mf,
              std::optional<std::size_t> fold, const std::optional<TomlDocument>& doc) {
  const auto dir = require_dataset(dataset_dir);
  if (out.empty()) throw UsageError("missing output directory (--out)");
  const auto config = resolve_model_config(mf, doc);
  const auto set = load_dataset(dir);

  std::vector<Sample> train_set;
  if (fold) {
    const auto folds = dataset_folds(dir, set, std::nullopt, config.seed);
    if (*fold >= folds.k) throw UsageError("--fold must be below k=" + std::to_string(folds.k));
    for (auto i : folds.train_indices(*fold)) train_set.push_back(set.samples[i]);
  } else {
    train_set = set.samples;
  }

  StagedOutput staged(out);
  models::TrainOptions opts;
  std::size_t last_epoch = SIZE_MAX;
  opts.on_step = [&](const models::TrainingLogEntry& e) {
    if (e.epoch != last_epoch) {
      last_epoch = e.epoch;
      log::info("epoch " + std::to_string(e.epoch));
    }
  };
  auto model = models::train(config, train_set, set.vocab, opts);
  model.save(staged.dir());
  json cfg = config.to_json();
  cfg["dataset"] = dir.generic_string();
  cfg["fold"] = fold ? json(*fold) : json(nullptr);
  write_manifest(staged.dir(), "train", cfg, {{"model", config.seed}}, {dir / "samples.jsonl", dir / "vocab.json"});
  staged.commit();

  const auto& losses = model.history().epoch_losses;
  for (std::size_t e = 0; e < losses.size(); ++e) {
    std::cout << "epoch " << e << " mean loss " << std::fixed << std::setprecision(6) << losses[e] << "\n";
  }
  std::cout << "model written to " << out << "\n";
  return 0;
}

// ---------------------------------------------------------------- cross-validate

int cmd_cross_validate(const std::string& dataset_dir, const std::string& out, const ModelFlags& mf,
                       std::optional<std::size_t> k, const std::vector<std::size_t>& only, bool resume,
                       bool save_models, bool exclude_none, const std::optional<TomlDocument>& doc) {
  const auto dir = require_dataset(dataset_dir);
  if (out.empty()) throw UsageError("missing output directory (--out)");
  auto config = resolve_model_config(mf, doc);
  const auto set = load_dataset(dir);
  std::optional<std::size_t> folds_k = k;
  if (!folds_k && doc) {
    if (auto v = doc->get_int("folds.k")) folds_k = static_cast<std::size_t>(*v);
  }
  if (folds_k && *folds_k > set.samples.size()) {
    throw std::runtime_error("k=" + std::to_string(*folds_k) + " exceeds the " + std::to_string(set.samples.size()) +
                             " samples in the dataset");
  }
  const auto folds = dataset_folds(dir, set, folds_k, config.seed);

  fs::create_directories(out);
  models::CrossValidationOptions opts;
  opts.output_dir = fs::path(out);
  opts.resume = resume;
  opts.save_models = save_models;
  opts.only_folds = only;
  opts.macro_mode = exclude_none ? MacroMode::kExcludeNone : MacroMode::kAllClasses;
  auto result = models::run_cross_validation(set, folds, config, opts);

  json cfg = config.to_json();
  cfg["dataset"] = dir.generic_string();
  cfg["k"] = folds.k;
  cfg["folds_seed"] = folds.seed;
  cfg["macro"] = exclude_none ? "exclude_none" : "all_classes";
  write_manifest(out, "cross-validate", cfg, {{"model", config.seed}, {"folds", folds.seed}},
                 {dir / "samples.jsonl", dir / "vocab.json"});

  for (const auto& fo : result.folds) {
    std::cout << "fold " << fo.fold << ": " << (fo.ok ? (fo.resumed ? "reused" : "complete") : "FAILED: " + fo.error)
              << "\n";
  }
  if (result.report) std::cout << "\n" << result.report->to_markdown();
  if (result.failed() > 0) {
    std::cerr << result.failed() << " fold(s) failed; see " << out << "/cv_summary.json\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------- evaluate

std::string pair_key(const std::string& seed, const std::string& target) { return seed + '\x1f' + target; }

int cmd_evaluate(const std::string& dataset_dir, const std::string& cv_dir, const std::string& model_dir,
                 std::optional<std::size_t> fold, std::string out, bool exclude_none) {
  const auto dir = require_dataset(dataset_dir);
  const auto set = load_dataset(dir);
  if (cv_dir.empty() == model_dir.empty()) throw UsageError("give exactly one of --predictions or --model");
  const auto mode = exclude_none ? MacroMode::kExcludeNone : MacroMode::kAllClasses;

  std::vector<std::vector<LabelSet>> gold, pred;
  std::vector<fs::path> inputs{dir / "samples.jsonl", dir / "vocab.json"};
  if (!cv_dir.empty()) {
    std::map<std::string, LabelSet> gold_of;
    for (const auto& s : set.samples) gold_of[pair_key(s.pair.seed_id, s.pair.target_id)] = s.pair.labels;
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(cv_dir)) {
      if (e.is_directory() && e.path().filename().string().rfind("fold_", 0) == 0 &&
          fs::exists(e.path() / "predictions.jsonl")) {
        files.push_back(e.path() / "predictions.jsonl");
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw UsageError(cv_dir + " holds no fold_*/predictions.jsonl");
    for (const auto& f : files) {
      std::vector<LabelSet> g, p;
      for (const auto& r : models::load_predictions(f, set.vocab)) {
        auto it = gold_of.find(pair_key(r.seed_id, r.target_id));
        if (it == gold_of.end()) throw std::runtime_error(f.string() + ": pair " + r.seed_id + " -> " + r.target_id + " is not in the dataset");
        g.push_back(it->second);
        p.push_back(r.predicted);
      }
      gold.push_back(std::move(g));
      pred.push_back(std::move(p));
      inputs.push_back(f);
    }
    if (out.empty()) out = (fs::path(cv_dir) / "report").string();
  } else {
    const auto model = models::PairModel::load(model_dir);
    std::vector<Sample> test;
    if (fold) {
      const auto folds = dataset_folds(dir, set, std::nullopt, model.config().seed);
      if (*fold >= folds.k) throw UsageError("--fold must be below k=" + std::to_string(folds.k));
      for (auto i : folds.test_indices(*fold)) test.push_back(set.samples[i]);
    } else {
      test = set.samples;
    }
    const auto preds = model.predict(test, set.vocab);
    std::vector<LabelSet> g, p;
    for (std::size_t i = 0; i < test.size(); ++i) {
      g.push_back(test[i].pair.labels);
      p.push_back(preds[i].predicted);
    }
    gold.push_back(std::move(g));
    pred.push_back(std::move(p));
    inputs.push_back(fs::path(model_dir) / "weights.safetensors");
    if (out.empty()) throw UsageError("missing output directory (--out)");
  }

  const auto report = build_report(gold, pred, set.vocab, mode);
  fs::create_directories(out);
  report.write(out);
  json cfg{{"dataset", dir.generic_string()},
           {"predictions", cv_dir},
           {"model", model_dir},
           {"fold", fold ? json(*fold) : json(nullptr)},
           {"macro", exclude_none ? "exclude_none" : "all_classes"}};
  write_manifest(out, "evaluate", cfg, {}, inputs);
  std::cout << report.to_markdown();
  return 0;
}

// ---------------------------------------------------------------- predict

struct ResolvedPaper {
  std::string id;
  std::string title;
  std::string abstract;
};

ResolvedPaper resolve_paper(const std::string& ref, const MetadataClientConfig& mc) {
  if (fs::is_regular_file(ref)) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_file(ref));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(ref + ": " + e.what());
    }
    ResolvedPaper p{j.value("paper_id", j.value("id", fs::path(ref).stem().string())), j.value("title", ""),
                    j.value("abstract", "")};
    if (text::trim(p.title).empty() || text::trim(p.abstract).empty()) {
      throw UsageError(ref + " needs non-empty \"title\" and \"abstract\"");
    }
    return p;
  }
  const auto colon = ref.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == ref.size()) {
    throw UsageError("paper reference '" + ref + "' is neither a JSON file nor scheme:id (doi:, arxiv:, s2:, pmid:, acl:)");
  }
  MetadataQuery q;
  q.id_scheme = ref.substr(0, colon);
  std::transform(q.id_scheme.begin(), q.id_scheme.end(), q.id_scheme.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  q.id_value = ref.substr(colon + 1);
  HttpMetadataClient client(mc);
  auto r = client.lookup(q);
  if (r.status != LookupStatus::kFound || !r.response) {
    std::string why = r.status == LookupStatus::kFailed ? " (" + r.error + ")" : "";
    throw std::runtime_error("paper not found: " + ref + why);
  }
  if (text::trim(r.response->title).empty() || text::trim(r.response->abstract).empty()) {
    throw std::runtime_error("paper not found: " + ref + " has no title/abstract in the metadata service");
  }
  return {r.response->paper_id.empty() ? ref : r.response->paper_id, r.response->title, r.response->abstract};
}

int cmd_predict(const std::string& model_dir, const std::string& seed_ref, const std::string& target_ref,
                bool offline, const std::optional<std::string>& cache_dir, const std::optional<std::string>& url,
                bool as_json) {
  if (model_dir.empty()) throw UsageError("missing --model directory");
  if (seed_ref.empty() || target_ref.empty()) throw UsageError("both --seed-paper and --target-paper are required");
  MetadataClientConfig mc;
  mc.apply_env();
  if (offline) mc.offline = true;
  if (cache_dir) mc.cache_dir = *cache_dir;
  if (url) mc.base_url = *url;

  const auto seed = resolve_paper(seed_ref, mc);
  const auto target = resolve_paper(target_ref, mc);
  const auto model = models::PairModel::load(model_dir);
  Sample s;
  s.pair.seed_id = seed.id;
  s.pair.target_id = target.id;
  s.seed_title = seed.title;
  s.seed_abstract = seed.abstract;
  s.target_title = target.title;
  s.target_abstract = target.abstract;
  const auto record = model.predict(std::span<const Sample>(&s, 1), model.vocab()).front();
  const auto& vocab = model.vocab();

  LabelSet positive = record.predicted;
  positive.erase(vocab.none_index());
  std::string verdict;
  if (!positive.empty()) {
    verdict = "positive: the seed is expected to cite the target";
  } else if (record.predicted.contains(vocab.none_index())) {
    verdict = "None: no citation relation expected";
  } else {
    verdict = "undecided: no class reached the threshold";
  }

  if (as_json) {
    json j = record.to_json(vocab);
    j["predicted_display"] = labelset_name(record.predicted, vocab);
    j["verdict"] = verdict;
    j["threshold"] = model.config().classification_threshold;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "seed:      " << seed.title << "\n"
            << "target:    " << target.title << "\n"
            << "predicted: " << labelset_name(record.predicted, vocab) << "\n"
            << "verdict:   " << verdict << "\n"
            << "probabilities (threshold " << model.config().classification_threshold << "):\n";
  for (std::size_t c = 0; c < vocab.size(); ++c) {
    std::cout << "  " << std::left << std::setw(24) << vocab.display_name(c) << std::fixed << std::setprecision(4)
              << record.probabilities[c] << (record.predicted.contains(c) ? "  *" : "") << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Aspect-based document similarity: dataset construction, pair classifiers and evaluation"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::string config_path;
  std::string log_level = "info";
  app.add_option("--config", config_path, "TOML run configuration");
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error, off");

  BuildFlags bf;
  auto* build = app.add_subcommand("build-dataset", "corpus -> pairs, labels, negatives, folds and stats");
  build->add_option("--corpus", bf.corpus, "corpus directory");
  build->add_option("--format", bf.format, "acl_style or cord19_style");
  build->add_option("--name", bf.name, "corpus name recorded in provenance");
  build->add_option("--variants", bf.variants, "section variant table");
  build->add_option("--negative-ratio", bf.ratio, "negatives per positive pair");
  build->add_option("--seed", bf.seed);
  build->add_option("--folds", bf.folds, "k for stratified folds")->check(CLI::Range(2, 1000));
  build->add_option("--top-k", bf.top_k, "number of section classes");
  build->add_flag("--enrich", bf.enrich, "fill missing abstracts from the metadata service");
  build->add_flag("--offline", bf.offline, "metadata lookups from cache only");
  build->add_option("--cache-dir", bf.cache_dir, "metadata cache directory");
  build->add_option("--out", bf.out, "output directory")->required();

  std::string stats_dataset, stats_out;
  auto* stats = app.add_subcommand("stats", "label distribution of a dataset");
  stats->add_option("--dataset", stats_dataset, "dataset directory")->required();
  stats->add_option("--out", stats_out, "also write stats files here");

  ModelFlags train_mf;
  std::string train_dataset, train_out;
  std::optional<std::size_t> train_fold;
  auto* train = app.add_subcommand("train", "train one model");
  train->add_option("--dataset", train_dataset, "dataset directory")->required();
  train->add_option("--out", train_out, "model directory")->required();
  train->add_option("--fold", train_fold, "hold out this fold (train on the others)");
  train_mf.add_to(train);

  ModelFlags cv_mf;
  std::string cv_dataset, cv_out;
  std::optional<std::size_t> cv_k;
  std::vector<std::size_t> cv_only;
  bool cv_resume = false, cv_save = false, cv_exclude_none = false;
  auto* cv = app.add_subcommand("cross-validate", "k-fold train/predict and the evaluation report");
  cv->add_option("--dataset", cv_dataset, "dataset directory")->required();
  cv->add_option("--out", cv_out, "run directory")->required();
  cv->add_option("--k", cv_k, "recompute stratified folds with this k instead of folds.json");
  cv->add_option("--fold", cv_only, "run only these folds");
  cv->add_flag("--resume", cv_resume, "reuse folds already completed in --out");
  cv->add_flag("--save-models", cv_save, "keep each fold's model");
  cv->add_flag("--macro-exclude-none", cv_exclude_none, "macro average over positive classes and Other only");
  cv_mf.add_to(cv);

  std::string ev_dataset, ev_predictions, ev_model, ev_out;
  std::optional<std::size_t> ev_fold;
  bool ev_exclude_none = false;
  auto* evaluate = app.add_subcommand("evaluate", "report from saved fold predictions or a trained model");
  evaluate->add_option("--dataset", ev_dataset, "dataset directory")->required();
  evaluate->add_option("--predictions", ev_predictions, "cross-validation run directory");
  evaluate->add_option("--model", ev_model, "model directory");
  evaluate->add_option("--fold", ev_fold, "with --model: evaluate on this held-out fold");
  evaluate->add_option("--out", ev_out, "report directory");
  evaluate->add_flag("--macro-exclude-none", ev_exclude_none);

  std::string pr_model, pr_seed, pr_target;
  bool pr_offline = false, pr_json = false;
  std::optional<std::string> pr_cache, pr_url;
  auto* predict = app.add_subcommand("predict", "aspects connecting a seed and a target paper");
  predict->add_option("--model", pr_model, "model directory")->required();
  predict->add_option("--seed-paper", pr_seed, "JSON file {title, abstract} or scheme:id")->required();
  predict->add_option("--target-paper", pr_target, "JSON file {title, abstract} or scheme:id")->required();
  predict->add_flag("--offline", pr_offline, "metadata lookups from cache only");
  predict->add_option("--cache-dir", pr_cache);
  predict->add_option("--metadata-url", pr_url);
  predict->add_flag("--json", pr_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    log::set_level(log_level);
    const auto doc = load_toml(config_path.empty() ? env("ASPECTSIM_CONFIG").value_or("") : config_path);
    if (*build) return cmd_build_dataset(bf, doc);
    if (*stats) return cmd_stats(stats_dataset, stats_out);
    if (*train) return cmd_train(train_dataset, train_out, train_mf, train_fold, doc);
    if (*cv) {
      return cmd_cross_validate(cv_dataset, cv_out, cv_mf, cv_k, cv_only, cv_resume, cv_save, cv_exclude_none, doc);
    }
    if (*evaluate) return cmd_evaluate(ev_dataset, ev_predictions, ev_model, ev_fold, ev_out, ev_exclude_none);
    if (*predict) return cmd_predict(pr_model, pr_seed, pr_target, pr_offline, pr_cache, pr_url, pr_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace aspectsim::cli
