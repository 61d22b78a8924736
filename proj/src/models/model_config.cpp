#include "aspectsim/models/model_config.hpp"

#include <algorithm>
#include <cstdlib>

#include "aspectsim/text_util.hpp"

namespace aspectsim::models {

namespace fs = std::filesystem;

namespace {

std::string kind_name(ModelKind k) { return k == ModelKind::kLstm ? "lstm" : "transformer"; }

ModelKind parse_kind(const std::string& s) {
  if (s == "lstm") return ModelKind::kLstm;
  if (s == "transformer") return ModelKind::kTransformer;
  throw ModelError("unknown model kind '" + s + "'");
}

bool has_weights(const fs::path& dir) {
  return fs::exists(dir / "model.safetensors") || fs::exists(dir / "pytorch_model.bin");
}

bool is_checkpoint_dir(const fs::path& dir) {
  std::error_code ec;
  return fs::is_directory(dir, ec) && fs::exists(dir / "config.json") && fs::exists(dir / "vocab.txt") &&
         has_weights(dir);
}

std::vector<fs::path> hub_roots() {
  std::vector<fs::path> roots;
  if (const char* v = std::getenv("HF_HUB_CACHE"); v && *v) roots.emplace_back(v);
  if (const char* v = std::getenv("HF_HOME"); v && *v) roots.emplace_back(fs::path(v) / "hub");
  if (const char* v = std::getenv("XDG_CACHE_HOME"); v && *v) roots.emplace_back(fs::path(v) / "huggingface" / "hub");
  if (const char* v = std::getenv("HOME"); v && *v) roots.emplace_back(fs::path(v) / ".cache" / "huggingface" / "hub");
  return roots;
}

}  // namespace

ModelConfig ModelConfig::transformer_defaults(std::string name, std::string checkpoint) {
  ModelConfig c;
  c.kind = ModelKind::kTransformer;
  c.name = std::move(name);
  c.checkpoint = std::move(checkpoint);
  c.epochs = 4;
  c.learning_rate = 2e-5;
  c.batch_size = 8;
  c.adam_epsilon = 1e-8;
  return c;
}

ModelConfig ModelConfig::lstm_defaults() {
  ModelConfig c;
  c.kind = ModelKind::kLstm;
  c.name = "lstm-baseline";
  c.epochs = 10;
  c.learning_rate = 1e-5;
  c.batch_size = 8;
  c.num_layers = 2;
  c.hidden_size = 100;
  c.attention = true;
  c.dropout = 0.1;
  return c;
}

nlohmann::ordered_json ModelConfig::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind_name(kind);
  j["name"] = name;
  j["checkpoint"] = checkpoint;
  j["epochs"] = epochs;
  j["learning_rate"] = learning_rate;
  j["batch_size"] = batch_size;
  j["adam_epsilon"] = adam_epsilon;
  j["adam_beta1"] = adam_beta1;
  j["adam_beta2"] = adam_beta2;
  j["weight_decay"] = weight_decay;
  j["schedule"] = schedule;
  j["warmup_steps"] = warmup_steps;
  j["max_grad_norm"] = max_grad_norm;
  j["dropout"] = dropout;
  j["hidden_size"] = hidden_size;
  j["num_layers"] = num_layers;
  j["attention"] = attention;
  j["classification_threshold"] = classification_threshold;
  j["seed"] = seed;
  j["max_len"] = max_len;
  j["embeddings"] = {{"dim", embeddings.dim},
                     {"min_n", embeddings.min_n},
                     {"max_n", embeddings.max_n},
                     {"buckets", embeddings.buckets},
                     {"window", embeddings.window},
                     {"negatives", embeddings.negatives},
                     {"epochs", embeddings.epochs},
                     {"min_count", embeddings.min_count},
                     {"learning_rate", embeddings.learning_rate},
                     {"seed", embeddings.seed},
                     {"center", embeddings.center}};
  return j;
}

ModelConfig ModelConfig::from_json(const nlohmann::json& j) {
  ModelConfig c = parse_kind(j.value("kind", std::string("transformer"))) == ModelKind::kLstm
                      ? lstm_defaults()
                      : ModelConfig{};
  c.kind = parse_kind(j.value("kind", kind_name(c.kind)));
  c.name = j.value("name", c.name);
  c.checkpoint = j.value("checkpoint", c.checkpoint);
  c.epochs = j.value("epochs", c.epochs);
  c.learning_rate = j.value("learning_rate", c.learning_rate);
  c.batch_size = j.value("batch_size", c.batch_size);
  c.adam_epsilon = j.value("adam_epsilon", c.adam_epsilon);
  c.adam_beta1 = j.value("adam_beta1", c.adam_beta1);
  c.adam_beta2 = j.value("adam_beta2", c.adam_beta2);
  c.weight_decay = j.value("weight_decay", c.weight_decay);
  c.schedule = j.value("schedule", c.schedule);
  c.warmup_steps = j.value("warmup_steps", c.warmup_steps);
  c.max_grad_norm = j.value("max_grad_norm", c.max_grad_norm);
  c.dropout = j.value("dropout", c.dropout);
  c.hidden_size = j.value("hidden_size", c.hidden_size);
  c.num_layers = j.value("num_layers", c.num_layers);
  c.attention = j.value("attention", c.attention);
  c.classification_threshold = j.value("classification_threshold", c.classification_threshold);
  c.seed = j.value("seed", c.seed);
  c.max_len = j.value("max_len", c.max_len);
  if (j.contains("embeddings")) {
    const auto& e = j["embeddings"];
    auto& s = c.embeddings;
    s.dim = e.value("dim", s.dim);
    s.min_n = e.value("min_n", s.min_n);
    s.max_n = e.value("max_n", s.max_n);
    s.buckets = e.value("buckets", s.buckets);
    s.window = e.value("window", s.window);
    s.negatives = e.value("negatives", s.negatives);
    s.epochs = e.value("epochs", s.epochs);
    s.min_count = e.value("min_count", s.min_count);
    s.learning_rate = e.value("learning_rate", s.learning_rate);
    s.seed = e.value("seed", s.seed);
    s.center = e.value("center", s.center);
  }
  if (!(c.classification_threshold > 0.0 && c.classification_threshold < 1.0)) {
    throw ModelError("classification_threshold must lie in (0, 1)");
  }
  if (c.batch_size == 0) throw ModelError("batch_size must be positive");
  if (c.schedule != "linear" && c.schedule != "constant") throw ModelError("schedule must be linear or constant");
  return c;
}

std::string ModelConfig::hash() const { return text::hex64(text::fnv1a64(to_json().dump())); }

const std::vector<RegistryEntry>& model_registry() {
  static const std::vector<RegistryEntry> entries = {
      {"bert-base", ModelKind::kTransformer, "bert-base-uncased", true},
      {"scibert", ModelKind::kTransformer, "allenai/scibert_scivocab_uncased", true},
      {"covid-bert", ModelKind::kTransformer, "deepset/covid_bert_base", true},
      {"roberta", ModelKind::kTransformer, "roberta-base", false},
      {"xlnet", ModelKind::kTransformer, "xlnet-base-cased", false},
      {"electra-discriminator", ModelKind::kTransformer, "google/electra-base-discriminator", true},
      {"lstm-baseline", ModelKind::kLstm, "", true},
  };
  return entries;
}

std::optional<RegistryEntry> find_model(std::string_view name) {
  for (const auto& e : model_registry()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

ModelConfig config_for_model(std::string_view name) {
  auto entry = find_model(name);
  if (!entry) throw ModelError("unknown model '" + std::string(name) + "'");
  if (entry->kind == ModelKind::kLstm) return ModelConfig::lstm_defaults();
  return ModelConfig::transformer_defaults(entry->name, entry->checkpoint);
}

fs::path resolve_checkpoint(const std::string& checkpoint) {
  if (checkpoint.empty()) throw ModelError("no checkpoint configured");
  std::vector<std::string> searched;
  auto consider = [&](const fs::path& p) {
    searched.push_back(p.string());
    return is_checkpoint_dir(p);
  };
  if (consider(checkpoint)) return fs::path(checkpoint);

  std::string flat = checkpoint;
  std::replace(flat.begin(), flat.end(), '/', '-');
  if (const char* dir = std::getenv("ASPECTSIM_MODEL_DIR"); dir && *dir) {
    if (consider(fs::path(dir) / checkpoint)) return fs::path(dir) / checkpoint;
    if (consider(fs::path(dir) / flat)) return fs::path(dir) / flat;
  }

  std::string repo = "models--" + checkpoint;
  for (std::size_t pos = 0; (pos = repo.find('/', pos)) != std::string::npos; pos += 2) repo.replace(pos, 1, "--");
  for (const auto& root : hub_roots()) {
    const auto snapshots = root / repo / "snapshots";
    searched.push_back(snapshots.string());
    std::error_code ec;
    if (!fs::is_directory(snapshots, ec)) continue;
    std::vector<fs::path> candidates;
    for (const auto& e : fs::directory_iterator(snapshots, ec)) candidates.push_back(e.path());
    std::sort(candidates.begin(), candidates.end());
    for (const auto& c : candidates) {
      if (is_checkpoint_dir(c)) return c;
    }
  }

  std::string msg = "checkpoint '" + checkpoint + "' not found; searched:";
  for (const auto& s : searched) msg += " " + s;
  msg += " (set ASPECTSIM_MODEL_DIR to a directory holding config.json, vocab.txt and model weights)";
  throw ModelError(msg);
}

}  // namespace aspectsim::models
