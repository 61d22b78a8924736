#include "aspectsim/models/pair_model.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "aspectsim/log.hpp"

#include "aspectsim/models/bert_encoder.hpp"
#include "aspectsim/models/multilabel_head.hpp"
#include "aspectsim/models/lstm_classifier.hpp"
#include "aspectsim/models/safetensors.hpp"
#include "aspectsim/models/subword_embeddings.hpp"

namespace aspectsim::models {

namespace fs = std::filesystem;

namespace {

nlohmann::json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(path.string() + ": " + e.what());
  }
}

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw ModelError("cannot write " + path.string());
}

bool lowercase_for(const fs::path& dir, const std::string& checkpoint) {
  if (fs::exists(dir / "tokenizer_config.json")) {
    auto j = read_json(dir / "tokenizer_config.json");
    if (j.contains("do_lower_case") && j["do_lower_case"].is_boolean()) return j["do_lower_case"].get<bool>();
  }
  std::string lower = checkpoint;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  return lower.find("uncased") != std::string::npos || lower.find("cased") == std::string::npos;
}

std::vector<std::vector<std::string>> embedding_sentences(std::span<const Sample> corpus) {
  std::set<std::string> seen;
  std::vector<std::vector<std::string>> sentences;
  auto add = [&](const std::string& title, const std::string& abstract) {
    std::string text = title + ": " + abstract;
    if (!seen.insert(text).second) return;
    sentences.push_back(WordTokenizer::split_words(text));
  };
  for (const auto& s : corpus) {
    add(s.seed_title, s.seed_abstract);
    add(s.target_title, s.target_abstract);
  }
  return sentences;
}

std::map<std::string, torch::Tensor> module_state(torch::nn::Module& m) {
  std::map<std::string, torch::Tensor> out;
  for (const auto& p : m.named_parameters(true)) out.emplace(p.key(), p.value());
  for (const auto& b : m.named_buffers(true)) out.emplace(b.key(), b.value());
  return out;
}

void load_module_state(torch::nn::Module& m, const std::map<std::string, torch::Tensor>& weights) {
  torch::NoGradGuard guard;
  for (auto& [name, t] : module_state(m)) {
    auto it = weights.find(name);
    if (it == weights.end()) throw ModelError("saved weights lack " + name);
    if (it->second.sizes() != t.sizes()) throw ModelError("saved weight " + name + " has the wrong shape");
    t.copy_(it->second);
  }
}

}  // namespace

nlohmann::ordered_json PredictionRecord::to_json(const LabelVocabulary& vocab) const {
  nlohmann::ordered_json probs = nlohmann::ordered_json::object();
  for (std::size_t c = 0; c < probabilities.size() && c < vocab.size(); ++c) probs[vocab.name(c)] = probabilities[c];
  return {{"seed_id", seed_id}, {"target_id", target_id}, {"probabilities", probs}, {"predicted", vocab.names_of(predicted)}};
}

PredictionRecord PredictionRecord::from_json(const nlohmann::json& j, const LabelVocabulary& vocab) {
  PredictionRecord r;
  r.seed_id = j.at("seed_id").get<std::string>();
  r.target_id = j.at("target_id").get<std::string>();
  const auto& probs = j.at("probabilities");
  r.probabilities.resize(vocab.size());
  for (std::size_t c = 0; c < vocab.size(); ++c) r.probabilities[c] = probs.at(vocab.name(c)).get<double>();
  r.predicted = vocab.labels_from_names(j.at("predicted").get<std::vector<std::string>>());
  return r;
}

struct PairModel::State {
  ModelConfig config;
  LabelVocabulary vocab;
  TrainingHistory history;
  std::shared_ptr<Tokenizer> tokenizer;
  std::size_t max_len = kMaxSequenceLength;

  BertConfig bert;
  TransformerPairClassifier transformer{nullptr};

  SubwordEmbeddings embeddings;
  LstmPairClassifier lstm{nullptr};

  torch::nn::Module& network() {
    if (transformer) return *transformer;
    return *lstm;
  }
};

namespace {

void build_lstm(PairModel::State& s);  // forward declared for load()

}  // namespace

PairModel PairModel::initialize(const ModelConfig& config, const LabelVocabulary& vocab, std::span<const Sample> corpus) {
  if (vocab.size() > LabelSet::kMaxClasses) throw ModelError("label vocabulary too large");
  if (!(config.classification_threshold > 0.0 && config.classification_threshold < 1.0)) {
    throw ModelError("classification_threshold must lie in (0, 1)");
  }
  PairModel model;
  model.state_ = std::make_shared<State>();
  auto& s = *model.state_;
  s.config = config;
  s.vocab = vocab;
  s.max_len = config.max_len;
  torch::manual_seed(config.seed);

  if (config.kind == ModelKind::kTransformer) {
    if (auto entry = find_model(config.name); entry && !entry->supported) {
      throw ModelError("model '" + config.name + "' (" + entry->checkpoint +
                       ") uses an encoder architecture this build cannot load");
    }
    const fs::path dir = resolve_checkpoint(config.checkpoint);
    s.bert = BertConfig::from_json(read_json(dir / "config.json"));
    s.tokenizer = WordPieceTokenizer::from_vocab_file(dir / "vocab.txt", lowercase_for(dir, config.checkpoint));
    s.max_len = std::min<std::size_t>(config.max_len, static_cast<std::size_t>(s.bert.max_position_embeddings));
    s.transformer = TransformerPairClassifier(s.bert, static_cast<std::int64_t>(vocab.size()), config.dropout);
    std::map<std::string, torch::Tensor> weights;
    if (fs::exists(dir / "model.safetensors")) {
      weights = load_safetensors(dir / "model.safetensors");
    } else {
      weights = load_torch_state_dict(dir / "pytorch_model.bin");
    }
    const auto loaded = load_pretrained_encoder(s.transformer, weights);
    log::info("loaded " + std::to_string(loaded) + " pretrained tensors from " + dir.string());
  } else {
    if (!config.checkpoint.empty()) {
      s.embeddings = SubwordEmbeddings::load(config.checkpoint);
    } else {
      auto sentences = embedding_sentences(corpus);
      if (sentences.empty()) throw ModelError("the LSTM baseline needs an embedding file or training text");
      s.embeddings = SubwordEmbeddings::train(sentences, config.embeddings);
    }
    build_lstm(s);
  }
  return model;
}

namespace {

void build_lstm(PairModel::State& s) {
  s.tokenizer = std::make_shared<WordTokenizer>(s.embeddings.words());
  s.lstm = LstmPairClassifier(static_cast<std::int64_t>(s.embeddings.dim()),
                              static_cast<std::int64_t>(s.config.hidden_size),
                              static_cast<std::int64_t>(s.config.num_layers), s.config.dropout, s.config.attention,
                              static_cast<std::int64_t>(s.vocab.size()));
}

}  // namespace

const ModelConfig& PairModel::config() const { return state_->config; }
const LabelVocabulary& PairModel::vocab() const { return state_->vocab; }
const Tokenizer& PairModel::tokenizer() const { return *state_->tokenizer; }
const TrainingHistory& PairModel::history() const { return state_->history; }
TrainingHistory& PairModel::history() { return state_->history; }

EncodedPair PairModel::encode(const Sample& sample) const {
  return encode_pair({sample.seed_title, sample.seed_abstract}, {sample.target_title, sample.target_abstract},
                     *state_->tokenizer, state_->max_len);
}

Batch PairModel::collate(std::span<const EncodedPair> pairs) const {
  if (pairs.empty()) throw std::invalid_argument("empty batch");
  const auto b = static_cast<std::int64_t>(pairs.size());
  std::int64_t t = 0;
  for (const auto& p : pairs) t = std::max<std::int64_t>(t, static_cast<std::int64_t>(p.size()));
  Batch batch;
  const auto i64 = torch::TensorOptions().dtype(torch::kInt64);

  if (state_->transformer) {
    batch.ids = torch::full({b, t}, state_->tokenizer->specials().pad, i64);
    batch.segments = torch::zeros({b, t}, i64);
    batch.mask = torch::zeros({b, t}, i64);
    auto ids = batch.ids.accessor<std::int64_t, 2>();
    auto seg = batch.segments.accessor<std::int64_t, 2>();
    auto mask = batch.mask.accessor<std::int64_t, 2>();
    for (std::int64_t i = 0; i < b; ++i) {
      const auto& p = pairs[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < p.size(); ++j) {
        ids[i][static_cast<std::int64_t>(j)] = p.token_ids[j];
        seg[i][static_cast<std::int64_t>(j)] = p.segment_ids[j];
        mask[i][static_cast<std::int64_t>(j)] = p.attention_mask[j];
      }
    }
    return batch;
  }

  const auto dim = static_cast<std::int64_t>(state_->embeddings.dim());
  batch.features = torch::zeros({b, t, dim});
  batch.ids = torch::zeros({b, t}, i64);
  batch.mask = torch::zeros({b}, i64);
  auto feat = batch.features.accessor<float, 3>();
  auto kinds = batch.ids.accessor<std::int64_t, 2>();
  auto lengths = batch.mask.accessor<std::int64_t, 1>();
  std::vector<float> shift(static_cast<std::size_t>(dim), 0.0f);
  if (state_->config.embeddings.center && !state_->embeddings.mean().empty()) shift = state_->embeddings.mean();
  for (std::int64_t i = 0; i < b; ++i) {
    const auto& p = pairs[static_cast<std::size_t>(i)];
    lengths[i] = static_cast<std::int64_t>(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
      const auto jj = static_cast<std::int64_t>(j);
      if (j == 0) {
        kinds[i][jj] = static_cast<std::int64_t>(LstmSpecial::kStart);
      } else if (j == p.separator_position) {
        kinds[i][jj] = static_cast<std::int64_t>(LstmSpecial::kSeparator);
      } else if (j + 1 == p.size()) {
        kinds[i][jj] = static_cast<std::int64_t>(LstmSpecial::kEnd);
      } else {
        const auto v = state_->embeddings.vector(p.tokens[j]);
        for (std::int64_t d = 0; d < dim; ++d) {
          feat[i][jj][d] = v[static_cast<std::size_t>(d)] - shift[static_cast<std::size_t>(d)];
        }
      }
    }
  }
  return batch;
}

torch::Tensor PairModel::forward(const Batch& batch, bool training) {
  auto& s = *state_;
  s.network().train(training);
  if (s.transformer) return s.transformer->forward(batch.ids, batch.segments, batch.mask);
  return s.lstm->forward(batch.features, batch.ids, batch.mask);
}

std::vector<torch::Tensor> PairModel::trainable_parameters() {
  std::vector<torch::Tensor> out;
  for (auto& p : state_->network().parameters(true)) {
    if (p.requires_grad()) out.push_back(p);
  }
  return out;
}

std::vector<PredictionRecord> PairModel::predict(std::span<const Sample> pairs, const LabelVocabulary& expected,
                                                 std::size_t batch_size) const {
  if (!(expected == state_->vocab)) {
    throw ModelError("label vocabulary of the data does not match the model's vocabulary");
  }
  if (batch_size == 0) batch_size = 1;
  torch::NoGradGuard guard;
  auto& s = *state_;
  std::vector<PredictionRecord> out;
  out.reserve(pairs.size());
  for (std::size_t start = 0; start < pairs.size(); start += batch_size) {
    const std::size_t end = std::min(pairs.size(), start + batch_size);
    std::vector<EncodedPair> encoded;
    for (std::size_t i = start; i < end; ++i) encoded.push_back(encode(pairs[i]));
    auto batch = collate(encoded);
    s.network().eval();
    torch::Tensor logits = s.transformer ? s.transformer->forward(batch.ids, batch.segments, batch.mask)
                                         : s.lstm->forward(batch.features, batch.ids, batch.mask);
    auto probs = torch::sigmoid(logits.to(torch::kFloat64)).contiguous();
    auto acc = probs.accessor<double, 2>();
    for (std::size_t i = start; i < end; ++i) {
      PredictionRecord r;
      r.seed_id = pairs[i].pair.seed_id;
      r.target_id = pairs[i].pair.target_id;
      for (std::int64_t c = 0; c < probs.size(1); ++c) {
        r.probabilities.push_back(acc[static_cast<std::int64_t>(i - start)][c]);
      }
      r.predicted = threshold_predictions(r.probabilities, s.config.classification_threshold);
      out.push_back(std::move(r));
    }
  }
  return out;
}

void PairModel::save(const fs::path& dir) const {
  auto& s = *state_;
  fs::create_directories(dir);
  nlohmann::ordered_json cfg;
  cfg["model"] = s.config.to_json();
  cfg["config_hash"] = s.config.hash();
  cfg["num_classes"] = s.vocab.size();
  cfg["max_len"] = s.max_len;
  if (s.transformer) {
    cfg["encoder"] = s.bert.to_json();
    const auto* wp = dynamic_cast<const WordPieceTokenizer*>(s.tokenizer.get());
    cfg["lowercase"] = wp->lowercase();
    std::string vocab_text;
    for (const auto& piece : wp->vocab()) vocab_text += piece + "\n";
    write_text(dir / "tokenizer_vocab.txt", vocab_text);
  } else {
    s.embeddings.save(dir / "embeddings.bin");
  }
  write_text(dir / "config.json", cfg.dump(2) + "\n");
  write_text(dir / "vocab.json", s.vocab.to_json().dump(2) + "\n");
  save_safetensors(dir / "weights.safetensors", module_state(s.network()));
  std::string log;
  for (const auto& e : s.history.steps) {
    log += nlohmann::ordered_json{{"step", e.step}, {"epoch", e.epoch}, {"loss", e.loss}, {"learning_rate", e.learning_rate}}
               .dump() +
           "\n";
  }
  write_text(dir / "training_log.jsonl", log);
}

PairModel PairModel::load(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw ModelError("model directory " + dir.string() + " does not exist");
  const auto cfg = read_json(dir / "config.json");
  PairModel model;
  model.state_ = std::make_shared<State>();
  auto& s = *model.state_;
  s.config = ModelConfig::from_json(cfg.at("model"));
  s.vocab = LabelVocabulary::from_json(read_json(dir / "vocab.json"));
  s.max_len = cfg.value("max_len", s.config.max_len);
  if (cfg.value("num_classes", s.vocab.size()) != s.vocab.size()) throw ModelError("model and vocabulary disagree on class count");
  if (s.config.kind == ModelKind::kTransformer) {
    s.bert = BertConfig::from_json(cfg.at("encoder"));
    s.tokenizer = WordPieceTokenizer::from_vocab_file(dir / "tokenizer_vocab.txt", cfg.value("lowercase", true));
    s.transformer = TransformerPairClassifier(s.bert, static_cast<std::int64_t>(s.vocab.size()), s.config.dropout);
  } else {
    s.embeddings = SubwordEmbeddings::load(dir / "embeddings.bin");
    build_lstm(s);
  }
  load_module_state(s.network(), load_safetensors(dir / "weights.safetensors"));

  std::ifstream log(dir / "training_log.jsonl");
  std::string line;
  while (std::getline(log, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line);
    s.history.steps.push_back({j.at("step").get<std::size_t>(), j.at("epoch").get<std::size_t>(),
                               j.at("loss").get<double>(), j.value("learning_rate", 0.0)});
  }
  std::map<std::size_t, std::pair<double, std::size_t>> per_epoch;
  for (const auto& e : s.history.steps) {
    per_epoch[e.epoch].first += e.loss;
    ++per_epoch[e.epoch].second;
  }
  for (const auto& [epoch, acc] : per_epoch) s.history.epoch_losses.push_back(acc.first / static_cast<double>(acc.second));
  return model;
}

}  // namespace aspectsim::models
