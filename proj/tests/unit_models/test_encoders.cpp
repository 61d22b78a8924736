#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>
#include <torch/torch.h>

#include "aspectsim/models/bert_encoder.hpp"
#include "aspectsim/models/model_config.hpp"
#include "aspectsim/models/pair_model.hpp"
#include "aspectsim/models/safetensors.hpp"
#include "aspectsim/models/subword_embeddings.hpp"

namespace fs = std::filesystem;
using namespace aspectsim;
using namespace aspectsim::models;
using nlohmann::json;

namespace {

fs::path fixture(const std::string& name) { return fs::path(ASPECTSIM_FIXTURES) / name; }

json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

torch::Tensor int_tensor(const json& rows) {
  const auto v = rows.get<std::vector<std::vector<std::int64_t>>>();
  auto t = torch::empty({static_cast<long>(v.size()), static_cast<long>(v[0].size())}, torch::kInt64);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v[i].size(); ++j) t[i][j] = v[i][j];
  }
  return t;
}

torch::Tensor float_tensor(const json& nested) {
  std::vector<float> flat;
  std::vector<long> shape;
  const json* cur = &nested;
  while (cur->is_array()) {
    shape.push_back(static_cast<long>(cur->size()));
    cur = &(*cur)[0];
  }
  for (const auto& a : nested) {
    for (const auto& b : a) {
      for (const auto& x : b) flat.push_back(x.get<float>());
    }
  }
  return torch::from_blob(flat.data(), shape, torch::kFloat32).clone();
}

class FixtureEncoder : public ::testing::TestWithParam<std::string> {};

}  // namespace

TEST_P(FixtureEncoder, LastHiddenStateMatchesReference) {
  torch::NoGradGuard no_grad;
  const auto dir = fixture(GetParam());
  const auto config = BertConfig::from_json(read_json(dir / "config.json"));
  TransformerPairClassifier model(config, 11, 0.1);
  EXPECT_GT(load_pretrained_encoder(model, load_safetensors(dir / "model.safetensors")), 0U);
  model->eval();
  const auto ref = read_json(dir / "expected.json");
  const auto& batch = ref["batch"];
  const auto hidden = model->encoder->forward(int_tensor(batch["input_ids"]), int_tensor(batch["token_type_ids"]),
                                              int_tensor(batch["attention_mask"]));
  const auto want = float_tensor(ref["last_hidden_state"]);
  ASSERT_EQ(hidden.sizes(), want.sizes());
  EXPECT_LT((hidden - want).abs().max().item<double>(), 1e-4);
}

TEST_P(FixtureEncoder, CollatePadsLikeReference) {
  auto config = ModelConfig::transformer_defaults("tiny", fixture(GetParam()).string());
  const auto model = PairModel::initialize(config, LabelVocabulary({"introduction"}));
  const auto ref = read_json(fixture(GetParam()) / "expected.json")["batch"];
  std::vector<EncodedPair> pairs;
  for (std::size_t r = 0; r < ref["input_ids"].size(); ++r) {
    EncodedPair p;
    for (std::size_t j = 0; j < ref["input_ids"][r].size(); ++j) {
      if (ref["attention_mask"][r][j].get<int>() == 0) break;
      p.token_ids.push_back(ref["input_ids"][r][j].get<std::int64_t>());
      p.segment_ids.push_back(ref["token_type_ids"][r][j].get<std::int64_t>());
      p.attention_mask.push_back(1);
      p.tokens.push_back(model.tokenizer().piece_of(p.token_ids.back()));
    }
    pairs.push_back(p);
  }
  const auto batch = model.collate(pairs);
  EXPECT_TRUE(torch::equal(batch.ids, int_tensor(ref["input_ids"])));
  EXPECT_TRUE(torch::equal(batch.segments, int_tensor(ref["token_type_ids"])));
  EXPECT_TRUE(torch::equal(batch.mask, int_tensor(ref["attention_mask"])));
}

INSTANTIATE_TEST_SUITE_P(Checkpoints, FixtureEncoder, ::testing::Values("tiny_bert", "tiny_electra"));

TEST(Safetensors, RoundTrip) {
  const auto path = fs::temp_directory_path() / "aspectsim_roundtrip.safetensors";
  std::map<std::string, torch::Tensor> tensors{
      {"w", torch::randn({3, 4})},
      {"ids", torch::arange(5, torch::kInt64)},
      {"scalar_row", torch::ones({1})},
  };
  save_safetensors(path, tensors);
  const auto loaded = load_safetensors(path);
  ASSERT_EQ(loaded.size(), tensors.size());
  for (const auto& [name, t] : tensors) {
    ASSERT_TRUE(loaded.contains(name)) << name;
    EXPECT_TRUE(torch::equal(loaded.at(name), t)) << name;
  }
}

TEST(Safetensors, FixtureHasEncoderTensors) {
  const auto weights = load_safetensors(fixture("tiny_bert") / "model.safetensors");
  const auto config = BertConfig::from_json(read_json(fixture("tiny_bert") / "config.json"));
  bool found = false;
  for (const auto& [name, t] : weights) {
    if (name.find("word_embeddings.weight") != std::string::npos) {
      found = true;
      EXPECT_EQ(t.size(0), config.vocab_size);
      EXPECT_EQ(t.size(1), config.hidden_size);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Registry, UnsupportedArchitecturesAndUnknownNames) {
  ASSERT_TRUE(find_model("roberta"));
  EXPECT_FALSE(find_model("roberta")->supported);
  EXPECT_FALSE(find_model("xlnet")->supported);
  EXPECT_TRUE(find_model("scibert")->supported);
  EXPECT_EQ(find_model("lstm-baseline")->kind, ModelKind::kLstm);
  EXPECT_THROW(config_for_model("gpt-17"), ModelError);
  for (const char* name : {"roberta", "xlnet"}) {
    EXPECT_THROW(PairModel::initialize(config_for_model(name), LabelVocabulary({"introduction"})), ModelError) << name;
  }
}

TEST(Registry, UnresolvableCheckpointNamesSearchedPlaces) {
  try {
    (void)resolve_checkpoint("/nonexistent/checkpoint-dir");
    FAIL() << "expected ModelError";
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/checkpoint-dir"), std::string::npos) << e.what();
  }
  EXPECT_EQ(resolve_checkpoint(fixture("tiny_bert").string()), fixture("tiny_bert"));
}

TEST(SubwordEmbeddings, OovWordsGetNgramVectors) {
  const std::vector<std::vector<std::string>> sentences(
      20, {"neural", "networks", "learn", "citation", "recommendation", "models"});
  SubwordEmbeddingConfig cfg;
  cfg.dim = 16;
  cfg.buckets = 500;
  cfg.epochs = 2;
  const auto emb = SubwordEmbeddings::train(sentences, cfg);
  EXPECT_TRUE(emb.in_vocabulary("neural"));
  EXPECT_FALSE(emb.in_vocabulary("neuralish"));
  const auto v = emb.vector("neuralish");
  ASSERT_EQ(v.size(), 16U);
  EXPECT_TRUE(std::any_of(v.begin(), v.end(), [](float x) { return x != 0.0f; }));
  EXPECT_GT(emb.similarity("neural", "neuralish"), emb.similarity("neural", "qqqq"));
  EXPECT_EQ(emb.mean().size(), 16U);
}

TEST(SubwordEmbeddings, SaveLoadBothFormats) {
  const std::vector<std::vector<std::string>> sentences(5, {"alpha", "beta", "gamma"});
  SubwordEmbeddingConfig cfg;
  cfg.dim = 8;
  cfg.buckets = 100;
  const auto emb = SubwordEmbeddings::train(sentences, cfg);
  const auto path = fs::temp_directory_path() / "aspectsim_emb.bin";
  emb.save(path);
  const auto loaded = SubwordEmbeddings::load(path);
  EXPECT_EQ(loaded.words(), emb.words());
  EXPECT_EQ(loaded.vector("beta"), emb.vector("beta"));
  EXPECT_EQ(loaded.mean(), emb.mean());

  // older files carry no mean vector
  std::ifstream in(path, std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(in)), {});
  bytes.resize(bytes.size() - cfg.dim * sizeof(float));
  bytes.replace(0, 8, "ASWEMB01");
  const auto old_path = fs::temp_directory_path() / "aspectsim_emb_v1.bin";
  std::ofstream(old_path, std::ios::binary) << bytes;
  const auto old = SubwordEmbeddings::load(old_path);
  EXPECT_EQ(old.vector("beta"), emb.vector("beta"));
  EXPECT_EQ(old.mean(), std::vector<float>(cfg.dim, 0.0f));

  std::ofstream(old_path, std::ios::binary) << "garbage!";
  EXPECT_THROW(SubwordEmbeddings::load(old_path), std::runtime_error);
}
