#include "aspectsim/models/bert_encoder.hpp"

#include <cmath>
#include <limits>
#include <set>

#include "aspectsim/models/model_config.hpp"

namespace aspectsim::models {

namespace {

torch::Tensor activation(const std::string& name, const torch::Tensor& x) {
  if (name == "gelu" || name == "gelu_python") return torch::gelu(x);
  if (name == "gelu_new" || name == "gelu_pytorch_tanh") return torch::gelu(x, "tanh");
  if (name == "relu") return torch::relu(x);
  throw ModelError("unsupported activation " + name);
}

torch::nn::LayerNorm layer_norm(std::int64_t dim, double eps) {
  return torch::nn::LayerNorm(torch::nn::LayerNormOptions({dim}).eps(eps));
}

void init_weights(torch::nn::Module& module) {
  torch::NoGradGuard guard;
  for (auto& m : module.modules(/*include_self=*/false)) {
    if (auto* lin = m->as<torch::nn::Linear>()) {
      lin->weight.normal_(0.0, 0.02);
      if (lin->bias.defined()) lin->bias.zero_();
    } else if (auto* emb = m->as<torch::nn::Embedding>()) {
      emb->weight.normal_(0.0, 0.02);
    } else if (auto* ln = m->as<torch::nn::LayerNorm>()) {
      ln->weight.fill_(1.0);
      ln->bias.zero_();
    }
  }
}

std::string checkpoint_key_to_local(std::string key, bool electra) {
  for (const char* prefix : {"bert.", "electra.", "model."}) {
    if (key.rfind(prefix, 0) == 0) {
      key = key.substr(std::string(prefix).size());
      break;
    }
  }
  auto replace_suffix = [&](const std::string& from, const std::string& to) {
    if (key.size() >= from.size() && key.compare(key.size() - from.size(), from.size(), from) == 0) {
      key = key.substr(0, key.size() - from.size()) + to;
    }
  };
  replace_suffix("LayerNorm.gamma", "LayerNorm.weight");
  replace_suffix("LayerNorm.beta", "LayerNorm.bias");
  if (key.rfind("pooler.dense.", 0) == 0) return electra ? std::string() : "pooler." + key.substr(13);
  if (key.rfind("embeddings.", 0) == 0 || key.rfind("encoder.", 0) == 0 || key.rfind("embeddings_project.", 0) == 0) {
    return "encoder." + key;
  }
  return {};
}

}  // namespace

BertConfig BertConfig::from_json(const nlohmann::json& j) {
  BertConfig c;
  c.model_type = j.value("model_type", c.model_type);
  c.vocab_size = j.value("vocab_size", c.vocab_size);
  c.hidden_size = j.value("hidden_size", c.hidden_size);
  c.embedding_size = j.value("embedding_size", c.hidden_size);
  c.num_hidden_layers = j.value("num_hidden_layers", c.num_hidden_layers);
  c.num_attention_heads = j.value("num_attention_heads", c.num_attention_heads);
  c.intermediate_size = j.value("intermediate_size", c.intermediate_size);
  c.max_position_embeddings = j.value("max_position_embeddings", c.max_position_embeddings);
  c.type_vocab_size = j.value("type_vocab_size", c.type_vocab_size);
  c.hidden_dropout_prob = j.value("hidden_dropout_prob", c.hidden_dropout_prob);
  c.attention_probs_dropout_prob = j.value("attention_probs_dropout_prob", c.attention_probs_dropout_prob);
  c.layer_norm_eps = j.value("layer_norm_eps", c.layer_norm_eps);
  c.hidden_act = j.value("hidden_act", c.hidden_act);
  if (c.model_type != "bert" && c.model_type != "electra") {
    throw ModelError("encoder architecture '" + c.model_type + "' is not supported (bert, electra)");
  }
  if (c.hidden_size % c.num_attention_heads != 0) throw ModelError("hidden_size not divisible by attention heads");
  return c;
}

nlohmann::ordered_json BertConfig::to_json() const {
  return {{"model_type", model_type},
          {"vocab_size", vocab_size},
          {"hidden_size", hidden_size},
          {"embedding_size", embedding_size},
          {"num_hidden_layers", num_hidden_layers},
          {"num_attention_heads", num_attention_heads},
          {"intermediate_size", intermediate_size},
          {"max_position_embeddings", max_position_embeddings},
          {"type_vocab_size", type_vocab_size},
          {"hidden_dropout_prob", hidden_dropout_prob},
          {"attention_probs_dropout_prob", attention_probs_dropout_prob},
          {"layer_norm_eps", layer_norm_eps},
          {"hidden_act", hidden_act}};
}

BertEmbeddingsImpl::BertEmbeddingsImpl(const BertConfig& c) {
  word_embeddings = register_module("word_embeddings", torch::nn::Embedding(c.vocab_size, c.embedding_size));
  position_embeddings =
      register_module("position_embeddings", torch::nn::Embedding(c.max_position_embeddings, c.embedding_size));
  token_type_embeddings = register_module("token_type_embeddings", torch::nn::Embedding(c.type_vocab_size, c.embedding_size));
  LayerNorm = register_module("LayerNorm", layer_norm(c.embedding_size, c.layer_norm_eps));
  dropout = register_module("dropout", torch::nn::Dropout(c.hidden_dropout_prob));
}

torch::Tensor BertEmbeddingsImpl::forward(const torch::Tensor& input_ids, const torch::Tensor& token_type_ids) {
  const auto seq = input_ids.size(1);
  auto positions = torch::arange(seq, torch::TensorOptions().dtype(torch::kInt64)).unsqueeze(0);
  auto x = word_embeddings(input_ids) + position_embeddings(positions) + token_type_embeddings(token_type_ids);
  return dropout(LayerNorm(x));
}

BertSelfAttentionImpl::BertSelfAttentionImpl(const BertConfig& c)
    : heads(c.num_attention_heads), head_dim(c.hidden_size / c.num_attention_heads) {
  query = register_module("query", torch::nn::Linear(c.hidden_size, c.hidden_size));
  key = register_module("key", torch::nn::Linear(c.hidden_size, c.hidden_size));
  value = register_module("value", torch::nn::Linear(c.hidden_size, c.hidden_size));
  dropout = register_module("dropout", torch::nn::Dropout(c.attention_probs_dropout_prob));
}

torch::Tensor BertSelfAttentionImpl::forward(const torch::Tensor& hidden, const torch::Tensor& additive_mask) {
  const auto b = hidden.size(0), t = hidden.size(1);
  auto split = [&](const torch::Tensor& x) { return x.view({b, t, heads, head_dim}).transpose(1, 2); };
  auto q = split(query(hidden));
  auto k = split(key(hidden));
  auto v = split(value(hidden));
  auto scores = torch::matmul(q, k.transpose(-1, -2)) / std::sqrt(static_cast<double>(head_dim));
  scores = scores + additive_mask;
  auto probs = dropout(torch::softmax(scores, -1));
  return torch::matmul(probs, v).transpose(1, 2).contiguous().view({b, t, heads * head_dim});
}

BertResidualOutputImpl::BertResidualOutputImpl(std::int64_t in, std::int64_t out, const BertConfig& c) {
  dense = register_module("dense", torch::nn::Linear(in, out));
  LayerNorm = register_module("LayerNorm", layer_norm(out, c.layer_norm_eps));
  dropout = register_module("dropout", torch::nn::Dropout(c.hidden_dropout_prob));
}

torch::Tensor BertResidualOutputImpl::forward(const torch::Tensor& x, const torch::Tensor& residual) {
  return LayerNorm(dropout(dense(x)) + residual);
}

BertAttentionImpl::BertAttentionImpl(const BertConfig& c) {
  self = register_module("self", BertSelfAttention(c));
  output = register_module("output", BertResidualOutput(c.hidden_size, c.hidden_size, c));
}

torch::Tensor BertAttentionImpl::forward(const torch::Tensor& hidden, const torch::Tensor& additive_mask) {
  return output(self(hidden, additive_mask), hidden);
}

BertIntermediateImpl::BertIntermediateImpl(const BertConfig& c) : act(c.hidden_act) {
  dense = register_module("dense", torch::nn::Linear(c.hidden_size, c.intermediate_size));
}

torch::Tensor BertIntermediateImpl::forward(const torch::Tensor& x) { return activation(act, dense(x)); }

BertLayerImpl::BertLayerImpl(const BertConfig& c) {
  attention = register_module("attention", BertAttention(c));
  intermediate = register_module("intermediate", BertIntermediate(c));
  output = register_module("output", BertResidualOutput(c.intermediate_size, c.hidden_size, c));
}

torch::Tensor BertLayerImpl::forward(const torch::Tensor& hidden, const torch::Tensor& additive_mask) {
  auto attended = attention(hidden, additive_mask);
  return output(intermediate(attended), attended);
}

BertEncoderImpl::BertEncoderImpl(const BertConfig& c) {
  layer = register_module("layer", torch::nn::ModuleList());
  for (std::int64_t i = 0; i < c.num_hidden_layers; ++i) layer->push_back(BertLayer(c));
}

torch::Tensor BertEncoderImpl::forward(torch::Tensor hidden, const torch::Tensor& additive_mask) {
  for (const auto& l : *layer) hidden = l->as<BertLayerImpl>()->forward(hidden, additive_mask);
  return hidden;
}

BertModelImpl::BertModelImpl(const BertConfig& c) : config(c) {
  embeddings = register_module("embeddings", BertEmbeddings(c));
  if (c.embedding_size != c.hidden_size) {
    embeddings_project = register_module("embeddings_project", torch::nn::Linear(c.embedding_size, c.hidden_size));
  }
  encoder = register_module("encoder", BertEncoder(c));
}

torch::Tensor BertModelImpl::forward(const torch::Tensor& input_ids, const torch::Tensor& token_type_ids,
                                     const torch::Tensor& attention_mask) {
  auto hidden = embeddings(input_ids, token_type_ids);
  if (embeddings_project) hidden = embeddings_project(hidden);
  auto additive = (1.0 - attention_mask.to(torch::kFloat32)) * std::numeric_limits<float>::lowest();
  additive = additive.unsqueeze(1).unsqueeze(2);
  return encoder(hidden, additive);
}

TransformerPairClassifierImpl::TransformerPairClassifierImpl(const BertConfig& c, std::int64_t num_classes,
                                                             double classifier_dropout)
    : config(c) {
  encoder = register_module("encoder", BertModel(c));
  pooler = register_module("pooler", torch::nn::Linear(c.hidden_size, c.hidden_size));
  dropout = register_module("dropout", torch::nn::Dropout(classifier_dropout));
  classifier = register_module("classifier", torch::nn::Linear(c.hidden_size, num_classes));
  init_weights(*this);
}

torch::Tensor TransformerPairClassifierImpl::forward(const torch::Tensor& input_ids, const torch::Tensor& token_type_ids,
                                                     const torch::Tensor& attention_mask) {
  auto hidden = encoder(input_ids, token_type_ids, attention_mask);
  auto first = hidden.select(1, 0);
  if (config.is_electra()) {
    first = activation(config.hidden_act, pooler(dropout(first)));
  } else {
    first = torch::tanh(pooler(first));
  }
  return classifier(dropout(first));
}

std::size_t load_pretrained_encoder(TransformerPairClassifier& model, const std::map<std::string, torch::Tensor>& weights) {
  auto params = model->named_parameters(/*recurse=*/true);
  std::map<std::string, torch::Tensor> local;
  for (const auto& item : params) local.emplace(item.key(), item.value());

  std::set<std::string> loaded;
  torch::NoGradGuard guard;
  for (const auto& [key, tensor] : weights) {
    const std::string name = checkpoint_key_to_local(key, model->config.is_electra());
    if (name.empty()) continue;
    auto it = local.find(name);
    if (it == local.end()) continue;
    if (it->second.sizes() != tensor.sizes()) {
      throw ModelError("checkpoint tensor " + key + " has shape " + c10::str(tensor.sizes()) + ", expected " +
                       c10::str(it->second.sizes()));
    }
    it->second.copy_(tensor.to(torch::kFloat32));
    loaded.insert(name);
  }
  for (const auto& [name, _] : local) {
    if (name.rfind("encoder.", 0) == 0 && !loaded.contains(name)) {
      throw ModelError("checkpoint lacks encoder weight " + name.substr(8));
    }
  }
  return loaded.size();
}

}  // namespace aspectsim::models
