#include "aspectsim/models/subword_embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <stdexcept>

#include "aspectsim/rng.hpp"

namespace aspectsim::models {

namespace {

constexpr char kMagic[8] = {'A', 'S', 'W', 'E', 'M', 'B', '0', '2'};
constexpr char kMagicV1[8] = {'A', 'S', 'W', 'E', 'M', 'B', '0', '1'};

std::uint32_t ngram_hash(std::string_view s) {
  std::uint32_t h = 2166136261u;
  for (char c : s) {
    h ^= static_cast<std::uint32_t>(static_cast<std::int8_t>(c));
    h *= 16777619u;
  }
  return h;
}

bool utf8_continuation(char c) { return (static_cast<unsigned char>(c) & 0xC0) == 0x80; }

double sigmoid(double x) {
  if (x > 30) return 1.0;
  if (x < -30) return 0.0;
  return 1.0 / (1.0 + std::exp(-x));
}

template <typename T>
void write_pod(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <typename T>
T read_pod(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw std::runtime_error("truncated embedding file");
  return v;
}

}  // namespace

std::vector<std::size_t> SubwordEmbeddings::subword_rows(std::string_view word) const {
  std::vector<std::size_t> rows;
  if (config_.buckets == 0) return rows;
  const std::string wrapped = "<" + std::string(word) + ">";
  // n counts characters, not bytes
  for (std::size_t i = 0; i < wrapped.size(); ++i) {
    if (utf8_continuation(wrapped[i])) continue;
    std::size_t j = i;
    for (std::size_t n = 1; j < wrapped.size() && n <= config_.max_n; ++n) {
      ++j;
      while (j < wrapped.size() && utf8_continuation(wrapped[j])) ++j;
      if (n >= config_.min_n) {
        rows.push_back(words_.size() + ngram_hash(std::string_view(wrapped).substr(i, j - i)) % config_.buckets);
      }
    }
  }
  return rows;
}

SubwordEmbeddings SubwordEmbeddings::train(const std::vector<std::vector<std::string>>& sentences,
                                           const SubwordEmbeddingConfig& config) {
  if (config.dim == 0) throw std::invalid_argument("embedding dim must be positive");
  if (config.min_n == 0 || config.min_n > config.max_n) throw std::invalid_argument("bad n-gram range");

  SubwordEmbeddings emb;
  emb.config_ = config;

  std::map<std::string, std::size_t> counts;
  for (const auto& s : sentences)
    for (const auto& w : s) ++counts[w];
  std::vector<std::pair<std::string, std::size_t>> ordered;
  for (auto& [w, c] : counts)
    if (c >= config.min_count) ordered.emplace_back(w, c);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  for (auto& [w, c] : ordered) {
    emb.word_ids_.emplace(w, emb.words_.size());
    emb.words_.push_back(w);
  }

  const std::size_t dim = config.dim;
  const std::size_t nwords = emb.words_.size();
  const std::size_t rows = nwords + config.buckets;
  SeededRng rng(config.seed);
  emb.input_.resize(rows * dim);
  const double bound = 1.0 / static_cast<double>(dim);
  for (auto& v : emb.input_) v = static_cast<float>((rng.uniform01() * 2.0 - 1.0) * bound);
  if (nwords == 0) return emb;

  std::vector<float> output(nwords * dim, 0.0f);

  // unigram^0.5 negative distribution
  std::vector<double> cumulative(nwords);
  double total = 0.0;
  for (std::size_t i = 0; i < nwords; ++i) {
    total += std::sqrt(static_cast<double>(ordered[i].second));
    cumulative[i] = total;
  }
  auto draw_negative = [&] {
    double r = rng.uniform01() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), r);
    return static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - cumulative.begin(), nwords - 1));
  };

  std::vector<std::vector<std::size_t>> word_rows(nwords);
  for (std::size_t w = 0; w < nwords; ++w) {
    word_rows[w].push_back(w);
    auto sub = emb.subword_rows(emb.words_[w]);
    word_rows[w].insert(word_rows[w].end(), sub.begin(), sub.end());
  }

  std::vector<std::vector<std::size_t>> corpus;
  std::size_t token_total = 0;
  for (const auto& s : sentences) {
    std::vector<std::size_t> ids;
    for (const auto& w : s) {
      auto it = emb.word_ids_.find(w);
      if (it != emb.word_ids_.end()) ids.push_back(it->second);
    }
    token_total += ids.size();
    corpus.push_back(std::move(ids));
  }
  const double planned = static_cast<double>(std::max<std::size_t>(1, token_total * config.epochs));

  std::vector<double> hidden(dim), grad(dim);
  std::size_t processed = 0;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (const auto& sent : corpus) {
      for (std::size_t pos = 0; pos < sent.size(); ++pos, ++processed) {
        const double lr = config.learning_rate * (1.0 - static_cast<double>(processed) / planned);
        const auto& in_rows = word_rows[sent[pos]];
        std::fill(hidden.begin(), hidden.end(), 0.0);
        for (auto r : in_rows)
          for (std::size_t d = 0; d < dim; ++d) hidden[d] += emb.input_[r * dim + d];
        for (auto& h : hidden) h /= static_cast<double>(in_rows.size());

        const std::size_t span = 1 + rng.uniform_index(std::max<std::size_t>(1, config.window));
        const std::size_t lo = pos >= span ? pos - span : 0;
        const std::size_t hi = std::min(sent.size() - 1, pos + span);
        for (std::size_t c = lo; c <= hi; ++c) {
          if (c == pos) continue;
          std::fill(grad.begin(), grad.end(), 0.0);
          for (std::size_t k = 0; k <= config.negatives; ++k) {
            std::size_t target = sent[c];
            double label = 1.0;
            if (k > 0) {
              target = draw_negative();
              if (target == sent[c]) continue;
              label = 0.0;
            }
            float* out = &output[target * dim];
            double dot = 0.0;
            for (std::size_t d = 0; d < dim; ++d) dot += out[d] * hidden[d];
            const double g = lr * (label - sigmoid(dot));
            for (std::size_t d = 0; d < dim; ++d) {
              grad[d] += g * out[d];
              out[d] += static_cast<float>(g * hidden[d]);
            }
          }
          for (auto r : in_rows)
            for (std::size_t d = 0; d < dim; ++d) emb.input_[r * dim + d] += static_cast<float>(grad[d]);
        }
      }
    }
  }

  emb.mean_.assign(dim, 0.0f);
  if (token_total > 0) {
    std::vector<double> sum(dim, 0.0);
    std::vector<std::vector<float>> cache(nwords);
    for (const auto& sent : corpus) {
      for (auto w : sent) {
        if (cache[w].empty()) cache[w] = emb.vector(emb.words_[w]);
        for (std::size_t d = 0; d < dim; ++d) sum[d] += cache[w][d];
      }
    }
    for (std::size_t d = 0; d < dim; ++d) emb.mean_[d] = static_cast<float>(sum[d] / static_cast<double>(token_total));
  }
  return emb;
}

std::vector<float> SubwordEmbeddings::vector(std::string_view word) const {
  std::vector<float> out(config_.dim, 0.0f);
  std::vector<std::size_t> rows;
  if (auto it = word_ids_.find(std::string(word)); it != word_ids_.end()) rows.push_back(it->second);
  auto sub = subword_rows(word);
  rows.insert(rows.end(), sub.begin(), sub.end());
  if (rows.empty() || input_.empty()) return out;
  for (auto r : rows)
    for (std::size_t d = 0; d < config_.dim; ++d) out[d] += input_[r * config_.dim + d];
  for (auto& v : out) v /= static_cast<float>(rows.size());
  return out;
}

double SubwordEmbeddings::similarity(std::string_view a, std::string_view b) const {
  auto va = vector(a), vb = vector(b);
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    dot += va[i] * vb[i];
    na += va[i] * va[i];
    nb += vb[i] * vb[i];
  }
  if (na == 0 || nb == 0) return 0.0;
  return dot / std::sqrt(na * nb);
}

void SubwordEmbeddings::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(kMagic, sizeof(kMagic));
  for (std::uint64_t v : {std::uint64_t(config_.dim), std::uint64_t(config_.min_n), std::uint64_t(config_.max_n),
                          std::uint64_t(config_.buckets), std::uint64_t(config_.window),
                          std::uint64_t(config_.negatives), std::uint64_t(config_.epochs),
                          std::uint64_t(config_.min_count), config_.seed}) {
    write_pod(out, v);
  }
  write_pod(out, config_.learning_rate);
  write_pod(out, std::uint64_t(words_.size()));
  for (const auto& w : words_) {
    write_pod(out, std::uint32_t(w.size()));
    out.write(w.data(), static_cast<std::streamsize>(w.size()));
  }
  out.write(reinterpret_cast<const char*>(input_.data()), static_cast<std::streamsize>(input_.size() * sizeof(float)));
  std::vector<float> mean = mean_;
  mean.resize(config_.dim, 0.0f);
  out.write(reinterpret_cast<const char*>(mean.data()), static_cast<std::streamsize>(mean.size() * sizeof(float)));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

SubwordEmbeddings SubwordEmbeddings::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  const bool v1 = in && std::memcmp(magic, kMagicV1, sizeof(kMagicV1)) == 0;
  if (!in || (!v1 && std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)) {
    throw std::runtime_error(path.string() + " is not an embedding file");
  }
  SubwordEmbeddings emb;
  auto& c = emb.config_;
  c.dim = read_pod<std::uint64_t>(in);
  c.min_n = read_pod<std::uint64_t>(in);
  c.max_n = read_pod<std::uint64_t>(in);
  c.buckets = read_pod<std::uint64_t>(in);
  c.window = read_pod<std::uint64_t>(in);
  c.negatives = read_pod<std::uint64_t>(in);
  c.epochs = read_pod<std::uint64_t>(in);
  c.min_count = read_pod<std::uint64_t>(in);
  c.seed = read_pod<std::uint64_t>(in);
  c.learning_rate = read_pod<double>(in);
  const auto nwords = read_pod<std::uint64_t>(in);
  for (std::uint64_t i = 0; i < nwords; ++i) {
    std::string w(read_pod<std::uint32_t>(in), '\0');
    in.read(w.data(), static_cast<std::streamsize>(w.size()));
    emb.word_ids_.emplace(w, emb.words_.size());
    emb.words_.push_back(std::move(w));
  }
  emb.input_.resize((nwords + c.buckets) * c.dim);
  in.read(reinterpret_cast<char*>(emb.input_.data()), static_cast<std::streamsize>(emb.input_.size() * sizeof(float)));
  emb.mean_.assign(c.dim, 0.0f);
  if (!v1) in.read(reinterpret_cast<char*>(emb.mean_.data()), static_cast<std::streamsize>(c.dim * sizeof(float)));
  if (!in) throw std::runtime_error("truncated embedding file " + path.string());
  return emb;
}

}  // namespace aspectsim::models
