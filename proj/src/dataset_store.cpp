#include "aspectsim/dataset_store.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <spdlog/spdlog.h>

#include "aspectsim/rng.hpp"
#include "aspectsim/text_util.hpp"

namespace aspectsim {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string dump_line(const ordered_json& j) { return j.dump(-1, ' ', false, json::error_handler_t::replace); }

void write_text(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DatasetError("cannot write " + path.string());
  out << content;
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DatasetError(path.string() + ": " + e.what());
  }
}

std::string required_string(const json& j, const char* key, std::size_t line_no) {
  auto it = j.find(key);
  if (it == j.end()) throw DatasetError("line " + std::to_string(line_no) + ": missing " + key);
  if (!it->is_string()) throw DatasetError("line " + std::to_string(line_no) + ": " + key + " is not a string");
  return it->get<std::string>();
}

}  // namespace

std::vector<Sample> attach_text(const std::vector<DocumentPair>& pairs, const std::vector<PaperRecord>& records) {
  std::unordered_map<std::string, const PaperRecord*> by_id;
  for (const auto& r : records) by_id.emplace(r.paper_id, &r);
  std::vector<Sample> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    auto s = by_id.find(p.seed_id);
    auto t = by_id.find(p.target_id);
    if (s == by_id.end() || t == by_id.end()) {
      throw DatasetError("pair references unknown paper: " + p.seed_id + " -> " + p.target_id);
    }
    out.push_back({p, s->second->title, s->second->abstract, t->second->title, t->second->abstract});
  }
  return out;
}

void save_samples(const std::vector<Sample>& samples, const LabelVocabulary& vocab, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DatasetError("cannot write " + path.string());
  for (const auto& s : samples) {
    ordered_json j;
    j["seed_id"] = s.pair.seed_id;
    j["target_id"] = s.pair.target_id;
    j["seed_title"] = s.seed_title;
    j["seed_abstract"] = s.seed_abstract;
    j["target_title"] = s.target_title;
    j["target_abstract"] = s.target_abstract;
    j["labels"] = vocab.names_of(s.pair.labels);
    out << dump_line(j) << '\n';
  }
}

std::vector<Sample> load_samples(const fs::path& path, const LabelVocabulary& vocab) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot read " + path.string());
  std::vector<Sample> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw DatasetError("line " + std::to_string(line_no) + ": invalid JSON (" + e.what() + ")");
    }
    if (!j.is_object()) throw DatasetError("line " + std::to_string(line_no) + ": not an object");
    Sample s;
    s.pair.seed_id = required_string(j, "seed_id", line_no);
    s.pair.target_id = required_string(j, "target_id", line_no);
    s.seed_title = required_string(j, "seed_title", line_no);
    s.seed_abstract = required_string(j, "seed_abstract", line_no);
    s.target_title = required_string(j, "target_title", line_no);
    s.target_abstract = required_string(j, "target_abstract", line_no);
    auto labels = j.find("labels");
    if (labels == j.end()) throw DatasetError("line " + std::to_string(line_no) + ": missing labels");
    if (!labels->is_array() || labels->empty()) {
      throw DatasetError("line " + std::to_string(line_no) + ": labels must be a non-empty array");
    }
    try {
      s.pair.labels = vocab.labels_from_names(labels->get<std::vector<std::string>>());
    } catch (const std::exception& e) {
      throw DatasetError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (s.pair.seed_id == s.pair.target_id) throw DatasetError("line " + std::to_string(line_no) + ": seed_id == target_id");
    out.push_back(std::move(s));
  }
  return out;
}

void save_dataset(const SampleSet& set, const fs::path& dir) {
  fs::create_directories(dir);
  save_samples(set.samples, set.vocab, dir / "samples.jsonl");
  write_text(dir / "vocab.json", set.vocab.to_json().dump(2) + "\n");
  ordered_json prov;
  prov["corpus"] = set.provenance.corpus;
  prov["build_timestamp"] = set.provenance.build_timestamp;
  prov["config_hash"] = set.provenance.config_hash;
  write_text(dir / "provenance.json", prov.dump(2) + "\n");
}

SampleSet load_dataset(const fs::path& dir) {
  SampleSet set;
  try {
    set.vocab = LabelVocabulary::from_json(read_json_file(dir / "vocab.json"));
  } catch (const DatasetError&) {
    throw;
  } catch (const std::exception& e) {
    throw DatasetError((dir / "vocab.json").string() + ": " + e.what());
  }
  try {
    set.samples = load_samples(dir / "samples.jsonl", set.vocab);
  } catch (const DatasetError& e) {
    throw DatasetError((dir / "samples.jsonl").string() + " " + e.what());
  }
  if (fs::exists(dir / "provenance.json")) {
    const auto prov = read_json_file(dir / "provenance.json");
    set.provenance.corpus = prov.value("corpus", "");
    set.provenance.build_timestamp = prov.value("build_timestamp", "");
    set.provenance.config_hash = prov.value("config_hash", "");
  }
  return set;
}

// ---- folds -----------------------------------------------------------------

std::vector<std::size_t> FoldAssignment::test_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldAssignment::train_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of.size(); ++i) {
    if (fold_of[i] != fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldAssignment::fold_sizes() const {
  std::vector<std::size_t> sizes(k, 0);
  for (auto f : fold_of) ++sizes.at(f);
  return sizes;
}

ordered_json FoldAssignment::to_json() const {
  ordered_json j;
  j["k"] = k;
  j["seed"] = seed;
  j["assignment"] = fold_of;
  return j;
}

FoldAssignment FoldAssignment::from_json(const json& j) {
  FoldAssignment f;
  f.k = j.at("k").get<std::size_t>();
  f.seed = j.at("seed").get<std::uint64_t>();
  f.fold_of = j.at("assignment").get<std::vector<std::size_t>>();
  for (auto x : f.fold_of) {
    if (x >= f.k) throw DatasetError("fold index out of range in folds file");
  }
  return f;
}

void save_folds(const FoldAssignment& folds, const fs::path& path) { write_text(path, folds.to_json().dump() + "\n"); }

FoldAssignment load_folds(const fs::path& path) { return FoldAssignment::from_json(read_json_file(path)); }

FoldAssignment stratified_folds(const std::vector<LabelSet>& labels, std::size_t num_classes, std::size_t k,
                                std::uint64_t rng_seed, StratificationWarnings* warnings) {
  if (k < 2) throw DatasetError("stratified_folds: k must be >= 2");
  const std::size_t n = labels.size();
  if (k > n) throw DatasetError("stratified_folds: k=" + std::to_string(k) + " exceeds " + std::to_string(n) + " samples");

  SeededRng rng(rng_seed);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(std::span(order));

  std::vector<std::vector<std::size_t>> by_label(num_classes);
  std::vector<std::size_t> remaining(num_classes, 0);
  for (auto i : order) {
    for (auto c : labels[i].indices()) {
      if (c >= num_classes) throw DatasetError("stratified_folds: label index out of range");
      by_label[c].push_back(i);
      ++remaining[c];
    }
  }
  StratificationWarnings warn;
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (remaining[c] > 0 && remaining[c] < k) {
      warn.sparse_classes.push_back(c);
      spdlog::warn("class {} has {} samples, fewer than k={}; stratified best-effort", c, remaining[c], k);
    }
  }

  const double share = 1.0 / static_cast<double>(k);
  std::vector<double> want_total(k, static_cast<double>(n) * share);
  std::vector<std::vector<double>> want(num_classes, std::vector<double>(k));
  for (std::size_t c = 0; c < num_classes; ++c) {
    for (std::size_t f = 0; f < k; ++f) want[c][f] = static_cast<double>(remaining[c]) * share;
  }

  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  FoldAssignment out{k, rng_seed, std::vector<std::size_t>(n, kUnassigned)};
  std::vector<std::size_t> candidates;
  candidates.reserve(k);

  auto assign = [&](std::size_t i, std::size_t f) {
    out.fold_of[i] = f;
    want_total[f] -= 1.0;
    for (auto c : labels[i].indices()) {
      want[c][f] -= 1.0;
      --remaining[c];
    }
  };
  auto pick_fold = [&](const std::vector<double>* label_want) {
    candidates.clear();
    for (std::size_t f = 0; f < k; ++f) {
      if (candidates.empty()) {
        candidates.push_back(f);
        continue;
      }
      const auto g = candidates.front();
      const double a = label_want ? (*label_want)[f] : 0.0;
      const double b = label_want ? (*label_want)[g] : 0.0;
      if (a > b || (a == b && want_total[f] > want_total[g])) {
        candidates.assign(1, f);
      } else if (a == b && want_total[f] == want_total[g]) {
        candidates.push_back(f);
      }
    }
    return candidates.size() == 1 ? candidates.front() : candidates[rng.uniform_index(candidates.size())];
  };

  while (true) {
    std::size_t label = num_classes;
    for (std::size_t c = 0; c < num_classes; ++c) {
      if (remaining[c] > 0 && (label == num_classes || remaining[c] < remaining[label])) label = c;
    }
    if (label == num_classes) break;
    for (auto i : by_label[label]) {
      if (out.fold_of[i] == kUnassigned) assign(i, pick_fold(&want[label]));
    }
  }
  for (auto i : order) {
    if (out.fold_of[i] == kUnassigned) assign(i, pick_fold(nullptr));
  }
  if (warnings) *warnings = std::move(warn);
  return out;
}

FoldAssignment stratified_folds(const SampleSet& set, std::size_t k, std::uint64_t rng_seed,
                                StratificationWarnings* warnings) {
  std::vector<LabelSet> labels;
  labels.reserve(set.samples.size());
  for (const auto& s : set.samples) labels.push_back(s.pair.labels);
  return stratified_folds(labels, set.vocab.size(), k, rng_seed, warnings);
}

// ---- stats -----------------------------------------------------------------

DatasetStats dataset_stats(const SampleSet& set) {
  DatasetStats st;
  st.classes = set.vocab.class_names();
  st.class_counts.assign(set.vocab.size(), 0);
  const auto none = set.vocab.none_index();
  for (const auto& s : set.samples) {
    for (auto c : s.pair.labels.indices()) ++st.class_counts.at(c);
    switch (s.pair.labels.size()) {
      case 0:
        break;
      case 1:
        ++st.one_label;
        break;
      case 2:
        ++st.two_labels;
        break;
      default:
        ++st.three_plus_labels;
    }
    if (s.pair.labels.contains(none)) {
      ++st.negatives;
    } else {
      ++st.positives;
    }
  }
  return st;
}

ordered_json DatasetStats::to_json() const {
  ordered_json j;
  ordered_json counts = ordered_json::object();
  for (std::size_t i = 0; i < classes.size(); ++i) counts[classes[i]] = class_counts[i];
  j["class_counts"] = std::move(counts);
  ordered_json hist;
  hist["1"] = one_label;
  hist["2"] = two_labels;
  hist[">=3"] = three_plus_labels;
  j["label_count_histogram"] = std::move(hist);
  j["positives"] = positives;
  j["negatives"] = negatives;
  j["total"] = positives + negatives;
  return j;
}

std::string DatasetStats::to_csv() const {
  std::ostringstream out;
  out << "key,count\n";
  for (std::size_t i = 0; i < classes.size(); ++i) out << "class:" << classes[i] << ',' << class_counts[i] << '\n';
  out << "labels:1," << one_label << '\n';
  out << "labels:2," << two_labels << '\n';
  out << "labels:>=3," << three_plus_labels << '\n';
  out << "positives," << positives << '\n';
  out << "negatives," << negatives << '\n';
  return out.str();
}

std::string DatasetStats::to_markdown(const LabelVocabulary& vocab) const {
  std::ostringstream out;
  out << "| Label class | Count |\n|---|---:|\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << "| " << vocab.display_name(i) << " | " << class_counts[i] << " |\n";
  }
  out << "\n| Labels per sample | Samples |\n|---|---:|\n";
  out << "| 1 | " << one_label << " |\n| 2 | " << two_labels << " |\n| >=3 | " << three_plus_labels << " |\n";
  out << "\nPositive pairs: " << positives << ", negative pairs: " << negatives << "\n";
  return out.str();
}

}  // namespace aspectsim
