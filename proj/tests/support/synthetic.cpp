#include "synthetic.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include "aspectsim/rng.hpp"

namespace aspectsim::testing {

namespace {

std::string paper_id(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "P%05zu", i);
  return buf;
}

std::size_t draw_weighted(SeededRng& rng, const std::vector<double>& weights, std::size_t limit) {
  double total = 0.0;
  for (std::size_t i = 0; i < limit; ++i) total += weights[i];
  double x = rng.uniform01() * total;
  for (std::size_t i = 0; i < limit; ++i) {
    if (x < weights[i]) return i;
    x -= weights[i];
  }
  return limit - 1;
}

const std::vector<std::string> kSections = {
    "Introduction", "1 Introduction", "Related Work", "2. Related works", "Experiments",
    "Results and Discussion", "Conclusion and Future Work", "Method", "Evaluation", "Background",
    "Acknowledgements", "Appendix A", "", "Discussion"};

const std::vector<std::string> kFiller = {
    "model", "data", "task", "approach", "system", "language", "corpus", "training", "annotation", "feature",
    "sentence", "word", "text", "score", "study", "paper", "network", "learning", "set", "analysis"};

const std::vector<std::vector<std::string>> kCues = {
    {"motivation", "overview", "broadly"},      // introduction
    {"prior", "previously", "survey"},          // related work
    {"setup", "configuration", "trials"},       // experiment
    {"preliminaries", "foundations", "basics"}, // background
    {"outcomes", "improvement", "table"},       // results
    {"summary", "finally", "outlook"},          // conclusion
    {"interpretation", "implications", "why"},  // discussion
    {"benchmark", "metric", "judged"},          // evaluation
    {"procedure", "algorithm", "pipeline"},     // methods
    {"miscellaneous", "footnote", "appendix"},  // Other
};

const std::vector<std::vector<std::string>> kTopics = {
    {"parsing", "syntax", "treebank", "dependency"},
    {"translation", "bilingual", "alignment", "decoder"},
    {"sentiment", "opinion", "polarity", "reviews"},
    {"speech", "acoustic", "phoneme", "prosody"},
    {"retrieval", "query", "ranking", "index"},
    {"summarization", "extractive", "headline", "compression"},
};

}  // namespace

std::vector<PaperRecord> synthetic_corpus(const CorpusShape& shape, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<PaperRecord> out(shape.papers);
  for (std::size_t i = 0; i < shape.papers; ++i) {
    auto& r = out[i];
    r.paper_id = paper_id(i);
    r.title = "Synthetic paper " + std::to_string(i);
    r.abstract = "Abstract of synthetic paper " + std::to_string(i) + ".";
    r.year = 2000 + static_cast<int>(i % 20);
    const auto n_authors = 1 + rng.uniform_index(3);
    for (std::size_t a = 0; a < n_authors; ++a) {
      const auto who = rng.uniform_index(shape.author_pool);
      // same person, differently spelled
      std::string name = "Author  Number" + std::to_string(who);
      if (rng.uniform_index(2) == 0) name = "author number" + std::to_string(who);
      r.authors.push_back(name);
    }
    if (rng.uniform01() >= shape.missing_venue) {
      const auto v = rng.uniform_index(shape.venue_pool);
      r.venue = (rng.uniform_index(2) == 0 ? "Venue " : "VENUE  ") + std::to_string(v);
    }
    if (i == 0) continue;
    const auto n_cites = rng.uniform_index(shape.max_citations + 1);
    for (std::size_t c = 0; c < n_cites; ++c) {
      const auto target = rng.uniform_index(i);
      r.citations.push_back({paper_id(target), kSections[rng.uniform_index(kSections.size())]});
    }
  }
  return out;
}

const std::vector<double>& acl_class_weights() {
  static const std::vector<double> w = {16279, 12600, 4025, 1365, 1181, 1158, 1132, 971, 719, 22249, 24275};
  return w;
}

LabelVocabulary acl_vocabulary() {
  return LabelVocabulary({"introduction", "related work", "experiment", "background", "results", "conclusion",
                          "discussion", "evaluation", "methods"});
}

std::vector<LabelSet> skewed_label_sets(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  const auto& w = acl_class_weights();
  const std::size_t none = w.size() - 1;
  std::vector<LabelSet> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    LabelSet s;
    const auto primary = draw_weighted(rng, w, w.size());
    s.insert(primary);
    if (primary != none) {
      if (rng.uniform01() < 0.25) s.insert(draw_weighted(rng, w, none));
      if (rng.uniform01() < 0.05) s.insert(draw_weighted(rng, w, none));
    }
    out.push_back(s);
  }
  return out;
}

SampleSet topical_sample_set(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed + 1);
  SampleSet set;
  set.vocab = acl_vocabulary();
  set.provenance = {"synthetic", "1970-01-01T00:00:00Z", "0"};
  const auto labels = skewed_label_sets(n, seed);
  const auto none = set.vocab.none_index();

  auto sentence = [&](const std::vector<std::string>& topic, std::size_t words) {
    std::string s;
    for (std::size_t k = 0; k < words; ++k) {
      if (!s.empty()) s.push_back(' ');
      s += rng.uniform_index(3) == 0 ? topic[rng.uniform_index(topic.size())] : kFiller[rng.uniform_index(kFiller.size())];
    }
    return s + ".";
  };

  for (std::size_t i = 0; i < n; ++i) {
    Sample s;
    s.pair.seed_id = "S" + std::to_string(i);
    s.pair.target_id = "T" + std::to_string(i);
    s.pair.labels = labels[i];
    const auto seed_topic = rng.uniform_index(kTopics.size());
    // cited papers share the topic, None pairs never do
    auto target_topic = seed_topic;
    if (labels[i].contains(none)) target_topic = (seed_topic + 1 + rng.uniform_index(kTopics.size() - 1)) % kTopics.size();
    std::string cues;
    for (auto c : labels[i].indices()) {
      if (c == none) continue;
      for (const auto& w : kCues[c]) cues += " " + w;
    }
    s.seed_title = "On " + kTopics[seed_topic][0] + " number " + std::to_string(i);
    s.seed_abstract = sentence(kTopics[seed_topic], 12) + cues;
    s.target_title = "Towards " + kTopics[target_topic][1] + " " + std::to_string(i);
    s.target_abstract = sentence(kTopics[target_topic], 12);
    set.samples.push_back(std::move(s));
  }
  return set;
}

}  // namespace aspectsim::testing
