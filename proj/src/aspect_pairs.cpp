#include "aspectsim/aspect_pairs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "aspectsim/corpus_ingest.hpp"
#include "aspectsim/text_util.hpp"

namespace aspectsim {

CitationResolver::CitationResolver(const std::vector<PaperRecord>& records) {
  for (const auto& r : records) {
    exact_.emplace(r.paper_id, r.paper_id);
    for (const auto& [scheme, value] : r.external_ids) {
      if (!value.empty()) keyed_.emplace(external_key(scheme, value), r.paper_id);
    }
    if (!r.title.empty()) keyed_.emplace(title_key(r.title, r.year), r.paper_id);
  }
}

std::string CitationResolver::external_key(std::string_view scheme, std::string_view value) {
  return text::to_lower_ascii(scheme) + ":" + text::normalize_key(value);
}

std::string CitationResolver::title_key(std::string_view title, int year) {
  return "title:" + title_year_key(title, year);
}

std::optional<std::string> CitationResolver::resolve(std::string_view target_ref) const {
  if (auto it = exact_.find(std::string(target_ref)); it != exact_.end()) return it->second;
  const auto colon = target_ref.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const auto scheme = text::to_lower_ascii(target_ref.substr(0, colon));
  std::string key = scheme == "title" ? "title:" + std::string(target_ref.substr(colon + 1))
                                      : external_key(scheme, target_ref.substr(colon + 1));
  if (auto it = keyed_.find(key); it != keyed_.end()) return it->second;
  return std::nullopt;
}

std::vector<CitationInstance> collect_citation_instances(const std::vector<PaperRecord>& records,
                                                         const SectionNormalizer& normalizer,
                                                         PairingDiagnostics* diagnostics) {
  PairingDiagnostics diag;
  const CitationResolver resolver(records);
  std::vector<CitationInstance> out;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& record : records) {
    for (const auto& citation : record.citations) {
      ++diag.citations;
      const auto target = resolver.resolve(citation.target_ref);
      if (!target) {
        ++diag.unresolved;
        continue;
      }
      if (*target == record.paper_id) {
        ++diag.self_citations;
        continue;
      }
      const auto sections = normalizer.normalize(citation.section_title_raw);
      if (sections.empty()) {
        ++diag.empty_sections;
        continue;
      }
      for (const auto& section : sections) {
        if (seen.emplace(record.paper_id, *target, section).second) {
          out.push_back({record.paper_id, *target, section});
        }
      }
    }
  }
  if (diagnostics) *diagnostics = diag;
  return out;
}

std::vector<std::pair<std::string, std::size_t>> count_sections(const std::vector<CitationInstance>& instances) {
  std::map<std::string, std::size_t> counts;
  for (const auto& inst : instances) ++counts[inst.section];
  std::vector<std::pair<std::string, std::size_t>> sorted(counts.begin(), counts.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  return sorted;
}

LabelVocabulary build_vocabulary(const std::vector<CitationInstance>& instances, std::size_t top_k) {
  if (instances.empty()) throw std::invalid_argument("build_vocabulary: no citation instances");
  const auto sorted = count_sections(instances);
  if (sorted.size() < top_k) {
    std::ostringstream msg;
    msg << "build_vocabulary: only " << sorted.size() << " distinct sections, need top_k=" << top_k;
    throw std::invalid_argument(msg.str());
  }
  std::vector<std::string> positive;
  positive.reserve(top_k);
  for (std::size_t i = 0; i < top_k; ++i) positive.push_back(sorted[i].first);
  return LabelVocabulary(std::move(positive));
}

std::vector<DocumentPair> build_positive_pairs(const std::vector<CitationInstance>& instances,
                                               const LabelVocabulary& vocab) {
  std::vector<DocumentPair> pairs;
  std::map<std::pair<std::string, std::string>, std::size_t> slot;
  for (const auto& inst : instances) {
    if (inst.seed_id == inst.target_id) continue;
    auto [it, inserted] = slot.try_emplace({inst.seed_id, inst.target_id}, pairs.size());
    if (inserted) pairs.push_back({inst.seed_id, inst.target_id, {}});
    pairs[it->second].labels.insert(vocab.class_for_section(inst.section));
  }
  return pairs;
}

std::vector<DocumentPair> build_positive_pairs(const std::vector<PaperRecord>& records, const LabelVocabulary& vocab,
                                               const SectionNormalizer& normalizer, PairingDiagnostics* diagnostics) {
  PairingDiagnostics diag;
  const auto instances = collect_citation_instances(records, normalizer, &diag);
  auto pairs = build_positive_pairs(instances, vocab);

  // cited pairs whose every citation had an empty section title
  std::set<std::pair<std::string, std::string>> labelled;
  for (const auto& p : pairs) labelled.emplace(p.seed_id, p.target_id);
  const CitationResolver resolver(records);
  std::set<std::pair<std::string, std::string>> unlabelled;
  for (const auto& r : records) {
    for (const auto& c : r.citations) {
      auto t = resolver.resolve(c.target_ref);
      if (t && *t != r.paper_id && !labelled.contains({r.paper_id, *t})) unlabelled.emplace(r.paper_id, *t);
    }
  }
  diag.pairs_without_labels = unlabelled.size();
  if (diagnostics) *diagnostics = diag;
  return pairs;
}

std::vector<std::size_t> class_counts(const std::vector<DocumentPair>& pairs, const LabelVocabulary& vocab) {
  std::vector<std::size_t> counts(vocab.size(), 0);
  for (const auto& p : pairs) {
    for (auto c : p.labels.indices()) {
      if (c < counts.size()) ++counts[c];
    }
  }
  return counts;
}

std::string label_distribution_csv(const std::vector<DocumentPair>& pairs, const LabelVocabulary& vocab) {
  const auto counts = class_counts(pairs, vocab);
  std::ostringstream out;
  out << "class,count\n";
  for (std::size_t i = 0; i < vocab.size(); ++i) out << vocab.display_name(i) << ',' << counts[i] << '\n';
  return out.str();
}

}  // namespace aspectsim
