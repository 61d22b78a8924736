#include "aspectsim/dataset_builder.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <spdlog/spdlog.h>

namespace aspectsim {

namespace fs = std::filesystem;

std::string build_timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) t = static_cast<std::time_t>(std::stoll(epoch));
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

BuildResult build_dataset(const BuildConfig& config, MetadataClient* client) {
  BuildResult out;
  auto records = parse_corpus(config.corpus_path, config.format, &out.parse);
  spdlog::info("parsed {} papers ({} malformed)", records.size(), out.parse.malformed);
  if (client) {
    records = enrich_metadata(std::move(records), *client, &out.enrichment);
    spdlog::info("enrichment: {} filled, {} unresolved", out.enrichment.filled, out.enrichment.unresolved);
  }
  out.records = filter_and_dedup(std::move(records), &out.filter);
  spdlog::info("{} papers retained ({} without text, {} duplicates)", out.records.size(), out.filter.dropped_empty,
               out.filter.dropped_duplicate);

  const SectionNormalizer normalizer =
      config.variants_path.empty() ? SectionNormalizer() : SectionNormalizer::from_file(config.variants_path);
  const auto instances = collect_citation_instances(out.records, normalizer, &out.pairing);
  out.section_counts = count_sections(instances);
  const auto vocab = build_vocabulary(instances, config.top_k);
  auto positives = build_positive_pairs(instances, vocab);
  {
    PairingDiagnostics full;
    build_positive_pairs(out.records, vocab, normalizer, &full);
    out.pairing.pairs_without_labels = full.pairs_without_labels;
  }

  const NegativeConstraintIndex index(out.records);
  const auto negative_count = negative_count_for(positives.size(), config.negative_ratio);
  auto negatives = sample_negatives(index, vocab.none_index(), negative_count, config.seed, &out.sampler);
  spdlog::info("{} positive pairs, {} negative pairs", positives.size(), negatives.size());

  std::vector<DocumentPair> pairs = std::move(positives);
  pairs.insert(pairs.end(), negatives.begin(), negatives.end());
  out.set.samples = attach_text(pairs, out.records);
  out.set.vocab = vocab;
  out.set.provenance = {config.corpus_name.empty() ? config.corpus_path.filename().string() : config.corpus_name,
                        build_timestamp(), config.hash()};
  out.folds = stratified_folds(out.set, config.folds, config.seed);
  out.stats = dataset_stats(out.set);
  return out;
}

void write_build_outputs(const BuildResult& result, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  auto put = [&](const char* name, const std::string& content) {
    std::ofstream out(out_dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (out_dir / name).string());
    out << content;
  };
  write_paper_store(out_dir / "papers.jsonl", result.records);
  save_dataset(result.set, out_dir);
  save_folds(result.folds, out_dir / "folds.json");
  put("stats.json", result.stats.to_json().dump(2) + "\n");
  put("stats.csv", result.stats.to_csv());
  put("stats.md", result.stats.to_markdown(result.set.vocab));
  std::vector<DocumentPair> pairs;
  pairs.reserve(result.set.samples.size());
  for (const auto& s : result.set.samples) pairs.push_back(s.pair);
  put("label_distribution.csv", label_distribution_csv(pairs, result.set.vocab));
  {
    std::ostringstream csv;
    csv << "section,count\n";
    for (const auto& [section, n] : result.section_counts) csv << section << ',' << n << '\n';
    put("section_counts.csv", csv.str());
  }
  put("sampler_report.json", result.sampler.to_json().dump(2) + "\n");

  nlohmann::ordered_json report;
  report["parsed_records"] = result.parse.records;
  report["malformed_records"] = result.parse.malformed;
  report["orphan_citations"] = result.parse.orphan_citations;
  report["enrichment"] = {{"queried", result.enrichment.queried},
                          {"filled", result.enrichment.filled},
                          {"unresolved", result.enrichment.unresolved},
                          {"failed", result.enrichment.failed}};
  report["dropped_without_text"] = result.filter.dropped_empty;
  report["dropped_duplicates"] = result.filter.dropped_duplicate;
  report["retained_records"] = result.records.size();
  report["citations"] = result.pairing.citations;
  report["unresolved_citations"] = result.pairing.unresolved;
  report["self_citations"] = result.pairing.self_citations;
  report["citations_without_section"] = result.pairing.empty_sections;
  report["pairs_without_labels"] = result.pairing.pairs_without_labels;
  put("build_report.json", report.dump(2) + "\n");
}

}  // namespace aspectsim
