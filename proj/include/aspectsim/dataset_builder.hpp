#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "aspectsim/aspect_pairs.hpp"
#include "aspectsim/corpus_ingest.hpp"
#include "aspectsim/dataset_store.hpp"
#include "aspectsim/negative_sampling.hpp"
#include "aspectsim/run_config.hpp"

namespace aspectsim {

/// Everything produced by one corpus -> dataset run.
struct BuildResult {
  std::vector<PaperRecord> records;  // filtered store
  SampleSet set;
  FoldAssignment folds;
  DatasetStats stats;
  std::vector<std::pair<std::string, std::size_t>> section_counts;
  ParseDiagnostics parse;
  EnrichmentStats enrichment;
  FilterStats filter;
  PairingDiagnostics pairing;
  SamplerReport sampler;
};

/// parse -> enrich (when a client is given) -> filter/dedup -> label
/// induction -> positive pairs -> negatives -> stratified folds -> stats.
BuildResult build_dataset(const BuildConfig& config, MetadataClient* client = nullptr);

/// Writes papers.jsonl, samples.jsonl, vocab.json, provenance.json,
/// folds.json, stats.{csv,json,md}, label_distribution.csv,
/// section_counts.csv, sampler_report.json and build_report.json.
void write_build_outputs(const BuildResult& result, const std::filesystem::path& out_dir);

/// ISO-8601 UTC; honours SOURCE_DATE_EPOCH.
std::string build_timestamp();

}  // namespace aspectsim
