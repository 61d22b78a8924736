#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "aspectsim/metadata_client.hpp"
#include "aspectsim/paper_record.hpp"

namespace aspectsim {

enum class CorpusFormat {
  /// Directory with papers.jsonl (one paper per line) and citations.jsonl
  /// (citing, cited, section) in the style of the ACL Anthology network data.
  kAclStyle,
  /// Directory tree of per-paper S2ORC/CORD-19 JSON files, optionally with a
  /// metadata.csv (sha, title, doi, abstract, authors, journal, publish_time).
  kCord19Style,
};

CorpusFormat parse_corpus_format(std::string_view name);
std::string_view to_string(CorpusFormat format);

/// Fatal ingest failure (unreadable file, missing corpus directory).
class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseDiagnostics {
  std::size_t records = 0;
  std::size_t malformed = 0;
  /// citations whose citing paper is not part of the corpus
  std::size_t orphan_citations = 0;
  std::vector<std::string> warnings;
};

using RecordSink = std::function<void(PaperRecord&&)>;

/// Streams one PaperRecord per source paper. Malformed records are skipped
/// and counted; unreadable files throw CorpusError naming the file.
ParseDiagnostics parse_corpus(const std::filesystem::path& corpus_path, CorpusFormat format, const RecordSink& sink);
std::vector<PaperRecord> parse_corpus(const std::filesystem::path& corpus_path, CorpusFormat format,
                                      ParseDiagnostics* diagnostics = nullptr);

struct EnrichmentStats {
  std::size_t queried = 0;
  std::size_t filled = 0;
  std::size_t unresolved = 0;
  std::size_t failed = 0;
};

/// Builds the lookup used for a record: DOI first, then any other external
/// id, then (title, year).
MetadataQuery query_for(const PaperRecord& record);

/// Fills empty abstracts (and empty authors/venue) from the metadata client.
/// Records with a non-empty abstract are passed through untouched.
std::vector<PaperRecord> enrich_metadata(std::vector<PaperRecord> records, MetadataClient& client,
                                         EnrichmentStats* stats = nullptr);

struct FilterStats {
  std::size_t dropped_empty = 0;
  std::size_t dropped_duplicate = 0;
};

/// Drops records without title or abstract, then drops duplicates
/// (normalized title+year or any shared external id). First occurrence wins.
std::vector<PaperRecord> filter_and_dedup(std::vector<PaperRecord> records, FilterStats* stats = nullptr);

/// Dedup key for title+year.
std::string title_year_key(std::string_view title, int year);

}  // namespace aspectsim
