#include "aspectsim/corpus_ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "aspectsim/text_util.hpp"

namespace aspectsim {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::size_t kMaxStoredWarnings = 200;

void warn(ParseDiagnostics& diag, std::string message) {
  spdlog::warn("{}", message);
  if (diag.warnings.size() < kMaxStoredWarnings) diag.warnings.push_back(std::move(message));
}

std::ifstream open_or_throw(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read corpus file: " + path.string());
  return in;
}

std::string string_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  throw std::invalid_argument(std::string("field '") + key + "' is not a string");
}

int year_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return 0;
  if (it->is_number_integer()) return it->get<int>();
  if (it->is_string()) {
    const auto s = it->get<std::string>();
    if (s.size() >= 4 && std::all_of(s.begin(), s.begin() + 4, [](char c) { return c >= '0' && c <= '9'; })) {
      return std::stoi(s.substr(0, 4));
    }
    return 0;
  }
  throw std::invalid_argument(std::string("field '") + key + "' is not a year");
}

// ---- ACL style -------------------------------------------------------------

PaperRecord acl_paper(const json& j) {
  PaperRecord r;
  r.paper_id = string_field(j, "paper_id");
  if (r.paper_id.empty()) r.paper_id = string_field(j, "id");
  if (r.paper_id.empty()) throw std::invalid_argument("missing paper_id");
  r.title = string_field(j, "title");
  r.abstract = string_field(j, "abstract");
  if (auto it = j.find("authors"); it != j.end() && !it->is_null()) {
    for (const auto& a : *it) r.authors.push_back(a.get<std::string>());
  }
  r.venue = string_field(j, "venue");
  r.year = year_field(j, "year");
  if (auto it = j.find("external_ids"); it != j.end() && it->is_object()) {
    for (const auto& [k, v] : it->items()) {
      if (v.is_string() && !v.get<std::string>().empty()) r.external_ids[text::to_lower_ascii(k)] = v.get<std::string>();
    }
  }
  if (auto doi = string_field(j, "doi"); !doi.empty()) r.external_ids["doi"] = doi;
  return r;
}

ParseDiagnostics parse_acl(const fs::path& dir, const RecordSink& sink) {
  ParseDiagnostics diag;
  const auto papers_path = dir / "papers.jsonl";
  const auto citations_path = dir / "citations.jsonl";

  std::unordered_map<std::string, std::vector<RawCitation>> citations;
  std::vector<std::string> citing_order;
  if (fs::exists(citations_path)) {
    auto in = open_or_throw(citations_path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (text::trim(line).empty()) continue;
      try {
        const auto j = json::parse(line);
        auto citing = string_field(j, "citing");
        auto cited = string_field(j, "cited");
        if (citing.empty() || cited.empty()) throw std::invalid_argument("missing citing/cited");
        auto [it, inserted] = citations.try_emplace(citing);
        if (inserted) citing_order.push_back(citing);
        it->second.push_back({std::move(cited), string_field(j, "section")});
      } catch (const std::exception& e) {
        ++diag.malformed;
        warn(diag, citations_path.string() + " line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }

  std::unordered_set<std::string> seen;
  if (fs::exists(papers_path)) {
    auto in = open_or_throw(papers_path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (text::trim(line).empty()) continue;
      PaperRecord record;
      try {
        record = acl_paper(json::parse(line));
      } catch (const std::exception& e) {
        ++diag.malformed;
        warn(diag, papers_path.string() + " line " + std::to_string(line_no) + ": " + e.what());
        continue;
      }
      if (auto it = citations.find(record.paper_id); it != citations.end() && seen.insert(record.paper_id).second) {
        record.citations = it->second;
      }
      ++diag.records;
      sink(std::move(record));
    }
  }
  for (const auto& citing : citing_order) {
    if (!seen.contains(citing)) diag.orphan_citations += citations[citing].size();
  }
  return diag;
}

// ---- CORD-19 style ---------------------------------------------------------

std::vector<std::string> parse_csv_row(std::istream& in, bool& ok) {
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  char c;
  while (in.get(c)) {
    any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field.push_back(c);
    }
  }
  ok = any;
  if (any) fields.push_back(std::move(field));
  return fields;
}

struct CordMetadataRow {
  std::string cord_uid, title, doi, abstract, authors, journal, publish_time;
};

std::unordered_map<std::string, CordMetadataRow> load_cord_metadata(const fs::path& path, ParseDiagnostics& diag) {
  std::unordered_map<std::string, CordMetadataRow> rows;
  if (!fs::exists(path)) return rows;
  auto in = open_or_throw(path);
  bool ok = false;
  const auto header = parse_csv_row(in, ok);
  if (!ok) return rows;
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[text::trim(header[i])] = i;
  auto get = [&](const std::vector<std::string>& row, const char* name) -> std::string {
    auto it = col.find(name);
    return it != col.end() && it->second < row.size() ? row[it->second] : std::string{};
  };
  std::size_t row_no = 1;
  while (true) {
    auto row = parse_csv_row(in, ok);
    if (!ok) break;
    ++row_no;
    if (row.size() == 1 && text::trim(row[0]).empty()) continue;
    if (row.size() != header.size()) {
      ++diag.malformed;
      warn(diag, path.string() + " row " + std::to_string(row_no) + ": expected " + std::to_string(header.size()) +
                     " columns, got " + std::to_string(row.size()));
      continue;
    }
    CordMetadataRow m{get(row, "cord_uid"), get(row, "title"),   get(row, "doi"),         get(row, "abstract"),
                      get(row, "authors"),  get(row, "journal"), get(row, "publish_time")};
    for (const auto& key_col : {"sha", "pmcid"}) {
      std::stringstream keys(get(row, key_col));
      std::string key;
      while (std::getline(keys, key, ';')) {
        key = text::trim(key);
        if (!key.empty()) rows.emplace(key, m);
      }
    }
  }
  return rows;
}

std::string join_author(const json& a) {
  if (a.is_string()) return a.get<std::string>();
  std::vector<std::string> parts;
  if (auto f = string_field(a, "first"); !f.empty()) parts.push_back(f);
  if (auto it = a.find("middle"); it != a.end() && it->is_array()) {
    for (const auto& m : *it) {
      if (m.is_string() && !m.get<std::string>().empty()) parts.push_back(m.get<std::string>());
    }
  }
  if (auto l = string_field(a, "last"); !l.empty()) parts.push_back(l);
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out.push_back(' ');
    out += p;
  }
  return out;
}

std::string bib_target_ref(const json& bib) {
  if (auto ids = bib.find("other_ids"); ids != bib.end() && ids->is_object()) {
    for (const auto& [scheme, values] : ids->items()) {
      if (text::to_lower_ascii(scheme) != "doi") continue;
      if (values.is_array() && !values.empty() && values.front().is_string()) {
        return "doi:" + text::to_lower_ascii(values.front().get<std::string>());
      }
      if (values.is_string()) return "doi:" + text::to_lower_ascii(values.get<std::string>());
    }
  }
  const auto title = string_field(bib, "title");
  if (title.empty()) return {};
  return "title:" + title_year_key(title, year_field(bib, "year"));
}

PaperRecord cord_paper(const json& j) {
  PaperRecord r;
  r.paper_id = string_field(j, "paper_id");
  if (r.paper_id.empty()) throw std::invalid_argument("missing paper_id");
  const json empty = json::object();
  const auto& meta = j.contains("metadata") ? j.at("metadata") : empty;
  r.title = string_field(meta, "title");
  if (auto it = meta.find("authors"); it != meta.end() && it->is_array()) {
    for (const auto& a : *it) {
      auto name = join_author(a);
      if (!name.empty()) r.authors.push_back(std::move(name));
    }
  }
  r.venue = string_field(meta, "venue");
  r.year = year_field(meta, "year");
  if (auto doi = string_field(meta, "doi"); !doi.empty()) r.external_ids["doi"] = doi;

  if (auto it = j.find("abstract"); it != j.end() && it->is_array()) {
    std::vector<std::string> paragraphs;
    for (const auto& p : *it) {
      auto t = text::trim(string_field(p, "text"));
      if (!t.empty()) paragraphs.push_back(std::move(t));
    }
    for (const auto& p : paragraphs) {
      if (!r.abstract.empty()) r.abstract.push_back(' ');
      r.abstract += p;
    }
  }

  const auto& bibs = j.contains("bib_entries") ? j.at("bib_entries") : empty;
  if (auto body = j.find("body_text"); body != j.end() && body->is_array()) {
    for (const auto& paragraph : *body) {
      const auto section = string_field(paragraph, "section");
      auto spans = paragraph.find("cite_spans");
      if (spans == paragraph.end() || !spans->is_array()) continue;
      for (const auto& span : *spans) {
        const auto ref_id = string_field(span, "ref_id");
        if (ref_id.empty()) continue;
        auto bib = bibs.find(ref_id);
        if (bib == bibs.end()) continue;
        auto target = bib_target_ref(*bib);
        if (!target.empty()) r.citations.push_back({std::move(target), section});
      }
    }
  }
  return r;
}

void apply_cord_metadata(PaperRecord& r, const CordMetadataRow& m) {
  if (r.title.empty()) r.title = m.title;
  if (r.abstract.empty()) r.abstract = text::trim(m.abstract);
  if (!m.doi.empty() && !r.external_ids.contains("doi")) r.external_ids["doi"] = m.doi;
  if (!m.cord_uid.empty()) r.external_ids["cord_uid"] = m.cord_uid;
  if (r.venue.empty()) r.venue = m.journal;
  if (r.year == 0 && m.publish_time.size() >= 4) {
    try {
      r.year = std::stoi(m.publish_time.substr(0, 4));
    } catch (const std::exception&) {
    }
  }
  if (r.authors.empty()) {
    std::stringstream names(m.authors);
    std::string name;
    while (std::getline(names, name, ';')) {
      name = text::trim(name);
      if (!name.empty()) r.authors.push_back(name);
    }
  }
}

ParseDiagnostics parse_cord19(const fs::path& dir, const RecordSink& sink) {
  ParseDiagnostics diag;
  const auto metadata = load_cord_metadata(dir / "metadata.csv", diag);
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& file : files) {
    auto in = open_or_throw(file);
    PaperRecord record;
    try {
      record = cord_paper(json::parse(in));
    } catch (const std::exception& e) {
      ++diag.malformed;
      warn(diag, file.string() + ": " + e.what());
      continue;
    }
    if (auto it = metadata.find(record.paper_id); it != metadata.end()) apply_cord_metadata(record, it->second);
    ++diag.records;
    sink(std::move(record));
  }
  return diag;
}

}  // namespace

CorpusFormat parse_corpus_format(std::string_view name) {
  const auto n = text::to_lower_ascii(name);
  if (n == "acl_style" || n == "acl") return CorpusFormat::kAclStyle;
  if (n == "cord19_style" || n == "cord19" || n == "cord") return CorpusFormat::kCord19Style;
  throw std::invalid_argument("unknown corpus format: " + std::string(name));
}

std::string_view to_string(CorpusFormat format) {
  return format == CorpusFormat::kAclStyle ? "acl_style" : "cord19_style";
}

ParseDiagnostics parse_corpus(const fs::path& corpus_path, CorpusFormat format, const RecordSink& sink) {
  if (!fs::is_directory(corpus_path)) throw CorpusError("corpus directory not found: " + corpus_path.string());
  ParseDiagnostics diag =
      format == CorpusFormat::kAclStyle ? parse_acl(corpus_path, sink) : parse_cord19(corpus_path, sink);
  if (diag.malformed > 0) spdlog::warn("{}: skipped {} malformed records", corpus_path.string(), diag.malformed);
  return diag;
}

std::vector<PaperRecord> parse_corpus(const fs::path& corpus_path, CorpusFormat format, ParseDiagnostics* diagnostics) {
  std::vector<PaperRecord> out;
  auto diag = parse_corpus(corpus_path, format, [&](PaperRecord&& r) { out.push_back(std::move(r)); });
  if (diagnostics) *diagnostics = std::move(diag);
  return out;
}

MetadataQuery query_for(const PaperRecord& record) {
  MetadataQuery q;
  if (auto it = record.external_ids.find("doi"); it != record.external_ids.end() && !it->second.empty()) {
    q.id_scheme = "DOI";
    q.id_value = it->second;
    return q;
  }
  // Graph API id schemes, in order of preference.
  static const std::pair<const char*, const char*> kSchemes[] = {
      {"s2", ""}, {"arxiv", "ARXIV"}, {"acl", "ACL"}, {"pmid", "PMID"}, {"pmcid", "PMCID"}, {"mag", "MAG"}};
  for (const auto& [key, scheme] : kSchemes) {
    if (auto it = record.external_ids.find(key); it != record.external_ids.end() && !it->second.empty()) {
      q.id_scheme = *scheme ? scheme : "S2";
      q.id_value = it->second;
      return q;
    }
  }
  q.title = record.title;
  q.year = record.year;
  return q;
}

std::vector<PaperRecord> enrich_metadata(std::vector<PaperRecord> records, MetadataClient& client,
                                         EnrichmentStats* stats) {
  EnrichmentStats local;
  for (auto& record : records) {
    if (!record.abstract.empty()) continue;
    const auto query = query_for(record);
    if (!query.by_id() && text::trim(query.title).empty()) {
      ++local.unresolved;
      continue;
    }
    ++local.queried;
    LookupResult result = client.lookup(query);
    if (result.status == LookupStatus::kFailed) {
      ++local.failed;
      ++local.unresolved;
      spdlog::warn("metadata lookup failed for {}: {}", record.paper_id, result.error);
      continue;
    }
    if (result.status != LookupStatus::kFound || !result.response || text::trim(result.response->abstract).empty()) {
      ++local.unresolved;
      continue;
    }
    const auto& resp = *result.response;
    record.abstract = resp.abstract;
    if (record.authors.empty()) record.authors = resp.authors;
    if (record.venue.empty()) record.venue = resp.venue;
    ++local.filled;
  }
  if (stats) *stats = local;
  return records;
}

std::string title_year_key(std::string_view title, int year) {
  return text::normalize_title(title) + "|" + std::to_string(year);
}

std::vector<PaperRecord> filter_and_dedup(std::vector<PaperRecord> records, FilterStats* stats) {
  FilterStats local;
  std::vector<PaperRecord> out;
  out.reserve(records.size());
  std::unordered_set<std::string> seen_keys;
  for (auto& record : records) {
    if (text::trim(record.title).empty() || text::trim(record.abstract).empty()) {
      ++local.dropped_empty;
      continue;
    }
    std::vector<std::string> keys;
    keys.push_back("pid:" + record.paper_id);
    keys.push_back("title:" + title_year_key(record.title, record.year));
    for (const auto& [scheme, value] : record.external_ids) {
      if (!value.empty()) keys.push_back("id:" + text::to_lower_ascii(scheme) + ":" + text::normalize_key(value));
    }
    if (std::any_of(keys.begin(), keys.end(), [&](const std::string& k) { return seen_keys.contains(k); })) {
      ++local.dropped_duplicate;
      continue;
    }
    seen_keys.insert(keys.begin(), keys.end());
    out.push_back(std::move(record));
  }
  if (stats) *stats = local;
  return out;
}

}  // namespace aspectsim
