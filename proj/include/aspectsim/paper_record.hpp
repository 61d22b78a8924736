#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace aspectsim {

/// One citation marker: where it points and the verbatim title of the section
/// it appears in. target_ref is either a corpus paper key or a resolver key
/// such as "doi:10.1000/xyz" or "title:<normalized title>|<year>".
struct RawCitation {
  std::string target_ref;
  std::string section_title_raw;

  friend bool operator==(const RawCitation&, const RawCitation&) = default;
};

struct PaperRecord {
  std::string paper_id;
  /// id scheme (lowercase, e.g. "doi", "s2", "pmid") -> identifier
  std::map<std::string, std::string> external_ids;
  std::string title;
  std::string abstract;
  std::vector<std::string> authors;
  std::string venue;
  int year = 0;
  std::vector<RawCitation> citations;

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

nlohmann::ordered_json to_json(const PaperRecord& record);
PaperRecord paper_from_json(const nlohmann::json& j);

/// One record per line, UTF-8, fixed field order.
std::string to_jsonl_line(const PaperRecord& record);
void write_paper_store(const std::filesystem::path& path, const std::vector<PaperRecord>& records);
std::vector<PaperRecord> read_paper_store(const std::filesystem::path& path);

}  // namespace aspectsim
