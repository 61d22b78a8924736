#include "aspectsim/paper_record.hpp"

#include <fstream>
#include <stdexcept>

#include "aspectsim/text_util.hpp"

namespace aspectsim {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const PaperRecord& record) {
  ordered_json j;
  j["paper_id"] = record.paper_id;
  ordered_json ids = ordered_json::object();
  for (const auto& [scheme, value] : record.external_ids) ids[scheme] = value;
  j["external_ids"] = std::move(ids);
  j["title"] = record.title;
  j["abstract"] = record.abstract;
  j["authors"] = record.authors;
  j["venue"] = record.venue;
  j["year"] = record.year;
  ordered_json cites = ordered_json::array();
  for (const auto& c : record.citations) {
    ordered_json cj;
    cj["target_ref"] = c.target_ref;
    cj["section_title_raw"] = c.section_title_raw;
    cites.push_back(std::move(cj));
  }
  j["citations"] = std::move(cites);
  return j;
}

PaperRecord paper_from_json(const json& j) {
  PaperRecord r;
  r.paper_id = j.at("paper_id").get<std::string>();
  if (r.paper_id.empty()) throw std::invalid_argument("empty paper_id");
  if (auto it = j.find("external_ids"); it != j.end() && it->is_object()) {
    for (const auto& [k, v] : it->items()) r.external_ids[k] = v.get<std::string>();
  }
  r.title = j.value("title", "");
  r.abstract = j.value("abstract", "");
  if (auto it = j.find("authors"); it != j.end() && it->is_array()) r.authors = it->get<std::vector<std::string>>();
  r.venue = j.value("venue", "");
  r.year = j.value("year", 0);
  if (auto it = j.find("citations"); it != j.end() && it->is_array()) {
    for (const auto& c : *it) {
      r.citations.push_back({c.at("target_ref").get<std::string>(), c.value("section_title_raw", "")});
    }
  }
  return r;
}

std::string to_jsonl_line(const PaperRecord& record) {
  return to_json(record).dump(-1, ' ', false, json::error_handler_t::replace);
}

void write_paper_store(const std::filesystem::path& path, const std::vector<PaperRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& r : records) out << to_jsonl_line(r) << '\n';
}

std::vector<PaperRecord> read_paper_store(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::vector<PaperRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    try {
      out.push_back(paper_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace aspectsim
