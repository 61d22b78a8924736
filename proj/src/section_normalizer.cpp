#include "aspectsim/section_normalizer.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "aspectsim/text_util.hpp"

namespace aspectsim {

namespace {

std::vector<std::string> letter_tokens(std::string_view raw) {
  std::string cleaned;
  cleaned.reserve(raw.size() + 8);
  for (char ch : raw) {
    const auto c = static_cast<unsigned char>(ch);
    if (c >= 0x80) continue;  // non-ASCII bytes are not letters of the canonical alphabet
    if (c >= 'A' && c <= 'Z') {
      cleaned.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if (c >= 'a' && c <= 'z') {
      cleaned.push_back(static_cast<char>(c));
    } else if (c == '&') {
      cleaned += " and ";
    } else {
      cleaned.push_back(' ');
    }
  }
  std::vector<std::string> tokens;
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::string phrase_key(std::string_view s) {
  std::string out;
  for (const auto& t : letter_tokens(s)) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

}  // namespace

bool is_canonical_section(std::string_view name) {
  if (name.empty() || name.front() == ' ' || name.back() == ' ') return false;
  char prev = 0;
  for (char c : name) {
    if (c == ' ') {
      if (prev == ' ') return false;
    } else if (c < 'a' || c > 'z') {
      return false;
    }
    prev = c;
  }
  const std::string padded = " " + std::string(name) + " ";
  return padded.find(" and ") == std::string::npos;
}

std::map<std::string, std::string> SectionNormalizer::default_variants() {
  return {
      {"introductions", "introduction"},
      {"related works", "related work"},
      {"experiments", "experiment"},
      {"backgrounds", "background"},
      {"result", "results"},
      {"conclusions", "conclusion"},
      {"discussions", "discussion"},
      {"evaluations", "evaluation"},
      {"method", "methods"},
      {"material", "materials"},
      {"viruses", "virus"},
      {"future works", "future work"},
  };
}

SectionNormalizer::SectionNormalizer() : SectionNormalizer(default_variants()) {}

SectionNormalizer::SectionNormalizer(std::map<std::string, std::string> variants) {
  for (auto& [variant, canonical] : variants) {
    auto key = phrase_key(variant);
    if (!is_canonical_section(key)) throw std::invalid_argument("invalid section variant: '" + variant + "'");
    if (!canonical.empty() && !is_canonical_section(canonical)) {
      throw std::invalid_argument("invalid canonical section: '" + canonical + "'");
    }
    variants_[key] = canonical;
  }
  resolve_chains();
}

void SectionNormalizer::resolve_chains() {
  for (auto& [variant, canonical] : variants_) {
    std::string current = canonical;
    for (std::size_t hops = 0;; ++hops) {
      if (hops > variants_.size()) throw std::invalid_argument("cycle in section variant table at '" + variant + "'");
      if (current.empty()) break;
      auto it = variants_.find(current);
      if (it == variants_.end() || it->second == current) break;
      current = it->second;
    }
    canonical = current;
  }
}

SectionNormalizer SectionNormalizer::from_string(std::string_view text) {
  std::map<std::string, std::string> variants;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (text::trim(line).empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw std::invalid_argument("section variants line " + std::to_string(line_no) + ": expected 'variant -> canonical'");
    }
    variants[text::trim(line.substr(0, arrow))] = phrase_key(line.substr(arrow + 2));
  }
  return SectionNormalizer(std::move(variants));
}

SectionNormalizer SectionNormalizer::from_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read section variants: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_string(buf.str());
}

std::set<std::string> SectionNormalizer::normalize(std::string_view raw) const {
  std::set<std::string> out;
  std::string segment;
  auto flush = [&] {
    if (segment.empty()) return;
    auto it = variants_.find(segment);
    if (it == variants_.end()) {
      out.insert(segment);
    } else if (!it->second.empty()) {
      out.insert(it->second);
    }
    segment.clear();
  };
  for (const auto& tok : letter_tokens(raw)) {
    if (tok == "and") {
      flush();
      continue;
    }
    if (!segment.empty()) segment.push_back(' ');
    segment += tok;
  }
  flush();
  return out;
}

}  // namespace aspectsim
