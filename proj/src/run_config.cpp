#include "aspectsim/run_config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "aspectsim/text_util.hpp"

namespace aspectsim {

namespace {

class TomlLine {
 public:
  TomlLine(std::string_view s, std::size_t line_no) : s_(s), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("toml line " + std::to_string(line_no_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool at_end_or_comment() {
    skip_ws();
    return pos_ >= s_.size() || s_[pos_] == '#';
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  std::string key() {
    skip_ws();
    std::string out;
    while (true) {
      skip_ws();
      if (peek() == '"') {
        out += basic_string();
      } else {
        const auto start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-')) ++pos_;
        if (start == pos_) fail("expected key");
        out += s_.substr(start, pos_ - start);
      }
      skip_ws();
      if (peek() != '.') break;
      ++pos_;
      out.push_back('.');
    }
    return out;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string basic_string() {
    ++pos_;  // opening quote
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      char c = s_[pos_++];
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (pos_ >= s_.size()) fail("dangling escape");
      switch (s_[pos_++]) {
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        default: fail("unsupported escape");
      }
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  std::string literal_string() {
    ++pos_;
    const auto end = s_.find('\'', pos_);
    if (end == std::string_view::npos) fail("unterminated literal string");
    std::string out(s_.substr(pos_, end - pos_));
    pos_ = end + 1;
    return out;
  }

  TomlDocument::Value value() {
    skip_ws();
    const char c = peek();
    if (c == '"') return basic_string();
    if (c == '\'') return literal_string();
    if (c == '[') {
      ++pos_;
      std::vector<std::string> items;
      while (true) {
        skip_ws();
        if (peek() == ']') {
          ++pos_;
          break;
        }
        auto v = value();
        if (auto* s = std::get_if<std::string>(&v)) {
          items.push_back(*s);
        } else if (auto* i = std::get_if<std::int64_t>(&v)) {
          items.push_back(std::to_string(*i));
        } else {
          fail("arrays may hold strings or integers only");
        }
        skip_ws();
        if (peek() == ',') ++pos_;
      }
      return items;
    }
    const auto start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '#' && s_[pos_] != ',' && s_[pos_] != ']') ++pos_;
    std::string tok(s_.substr(start, pos_ - start));
    if (tok == "true") return true;
    if (tok == "false") return false;
    std::string digits;
    for (char ch : tok) {
      if (ch != '_') digits.push_back(ch);
    }
    std::int64_t iv = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), iv);
    if (ec == std::errc() && p == digits.data() + digits.size()) return iv;
    try {
      std::size_t used = 0;
      double dv = std::stod(digits, &used);
      if (used == digits.size()) return dv;
    } catch (const std::exception&) {
    }
    fail("cannot parse value '" + tok + "'");
  }

 private:
  std::string_view s_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

TomlDocument TomlDocument::parse(std::string_view text) {
  TomlDocument doc;
  std::string table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    TomlLine p(line, line_no);
    if (p.at_end_or_comment()) continue;
    if (p.peek() == '[') {
      p.expect('[');
      table = p.key();
      p.expect(']');
      if (!p.at_end_or_comment()) p.fail("trailing characters after table header");
      continue;
    }
    auto key = p.key();
    p.expect('=');
    auto value = p.value();
    if (!p.at_end_or_comment()) p.fail("trailing characters after value");
    const auto full = table.empty() ? key : table + "." + key;
    if (!doc.values_.emplace(full, std::move(value)).second) p.fail("duplicate key '" + full + "'");
  }
  return doc;
}

TomlDocument TomlDocument::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::optional<std::string> TomlDocument::get_string(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (auto* s = std::get_if<std::string>(&it->second)) return *s;
  throw std::invalid_argument("config key '" + key + "' is not a string");
}

std::optional<std::int64_t> TomlDocument::get_int(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (auto* i = std::get_if<std::int64_t>(&it->second)) return *i;
  throw std::invalid_argument("config key '" + key + "' is not an integer");
}

std::optional<double> TomlDocument::get_double(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (auto* d = std::get_if<double>(&it->second)) return *d;
  if (auto* i = std::get_if<std::int64_t>(&it->second)) return static_cast<double>(*i);
  throw std::invalid_argument("config key '" + key + "' is not a number");
}

std::optional<bool> TomlDocument::get_bool(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  if (auto* b = std::get_if<bool>(&it->second)) return *b;
  throw std::invalid_argument("config key '" + key + "' is not a boolean");
}

void BuildConfig::apply(const TomlDocument& doc) {
  if (auto v = doc.get_string("corpus.path")) corpus_path = *v;
  if (auto v = doc.get_string("corpus.format")) format = parse_corpus_format(*v);
  if (auto v = doc.get_string("corpus.name")) corpus_name = *v;
  if (auto v = doc.get_string("labels.variants")) variants_path = *v;
  if (auto v = doc.get_int("labels.top_k")) top_k = static_cast<std::size_t>(*v);
  if (auto v = doc.get_double("negatives.ratio")) negative_ratio = *v;
  if (auto v = doc.get_int("seed")) seed = static_cast<std::uint64_t>(*v);
  if (auto v = doc.get_int("folds.k")) folds = static_cast<std::size_t>(*v);
  if (auto v = doc.get_bool("metadata.enabled")) enrich = *v;
  if (auto v = doc.get_string("metadata.base_url")) metadata.base_url = *v;
  if (auto v = doc.get_double("metadata.requests_per_second")) metadata.requests_per_second = *v;
  if (auto v = doc.get_int("metadata.retries")) metadata.max_retries = static_cast<int>(*v);
  if (auto v = doc.get_string("metadata.cache_dir")) metadata.cache_dir = *v;
  if (auto v = doc.get_bool("metadata.offline")) metadata.offline = *v;
}

nlohmann::ordered_json BuildConfig::to_json() const {
  nlohmann::ordered_json j;
  j["corpus_path"] = corpus_path.generic_string();
  j["format"] = to_string(format);
  j["corpus_name"] = corpus_name;
  j["variants_path"] = variants_path.generic_string();
  j["negative_ratio"] = negative_ratio;
  j["seed"] = seed;
  j["folds"] = folds;
  j["top_k"] = top_k;
  j["enrich"] = enrich;
  if (enrich) {
    j["metadata_base_url"] = metadata.base_url;
    j["metadata_offline"] = metadata.offline;
  }
  return j;
}

std::string BuildConfig::hash() const { return config_hash(to_json()); }

std::string config_hash(const nlohmann::ordered_json& config) { return text::hex64(text::fnv1a64(config.dump())); }

}  // namespace aspectsim
