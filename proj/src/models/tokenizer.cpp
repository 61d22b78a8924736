#include "aspectsim/models/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include "aspectsim/models/encoded_pair.hpp"
#include "aspectsim/text_util.hpp"
#include "unicode_tables.hpp"

namespace aspectsim::models {

namespace {

template <std::size_t N>
bool in_ranges(char32_t cp, const unicode::CodepointRange (&table)[N]) {
  auto it = std::upper_bound(std::begin(table), std::end(table), cp,
                             [](char32_t v, const unicode::CodepointRange& r) { return v < r.first; });
  if (it == std::begin(table)) return false;
  --it;
  return cp <= it->last;
}

// Invalid sequences decode to U+FFFD one byte at a time.
std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      out.push_back(c);
      ++i;
      continue;
    }
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    }
    bool ok = len > 0 && i + len <= s.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) ok = false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_whitespace(char32_t cp) {
  if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r') return true;
  return cp >= 0x80 && in_ranges(cp, unicode::kSpaceSeparators);
}

bool is_control(char32_t cp) {
  if (cp == '\t' || cp == '\n' || cp == '\r') return false;
  if (cp < 0x20 || cp == 0x7F) return true;
  return cp >= 0x80 && in_ranges(cp, unicode::kFormatControls);
}

bool is_punctuation(char32_t cp) {
  if ((cp >= 33 && cp <= 47) || (cp >= 58 && cp <= 64) || (cp >= 91 && cp <= 96) || (cp >= 123 && cp <= 126)) {
    return true;
  }
  return cp >= 0x80 && in_ranges(cp, unicode::kPunctuation);
}

bool is_cjk(char32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF) || (cp >= 0x3400 && cp <= 0x4DBF) || (cp >= 0x20000 && cp <= 0x2A6DF) ||
         (cp >= 0x2A700 && cp <= 0x2B73F) || (cp >= 0x2B740 && cp <= 0x2B81F) || (cp >= 0x2B820 && cp <= 0x2CEAF) ||
         (cp >= 0xF900 && cp <= 0xFAFF) || (cp >= 0x2F800 && cp <= 0x2FA1F);
}

void lower_strip(std::u32string& word) {
  std::u32string out;
  out.reserve(word.size());
  for (char32_t cp : word) {
    if (cp < 0x80) {
      out.push_back((cp >= 'A' && cp <= 'Z') ? cp + 32 : cp);
      continue;
    }
    if (in_ranges(cp, unicode::kNonspacingMarks)) continue;
    auto it = std::lower_bound(std::begin(unicode::kLowerStrip), std::end(unicode::kLowerStrip), cp,
                               [](const unicode::FoldEntry& e, char32_t v) { return e.cp < v; });
    if (it != std::end(unicode::kLowerStrip) && it->cp == cp) {
      auto folded = decode_utf8(it->folded);
      out.append(folded);
    } else {
      out.push_back(cp);
    }
  }
  word = std::move(out);
}

std::string to_utf8(const std::u32string& s) {
  std::string out;
  for (char32_t cp : s) append_utf8(out, cp);
  return out;
}

std::int64_t require_id(const std::unordered_map<std::string, std::int64_t>& ids, const std::string& piece) {
  auto it = ids.find(piece);
  if (it == ids.end()) throw std::invalid_argument("vocabulary lacks special token " + piece);
  return it->second;
}

}  // namespace

std::vector<std::int64_t> Tokenizer::encode(std::string_view text) const {
  std::vector<std::int64_t> ids;
  for (const auto& piece : tokenize(text)) ids.push_back(id_of(piece));
  return ids;
}

WordPieceTokenizer::WordPieceTokenizer(std::vector<std::string> vocab, bool lowercase)
    : vocab_(std::move(vocab)), lowercase_(lowercase) {
  for (std::size_t i = 0; i < vocab_.size(); ++i) ids_.emplace(vocab_[i], static_cast<std::int64_t>(i));
  specials_.start = require_id(ids_, "[CLS]");
  specials_.separator = require_id(ids_, "[SEP]");
  specials_.end = specials_.separator;
  specials_.pad = require_id(ids_, "[PAD]");
  specials_.unknown = require_id(ids_, "[UNK]");
}

std::shared_ptr<WordPieceTokenizer> WordPieceTokenizer::from_vocab_file(const std::filesystem::path& path,
                                                                        bool lowercase) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read vocabulary " + path.string());
  std::vector<std::string> vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    vocab.push_back(line);
  }
  return std::make_shared<WordPieceTokenizer>(std::move(vocab), lowercase);
}

std::vector<std::string> WordPieceTokenizer::basic_tokenize(std::string_view text) const {
  std::u32string cleaned;
  for (char32_t cp : decode_utf8(text)) {
    if (cp == 0 || cp == 0xFFFD || is_control(cp)) continue;
    if (is_whitespace(cp)) {
      cleaned.push_back(' ');
    } else if (is_cjk(cp)) {
      cleaned.push_back(' ');
      cleaned.push_back(cp);
      cleaned.push_back(' ');
    } else {
      cleaned.push_back(cp);
    }
  }

  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < cleaned.size()) {
    if (cleaned[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cleaned.size() && cleaned[j] != ' ') ++j;
    std::u32string word = cleaned.substr(i, j - i);
    i = j;
    if (lowercase_) lower_strip(word);
    std::u32string current;
    for (char32_t cp : word) {
      if (is_punctuation(cp)) {
        if (!current.empty()) out.push_back(to_utf8(current));
        current.clear();
        out.push_back(to_utf8(std::u32string(1, cp)));
      } else {
        current.push_back(cp);
      }
    }
    if (!current.empty()) out.push_back(to_utf8(current));
  }
  return out;
}

std::vector<std::string> WordPieceTokenizer::tokenize(std::string_view text) const {
  constexpr std::size_t kMaxWordChars = 100;
  const std::string unk = vocab_[static_cast<std::size_t>(specials_.unknown)];
  std::vector<std::string> out;
  for (const auto& word : basic_tokenize(text)) {
    auto chars = decode_utf8(word);
    if (chars.size() > kMaxWordChars) {
      out.push_back(unk);
      continue;
    }
    std::vector<std::string> pieces;
    bool bad = false;
    std::size_t start = 0;
    while (start < chars.size()) {
      std::size_t end = chars.size();
      std::string found;
      while (start < end) {
        std::string candidate = to_utf8(chars.substr(start, end - start));
        if (start > 0) candidate = "##" + candidate;
        if (ids_.contains(candidate)) {
          found = std::move(candidate);
          break;
        }
        --end;
      }
      if (found.empty()) {
        bad = true;
        break;
      }
      pieces.push_back(std::move(found));
      start = end;
    }
    if (bad) {
      out.push_back(unk);
    } else {
      out.insert(out.end(), pieces.begin(), pieces.end());
    }
  }
  return out;
}

std::int64_t WordPieceTokenizer::id_of(std::string_view piece) const {
  auto it = ids_.find(std::string(piece));
  return it == ids_.end() ? specials_.unknown : it->second;
}

std::string WordPieceTokenizer::piece_of(std::int64_t id) const {
  if (id < 0 || id >= vocab_size()) throw std::out_of_range("token id out of range");
  return vocab_[static_cast<std::size_t>(id)];
}

WordTokenizer::WordTokenizer(const std::vector<std::string>& words) {
  for (auto sv : {kPad, kUnknown, kStart, kSeparator, kEnd}) {
    ids_.emplace(std::string(sv), static_cast<std::int64_t>(pieces_.size()));
    pieces_.emplace_back(sv);
  }
  for (const auto& w : words) {
    if (ids_.emplace(w, static_cast<std::int64_t>(pieces_.size())).second) pieces_.push_back(w);
  }
  specials_ = {.start = 2, .separator = 3, .end = 4, .pad = 0, .unknown = 1};
}

std::vector<std::string> WordTokenizer::split_words(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.push_back(std::move(current));
    current.clear();
  };
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (c >= 0x80 || std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (std::isspace(c) || std::iscntrl(c)) {
      flush();
    } else {
      flush();
      out.emplace_back(1, ch);
    }
  }
  flush();
  return out;
}

std::vector<std::string> WordTokenizer::tokenize(std::string_view text) const { return split_words(text); }

std::int64_t WordTokenizer::id_of(std::string_view piece) const {
  auto it = ids_.find(std::string(piece));
  return it == ids_.end() ? specials_.unknown : it->second;
}

std::string WordTokenizer::piece_of(std::int64_t id) const {
  if (id < 0 || id >= vocab_size()) throw std::out_of_range("token id out of range");
  return pieces_[static_cast<std::size_t>(id)];
}

EncodedPair encode_pair(const PaperText& seed, const PaperText& target, const Tokenizer& tokenizer,
                        std::size_t max_len) {
  if (max_len < 5) throw std::invalid_argument("max_len must leave room for text on both sides");
  for (const PaperText* p : {&seed, &target}) {
    if (text::trim(p->title).empty() || text::trim(p->abstract).empty()) {
      throw std::invalid_argument("pair text needs a title and an abstract on both sides");
    }
  }
  auto a = tokenizer.tokenize(seed.title + ": " + seed.abstract);
  auto b = tokenizer.tokenize(target.title + ": " + target.abstract);
  if (a.empty() || b.empty()) throw std::invalid_argument("pair text tokenizes to nothing");

  const std::size_t budget = max_len - 3;
  while (a.size() + b.size() > budget) {
    if (a.size() > b.size()) {
      a.pop_back();
    } else {
      b.pop_back();
    }
  }

  const auto& sp = tokenizer.specials();
  EncodedPair out;
  auto push = [&](std::int64_t id, std::string piece, std::int64_t segment) {
    out.token_ids.push_back(id);
    out.tokens.push_back(std::move(piece));
    out.segment_ids.push_back(segment);
    out.attention_mask.push_back(1);
  };
  push(sp.start, tokenizer.piece_of(sp.start), 0);
  for (auto& t : a) {
    const auto id = tokenizer.id_of(t);
    push(id, std::move(t), 0);
  }
  out.separator_position = out.token_ids.size();
  push(sp.separator, tokenizer.piece_of(sp.separator), 0);
  for (auto& t : b) {
    const auto id = tokenizer.id_of(t);
    push(id, std::move(t), 1);
  }
  push(sp.end, tokenizer.piece_of(sp.end), 1);
  return out;
}

DecodedPair decode_pair(const EncodedPair& encoded, const Tokenizer& tokenizer) {
  const auto& sp = tokenizer.specials();
  if (encoded.token_ids.size() < 3 || encoded.token_ids.front() != sp.start ||
      encoded.separator_position >= encoded.token_ids.size() ||
      encoded.token_ids[encoded.separator_position] != sp.separator || encoded.token_ids.back() != sp.end) {
    throw std::invalid_argument("not an encoded pair");
  }
  DecodedPair out;
  for (std::size_t i = 1; i < encoded.separator_position; ++i) out.seed.push_back(encoded.tokens[i]);
  for (std::size_t i = encoded.separator_position + 1; i + 1 < encoded.token_ids.size(); ++i) {
    out.target.push_back(encoded.tokens[i]);
  }
  return out;
}

}  // namespace aspectsim::models
