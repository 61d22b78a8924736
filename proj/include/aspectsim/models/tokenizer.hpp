#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace aspectsim::models {

struct SpecialTokens {
  std::int64_t start = 0;
  std::int64_t separator = 0;
  std::int64_t end = 0;
  std::int64_t pad = 0;
  std::int64_t unknown = 0;
};

/// Text -> token pieces -> ids.
class Tokenizer {
 public:
  virtual ~Tokenizer() = default;

  [[nodiscard]] virtual std::vector<std::string> tokenize(std::string_view text) const = 0;
  [[nodiscard]] virtual std::int64_t id_of(std::string_view piece) const = 0;
  [[nodiscard]] virtual std::string piece_of(std::int64_t id) const = 0;
  [[nodiscard]] virtual const SpecialTokens& specials() const = 0;
  [[nodiscard]] virtual std::int64_t vocab_size() const = 0;

  [[nodiscard]] std::vector<std::int64_t> encode(std::string_view text) const;
};

/// BERT WordPiece: basic tokenization (control-char cleanup, optional
/// lowercasing and accent stripping, punctuation and CJK splitting) followed
/// by greedy longest-match-first subword lookup with "##" continuations.
class WordPieceTokenizer final : public Tokenizer {
 public:
  WordPieceTokenizer(std::vector<std::string> vocab, bool lowercase);
  /// One piece per line, id = line number.
  static std::shared_ptr<WordPieceTokenizer> from_vocab_file(const std::filesystem::path& path, bool lowercase);

  [[nodiscard]] std::vector<std::string> tokenize(std::string_view text) const override;
  [[nodiscard]] std::int64_t id_of(std::string_view piece) const override;
  [[nodiscard]] std::string piece_of(std::int64_t id) const override;
  [[nodiscard]] const SpecialTokens& specials() const override { return specials_; }
  [[nodiscard]] std::int64_t vocab_size() const override { return static_cast<std::int64_t>(vocab_.size()); }
  [[nodiscard]] bool lowercase() const { return lowercase_; }
  [[nodiscard]] const std::vector<std::string>& vocab() const { return vocab_; }

  /// Whitespace/punctuation pre-tokenization only.
  [[nodiscard]] std::vector<std::string> basic_tokenize(std::string_view text) const;

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, std::int64_t> ids_;
  bool lowercase_;
  SpecialTokens specials_;
};

/// Word-level tokenizer for the LSTM baseline: lowercased letter/digit runs
/// and single punctuation marks. Ids come from a fixed word list; unknown
/// words map to the unknown id but keep their surface form.
class WordTokenizer final : public Tokenizer {
 public:
  static constexpr std::string_view kPad = "<pad>";
  static constexpr std::string_view kUnknown = "<unk>";
  static constexpr std::string_view kStart = "<s>";
  static constexpr std::string_view kSeparator = "<sep>";
  static constexpr std::string_view kEnd = "</s>";

  explicit WordTokenizer(const std::vector<std::string>& words = {});

  [[nodiscard]] std::vector<std::string> tokenize(std::string_view text) const override;
  [[nodiscard]] std::int64_t id_of(std::string_view piece) const override;
  [[nodiscard]] std::string piece_of(std::int64_t id) const override;
  [[nodiscard]] const SpecialTokens& specials() const override { return specials_; }
  [[nodiscard]] std::int64_t vocab_size() const override { return static_cast<std::int64_t>(pieces_.size()); }

  /// Same splitting rules, usable without an instance.
  static std::vector<std::string> split_words(std::string_view text);

 private:
  std::vector<std::string> pieces_;
  std::unordered_map<std::string, std::int64_t> ids_;
  SpecialTokens specials_;
};

}  // namespace aspectsim::models
