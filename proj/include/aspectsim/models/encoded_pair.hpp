#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aspectsim/models/tokenizer.hpp"

namespace aspectsim::models {

inline constexpr std::size_t kMaxSequenceLength = 512;

struct PaperText {
  std::string title;
  std::string abstract;
};

/// [start] seed_title ": " seed_abstract [sep] target_title ": " target_abstract [end]
struct EncodedPair {
  std::vector<std::int64_t> token_ids;
  std::vector<std::int64_t> segment_ids;
  std::vector<std::int64_t> attention_mask;
  std::vector<std::string> tokens;
  std::size_t separator_position = 0;

  [[nodiscard]] std::size_t size() const { return token_ids.size(); }
  friend bool operator==(const EncodedPair&, const EncodedPair&) = default;
};

/// Throws std::invalid_argument on empty text. When the pair exceeds
/// max_len, tokens are removed from the end of the longer side first.
EncodedPair encode_pair(const PaperText& seed, const PaperText& target, const Tokenizer& tokenizer,
                        std::size_t max_len = kMaxSequenceLength);

/// Decoded seed and target token pieces (specials removed), split at the separator.
struct DecodedPair {
  std::vector<std::string> seed;
  std::vector<std::string> target;
};
DecodedPair decode_pair(const EncodedPair& encoded, const Tokenizer& tokenizer);

}  // namespace aspectsim::models
