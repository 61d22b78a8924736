#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace aspectsim::text {

std::string to_lower_ascii(std::string_view s);
std::string trim(std::string_view s);

/// Trims and collapses every run of whitespace into a single space.
std::string collapse_whitespace(std::string_view s);

/// Lowercase + whitespace collapse. Used for dedup keys, author and venue matching.
std::string normalize_key(std::string_view s);
/// normalize_key with ASCII punctuation treated as whitespace.
std::string normalize_title(std::string_view s);

/// 64-bit FNV-1a; stable across platforms, used for cache keys and config hashes.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

/// Replaces invalid UTF-8 sequences with U+FFFD.
std::string sanitize_utf8(std::string_view s);

std::string url_encode(std::string_view s, std::string_view keep = "");

}  // namespace aspectsim::text
