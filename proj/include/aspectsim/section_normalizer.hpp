#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>

namespace aspectsim {

/// Turns a raw section title into canonical section names: lowercase,
/// letters only, split on a standalone "and" (or "&"), then number variants
/// mapped through a variant table ("method" -> "methods").
///
/// A table entry with an empty right-hand side ("acknowledgement ->") marks a
/// stop section that is dropped entirely.
class SectionNormalizer {
 public:
  /// Built-in variant table covering the surface forms of the standard
  /// ACL Anthology / CORD-19 label classes.
  SectionNormalizer();
  explicit SectionNormalizer(std::map<std::string, std::string> variants);

  /// Reads "variant -> canonical" lines; '#' starts a comment.
  static SectionNormalizer from_file(const std::filesystem::path& path);
  static SectionNormalizer from_string(std::string_view text);

  [[nodiscard]] std::set<std::string> normalize(std::string_view raw) const;

  [[nodiscard]] const std::map<std::string, std::string>& variants() const { return variants_; }

  static std::map<std::string, std::string> default_variants();

 private:
  void resolve_chains();

  std::map<std::string, std::string> variants_;
};

/// Lowercase ASCII words separated by single spaces, no "and" token.
bool is_canonical_section(std::string_view name);

}  // namespace aspectsim
