#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace aspectsim {

/// Set of class indices into a LabelVocabulary. Backed by a 64-bit mask, so a
/// vocabulary may hold at most 64 classes.
class LabelSet {
 public:
  static constexpr std::size_t kMaxClasses = 64;

  constexpr LabelSet() = default;
  LabelSet(std::initializer_list<std::size_t> classes) {
    for (auto c : classes) insert(c);
  }

  static constexpr LabelSet from_bits(std::uint64_t bits) {
    LabelSet s;
    s.bits_ = bits;
    return s;
  }

  void insert(std::size_t cls) {
    if (cls >= kMaxClasses) throw std::out_of_range("LabelSet: class index out of range");
    bits_ |= (std::uint64_t{1} << cls);
  }
  void erase(std::size_t cls) {
    if (cls < kMaxClasses) bits_ &= ~(std::uint64_t{1} << cls);
  }
  [[nodiscard]] constexpr bool contains(std::size_t cls) const {
    return cls < kMaxClasses && ((bits_ >> cls) & 1U) != 0;
  }
  [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }

  /// Ascending class indices.
  [[nodiscard]] std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
  }

  LabelSet& operator|=(LabelSet other) {
    bits_ |= other.bits_;
    return *this;
  }
  [[nodiscard]] friend constexpr LabelSet operator&(LabelSet a, LabelSet b) { return from_bits(a.bits_ & b.bits_); }
  [[nodiscard]] friend constexpr LabelSet operator|(LabelSet a, LabelSet b) { return from_bits(a.bits_ | b.bits_); }

  friend constexpr auto operator<=>(const LabelSet&, const LabelSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace aspectsim

template <>
struct std::hash<aspectsim::LabelSet> {
  std::size_t operator()(const aspectsim::LabelSet& s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
