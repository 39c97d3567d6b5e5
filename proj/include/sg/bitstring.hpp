#pragma once

#include <cstdint>
#include <string>

namespace sg {

/// Finite 0/1 string. Bit j is the membership of player j, so the string
/// "1010100" reads left to right as players 0..6.
///
/// Capacity is capped at 64 bits, matching the table-backed universe limit;
/// operations that would exceed it throw std::length_error.
class BitString {
 public:
  static constexpr std::uint32_t kMaxBits = 64;

  BitString() = default;

  /// From packed bits: bit j of `bits` is position j. Bits at or above
  /// `length` are ignored.
  BitString(std::uint64_t bits, std::uint32_t length);

  /// Parses "0101"-style text; the empty string is valid.
  static BitString parse(const std::string& text);

  std::uint32_t length() const { return length_; }
  bool empty() const { return length_ == 0; }
  bool bit(std::uint32_t pos) const;

  /// Packed form, bit j = position j; positions >= length() are zero.
  std::uint64_t bits() const { return bits_; }

  std::uint32_t popcount() const;
  std::uint32_t zero_count() const { return length_ - popcount(); }

  BitString prefix(std::uint32_t k) const;
  BitString append(bool b) const;

  /// True iff *this is an initial segment of other (proper or not).
  bool is_prefix_of(const BitString& other) const;

  /// String of k copies of the given bit.
  static BitString repeated(bool b, std::uint32_t k);

  std::string to_string() const;

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.length_ == b.length_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }

  /// Lexicographic order of the textual form ('0' < '1', prefix < extension).
  friend bool operator<(const BitString& a, const BitString& b);

 private:
  std::uint64_t bits_ = 0;
  std::uint32_t length_ = 0;
};

/// t1 followed by t2.
BitString concat(const BitString& t1, const BitString& t2);

}  // namespace sg
