#include "sg/bitstring.hpp"

#include <bit>
#include <stdexcept>

#include "sg/errors.hpp"

namespace sg {

namespace {
std::uint64_t mask_below(std::uint32_t k) {
  return k >= 64 ? ~0ull : ((1ull << k) - 1);
}
}  // namespace

BitString::BitString(std::uint64_t bits, std::uint32_t length) {
  if (length > kMaxBits) throw std::length_error("bit string longer than 64");
  bits_ = bits & mask_below(length);
  length_ = length;
}

BitString BitString::parse(const std::string& text) {
  if (text.size() > kMaxBits) throw parse_error("bit string longer than 64: " + text);
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] == '1')
      bits |= 1ull << j;
    else if (text[j] != '0')
      throw parse_error("bit string may contain only 0 and 1: " + text);
  }
  return BitString(bits, static_cast<std::uint32_t>(text.size()));
}

bool BitString::bit(std::uint32_t pos) const {
  if (pos >= length_) throw std::out_of_range("bit position past end of string");
  return (bits_ >> pos) & 1ull;
}

std::uint32_t BitString::popcount() const {
  return static_cast<std::uint32_t>(std::popcount(bits_));
}

BitString BitString::prefix(std::uint32_t k) const {
  if (k > length_) throw std::out_of_range("prefix longer than string");
  return BitString(bits_, k);
}

BitString BitString::append(bool b) const {
  if (length_ == kMaxBits) throw std::length_error("bit string longer than 64");
  return BitString(bits_ | (static_cast<std::uint64_t>(b) << length_), length_ + 1);
}

bool BitString::is_prefix_of(const BitString& other) const {
  return length_ <= other.length_ && (other.bits_ & mask_below(length_)) == bits_;
}

BitString BitString::repeated(bool b, std::uint32_t k) {
  return BitString(b ? ~0ull : 0ull, k);
}

std::string BitString::to_string() const {
  std::string out(length_, '0');
  for (std::uint32_t j = 0; j < length_; ++j)
    if ((bits_ >> j) & 1ull) out[j] = '1';
  return out;
}

bool operator<(const BitString& a, const BitString& b) {
  std::uint32_t common = a.length_ < b.length_ ? a.length_ : b.length_;
  for (std::uint32_t j = 0; j < common; ++j) {
    bool ab = (a.bits_ >> j) & 1ull, bb = (b.bits_ >> j) & 1ull;
    if (ab != bb) return bb;
  }
  return a.length_ < b.length_;
}

BitString concat(const BitString& t1, const BitString& t2) {
  if (t1.length() + t2.length() > BitString::kMaxBits)
    throw std::length_error("concatenation longer than 64");
  return BitString(t1.bits() | (t2.bits() << t1.length()), t1.length() + t2.length());
}

}  // namespace sg
