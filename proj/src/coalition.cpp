#include "sg/coalition.hpp"

#include <algorithm>
#include <stdexcept>

#include "sg/errors.hpp"

namespace sg {

namespace {

BitString trimmed(const BitString& prefix, bool tail) {
  std::uint32_t len = prefix.length();
  while (len > 0 && prefix.bit(len - 1) == tail) --len;
  return prefix.prefix(len);
}

std::vector<std::uint32_t> parse_index_list(const std::string& body, const std::string& text) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < body.size()) {
    if (!std::isdigit(static_cast<unsigned char>(body[i])))
      throw parse_error("bad coalition syntax: " + text);
    std::uint64_t v = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      v = v * 10 + (body[i] - '0');
      if (v >= BitString::kMaxBits) throw parse_error("player index must be < 64: " + text);
      ++i;
    }
    out.push_back(static_cast<std::uint32_t>(v));
    if (i < body.size()) {
      if (body[i] != ',') throw parse_error("bad coalition syntax: " + text);
      ++i;
      if (i == body.size()) throw parse_error("bad coalition syntax: " + text);
    }
  }
  return out;
}

}  // namespace

Coalition::Coalition(const BitString& prefix, bool tail)
    : prefix_(trimmed(prefix, tail)), tail_(tail) {}

Coalition Coalition::finite(const std::vector<std::uint32_t>& members) {
  std::uint64_t bits = 0;
  std::uint32_t len = 0;
  for (std::uint32_t m : members) {
    if (m >= BitString::kMaxBits) throw std::out_of_range("player index must be < 64");
    bits |= 1ull << m;
    len = std::max(len, m + 1);
  }
  return Coalition(BitString(bits, len), false);
}

Coalition Coalition::cofinite_excluding(const std::vector<std::uint32_t>& non_members) {
  std::uint64_t bits = 0;
  std::uint32_t len = 0;
  for (std::uint32_t m : non_members) {
    if (m >= BitString::kMaxBits) throw std::out_of_range("player index must be < 64");
    bits |= 1ull << m;
    len = std::max(len, m + 1);
  }
  return Coalition(BitString(~bits, len), true);
}

Coalition Coalition::parse(const std::string& text) {
  std::size_t plus = text.find('+');
  if (plus != std::string::npos) {
    if (plus + 2 != text.size() || (text[plus + 1] != '0' && text[plus + 1] != '1'))
      throw parse_error("bad coalition syntax (want PREFIX+TAIL): " + text);
    return Coalition(BitString::parse(text.substr(0, plus)), text[plus + 1] == '1');
  }
  bool co = text.rfind("co", 0) == 0;
  const std::string rest = co ? text.substr(2) : text;
  if (rest.size() < 2 || rest.front() != '{' || rest.back() != '}')
    throw parse_error("bad coalition syntax: " + text);
  auto indices = parse_index_list(rest.substr(1, rest.size() - 2), text);
  return co ? cofinite_excluding(indices) : finite(indices);
}

Coalition Coalition::complement() const {
  return Coalition(BitString(~prefix_.bits(), prefix_.length()), !tail_);
}

std::uint64_t Coalition::mask_below(std::uint32_t bound) const {
  std::uint64_t low_mask = bound >= 64 ? ~0ull : ((1ull << bound) - 1);
  std::uint64_t tail_region =
      tail_ ? (prefix_.length() >= 64 ? 0ull : (~0ull << prefix_.length())) : 0ull;
  return (prefix_.bits() | tail_region) & low_mask;
}

std::vector<std::uint32_t> Coalition::finite_members() const {
  if (tail_) throw std::logic_error("cofinite coalition has no finite member list");
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < prefix_.length(); ++j)
    if (prefix_.bit(j)) out.push_back(j);
  return out;
}

std::vector<std::uint32_t> Coalition::cofinite_non_members() const {
  if (!tail_) throw std::logic_error("finite coalition has no cofinite exclusion list");
  std::vector<std::uint32_t> out;
  for (std::uint32_t j = 0; j < prefix_.length(); ++j)
    if (!prefix_.bit(j)) out.push_back(j);
  return out;
}

std::string Coalition::to_string() const {
  std::string out = tail_ ? "co{" : "{";
  auto indices = tail_ ? cofinite_non_members() : finite_members();
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices[i]);
  }
  out += '}';
  return out;
}

BitString initial_segment(const Coalition& c, std::uint32_t k) {
  if (k > BitString::kMaxBits) throw std::length_error("initial segment longer than 64");
  std::uint64_t bits = c.mask_below(k);
  return BitString(bits, k);
}

bool extends(const Coalition& c, const BitString& t) {
  return initial_segment(c, t.length()) == t;
}

CardinalityClass cardinality_class(const Coalition& c) {
  if (c.is_finite()) return {true, c.prefix().popcount()};
  return {false, c.prefix().zero_count()};
}

FinitePermutation::FinitePermutation(std::vector<std::uint32_t> mapping)
    : mapping_(std::move(mapping)) {
  if (mapping_.size() > BitString::kMaxBits)
    throw std::length_error("permutation domain larger than 64");
  std::vector<bool> seen(mapping_.size(), false);
  for (std::uint32_t v : mapping_) {
    if (v >= mapping_.size() || seen[v])
      throw std::invalid_argument("permutation mapping is not a bijection on its domain");
    seen[v] = true;
  }
}

FinitePermutation FinitePermutation::transposition(std::uint32_t a, std::uint32_t b) {
  std::uint32_t m = std::max(a, b) + 1;
  std::vector<std::uint32_t> mapping(m);
  for (std::uint32_t i = 0; i < m; ++i) mapping[i] = i;
  std::swap(mapping[a], mapping[b]);
  return FinitePermutation(std::move(mapping));
}

FinitePermutation FinitePermutation::inverse() const {
  std::vector<std::uint32_t> inv(mapping_.size());
  for (std::uint32_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
  return FinitePermutation(std::move(inv));
}

std::vector<std::uint32_t> FinitePermutation::support() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < mapping_.size(); ++i)
    if (mapping_[i] != i) out.push_back(i);
  return out;
}

Coalition permute(const Coalition& c, const FinitePermutation& p) {
  std::uint32_t m = p.domain_size();
  std::uint32_t len = std::max(c.prefix().length(), m);
  FinitePermutation inv = p.inverse();
  std::uint64_t bits = 0;
  for (std::uint32_t j = 0; j < len; ++j)
    if (c.contains(inv.apply(j))) bits |= 1ull << j;
  return Coalition(BitString(bits, len), c.tail());
}

}  // namespace sg
