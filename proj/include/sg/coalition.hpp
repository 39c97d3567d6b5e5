#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sg/bitstring.hpp"

namespace sg {

/// Eventually-constant subset of N = {0, 1, 2, ...}: an explicit prefix of
/// membership bits plus a constant tail bit for every index past the prefix.
/// tail 0 describes the finite sets, tail 1 the cofinite ones.
///
/// Canonical form: the prefix never ends with a bit equal to the tail, so
/// structural equality is set equality.
class Coalition {
 public:
  /// The empty set.
  Coalition() = default;

  Coalition(const BitString& prefix, bool tail);

  static Coalition empty_set() { return Coalition(); }
  static Coalition all_players() { return Coalition(BitString(), true); }

  /// Finite set from a list of member indices (each < 64).
  static Coalition finite(const std::vector<std::uint32_t>& members);

  /// Cofinite set from a list of non-member indices (each < 64).
  static Coalition cofinite_excluding(const std::vector<std::uint32_t>& non_members);

  /// Accepts "10101+0" (prefix+tail), "{0,2,4}", "co{0}", "{}", "co{}".
  static Coalition parse(const std::string& text);

  const BitString& prefix() const { return prefix_; }
  bool tail() const { return tail_; }

  bool contains(std::uint32_t player) const {
    return player < prefix_.length() ? prefix_.bit(player) : tail_;
  }

  bool is_finite() const { return !tail_; }

  /// Complement within N: flips every membership bit and the tail.
  Coalition complement() const;

  /// Members below `bound` as a packed mask (bit j = player j).
  std::uint64_t mask_below(std::uint32_t bound) const;

  std::vector<std::uint32_t> finite_members() const;      // requires tail 0
  std::vector<std::uint32_t> cofinite_non_members() const;  // requires tail 1

  /// "{0,2,4}" / "co{1}" / "{}" textual form.
  std::string to_string() const;

  friend bool operator==(const Coalition& a, const Coalition& b) {
    return a.tail_ == b.tail_ && a.prefix_ == b.prefix_;
  }
  friend bool operator!=(const Coalition& a, const Coalition& b) { return !(a == b); }

 private:
  BitString prefix_;
  bool tail_ = false;
};

/// The length-k string whose j-th bit is 1 iff j is a member of c.
BitString initial_segment(const Coalition& c, std::uint32_t k);

/// True iff t is an initial segment of c.
bool extends(const Coalition& c, const BitString& t);

/// Finite or Cofinite with the respective (co-)cardinality.
struct CardinalityClass {
  bool finite;
  std::uint32_t count;  // |c| when finite, |complement| when cofinite

  friend bool operator==(const CardinalityClass& a, const CardinalityClass& b) {
    return a.finite == b.finite && a.count == b.count;
  }
};
CardinalityClass cardinality_class(const Coalition& c);

/// Permutation of N moving only indices below its domain size m <= 64.
class FinitePermutation {
 public:
  /// Identity.
  FinitePermutation() = default;

  /// mapping[i] is the image of i; must be a bijection on {0,...,m-1}.
  explicit FinitePermutation(std::vector<std::uint32_t> mapping);

  static FinitePermutation identity() { return FinitePermutation(); }
  static FinitePermutation transposition(std::uint32_t a, std::uint32_t b);

  std::uint32_t domain_size() const { return static_cast<std::uint32_t>(mapping_.size()); }
  std::uint32_t apply(std::uint32_t i) const {
    return i < mapping_.size() ? mapping_[i] : i;
  }

  FinitePermutation inverse() const;

  /// Indices i with apply(i) != i.
  std::vector<std::uint32_t> support() const;

 private:
  std::vector<std::uint32_t> mapping_;
};

/// Pointwise image { p(i) : i in c }; the tail bit is unchanged.
Coalition permute(const Coalition& c, const FinitePermutation& p);

}  // namespace sg
