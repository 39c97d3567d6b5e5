#pragma once

#include <cstdint>
#include <vector>

#include "sg/bitstring.hpp"
#include "sg/coalition.hpp"
#include "sg/game.hpp"

namespace sg {

/// One observed entry of an injected enumeration: position k with bit value
/// v standing for the observed diagonal value at k. All k must be distinct.
struct EnumEntry {
  std::uint32_t k = 0;
  int v = 0;  // 0 or 1
};

/// One stage of the construction: at stage s the cutoff grows to
/// l_s = max(l_{s-1}, k_s + 1) and F_s collects the strings of length l_s
/// that agree with v_s at k_s and disagree with every earlier v at its k.
struct EnumStage {
  std::uint32_t s = 0;
  std::uint32_t k = 0;
  int v = 0;
  std::uint32_t cutoff = 0;        // l_s
  std::vector<BitString> strings;  // F_s, sorted
};

/// A prefix game built stage by stage from an injected enumeration, together
/// with the stage trace needed to replay membership decisions. The game is
/// always well-formed; a finite enumeration cannot bar every path, so it is
/// usually not total.
struct EnumConstruction {
  PrefixGame game;
  std::vector<EnumStage> trace;

  /// The diagonal-disagreeing set: bit 1 - v at every enumerated k, 0
  /// elsewhere. Extends no stage string by construction.
  Coalition disagreeing_set() const;
};

EnumConstruction enum_construction(const std::vector<EnumEntry>& entries);

enum class MembershipClass { InT0, InT1, NotInF };

/// Replays the stagewise decision procedure: find the first stage whose
/// cutoff reaches |sigma|, then scan the stages with that exact cutoff for a
/// set containing sigma. Agrees with direct membership in T0/T1.
MembershipClass prefix_membership_decision(const EnumConstruction& c, const BitString& sigma);

/// Certificate that no subset of {0,...,l-1} is a carrier: the l-initial
/// segment of the disagreeing set has both a winning and a losing extension.
struct CarrierRefutation {
  std::uint32_t l = 0;
  BitString winning_extension;
  BitString losing_extension;
};

/// All l <= depth admitting a refutation; empty when none exists.
std::vector<CarrierRefutation> no_finite_carrier_witness(const EnumConstruction& c);

}  // namespace sg
