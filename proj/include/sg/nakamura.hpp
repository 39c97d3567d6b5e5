#pragma once

#include <cstdint>
#include <vector>

#include "sg/coalition.hpp"
#include "sg/game.hpp"

namespace sg {

/// Size of the smallest family of winning coalitions with empty
/// intersection. Weak games (no winning coalition, or veto players) get the
/// infinite sentinel: finite is false and value compares above every
/// integer by convention.
struct NakamuraResult {
  bool finite = false;
  std::uint32_t value = 0;          // meaningful iff finite
  std::vector<Coalition> witness;   // minimal empty-intersection family, iff finite

  bool exceeds(std::uint32_t bound) const { return !finite || value > bound; }
};

/// Exact minimum via set cover: a family of winning coalitions has empty
/// intersection within the effective universe iff their complements cover
/// it, and truncating each member to the effective universe preserves both
/// winningness and empty intersection, so the grounded search is exact for
/// the whole game. The witness is the lexicographically first minimum family
/// (winning coalitions ordered by ascending grounded mask).
///
/// Games in which the empty coalition wins are rejected with analysis_error:
/// the Nakamura number is defined only for games excluding it.
NakamuraResult nakamura_number(const Game& g);
NakamuraResult nakamura_number(const GroundedGame& g);

/// min{ |S| : S winning } + 1, an upper bound for the finite Nakamura
/// number. Defined only for nonweak games with a winning coalition;
/// analysis_error otherwise.
std::uint32_t ceiling_bound(const Game& g);
std::uint32_t ceiling_bound(const GroundedGame& g);

}  // namespace sg
