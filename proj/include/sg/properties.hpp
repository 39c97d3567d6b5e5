#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sg/coalition.hpp"
#include "sg/game.hpp"

namespace sg {

/// Outcome of a property check. For universally-quantified properties the
/// witness fields hold a counterexample when holds is false; for existential
/// ones (weakness) they hold the certifying object when holds is true.
struct PropertyReport {
  std::string property;
  bool holds = false;
  std::vector<Coalition> witness_coalitions;
  std::vector<std::uint32_t> witness_players;
  std::optional<FinitePermutation> witness_permutation;
  std::string detail;
};

// Table-logic checkers. Every verdict of a game depends only on the
// intersection with its effective universe, so checking the grounded table
// is exhaustive over all coalitions (both tails included).

PropertyReport is_monotonic(const GroundedGame& g);
PropertyReport is_proper(const GroundedGame& g);
PropertyReport is_strong(const GroundedGame& g);

/// Players belonging to every winning coalition. With no winning coalition
/// at all, every effective player is returned (intersection of an empty
/// family); is_weak treats that case separately anyway.
std::vector<std::uint32_t> veto_players(const GroundedGame& g);

PropertyReport is_weak(const GroundedGame& g);

PropertyReport is_prefilter(const GroundedGame& g);
PropertyReport is_filter(const GroundedGame& g);
PropertyReport is_ultrafilter(const GroundedGame& g);

PropertyReport is_carrier(const GroundedGame& g, const std::vector<std::uint32_t>& s);
std::optional<std::vector<std::uint32_t>> find_min_carrier(const GroundedGame& g);

// Convenience overloads that ground first.
PropertyReport is_monotonic(const Game& g);
PropertyReport is_proper(const Game& g);
PropertyReport is_strong(const Game& g);
std::vector<std::uint32_t> veto_players(const Game& g);
PropertyReport is_weak(const Game& g);
PropertyReport is_prefilter(const Game& g);
PropertyReport is_filter(const Game& g);
PropertyReport is_ultrafilter(const Game& g);
PropertyReport is_carrier(const Game& g, const std::vector<std::uint32_t>& s);
std::optional<std::vector<std::uint32_t>> find_min_carrier(const Game& g);

/// Invariance of verdicts under permutations moving at most max_support
/// players. For table games the permutations stay inside the universe; for
/// carrier and prefix games they may also move the first max_support players
/// past the effective universe (moving later players never changes a
/// verdict). Checking transpositions suffices: any permutation of the window
/// is a product of window transpositions, and verdict invariance composes.
PropertyReport is_finitely_anonymous(const Game& g, std::uint32_t max_support);

// Minimal finite / cofinite examples. For prefix games the search runs over
// tail-0 / tail-1 coalitions with prefix length <= depth, which is
// exhaustive: dropping or adding players past the depth never changes a
// verdict, so the minimum found is the global one. For table games the
// cofinite searches read "missing fewest universe players" and return the
// finite subset found. All four require a total game and return nothing
// only when the sought verdict never occurs.

std::optional<Coalition> find_finite_winning(const Game& g);
std::optional<Coalition> find_cofinite_winning(const Game& g);
std::optional<Coalition> find_finite_losing(const Game& g);
std::optional<Coalition> find_cofinite_losing(const Game& g);

/// For a total prefix game with the full set winning and the empty set
/// losing: two coalitions of equal finite cardinality with opposite
/// verdicts. The first is {0,...,k-1} where the all-ones string of length k
/// is winning determining; the second shifts it past a losing determining
/// run of zeros. Both k are chosen least.
std::pair<Coalition, Coalition> nonanonymity_witness(const PrefixGame& g);

}  // namespace sg
