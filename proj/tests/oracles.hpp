#pragma once

// Brute-force reference implementations used only by tests. Each one answers
// by direct quantifier expansion over the table, independently of the
// library's search and extraction strategies, so the two sides can check
// each other.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sg/bitstring.hpp"
#include "sg/game.hpp"
#include "sg/social_choice.hpp"

namespace oracle {

/// All length-n completions of the string share one verdict.
bool is_determining(const sg::TableGame& g, std::uint64_t bits, std::uint32_t len);

/// Minimal determining strings by definition: determining, with the longest
/// proper prefix nondetermining (or the empty string). Split by verdict.
struct Antichain {
  std::vector<sg::BitString> t0, t1;
};
Antichain minimal_determining_antichain(const sg::TableGame& g);

/// Smallest empty-intersection subfamily of winning masks, found by
/// enumerating subfamilies in increasing size; nullopt when the game is weak
/// (no winning coalition or nonempty intersection of all of them).
struct SubfamilyWitness {
  std::uint32_t size;
  std::vector<std::uint64_t> masks;
};
std::optional<SubfamilyWitness> nakamura_by_subfamilies(const sg::TableGame& g);

// Direct quantifier expansions of the game properties over the table.
bool monotonic(const sg::TableGame& g);
bool proper(const sg::TableGame& g);
bool strong(const sg::TableGame& g);
std::uint64_t veto_mask(const sg::TableGame& g);
bool weak(const sg::TableGame& g);
bool prefilter(const sg::TableGame& g);   // checks every subfamily's intersection
bool filter(const sg::TableGame& g);
bool ultrafilter(const sg::TableGame& g);

/// Undominated alternatives recomputed from scratch (per-alternative scan
/// over opponents, supporters and winning masks).
std::vector<std::uint32_t> core_scan(const sg::GroundedGame& g, const sg::Alternatives& alts,
                                     const sg::Profile& p);

}  // namespace oracle
