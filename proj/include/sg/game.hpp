#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sg/bitstring.hpp"
#include "sg/coalition.hpp"

namespace sg {

enum class Outcome { Winning, Losing, Undetermined };

/// Evaluation result. Undetermined only arises from prefix games whose
/// determining strings do not bar every path (non-total games).
class Verdict {
 public:
  static Verdict winning() { return Verdict(Outcome::Winning); }
  static Verdict losing() { return Verdict(Outcome::Losing); }
  static Verdict undetermined(std::string reason) {
    Verdict v(Outcome::Undetermined);
    v.reason_ = std::move(reason);
    return v;
  }

  Outcome outcome() const { return outcome_; }
  bool is_winning() const { return outcome_ == Outcome::Winning; }
  bool is_losing() const { return outcome_ == Outcome::Losing; }
  bool is_undetermined() const { return outcome_ == Outcome::Undetermined; }
  const std::string& reason() const { return reason_; }

  /// Compares outcomes; the reason text is diagnostic only.
  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.outcome_ == b.outcome_;
  }
  friend bool operator!=(const Verdict& a, const Verdict& b) { return !(a == b); }

 private:
  explicit Verdict(Outcome o) : outcome_(o) {}
  Outcome outcome_;
  std::string reason_;
};

/// Explicit winning-set table over the finite universe {0,...,n-1}.
/// Subsets are packed as masks with bit j = player j.
class TableGame {
 public:
  static constexpr std::uint32_t kMaxUniverse = 20;

  TableGame(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& winning_sets);

  /// winning[m] is the verdict of the subset with mask m; must have 2^n entries.
  static TableGame from_mask_table(std::uint32_t n, std::vector<bool> winning);

  /// For n <= 6: bit m of `packed` is the verdict of mask m. Convenient for
  /// exhaustive sweeps over all 2^(2^n) games.
  static TableGame from_packed(std::uint32_t n, std::uint64_t packed);

  std::uint32_t universe_size() const { return n_; }
  std::uint64_t subset_count() const { return 1ull << n_; }

  bool wins(std::uint64_t mask) const { return winning_[mask]; }

  /// All winning masks, ascending.
  std::vector<std::uint64_t> winning_masks() const;

 private:
  struct RawTable {};
  TableGame(RawTable, std::uint32_t n, std::vector<bool> winning)
      : n_(n), winning_(std::move(winning)) {}
  std::uint32_t n_;
  std::vector<bool> winning_;
};

Verdict eval_table(const TableGame& g, std::uint64_t subset_mask);
Verdict eval_table(const TableGame& g, const std::vector<std::uint32_t>& subset);
/// The coalition must be a finite set within the universe; anything else is
/// outside the table's domain ("player outside universe").
Verdict eval_table(const TableGame& g, const Coalition& c);

/// Finite carrier plus a winning table over carrier subsets. A coalition's
/// verdict depends only on its intersection with the carrier, so the game is
/// defined on every coalition.
class CarrierGame {
 public:
  CarrierGame(std::vector<std::uint32_t> carrier,
              const std::vector<std::vector<std::uint32_t>>& winning_on_carrier);

  /// table[m] is the verdict of the carrier subset whose mask m is over
  /// carrier *positions* (bit j = j-th smallest carrier member).
  static CarrierGame from_position_table(std::vector<std::uint32_t> carrier,
                                         std::vector<bool> table);

  const std::vector<std::uint32_t>& carrier() const { return carrier_; }
  bool wins_position_mask(std::uint64_t mask) const { return winning_[mask]; }

  /// c intersected with the carrier, as a position mask.
  std::uint64_t position_mask(const Coalition& c) const;

 private:
  std::vector<std::uint32_t> carrier_;  // sorted, distinct
  std::vector<bool> winning_;           // indexed by position mask
};

Verdict eval_carrier(const CarrierGame& g, const Coalition& c);

/// Determining-string representation: a set T0 of losing determining strings
/// and a set T1 of winning determining strings, all of length <= depth.
/// Evaluation scans a coalition's initial segments in increasing length and
/// returns the class of the first hit; coalitions that never hit are
/// Undetermined (the game is then not total).
class PrefixGame {
 public:
  PrefixGame(std::uint32_t depth, std::vector<BitString> t0, std::vector<BitString> t1);

  std::uint32_t depth() const { return depth_; }
  const std::vector<BitString>& t0() const { return t0_; }
  const std::vector<BitString>& t1() const { return t1_; }

  bool in_t0(std::uint32_t length, std::uint64_t bits) const {
    return lookup(t0_by_len_, length, bits);
  }
  bool in_t1(std::uint32_t length, std::uint64_t bits) const {
    return lookup(t1_by_len_, length, bits);
  }

 private:
  using LengthIndex = std::vector<std::vector<std::uint64_t>>;
  static bool lookup(const LengthIndex& idx, std::uint32_t length, std::uint64_t bits);

  std::uint32_t depth_;
  std::vector<BitString> t0_, t1_;  // sorted, deduped
  LengthIndex t0_by_len_, t1_by_len_;
};

Verdict eval_prefix(const PrefixGame& g, const Coalition& c);

struct PrefixValidation {
  bool well_formed = false;  // T0/T1 disjoint, no cross prefix-comparability
  bool total = false;        // every depth-length string extends a member
  std::vector<std::string> violations;
};

PrefixValidation validate_prefix_game(const PrefixGame& g);

/// All strings of length max(carrier)+1, split by the carrier verdict of the
/// set they describe. Total and well-formed by construction; agrees with
/// eval_carrier everywhere.
PrefixGame carrier_to_prefix(const CarrierGame& g);

/// Minimal antichain of determining strings of g: a string is kept iff every
/// length-n completion has the same table verdict and its longest proper
/// prefix has completions of both verdicts. Total, well-formed, and in
/// agreement with eval_table on every subset.
PrefixGame extract_determining_strings(const TableGame& g);

// Named games.

/// Wins iff player i0 is present; carrier {i0}.
CarrierGame dictator(std::uint32_t i0);

/// Carrier {0,...,k-1}; wins iff at least k-1 carrier members are present.
/// Requires k >= 2.
CarrierGame threshold_game(std::uint32_t k);

/// Over {0,...,n-1}: wins iff fewer than q players are missing. Requires
/// 1 <= q <= n.
TableGame q_complement(std::uint32_t q, std::uint32_t n);

/// q_complement(1, n): only the full universe wins.
TableGame unanimity(std::uint32_t n);

/// Wins iff more than half of the universe is present.
TableGame majority(std::uint32_t n);

/// Over {0,...,n-1} with A = {1,...,n-1}: wins iff S = A, or S contains
/// player 0 and S != {0}. Requires n >= 2.
TableGame a_game(std::uint32_t n);

using Game = std::variant<TableGame, CarrierGame, PrefixGame>;

Verdict eval_game(const Game& g, const Coalition& c);

/// A game reduced to an explicit table over its effective universe:
/// the universe itself (table), the carrier (carrier game), or
/// {0,...,depth-1} (total prefix game). players[j] is the player index at
/// table position j. Verdicts of arbitrary coalitions depend only on the
/// intersection with the effective universe, so every whole-game question
/// below is answered exactly by this table.
struct GroundedGame {
  std::vector<std::uint32_t> players;
  TableGame table;

  std::uint64_t universe_mask() const { return (1ull << players.size()) - 1; }

  /// Position mask -> coalition of actual players.
  Coalition coalition_of(std::uint64_t position_mask) const;

  /// Coalition -> position mask of its members inside the effective universe.
  std::uint64_t position_mask(const Coalition& c) const;
};

/// Throws analysis_error("game not total") for a prefix game with an
/// Undetermined subset.
GroundedGame ground(const Game& g);

/// The game as a table over the contiguous universe {0,...,m-1}, where m is
/// one past the largest effective player: n for tables, max(carrier)+1 for
/// carrier games, depth for total prefix games. Unlike ground(), positions
/// here are actual player indices even for sparse carriers.
TableGame explicit_universe_table(const Game& g);

}  // namespace sg
