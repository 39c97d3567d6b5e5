#include "sg/game.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "sg/errors.hpp"

namespace sg {

namespace {

std::uint64_t low_mask(std::uint32_t k) { return k >= 64 ? ~0ull : ((1ull << k) - 1); }

constexpr std::uint32_t kMaxValidationDepth = 24;

}  // namespace

// ---------------------------------------------------------------------------
// TableGame

TableGame::TableGame(std::uint32_t n,
                     const std::vector<std::vector<std::uint32_t>>& winning_sets)
    : n_(n) {
  if (n > kMaxUniverse) throw std::invalid_argument("universe too large (max 20)");
  winning_.assign(1ull << n, false);
  for (const auto& s : winning_sets) {
    std::uint64_t mask = 0;
    for (std::uint32_t p : s) {
      if (p >= n) throw std::invalid_argument("player outside universe");
      mask |= 1ull << p;
    }
    winning_[mask] = true;
  }
}

TableGame TableGame::from_mask_table(std::uint32_t n, std::vector<bool> winning) {
  if (n > kMaxUniverse) throw std::invalid_argument("universe too large (max 20)");
  if (winning.size() != (1ull << n))
    throw std::invalid_argument("mask table must have 2^n entries");
  return TableGame(RawTable{}, n, std::move(winning));
}

TableGame TableGame::from_packed(std::uint32_t n, std::uint64_t packed) {
  if (n > 6) throw std::invalid_argument("packed tables support n <= 6");
  std::vector<bool> winning(1ull << n);
  for (std::uint64_t m = 0; m < winning.size(); ++m) winning[m] = (packed >> m) & 1ull;
  return from_mask_table(n, std::move(winning));
}

std::vector<std::uint64_t> TableGame::winning_masks() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < winning_.size(); ++m)
    if (winning_[m]) out.push_back(m);
  return out;
}

Verdict eval_table(const TableGame& g, std::uint64_t subset_mask) {
  if (subset_mask >= g.subset_count())
    throw std::invalid_argument("player outside universe");
  return g.wins(subset_mask) ? Verdict::winning() : Verdict::losing();
}

Verdict eval_table(const TableGame& g, const std::vector<std::uint32_t>& subset) {
  std::uint64_t mask = 0;
  for (std::uint32_t p : subset) {
    if (p >= g.universe_size()) throw std::invalid_argument("player outside universe");
    mask |= 1ull << p;
  }
  return eval_table(g, mask);
}

Verdict eval_table(const TableGame& g, const Coalition& c) {
  if (!c.is_finite()) throw std::invalid_argument("player outside universe");
  if (c.prefix().length() > g.universe_size())
    throw std::invalid_argument("player outside universe");
  return eval_table(g, c.mask_below(g.universe_size()));
}

// ---------------------------------------------------------------------------
// CarrierGame

CarrierGame::CarrierGame(std::vector<std::uint32_t> carrier,
                         const std::vector<std::vector<std::uint32_t>>& winning_on_carrier)
    : carrier_(std::move(carrier)) {
  std::sort(carrier_.begin(), carrier_.end());
  if (std::adjacent_find(carrier_.begin(), carrier_.end()) != carrier_.end())
    throw std::invalid_argument("carrier members must be distinct");
  if (carrier_.size() > TableGame::kMaxUniverse)
    throw std::invalid_argument("carrier too large (max 20)");
  if (!carrier_.empty() && carrier_.back() >= BitString::kMaxBits)
    throw std::invalid_argument("player index must be < 64");
  winning_.assign(1ull << carrier_.size(), false);
  for (const auto& s : winning_on_carrier) {
    std::uint64_t mask = 0;
    for (std::uint32_t p : s) {
      auto it = std::lower_bound(carrier_.begin(), carrier_.end(), p);
      if (it == carrier_.end() || *it != p)
        throw std::invalid_argument("winning set not a subset of the carrier");
      mask |= 1ull << (it - carrier_.begin());
    }
    winning_[mask] = true;
  }
}

CarrierGame CarrierGame::from_position_table(std::vector<std::uint32_t> carrier,
                                             std::vector<bool> table) {
  CarrierGame g(std::move(carrier), {});
  if (table.size() != g.winning_.size())
    throw std::invalid_argument("position table must have 2^|carrier| entries");
  g.winning_ = std::move(table);
  return g;
}

std::uint64_t CarrierGame::position_mask(const Coalition& c) const {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < carrier_.size(); ++j)
    if (c.contains(carrier_[j])) mask |= 1ull << j;
  return mask;
}

Verdict eval_carrier(const CarrierGame& g, const Coalition& c) {
  return g.wins_position_mask(g.position_mask(c)) ? Verdict::winning() : Verdict::losing();
}

// ---------------------------------------------------------------------------
// PrefixGame

PrefixGame::PrefixGame(std::uint32_t depth, std::vector<BitString> t0,
                       std::vector<BitString> t1)
    : depth_(depth), t0_(std::move(t0)), t1_(std::move(t1)) {
  if (depth > BitString::kMaxBits) throw std::invalid_argument("depth larger than 64");
  for (auto* side : {&t0_, &t1_}) {
    for (const auto& s : *side)
      if (s.length() > depth_)
        throw std::invalid_argument("determining string longer than depth");
    std::sort(side->begin(), side->end());
    side->erase(std::unique(side->begin(), side->end()), side->end());
  }
  t0_by_len_.assign(depth_ + 1, {});
  t1_by_len_.assign(depth_ + 1, {});
  for (const auto& s : t0_) t0_by_len_[s.length()].push_back(s.bits());
  for (const auto& s : t1_) t1_by_len_[s.length()].push_back(s.bits());
  for (auto* idx : {&t0_by_len_, &t1_by_len_})
    for (auto& bucket : *idx) std::sort(bucket.begin(), bucket.end());
}

bool PrefixGame::lookup(const LengthIndex& idx, std::uint32_t length, std::uint64_t bits) {
  if (length >= idx.size()) return false;
  const auto& bucket = idx[length];
  return std::binary_search(bucket.begin(), bucket.end(), bits);
}

Verdict eval_prefix(const PrefixGame& g, const Coalition& c) {
  std::uint64_t bits = c.mask_below(g.depth());
  for (std::uint32_t k = 0; k <= g.depth(); ++k) {
    std::uint64_t seg = bits & low_mask(k);
    if (g.in_t0(k, seg)) return Verdict::losing();
    if (g.in_t1(k, seg)) return Verdict::winning();
  }
  return Verdict::undetermined("no determining initial segment within depth " +
                               std::to_string(g.depth()));
}

PrefixValidation validate_prefix_game(const PrefixGame& g) {
  PrefixValidation report;
  report.well_formed = true;

  // Disjointness, and cross prefix-comparability: a string in one class with
  // a (proper or equal) prefix in the other class makes some coalition both
  // winning and losing.
  auto check_against = [&](const std::vector<BitString>& strings, bool in_t1_side) {
    for (const auto& s : strings) {
      for (std::uint32_t k = 0; k <= s.length(); ++k) {
        std::uint64_t seg = s.bits() & low_mask(k);
        bool hit = in_t1_side ? g.in_t0(k, seg) : g.in_t1(k, seg);
        if (hit) {
          report.well_formed = false;
          report.violations.push_back(
              "string " + s.to_string() + " in T" + (in_t1_side ? "1" : "0") +
              " is comparable with " + BitString(seg, k).to_string() + " in T" +
              (in_t1_side ? "0" : "1"));
        }
      }
    }
  };
  check_against(g.t0(), false);
  check_against(g.t1(), true);

  if (g.depth() > kMaxValidationDepth)
    throw analysis_error("depth too large for exhaustive totality check");
  report.total = true;
  for (std::uint64_t m = 0; m < (1ull << g.depth()); ++m) {
    bool barred = false;
    for (std::uint32_t k = 0; k <= g.depth() && !barred; ++k) {
      std::uint64_t seg = m & low_mask(k);
      barred = g.in_t0(k, seg) || g.in_t1(k, seg);
    }
    if (!barred) {
      report.total = false;
      report.violations.push_back("string " + BitString(m, g.depth()).to_string() +
                                  " extends no member of T0 or T1");
      break;
    }
  }
  return report;
}

PrefixGame carrier_to_prefix(const CarrierGame& g) {
  std::uint32_t depth = g.carrier().empty() ? 0 : g.carrier().back() + 1;
  std::vector<BitString> t0, t1;
  for (std::uint64_t m = 0; m < (1ull << depth); ++m) {
    std::uint64_t pos = 0;
    for (std::size_t j = 0; j < g.carrier().size(); ++j)
      if ((m >> g.carrier()[j]) & 1ull) pos |= 1ull << j;
    (g.wins_position_mask(pos) ? t1 : t0).push_back(BitString(m, depth));
  }
  return PrefixGame(depth, std::move(t0), std::move(t1));
}

PrefixGame extract_determining_strings(const TableGame& g) {
  const std::uint32_t n = g.universe_size();
  std::vector<BitString> t0, t1;
  // Post-order over the binary prefix tree. Class of a node: 0 all
  // completions losing, 1 all winning, 2 mixed. A node is emitted when its
  // class is decided but the parent's is not.
  std::function<int(std::uint32_t, std::uint64_t)> classify =
      [&](std::uint32_t len, std::uint64_t bits) -> int {
    if (len == n) return g.wins(bits) ? 1 : 0;
    int c0 = classify(len + 1, bits);
    int c1 = classify(len + 1, bits | (1ull << len));
    int here = (c0 == c1) ? c0 : 2;
    if (here == 2) {
      if (c0 != 2) (c0 == 1 ? t1 : t0).push_back(BitString(bits, len + 1));
      if (c1 != 2) (c1 == 1 ? t1 : t0).push_back(BitString(bits | (1ull << len), len + 1));
    }
    return here;
  };
  int root = classify(0, 0);
  if (root != 2) (root == 1 ? t1 : t0).push_back(BitString());
  return PrefixGame(n, std::move(t0), std::move(t1));
}

// ---------------------------------------------------------------------------
// Named games

CarrierGame dictator(std::uint32_t i0) { return CarrierGame({i0}, {{i0}}); }

CarrierGame threshold_game(std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("threshold game requires k >= 2");
  std::vector<std::uint32_t> carrier(k);
  for (std::uint32_t i = 0; i < k; ++i) carrier[i] = i;
  std::vector<bool> table(1ull << k);
  for (std::uint64_t m = 0; m < table.size(); ++m)
    table[m] = std::popcount(m) >= static_cast<int>(k) - 1;
  return CarrierGame::from_position_table(std::move(carrier), std::move(table));
}

TableGame q_complement(std::uint32_t q, std::uint32_t n) {
  if (q < 1 || q > n) throw std::invalid_argument("q-complement requires 1 <= q <= n");
  std::vector<bool> winning(1ull << n);
  for (std::uint64_t m = 0; m < winning.size(); ++m)
    winning[m] = n - std::popcount(m) < q;
  return TableGame::from_mask_table(n, std::move(winning));
}

TableGame unanimity(std::uint32_t n) { return q_complement(1, n); }

TableGame majority(std::uint32_t n) {
  std::vector<bool> winning(1ull << n);
  for (std::uint64_t m = 0; m < winning.size(); ++m)
    winning[m] = 2u * std::popcount(m) > n;
  return TableGame::from_mask_table(n, std::move(winning));
}

TableGame a_game(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("a_game requires n >= 2");
  const std::uint64_t a = low_mask(n) & ~1ull;  // {1,...,n-1}
  std::vector<bool> winning(1ull << n);
  for (std::uint64_t m = 0; m < winning.size(); ++m)
    winning[m] = (m == a) || ((m & 1ull) && m != 1ull);
  return TableGame::from_mask_table(n, std::move(winning));
}

// ---------------------------------------------------------------------------
// Grounding

Verdict eval_game(const Game& g, const Coalition& c) {
  return std::visit(
      [&](const auto& game) -> Verdict {
        using T = std::decay_t<decltype(game)>;
        if constexpr (std::is_same_v<T, TableGame>) return eval_table(game, c);
        if constexpr (std::is_same_v<T, CarrierGame>) return eval_carrier(game, c);
        if constexpr (std::is_same_v<T, PrefixGame>) return eval_prefix(game, c);
      },
      g);
}

Coalition GroundedGame::coalition_of(std::uint64_t position_mask) const {
  std::vector<std::uint32_t> members;
  for (std::size_t j = 0; j < players.size(); ++j)
    if ((position_mask >> j) & 1ull) members.push_back(players[j]);
  return Coalition::finite(members);
}

std::uint64_t GroundedGame::position_mask(const Coalition& c) const {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < players.size(); ++j)
    if (c.contains(players[j])) mask |= 1ull << j;
  return mask;
}

GroundedGame ground(const Game& g) {
  if (const auto* table = std::get_if<TableGame>(&g)) {
    std::vector<std::uint32_t> players(table->universe_size());
    for (std::uint32_t i = 0; i < players.size(); ++i) players[i] = i;
    return {std::move(players), *table};
  }
  if (const auto* carrier = std::get_if<CarrierGame>(&g)) {
    std::vector<bool> winning(1ull << carrier->carrier().size());
    for (std::uint64_t m = 0; m < winning.size(); ++m)
      winning[m] = carrier->wins_position_mask(m);
    return {carrier->carrier(),
            TableGame::from_mask_table(carrier->carrier().size(), std::move(winning))};
  }
  const auto& prefix = std::get<PrefixGame>(g);
  if (prefix.depth() > TableGame::kMaxUniverse)
    throw analysis_error("prefix game too deep to ground (max 20)");
  std::vector<std::uint32_t> players(prefix.depth());
  for (std::uint32_t i = 0; i < players.size(); ++i) players[i] = i;
  std::vector<bool> winning(1ull << prefix.depth());
  for (std::uint64_t m = 0; m < winning.size(); ++m) {
    Verdict v = eval_prefix(prefix, Coalition(BitString(m, prefix.depth()), false));
    if (v.is_undetermined()) throw analysis_error("game not total");
    winning[m] = v.is_winning();
  }
  return {std::move(players), TableGame::from_mask_table(prefix.depth(), std::move(winning))};
}

TableGame explicit_universe_table(const Game& g) {
  if (const auto* table = std::get_if<TableGame>(&g)) return *table;
  if (const auto* carrier = std::get_if<CarrierGame>(&g)) {
    std::uint32_t n = carrier->carrier().empty() ? 0 : carrier->carrier().back() + 1;
    if (n > TableGame::kMaxUniverse)
      throw analysis_error("carrier spans too large a universe (max 20)");
    std::vector<bool> winning(1ull << n);
    for (std::uint64_t m = 0; m < winning.size(); ++m) {
      std::uint64_t pos = 0;
      for (std::size_t j = 0; j < carrier->carrier().size(); ++j)
        if ((m >> carrier->carrier()[j]) & 1ull) pos |= 1ull << j;
      winning[m] = carrier->wins_position_mask(pos);
    }
    return TableGame::from_mask_table(n, std::move(winning));
  }
  return ground(g).table;  // prefix: positions are the players already
}

}  // namespace sg
