#include "sg/properties.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sg/errors.hpp"
#include "sg/nakamura.hpp"

namespace sg {

namespace {

std::uint64_t low_mask(std::uint32_t k) { return k >= 64 ? ~0ull : ((1ull << k) - 1); }

PropertyReport pass(std::string property) {
  PropertyReport r;
  r.property = std::move(property);
  r.holds = true;
  return r;
}

PropertyReport fail(std::string property, std::string detail) {
  PropertyReport r;
  r.property = std::move(property);
  r.holds = false;
  r.detail = std::move(detail);
  return r;
}

}  // namespace

PropertyReport is_monotonic(const GroundedGame& g) {
  const std::uint64_t count = g.table.subset_count();
  const std::uint32_t n = g.table.universe_size();
  for (std::uint64_t m = 0; m < count; ++m) {
    if (!g.table.wins(m)) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      if ((m >> j) & 1ull) continue;
      std::uint64_t super = m | (1ull << j);
      if (!g.table.wins(super)) {
        auto r = fail("monotonic", "winning coalition with a losing superset");
        r.witness_coalitions = {g.coalition_of(m), g.coalition_of(super)};
        return r;
      }
    }
  }
  return pass("monotonic");
}

PropertyReport is_proper(const GroundedGame& g) {
  const std::uint64_t full = g.universe_mask();
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (g.table.wins(m) && g.table.wins(full & ~m)) {
      auto r = fail("proper", "coalition and its complement both winning");
      r.witness_coalitions = {g.coalition_of(m)};
      return r;
    }
  }
  return pass("proper");
}

PropertyReport is_strong(const GroundedGame& g) {
  const std::uint64_t full = g.universe_mask();
  for (std::uint64_t m = 0; m <= full; ++m) {
    if (!g.table.wins(m) && !g.table.wins(full & ~m)) {
      auto r = fail("strong", "coalition and its complement both losing");
      r.witness_coalitions = {g.coalition_of(m)};
      return r;
    }
  }
  return pass("strong");
}

std::vector<std::uint32_t> veto_players(const GroundedGame& g) {
  std::uint64_t veto = g.universe_mask();
  for (std::uint64_t m = 0; m <= g.universe_mask(); ++m)
    if (g.table.wins(m)) veto &= m;
  std::vector<std::uint32_t> out;
  for (std::size_t j = 0; j < g.players.size(); ++j)
    if ((veto >> j) & 1ull) out.push_back(g.players[j]);
  return out;
}

PropertyReport is_weak(const GroundedGame& g) {
  bool any_winning = false;
  for (std::uint64_t m = 0; m <= g.universe_mask() && !any_winning; ++m)
    any_winning = g.table.wins(m);
  if (!any_winning) {
    auto r = pass("weak");
    r.detail = "no winning coalitions";
    return r;
  }
  auto veto = veto_players(g);
  if (!veto.empty()) {
    auto r = pass("weak");
    r.witness_players = veto;
    r.detail = "veto players exist";
    return r;
  }
  return fail("weak", "no veto players and winning coalitions exist");
}

namespace {

// Prefilter scaffolding shared by the filter checks. On a finite table the
// finite intersection property collapses to "the veto set is nonempty": the
// whole winning family is itself a finite subfamily, and its intersection is
// contained in every other subfamily's.
PropertyReport prefilter_check(const GroundedGame& g, const char* name) {
  auto mono = is_monotonic(g);
  if (!mono.holds) {
    auto r = fail(name, "not monotonic");
    r.witness_coalitions = mono.witness_coalitions;
    return r;
  }
  const std::uint64_t full = g.universe_mask();
  if (!g.table.wins(full)) {
    auto r = fail(name, "full player set is losing");
    r.witness_coalitions = {g.coalition_of(full)};
    return r;
  }
  if (g.table.wins(0)) {
    auto r = fail(name, "empty coalition is winning");
    r.witness_coalitions = {Coalition::empty_set()};
    return r;
  }
  if (veto_players(g).empty()) {
    // Nonweak: exhibit a minimal subfamily of winning coalitions with empty
    // intersection.
    auto nak = nakamura_number(Game(g.table));
    auto r = fail(name, "finite intersection property fails");
    for (const auto& c : nak.witness) {
      std::vector<std::uint32_t> members;
      for (std::uint32_t p : c.finite_members()) members.push_back(g.players[p]);
      r.witness_coalitions.push_back(Coalition::finite(members));
    }
    return r;
  }
  return pass(name);
}

}  // namespace

PropertyReport is_prefilter(const GroundedGame& g) { return prefilter_check(g, "prefilter"); }

PropertyReport is_filter(const GroundedGame& g) {
  auto pre = prefilter_check(g, "filter");
  if (!pre.holds) return pre;
  auto winning = g.table.winning_masks();
  for (std::uint64_t a : winning)
    for (std::uint64_t b : winning)
      if (!g.table.wins(a & b)) {
        auto r = fail("filter", "winning pair with losing intersection");
        r.witness_coalitions = {g.coalition_of(a), g.coalition_of(b)};
        return r;
      }
  return pass("filter");
}

PropertyReport is_ultrafilter(const GroundedGame& g) {
  auto filt = is_filter(g);
  if (!filt.holds) {
    filt.property = "ultrafilter";
    return filt;
  }
  auto strong = is_strong(g);
  if (!strong.holds) {
    auto r = fail("ultrafilter", "not strong");
    r.witness_coalitions = strong.witness_coalitions;
    return r;
  }
  return pass("ultrafilter");
}

PropertyReport is_carrier(const GroundedGame& g, const std::vector<std::uint32_t>& s) {
  std::uint64_t s_mask = 0;
  for (std::size_t j = 0; j < g.players.size(); ++j)
    if (std::find(s.begin(), s.end(), g.players[j]) != s.end()) s_mask |= 1ull << j;
  for (std::uint64_t m = 0; m <= g.universe_mask(); ++m) {
    if (g.table.wins(m) != g.table.wins(m & s_mask)) {
      auto r = fail("carrier", "verdict changes when restricted to the candidate set");
      r.witness_coalitions = {g.coalition_of(m)};
      return r;
    }
  }
  return pass("carrier");
}

std::optional<std::vector<std::uint32_t>> find_min_carrier(const GroundedGame& g) {
  const std::uint64_t full = g.universe_mask();
  const std::uint32_t n = g.table.universe_size();
  for (std::uint32_t size = 0; size <= n; ++size) {
    for (std::uint64_t s = 0; s <= full; ++s) {
      if (static_cast<std::uint32_t>(std::popcount(s)) != size) continue;
      bool ok = true;
      for (std::uint64_t m = 0; m <= full && ok; ++m)
        ok = g.table.wins(m) == g.table.wins(m & s);
      if (ok) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t j = 0; j < n; ++j)
          if ((s >> j) & 1ull) out.push_back(g.players[j]);
        return out;
      }
    }
  }
  return std::nullopt;  // unreachable: the effective universe is a carrier
}

PropertyReport is_monotonic(const Game& g) { return is_monotonic(ground(g)); }
PropertyReport is_proper(const Game& g) { return is_proper(ground(g)); }
PropertyReport is_strong(const Game& g) { return is_strong(ground(g)); }
std::vector<std::uint32_t> veto_players(const Game& g) { return veto_players(ground(g)); }
PropertyReport is_weak(const Game& g) { return is_weak(ground(g)); }
PropertyReport is_prefilter(const Game& g) { return is_prefilter(ground(g)); }
PropertyReport is_filter(const Game& g) { return is_filter(ground(g)); }
PropertyReport is_ultrafilter(const Game& g) { return is_ultrafilter(ground(g)); }
PropertyReport is_carrier(const Game& g, const std::vector<std::uint32_t>& s) {
  return is_carrier(ground(g), s);
}
std::optional<std::vector<std::uint32_t>> find_min_carrier(const Game& g) {
  return find_min_carrier(ground(g));
}

PropertyReport is_finitely_anonymous(const Game& g, std::uint32_t max_support) {
  GroundedGame grounded = ground(g);
  const bool table_backed = std::holds_alternative<TableGame>(g);
  std::uint32_t effective = grounded.players.empty() ? 0 : grounded.players.back() + 1;
  std::uint32_t window = table_backed ? grounded.table.universe_size()
                                      : effective + max_support;
  if (window > TableGame::kMaxUniverse)
    throw analysis_error("anonymity window too large (max 20)");

  // Verdict of each subset of the window, looked up via the effective
  // universe. Tail-1 coalitions need no separate pass: complementation within
  // the window is a bijection on these subsets.
  std::vector<bool> verdict(1ull << window);
  for (std::uint64_t m = 0; m < verdict.size(); ++m) {
    std::uint64_t pos = 0;
    for (std::size_t j = 0; j < grounded.players.size(); ++j)
      if ((m >> grounded.players[j]) & 1ull) pos |= 1ull << j;
    verdict[m] = grounded.table.wins(pos);
  }

  for (std::uint32_t i = 0; i < window; ++i) {
    for (std::uint32_t j = i + 1; j < window; ++j) {
      for (std::uint64_t m = 0; m < verdict.size(); ++m) {
        bool bi = (m >> i) & 1ull, bj = (m >> j) & 1ull;
        if (bi == bj) continue;
        std::uint64_t swapped = (m & ~((1ull << i) | (1ull << j))) |
                                (static_cast<std::uint64_t>(bj) << i) |
                                (static_cast<std::uint64_t>(bi) << j);
        if (verdict[m] != verdict[swapped]) {
          auto r = fail("finitely_anonymous", "a transposition changes a verdict");
          r.witness_permutation = FinitePermutation::transposition(i, j);
          std::vector<std::uint32_t> members;
          for (std::uint32_t p = 0; p < window; ++p)
            if ((m >> p) & 1ull) members.push_back(p);
          r.witness_coalitions = {Coalition::finite(members)};
          return r;
        }
      }
    }
  }
  return pass("finitely_anonymous");
}

namespace {

enum class SearchSide { Winning, Losing };
enum class SearchKind { Finite, Cofinite };

std::optional<Coalition> search_example(const Game& g, SearchSide side, SearchKind kind) {
  GroundedGame grounded = ground(g);
  const bool table_backed = std::holds_alternative<TableGame>(g);
  const std::uint64_t full = grounded.universe_mask();
  const std::uint32_t n = grounded.table.universe_size();
  const bool want = side == SearchSide::Winning;

  for (std::uint32_t size = 0; size <= n; ++size) {
    for (std::uint64_t m = 0; m <= full; ++m) {
      if (static_cast<std::uint32_t>(std::popcount(m)) != size) continue;
      // Finite search: candidate set is m. Cofinite: drop the m players.
      std::uint64_t candidate = kind == SearchKind::Finite ? m : (full & ~m);
      if (grounded.table.wins(candidate) != want) continue;
      std::vector<std::uint32_t> listed;
      for (std::uint32_t j = 0; j < n; ++j)
        if ((m >> j) & 1ull) listed.push_back(grounded.players[j]);
      if (kind == SearchKind::Finite) return Coalition::finite(listed);
      if (table_backed) {
        std::vector<std::uint32_t> members;
        for (std::uint32_t j = 0; j < n; ++j)
          if ((candidate >> j) & 1ull) members.push_back(grounded.players[j]);
        return Coalition::finite(members);
      }
      return Coalition::cofinite_excluding(listed);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Coalition> find_finite_winning(const Game& g) {
  return search_example(g, SearchSide::Winning, SearchKind::Finite);
}
std::optional<Coalition> find_cofinite_winning(const Game& g) {
  return search_example(g, SearchSide::Winning, SearchKind::Cofinite);
}
std::optional<Coalition> find_finite_losing(const Game& g) {
  return search_example(g, SearchSide::Losing, SearchKind::Finite);
}
std::optional<Coalition> find_cofinite_losing(const Game& g) {
  return search_example(g, SearchSide::Losing, SearchKind::Cofinite);
}

std::pair<Coalition, Coalition> nonanonymity_witness(const PrefixGame& g) {
  GroundedGame grounded = ground(Game(g));
  const std::uint32_t depth = g.depth();
  const std::uint64_t full = grounded.universe_mask();
  if (!grounded.table.wins(full) || grounded.table.wins(0))
    throw analysis_error(
        "nonanonymity witness requires the full set winning and the empty set losing");

  // Least k making the all-ones string of length k winning determining, i.e.
  // every completion to full depth wins.
  auto all_extensions = [&](std::uint64_t base, std::uint32_t fixed, bool want) {
    std::uint32_t free = depth - fixed;
    for (std::uint64_t e = 0; e < (1ull << free); ++e)
      if (grounded.table.wins(base | (e << fixed)) != want) return false;
    return true;
  };
  std::uint32_t k = 0;
  while (!all_extensions(low_mask(k), k, true)) ++k;
  std::uint32_t k_zero = 0;
  while (!all_extensions(0, k_zero, false)) ++k_zero;

  std::vector<std::uint32_t> shifted(k);
  for (std::uint32_t i = 0; i < k; ++i) shifted[i] = k_zero + i;
  Coalition winning_side = Coalition(BitString(low_mask(k), k), false);
  Coalition losing_side = Coalition::finite(shifted);

  if (!eval_prefix(g, winning_side).is_winning() || !eval_prefix(g, losing_side).is_losing())
    throw std::logic_error("nonanonymity witness postcondition failed");
  return {winning_side, losing_side};
}

}  // namespace sg
