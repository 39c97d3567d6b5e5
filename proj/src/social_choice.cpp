#include "sg/social_choice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sg/errors.hpp"
#include "sg/nakamura.hpp"
#include "sg/properties.hpp"

namespace sg {

namespace {

void require_alt_count(std::uint32_t r) {
  if (r < 2) throw std::invalid_argument("need at least 2 alternatives");
  if (r > Preference::kMaxAlternatives)
    throw std::invalid_argument("too many alternatives (max 8)");
}

}  // namespace

bool relation_acyclic(std::uint32_t r, std::uint64_t rel) {
  // Irreflexivity and asymmetry are the 1- and 2-cycles; longer cycles via
  // iterated reachability.
  std::array<std::uint64_t, Preference::kMaxAlternatives> reach{};
  for (std::uint32_t x = 0; x < r; ++x)
    reach[x] = (rel >> (x * r)) & ((1ull << r) - 1);
  for (std::uint32_t step = 0; step < r; ++step)
    for (std::uint32_t x = 0; x < r; ++x)
      for (std::uint32_t y = 0; y < r; ++y)
        if ((reach[x] >> y) & 1ull) reach[x] |= reach[y];
  for (std::uint32_t x = 0; x < r; ++x)
    if ((reach[x] >> x) & 1ull) return false;
  return true;
}

Preference::Preference(std::uint32_t r) : r_(r), rel_(0) { require_alt_count(r); }

Preference Preference::from_raw(std::uint32_t r, std::uint64_t rel) {
  require_alt_count(r);
  rel &= (r * r >= 64) ? ~0ull : ((1ull << (r * r)) - 1);
  if (!relation_acyclic(r, rel))
    throw std::invalid_argument("preference relation has a cycle");
  return Preference(r, rel);
}

Preference Preference::from_pairs(
    std::uint32_t r, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  require_alt_count(r);
  std::uint64_t rel = 0;
  for (auto [x, y] : pairs) {
    if (x >= r || y >= r) throw std::invalid_argument("alternative index out of range");
    rel |= 1ull << (x * r + y);
  }
  return from_raw(r, rel);
}

Preference Preference::with_pair(std::uint32_t x, std::uint32_t y) const {
  return from_raw(r_, rel_ | (1ull << (x * r_ + y)));
}

Preference Preference::without_pair(std::uint32_t x, std::uint32_t y) const {
  return Preference(r_, rel_ & ~(1ull << (x * r_ + y)));
}

bool Preference::is_transitive() const {
  for (std::uint32_t x = 0; x < r_; ++x)
    for (std::uint32_t y = 0; y < r_; ++y)
      for (std::uint32_t z = 0; z < r_; ++z)
        if (prefers(x, y) && prefers(y, z) && !prefers(x, z)) return false;
  return true;
}

bool Preference::is_negatively_transitive() const {
  for (std::uint32_t x = 0; x < r_; ++x)
    for (std::uint32_t z = 0; z < r_; ++z)
      if (prefers(x, z))
        for (std::uint32_t y = 0; y < r_; ++y)
          if (!prefers(x, y) && !prefers(y, z)) return false;
  return true;
}

Preference Preference::transitive_closure() const {
  std::uint64_t rel = rel_;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::uint32_t x = 0; x < r_; ++x)
      for (std::uint32_t y = 0; y < r_; ++y)
        if ((rel >> (x * r_ + y)) & 1ull)
          for (std::uint32_t z = 0; z < r_; ++z)
            if (((rel >> (y * r_ + z)) & 1ull) && !((rel >> (x * r_ + z)) & 1ull)) {
              rel |= 1ull << (x * r_ + z);
              changed = true;
            }
  }
  return Preference(r_, rel);
}

Alternatives::Alternatives(std::vector<std::string> names) : labels(std::move(names)) {
  require_alt_count(static_cast<std::uint32_t>(labels.size()));
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw std::invalid_argument("alternative labels must be distinct");
}

Alternatives Alternatives::numbered(std::uint32_t r) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 1; i <= r; ++i) labels.push_back("x" + std::to_string(i));
  return Alternatives(std::move(labels));
}

Profile::Profile(std::uint32_t r, std::size_t player_count) : r_(r) {
  require_alt_count(r);
  prefs_.assign(player_count, Preference(r));
}

void Profile::set(std::size_t position, const Preference& p) {
  if (p.alternative_count() != r_)
    throw std::invalid_argument("preference is over a different alternative set");
  prefs_.at(position) = p;
}

Dominance dominance(const GroundedGame& g, const Alternatives& alts, const Profile& p) {
  const std::uint32_t r = alts.count();
  if (p.alternative_count() != r)
    throw std::invalid_argument("profile is over a different alternative set");
  if (p.player_count() != g.players.size())
    throw std::invalid_argument("profile does not cover the effective universe");

  auto winning = g.table.winning_masks();
  Dominance d;
  d.r = r;
  d.certificates.assign(static_cast<std::size_t>(r) * r, std::nullopt);
  for (std::uint32_t x = 0; x < r; ++x) {
    for (std::uint32_t y = 0; y < r; ++y) {
      if (x == y) continue;
      std::uint64_t supporters = 0;
      for (std::size_t i = 0; i < p.player_count(); ++i)
        if (p.of(i).prefers(x, y)) supporters |= 1ull << i;
      for (std::uint64_t w : winning) {
        if ((w & ~supporters) == 0) {
          d.rel |= 1ull << (x * r + y);
          d.certificates[x * r + y] = w;
          break;
        }
      }
    }
  }
  return d;
}

std::vector<std::uint32_t> core_alternatives(const GroundedGame& g, const Alternatives& alts,
                                             const Profile& p) {
  Dominance d = dominance(g, alts, p);
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < d.r; ++x) {
    bool dominated = false;
    for (std::uint32_t y = 0; y < d.r && !dominated; ++y) dominated = d.dominates(y, x);
    if (!dominated) out.push_back(x);
  }
  return out;
}

std::optional<std::vector<std::uint32_t>> find_cycle(const Dominance& d) {
  // BFS from each start over the dominance arcs; the shortest closing walk
  // through the start is a shortest cycle through it.
  std::optional<std::vector<std::uint32_t>> best;
  for (std::uint32_t start = 0; start < d.r; ++start) {
    std::vector<int> parent(d.r, -1);
    std::vector<std::uint32_t> queue{start};
    std::vector<bool> seen(d.r, false);
    seen[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t x = queue[head];
      for (std::uint32_t y = 0; y < d.r; ++y) {
        if (!d.dominates(x, y)) continue;
        if (y == start) {
          std::vector<std::uint32_t> cycle;
          for (std::uint32_t v = x; v != start; v = static_cast<std::uint32_t>(parent[v]))
            cycle.push_back(v);
          cycle.push_back(start);
          std::reverse(cycle.begin(), cycle.end());
          if (!best || cycle.size() < best->size()) best = cycle;
        } else if (!seen[y]) {
          seen[y] = true;
          parent[y] = static_cast<int>(x);
          queue.push_back(y);
        }
      }
    }
  }
  return best;
}

CycleWitness cycle_profile_witness(const Game& g, const Alternatives& alts) {
  GroundedGame grounded = ground(g);
  const std::uint32_t r = alts.count();
  NakamuraResult nak = nakamura_number(grounded);
  if (!nak.finite) throw analysis_error("no witness exists: the game is weak");
  if (r < nak.value)
    throw analysis_error("no witness exists: fewer alternatives than the Nakamura number");

  std::vector<std::uint64_t> family(r);
  for (std::uint32_t k = 0; k < r; ++k) {
    const Coalition& c = nak.witness[std::min<std::size_t>(k, nak.witness.size() - 1)];
    family[k] = grounded.position_mask(c);
  }

  // Cycle over alternative indices: every alternative is beaten by its
  // cyclic successor.
  std::uint64_t cycle_rel = 0;
  auto edge = [&](std::uint32_t k) {  // the pair removed for block k (1-based)
    std::uint32_t x = (k - 1) % r, y = (k + r - 2) % r;
    return std::pair<std::uint32_t, std::uint32_t>(x, y);
  };
  for (std::uint32_t k = 1; k <= r; ++k) {
    auto [x, y] = edge(k);
    cycle_rel |= 1ull << (x * r + y);
  }

  const std::uint64_t universe = grounded.universe_mask();
  Profile profile(r, grounded.players.size());
  CycleWitness witness{{}, {}, profile, {}};
  std::uint64_t running = universe, covered = 0;
  for (std::uint32_t k = 1; k <= r; ++k) {
    std::uint64_t block = running & ~family[k - 1];
    running &= family[k - 1];
    if (block & covered) throw std::logic_error("blocks not disjoint");
    covered |= block;

    auto [x, y] = edge(k);  // the full cycle minus this block's edge is a path
    Preference pref = Preference::from_raw(r, cycle_rel & ~(1ull << (x * r + y)));
    std::vector<std::uint32_t> members;
    for (std::size_t j = 0; j < grounded.players.size(); ++j)
      if ((block >> j) & 1ull) {
        profile.set(j, pref);
        members.push_back(grounded.players[j]);
      }
    witness.blocks.push_back(std::move(members));
    witness.family.push_back(grounded.coalition_of(family[k - 1]));
  }
  if (covered != universe) throw std::logic_error("blocks do not cover the universe");

  witness.profile = profile;
  witness.induced = dominance(grounded, alts, profile);
  if (witness.induced.rel != cycle_rel)
    throw std::logic_error("induced dominance is not the intended cycle");
  if (!core_alternatives(grounded, alts, profile).empty())
    throw std::logic_error("witness core is not empty");
  return witness;
}

std::vector<Preference> all_acyclic_relations(std::uint32_t r) {
  require_alt_count(r);
  // Every acyclic relation is asymmetric, so enumerate the three states of
  // each unordered pair and keep what passes the cycle check.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
  for (std::uint32_t x = 0; x < r; ++x)
    for (std::uint32_t y = x + 1; y < r; ++y) slots.push_back({x, y});
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) combos *= 3;

  std::vector<Preference> out;
  for (std::uint64_t code = 0; code < combos; ++code) {
    std::uint64_t rel = 0, c = code;
    for (auto [x, y] : slots) {
      switch (c % 3) {
        case 1: rel |= 1ull << (x * r + y); break;
        case 2: rel |= 1ull << (y * r + x); break;
        default: break;
      }
      c /= 3;
    }
    if (relation_acyclic(r, rel)) out.push_back(Preference::from_raw(r, rel));
  }
  return out;
}

namespace {

std::vector<std::uint32_t> random_permutation(std::uint32_t r, Rng& rng) {
  std::vector<std::uint32_t> order(r);
  for (std::uint32_t i = 0; i < r; ++i) order[i] = i;
  for (std::uint32_t i = r; i > 1; --i)
    std::swap(order[i - 1], order[rng.below(i)]);
  return order;
}

}  // namespace

Preference random_acyclic(std::uint32_t r, Rng& rng) {
  // A random relation contained in a random linear order is acyclic.
  auto order = random_permutation(r, rng);
  std::uint64_t rel = 0;
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = i + 1; j < r; ++j)
      if (rng.coin()) rel |= 1ull << (order[i] * r + order[j]);
  return Preference::from_raw(r, rel);
}

Preference random_strict_partial_order(std::uint32_t r, Rng& rng) {
  return random_acyclic(r, rng).transitive_closure();
}

Preference random_strict_weak_order(std::uint32_t r, Rng& rng) {
  auto order = random_permutation(r, rng);
  std::vector<std::uint32_t> level(r, 0);
  std::uint32_t current = 0;
  for (std::uint32_t i = 1; i < r; ++i) {
    if (rng.coin()) ++current;
    level[order[i]] = current;
  }
  level[order[0]] = 0;
  std::uint64_t rel = 0;
  for (std::uint32_t x = 0; x < r; ++x)
    for (std::uint32_t y = 0; y < r; ++y)
      if (level[x] < level[y]) rel |= 1ull << (x * r + y);
  return Preference::from_raw(r, rel);
}

namespace {

enum class Claim { CoreNonempty, DominanceAcyclic };

VerifyReport verify_sweep(const Game& g, std::uint32_t r_max, const SearchMode& mode,
                          Claim claim) {
  GroundedGame grounded = ground(g);
  if (grounded.table.wins(0)) throw analysis_error("empty coalition must lose");
  if (grounded.table.winning_masks().empty())
    throw analysis_error("game has no winning coalitions");

  NakamuraResult nak = nakamura_number(grounded);
  VerifyReport report;
  report.nu_finite = nak.finite;
  report.nu = nak.value;

  const std::size_t players = grounded.players.size();
  for (std::uint32_t r = 2; r <= r_max; ++r) {
    Alternatives alts = Alternatives::numbered(r);
    VerifyRow row;
    row.r = r;

    if (nak.finite && r >= nak.value) {
      CycleWitness witness = cycle_profile_witness(g, alts);
      bool claim_violated = claim == Claim::CoreNonempty
                                ? !core_alternatives(grounded, alts, witness.profile).empty()
                                : !find_cycle(witness.induced).has_value();
      row.method = "witness";
      row.profiles_checked = 1;
      row.witness_core_empty = true;
      row.violations = claim_violated ? 1 : 0;
    } else {
      auto relations = all_acyclic_relations(r);
      std::uint64_t total = 1;
      bool overflow = false;
      for (std::size_t i = 0; i < players; ++i) {
        total *= relations.size();
        if (total > mode.exhaustive_budget) {
          overflow = true;
          break;
        }
      }
      bool exhaustive = mode.kind == SearchMode::Kind::Exhaustive && !overflow;

      auto check = [&](const Profile& profile) {
        if (claim == Claim::CoreNonempty) {
          if (core_alternatives(grounded, alts, profile).empty()) ++row.violations;
        } else {
          if (find_cycle(dominance(grounded, alts, profile)).has_value()) ++row.violations;
        }
        ++row.profiles_checked;
      };

      if (exhaustive) {
        row.method = "exhaustive";
        std::vector<std::size_t> odometer(players, 0);
        for (;;) {
          Profile profile(r, players);
          for (std::size_t i = 0; i < players; ++i) profile.set(i, relations[odometer[i]]);
          check(profile);
          std::size_t i = 0;
          while (i < players && ++odometer[i] == relations.size()) odometer[i++] = 0;
          if (i == players) break;
        }
      } else {
        row.method = "sampled";
        Rng rng(mode.seed + r);
        for (std::uint64_t s = 0; s < mode.samples; ++s) {
          Profile profile(r, players);
          for (std::size_t i = 0; i < players; ++i) profile.set(i, random_acyclic(r, rng));
          check(profile);
        }
      }
    }
    report.total_violations += row.violations;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

VerifyReport verify_nakamura(const Game& g, std::uint32_t r_max, const SearchMode& mode) {
  return verify_sweep(g, r_max, mode, Claim::CoreNonempty);
}

VerifyReport verify_acyclicity_bound(const Game& g, std::uint32_t r_max,
                                     const SearchMode& mode) {
  return verify_sweep(g, r_max, mode, Claim::DominanceAcyclic);
}

RationalityReport verify_aggregation_rationality(const Game& g, const Alternatives& alts,
                                                 const Profile& p, RationalityLevel level) {
  GroundedGame grounded = ground(g);
  if (level == RationalityLevel::Transitive) {
    if (!is_filter(grounded).holds) throw analysis_error("game not a filter");
    for (std::size_t i = 0; i < p.player_count(); ++i)
      if (!p.of(i).is_transitive())
        throw analysis_error("profile has a non-transitive individual preference");
  } else {
    if (!is_ultrafilter(grounded).holds) throw analysis_error("game not an ultrafilter");
    for (std::size_t i = 0; i < p.player_count(); ++i)
      if (!p.of(i).is_negatively_transitive())
        throw analysis_error("profile has a non-negatively-transitive individual preference");
  }

  Dominance d = dominance(grounded, alts, p);
  RationalityReport report;
  report.holds = true;
  const std::uint32_t r = d.r;

  if (level == RationalityLevel::Transitive) {
    for (std::uint32_t x = 0; x < r; ++x)
      for (std::uint32_t y = 0; y < r; ++y)
        for (std::uint32_t z = 0; z < r; ++z)
          if (d.dominates(x, y) && d.dominates(y, z) && !d.dominates(x, z)) {
            report.holds = false;
            report.what = "dominance not transitive";
            report.triple = {x, y, z};
            return report;
          }
    return report;
  }

  for (std::uint32_t x = 0; x < r; ++x)
    for (std::uint32_t y = 0; y < r; ++y)
      if (x != y && d.dominates(x, y) && d.dominates(y, x)) {
        report.holds = false;
        report.what = "dominance not asymmetric";
        report.triple = {x, y, x};
        return report;
      }
  for (std::uint32_t x = 0; x < r; ++x)
    for (std::uint32_t z = 0; z < r; ++z)
      if (d.dominates(x, z))
        for (std::uint32_t y = 0; y < r; ++y)
          if (!d.dominates(x, y) && !d.dominates(y, z)) {
            report.holds = false;
            report.what = "dominance not negatively transitive";
            report.triple = {x, y, z};
            return report;
          }
  return report;
}

}  // namespace sg
