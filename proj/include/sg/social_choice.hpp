#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sg/coalition.hpp"
#include "sg/game.hpp"
#include "sg/rng.hpp"

namespace sg {

bool relation_acyclic(std::uint32_t r, std::uint64_t rel);

/// Strict preference over r alternatives: an acyclic binary relation, stored
/// as an r*r bit matrix (bit x*r+y set means x is preferred to y). Acyclicity
/// is an invariant of the type; asymmetry and irreflexivity follow.
class Preference {
 public:
  static constexpr std::uint32_t kMaxAlternatives = 8;

  explicit Preference(std::uint32_t r);

  static Preference from_pairs(std::uint32_t r,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs);
  /// Validates acyclicity of the raw bit matrix.
  static Preference from_raw(std::uint32_t r, std::uint64_t rel);

  std::uint32_t alternative_count() const { return r_; }
  std::uint64_t raw() const { return rel_; }
  bool prefers(std::uint32_t x, std::uint32_t y) const {
    return (rel_ >> (x * r_ + y)) & 1ull;
  }

  Preference with_pair(std::uint32_t x, std::uint32_t y) const;     // revalidates
  Preference without_pair(std::uint32_t x, std::uint32_t y) const;  // always safe

  bool is_transitive() const;
  bool is_negatively_transitive() const;

  /// Still acyclic for an acyclic relation, hence a strict partial order.
  Preference transitive_closure() const;

  friend bool operator==(const Preference& a, const Preference& b) {
    return a.r_ == b.r_ && a.rel_ == b.rel_;
  }

 private:
  Preference(std::uint32_t r, std::uint64_t rel) : r_(r), rel_(rel) {}
  std::uint32_t r_;
  std::uint64_t rel_;
};

/// Finite alternative set; labels distinct, at least two.
struct Alternatives {
  std::vector<std::string> labels;

  explicit Alternatives(std::vector<std::string> names);
  /// "x1", "x2", ..., "xr".
  static Alternatives numbered(std::uint32_t r);

  std::uint32_t count() const { return static_cast<std::uint32_t>(labels.size()); }
};

/// One preference per effective player of a grounded game, indexed by
/// grounded position. Players outside the effective universe never affect a
/// dominance verdict, so they carry no entry.
class Profile {
 public:
  Profile(std::uint32_t r, std::size_t player_count);

  std::uint32_t alternative_count() const { return r_; }
  std::size_t player_count() const { return prefs_.size(); }
  const Preference& of(std::size_t position) const { return prefs_.at(position); }
  void set(std::size_t position, const Preference& p);

 private:
  std::uint32_t r_;
  std::vector<Preference> prefs_;
};

/// Induced dominance relation: x dominates y iff some winning coalition
/// unanimously prefers x to y. Each dominating pair carries the first such
/// coalition (ascending grounded mask) as a certificate.
///
/// A stricter variant would require the full supporter set itself to be
/// winning; it coincides with this one on monotonic games and is not
/// implemented.
struct Dominance {
  std::uint32_t r = 0;
  std::uint64_t rel = 0;
  std::vector<std::optional<std::uint64_t>> certificates;  // r*r position masks

  bool dominates(std::uint32_t x, std::uint32_t y) const {
    return (rel >> (x * r + y)) & 1ull;
  }
};

Dominance dominance(const GroundedGame& g, const Alternatives& alts, const Profile& p);

/// Undominated alternatives (indices into alts.labels).
std::vector<std::uint32_t> core_alternatives(const GroundedGame& g, const Alternatives& alts,
                                             const Profile& p);

/// A shortest dominance cycle c[0] -> c[1] -> ... -> c[0] (each dominating
/// the next), or nothing when the relation is acyclic.
std::optional<std::vector<std::uint32_t>> find_cycle(const Dominance& d);

/// The empty-core construction for r >= Nakamura number: pick r winning
/// coalitions with empty intersection (the minimum witness padded by
/// repeating its last member), partition the players by the first picked
/// coalition excluding them, and hand each block the full r-cycle minus its
/// own edge. The resulting dominance relation is exactly that cycle and the
/// core is empty; both are checked before returning.
struct CycleWitness {
  std::vector<Coalition> family;                    // the r chosen winning coalitions
  std::vector<std::vector<std::uint32_t>> blocks;   // player partition D_1..D_r
  Profile profile;
  Dominance induced;
};

CycleWitness cycle_profile_witness(const Game& g, const Alternatives& alts);

struct SearchMode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  // An exhaustive request falls back to sampling past this many profiles.
  std::uint64_t exhaustive_budget = 1'000'000;
};

struct VerifyRow {
  std::uint32_t r = 0;
  std::string method;                    // "exhaustive", "sampled", "witness"
  std::uint64_t profiles_checked = 0;
  std::uint64_t violations = 0;
  bool witness_core_empty = false;       // meaningful for method "witness"
};

struct VerifyReport {
  bool nu_finite = false;
  std::uint32_t nu = 0;
  std::vector<VerifyRow> rows;
  std::uint64_t total_violations = 0;
};

/// For each r in 2..r_max: below the Nakamura number every searched profile
/// must have a nonempty core; at or above it the cycle witness must empty
/// the core. Requires a total game with the empty coalition losing and at
/// least one winning coalition.
VerifyReport verify_nakamura(const Game& g, std::uint32_t r_max, const SearchMode& mode);

/// Same sweep with acyclicity of the dominance relation in place of core
/// nonemptiness.
VerifyReport verify_acyclicity_bound(const Game& g, std::uint32_t r_max, const SearchMode& mode);

enum class RationalityLevel { Transitive, NegativelyTransitive };

struct RationalityReport {
  bool holds = false;
  std::string what;                       // violated requirement, when any
  std::array<std::uint32_t, 3> triple{};  // offending alternatives, when any
};

/// Transitive level requires a filter and transitive individual preferences;
/// negatively transitive level requires an ultrafilter and asymmetric,
/// negatively transitive individual preferences. Precondition failures raise
/// analysis_error.
RationalityReport verify_aggregation_rationality(const Game& g, const Alternatives& alts,
                                                 const Profile& p, RationalityLevel level);

// Preference generators (seeded; used by the sampled searches and tests).

std::vector<Preference> all_acyclic_relations(std::uint32_t r);
Preference random_acyclic(std::uint32_t r, Rng& rng);
Preference random_strict_partial_order(std::uint32_t r, Rng& rng);  // transitive
Preference random_strict_weak_order(std::uint32_t r, Rng& rng);     // neg. transitive

}  // namespace sg
