#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "sg/enum_construction.hpp"
#include "sg/game.hpp"
#include "sg/nakamura.hpp"
#include "sg/properties.hpp"
#include "sg/social_choice.hpp"

namespace sg {

/// A game file, possibly carrying the stage trace of an injected-enumeration
/// construction (needed by the replay and carrier-refutation commands).
struct ParsedGame {
  Game game;
  std::optional<EnumConstruction> construction;
};

/// Accepts the "table", "carrier", "prefix", "named" and "enum_construction"
/// descriptions. Malformed or inconsistent input raises parse_error.
ParsedGame parse_game(const nlohmann::json& j);
ParsedGame parse_game_text(const std::string& text);

nlohmann::ordered_json game_to_json(const Game& g);

/// {"alternatives":[...],"players":{"0":[["a","b"],...],...}}; player keys
/// are indices into the game's whole universe, entries outside the effective
/// universe are ignored (they cannot affect any dominance verdict), missing
/// players get the empty preference.
std::pair<Alternatives, Profile> parse_profile(const nlohmann::json& j, const GroundedGame& g);
std::pair<Alternatives, Profile> parse_profile_text(const std::string& text,
                                                    const GroundedGame& g);

nlohmann::ordered_json verdict_to_json(const Verdict& v);
nlohmann::ordered_json property_report_to_json(const PropertyReport& r);
nlohmann::ordered_json validation_to_json(const PrefixValidation& v);
nlohmann::ordered_json nakamura_to_json(const NakamuraResult& r);
nlohmann::ordered_json dominance_to_json(const Dominance& d, const Alternatives& alts,
                                         const GroundedGame& g);
nlohmann::ordered_json cycle_witness_to_json(const CycleWitness& w, const Alternatives& alts,
                                             const GroundedGame& g);
nlohmann::ordered_json verify_report_to_json(const VerifyReport& r);
nlohmann::ordered_json enum_construction_to_json(const EnumConstruction& c);

}  // namespace sg
