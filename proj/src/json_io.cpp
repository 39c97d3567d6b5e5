#include "sg/json_io.hpp"

#include <algorithm>

#include "sg/errors.hpp"

namespace sg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw parse_error(what); }

std::uint32_t get_uint(const json& j, const char* field) {
  if (!j.contains(field)) bad(std::string("missing field \"") + field + "\"");
  const auto& v = j.at(field);
  if (!v.is_number_unsigned()) bad(std::string("field \"") + field + "\" must be a nonnegative integer");
  return v.get<std::uint32_t>();
}

std::vector<std::vector<std::uint32_t>> get_sets(const json& j, const char* field) {
  if (!j.contains(field)) bad(std::string("missing field \"") + field + "\"");
  const auto& v = j.at(field);
  if (!v.is_array()) bad(std::string("field \"") + field + "\" must be an array of player lists");
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& s : v) {
    if (!s.is_array()) bad(std::string("field \"") + field + "\" must be an array of player lists");
    std::vector<std::uint32_t> members;
    for (const auto& p : s) {
      if (!p.is_number_unsigned()) bad("player indices must be nonnegative integers");
      members.push_back(p.get<std::uint32_t>());
    }
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<BitString> get_strings(const json& j, const char* field) {
  if (!j.contains(field)) bad(std::string("missing field \"") + field + "\"");
  std::vector<BitString> out;
  for (const auto& s : j.at(field)) {
    if (!s.is_string()) bad(std::string("field \"") + field + "\" must hold 0/1 strings");
    out.push_back(BitString::parse(s.get<std::string>()));
  }
  return out;
}

Game parse_named(const json& j) {
  if (!j.contains("name") || !j.at("name").is_string()) bad("named game needs a \"name\"");
  const std::string name = j.at("name").get<std::string>();
  const json params = j.value("params", json::object());
  try {
    if (name == "dictator") return dictator(get_uint(params, "player"));
    if (name == "unanimity") return unanimity(get_uint(params, "n"));
    if (name == "q_complement")
      return q_complement(get_uint(params, "q"), get_uint(params, "n"));
    if (name == "threshold") return threshold_game(get_uint(params, "k"));
    if (name == "a_game") return a_game(get_uint(params, "n"));
    if (name == "majority") return majority(get_uint(params, "n"));
  } catch (const std::invalid_argument& e) {
    bad(std::string("bad parameters for named game \"") + name + "\": " + e.what());
  }
  bad("unknown game name \"" + name + "\"");
}

std::string coalition_text(const Coalition& c) { return c.to_string(); }

ordered_json coalitions_json(const std::vector<Coalition>& cs) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : cs) arr.push_back(coalition_text(c));
  return arr;
}

}  // namespace

ParsedGame parse_game(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    bad("game description needs a \"type\"");
  const std::string type = j.at("type").get<std::string>();
  try {
    if (type == "table") {
      std::uint32_t n = get_uint(j, "n");
      return {Game(TableGame(n, get_sets(j, "winning"))), std::nullopt};
    }
    if (type == "carrier") {
      if (!j.contains("carrier")) bad("missing field \"carrier\"");
      std::vector<std::uint32_t> carrier;
      for (const auto& p : j.at("carrier")) carrier.push_back(p.get<std::uint32_t>());
      return {Game(CarrierGame(carrier, get_sets(j, "winning_on_carrier"))), std::nullopt};
    }
    if (type == "prefix") {
      std::uint32_t depth = get_uint(j, "depth");
      return {Game(PrefixGame(depth, get_strings(j, "t0"), get_strings(j, "t1"))),
              std::nullopt};
    }
    if (type == "named") return {parse_named(j), std::nullopt};
    if (type == "enum_construction") {
      if (!j.contains("entries") || !j.at("entries").is_array())
        bad("enum_construction needs an \"entries\" array");
      std::vector<EnumEntry> entries;
      for (const auto& e : j.at("entries")) {
        if (!e.is_array() || e.size() != 2) bad("entries must be [k, v] pairs");
        entries.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<int>()});
      }
      EnumConstruction c = enum_construction(entries);
      return {Game(c.game), std::move(c)};
    }
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception& e) {
    bad(std::string("bad ") + type + " game: " + e.what());
  }
  bad("unknown game type \"" + type + "\"");
}

ParsedGame parse_game_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  return parse_game(j);
}

nlohmann::ordered_json game_to_json(const Game& g) {
  ordered_json out;
  if (const auto* table = std::get_if<TableGame>(&g)) {
    out["type"] = "table";
    out["n"] = table->universe_size();
    ordered_json winning = ordered_json::array();
    for (std::uint64_t m : table->winning_masks()) {
      ordered_json set = ordered_json::array();
      for (std::uint32_t p = 0; p < table->universe_size(); ++p)
        if ((m >> p) & 1ull) set.push_back(p);
      winning.push_back(std::move(set));
    }
    out["winning"] = std::move(winning);
    return out;
  }
  if (const auto* carrier = std::get_if<CarrierGame>(&g)) {
    out["type"] = "carrier";
    out["carrier"] = carrier->carrier();
    ordered_json winning = ordered_json::array();
    for (std::uint64_t m = 0; m < (1ull << carrier->carrier().size()); ++m) {
      if (!carrier->wins_position_mask(m)) continue;
      ordered_json set = ordered_json::array();
      for (std::size_t p = 0; p < carrier->carrier().size(); ++p)
        if ((m >> p) & 1ull) set.push_back(carrier->carrier()[p]);
      winning.push_back(std::move(set));
    }
    out["winning_on_carrier"] = std::move(winning);
    return out;
  }
  const auto& prefix = std::get<PrefixGame>(g);
  out["type"] = "prefix";
  out["depth"] = prefix.depth();
  ordered_json t0 = ordered_json::array(), t1 = ordered_json::array();
  for (const auto& s : prefix.t0()) t0.push_back(s.to_string());
  for (const auto& s : prefix.t1()) t1.push_back(s.to_string());
  out["t0"] = std::move(t0);
  out["t1"] = std::move(t1);
  return out;
}

std::pair<Alternatives, Profile> parse_profile(const json& j, const GroundedGame& g) {
  if (!j.is_object() || !j.contains("alternatives")) bad("profile needs \"alternatives\"");
  std::vector<std::string> labels;
  for (const auto& l : j.at("alternatives")) {
    if (!l.is_string()) bad("alternative labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  Alternatives alts = [&] {
    try {
      return Alternatives(labels);
    } catch (const std::invalid_argument& e) {
      bad(std::string("bad alternatives: ") + e.what());
    }
  }();

  auto index_of = [&](const std::string& label) -> std::uint32_t {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) bad("unknown alternative \"" + label + "\" in profile");
    return static_cast<std::uint32_t>(it - labels.begin());
  };

  Profile profile(alts.count(), g.players.size());
  const json players = j.value("players", json::object());
  if (!players.is_object()) bad("profile \"players\" must map player indices to pair lists");
  for (const auto& [key, pairs] : players.items()) {
    std::uint32_t player = 0;
    try {
      player = static_cast<std::uint32_t>(std::stoul(key));
    } catch (...) {
      bad("player keys must be numeric, got \"" + key + "\"");
    }
    auto pos = std::find(g.players.begin(), g.players.end(), player);
    if (pos == g.players.end()) continue;  // beyond the effective universe
    if (!pairs.is_array()) bad("preference of player " + key + " must be a pair list");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rel;
    for (const auto& pr : pairs) {
      if (!pr.is_array() || pr.size() != 2) bad("preference pairs must be [better, worse]");
      rel.push_back({index_of(pr.at(0).get<std::string>()),
                     index_of(pr.at(1).get<std::string>())});
    }
    try {
      profile.set(static_cast<std::size_t>(pos - g.players.begin()),
                  Preference::from_pairs(alts.count(), rel));
    } catch (const std::invalid_argument& e) {
      bad("bad preference for player " + key + ": " + e.what());
    }
  }
  return {std::move(alts), std::move(profile)};
}

std::pair<Alternatives, Profile> parse_profile_text(const std::string& text,
                                                    const GroundedGame& g) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  return parse_profile(j, g);
}

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
  ordered_json out;
  switch (v.outcome()) {
    case Outcome::Winning: out["verdict"] = "winning"; break;
    case Outcome::Losing: out["verdict"] = "losing"; break;
    case Outcome::Undetermined:
      out["verdict"] = "undetermined";
      out["reason"] = v.reason();
      break;
  }
  return out;
}

nlohmann::ordered_json property_report_to_json(const PropertyReport& r) {
  ordered_json out;
  out["property"] = r.property;
  out["holds"] = r.holds;
  if (r.witness_coalitions.empty() && r.witness_players.empty() && !r.witness_permutation &&
      r.detail.empty()) {
    out["witness"] = nullptr;
    return out;
  }
  ordered_json witness;
  if (!r.witness_coalitions.empty()) witness["coalitions"] = coalitions_json(r.witness_coalitions);
  if (!r.witness_players.empty()) witness["players"] = r.witness_players;
  if (r.witness_permutation) {
    ordered_json mapping = ordered_json::array();
    for (std::uint32_t i = 0; i < r.witness_permutation->domain_size(); ++i)
      mapping.push_back(r.witness_permutation->apply(i));
    witness["permutation"] = std::move(mapping);
  }
  if (!r.detail.empty()) witness["detail"] = r.detail;
  out["witness"] = std::move(witness);
  return out;
}

nlohmann::ordered_json validation_to_json(const PrefixValidation& v) {
  ordered_json out;
  out["well_formed"] = v.well_formed;
  out["total"] = v.total;
  out["violations"] = v.violations;
  return out;
}

nlohmann::ordered_json nakamura_to_json(const NakamuraResult& r) {
  ordered_json out;
  if (r.finite)
    out["nu"] = r.value;
  else
    out["nu"] = "infinite";
  ordered_json witness = ordered_json::array();
  for (const auto& c : r.witness) witness.push_back(c.finite_members());
  out["witness"] = std::move(witness);
  return out;
}

nlohmann::ordered_json dominance_to_json(const Dominance& d, const Alternatives& alts,
                                         const GroundedGame& g) {
  ordered_json arr = ordered_json::array();
  for (std::uint32_t x = 0; x < d.r; ++x)
    for (std::uint32_t y = 0; y < d.r; ++y)
      if (d.dominates(x, y)) {
        ordered_json pair;
        pair["dominant"] = alts.labels[x];
        pair["dominated"] = alts.labels[y];
        pair["coalition"] = coalition_text(g.coalition_of(*d.certificates[x * d.r + y]));
        arr.push_back(std::move(pair));
      }
  return arr;
}

nlohmann::ordered_json cycle_witness_to_json(const CycleWitness& w, const Alternatives& alts,
                                             const GroundedGame& g) {
  ordered_json out;
  out["family"] = coalitions_json(w.family);
  out["blocks"] = w.blocks;
  ordered_json profile;
  for (std::size_t i = 0; i < w.profile.player_count(); ++i) {
    ordered_json pairs = ordered_json::array();
    const auto& pref = w.profile.of(i);
    for (std::uint32_t x = 0; x < alts.count(); ++x)
      for (std::uint32_t y = 0; y < alts.count(); ++y)
        if (pref.prefers(x, y))
          pairs.push_back(ordered_json::array({alts.labels[x], alts.labels[y]}));
    profile[std::to_string(g.players[i])] = std::move(pairs);
  }
  out["profile"] = std::move(profile);
  out["dominance"] = dominance_to_json(w.induced, alts, g);
  out["core"] = ordered_json::array();
  return out;
}

nlohmann::ordered_json verify_report_to_json(const VerifyReport& r) {
  ordered_json out;
  if (r.nu_finite)
    out["nu"] = r.nu;
  else
    out["nu"] = "infinite";
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json rj;
    rj["alternatives"] = row.r;
    rj["method"] = row.method;
    rj["profiles_checked"] = row.profiles_checked;
    rj["violations"] = row.violations;
    if (row.method == "witness") rj["witness_core_empty"] = row.witness_core_empty;
    rows.push_back(std::move(rj));
  }
  out["rows"] = std::move(rows);
  out["total_violations"] = r.total_violations;
  return out;
}

nlohmann::ordered_json enum_construction_to_json(const EnumConstruction& c) {
  ordered_json out;
  out["depth"] = c.game.depth();
  ordered_json stages = ordered_json::array();
  for (const auto& stage : c.trace) {
    ordered_json sj;
    sj["s"] = stage.s;
    sj["k"] = stage.k;
    sj["v"] = stage.v;
    sj["cutoff"] = stage.cutoff;
    ordered_json strings = ordered_json::array();
    for (const auto& str : stage.strings) strings.push_back(str.to_string());
    sj["strings"] = std::move(strings);
    stages.push_back(std::move(sj));
  }
  out["stages"] = std::move(stages);
  out["game"] = game_to_json(Game(c.game));
  // Totality relative to the injected entries only: a finite enumeration
  // cannot bar every path.
  out["total"] = validate_prefix_game(c.game).total;
  out["disagreeing_set"] = c.disagreeing_set().to_string();
  ordered_json refutations = ordered_json::array();
  for (const auto& ref : no_finite_carrier_witness(c)) {
    ordered_json rj;
    rj["l"] = ref.l;
    rj["winning_extension"] = ref.winning_extension.to_string();
    rj["losing_extension"] = ref.losing_extension.to_string();
    refutations.push_back(std::move(rj));
  }
  out["carrier_refutations"] = std::move(refutations);
  return out;
}

}  // namespace sg
