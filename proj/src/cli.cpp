#include "sg/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sg/errors.hpp"
#include "sg/json_io.hpp"

namespace sg {

namespace {

using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

struct Options {
  std::string game_path;
  std::string profile_path;
  std::string coalition_text;
  std::uint32_t alternatives = 0;
  std::string mode = "exhaustive";
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  std::uint32_t max_support = 4;
  bool json_output = false;
};

ParsedGame load_game(const Options& opt) {
  if (opt.game_path.empty()) throw parse_error("--game FILE is required");
  return parse_game_text(slurp(opt.game_path));
}

SearchMode search_mode(const Options& opt) {
  SearchMode mode;
  if (opt.mode == "exhaustive")
    mode.kind = SearchMode::Kind::Exhaustive;
  else if (opt.mode == "sampled")
    mode.kind = SearchMode::Kind::Sampled;
  else
    throw parse_error("--mode must be exhaustive or sampled");
  mode.samples = opt.samples;
  mode.seed = opt.seed;
  return mode;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  ParsedGame parsed = load_game(opt);
  if (opt.coalition_text.empty()) throw parse_error("--coalition STR is required");
  Coalition c = Coalition::parse(opt.coalition_text);
  Verdict v = eval_game(parsed.game, c);
  if (opt.json_output) {
    emit(out, verdict_to_json(v));
  } else {
    switch (v.outcome()) {
      case Outcome::Winning: out << "Winning\n"; break;
      case Outcome::Losing: out << "Losing\n"; break;
      case Outcome::Undetermined: out << "Undetermined (" << v.reason() << ")\n"; break;
    }
  }
  return 0;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  ParsedGame parsed = load_game(opt);
  GroundedGame grounded = ground(parsed.game);

  std::vector<PropertyReport> reports;
  reports.push_back(is_monotonic(grounded));
  reports.push_back(is_proper(grounded));
  reports.push_back(is_strong(grounded));
  reports.push_back(is_weak(grounded));
  reports.push_back(is_prefilter(grounded));
  reports.push_back(is_filter(grounded));
  reports.push_back(is_ultrafilter(grounded));
  reports.push_back(is_finitely_anonymous(parsed.game, opt.max_support));

  auto veto = veto_players(grounded);
  auto carrier = find_min_carrier(grounded);

  if (opt.json_output) {
    ordered_json j;
    ordered_json props = ordered_json::array();
    for (const auto& r : reports) props.push_back(property_report_to_json(r));
    j["properties"] = std::move(props);
    j["veto_players"] = veto;
    j["min_carrier"] = carrier ? ordered_json(*carrier) : ordered_json(nullptr);
    emit(out, j);
  } else {
    for (const auto& r : reports)
      out << r.property << ": " << (r.holds ? "yes" : "no")
          << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
    out << "veto players:";
    for (auto p : veto) out << " " << p;
    out << "\n";
    if (carrier) {
      out << "minimal carrier:";
      for (auto p : *carrier) out << " " << p;
      out << "\n";
    }
  }
  return 0;
}

int cmd_extract(const Options& opt, std::ostream& out) {
  ParsedGame parsed = load_game(opt);
  PrefixGame extracted = extract_determining_strings(explicit_universe_table(parsed.game));
  emit(out, game_to_json(Game(extracted)));
  return 0;
}

int cmd_nakamura(const Options& opt, std::ostream& out) {
  ParsedGame parsed = load_game(opt);
  emit(out, nakamura_to_json(nakamura_number(parsed.game)));
  return 0;
}

int cmd_core(const Options& opt, std::ostream& out) {
  ParsedGame parsed = load_game(opt);
  GroundedGame grounded = ground(parsed.game);
  if (opt.profile_path.empty()) throw parse_error("--profile FILE is required");
  auto [alts, profile] = parse_profile_text(slurp(opt.profile_path), grounded);
  Dominance d = dominance(grounded, alts, profile);
  auto core = core_alternatives(grounded, alts, profile);

  ordered_json j;
  ordered_json core_labels = ordered_json::array();
  for (auto x : core) core_labels.push_back(alts.labels[x]);
  j["core"] = std::move(core_labels);
  j["dominance"] = dominance_to_json(d, alts, grounded);
  auto cycle = find_cycle(d);
  if (cycle) {
    ordered_json labels = ordered_json::array();
    for (auto x : *cycle) labels.push_back(alts.labels[x]);
    j["cycle"] = std::move(labels);
  } else {
    j["cycle"] = nullptr;
  }
  emit(out, j);
  return 0;
}

int cmd_witness_cycle(const Options& opt, std::ostream& out) {
  ParsedGame parsed = load_game(opt);
  GroundedGame grounded = ground(parsed.game);
  std::uint32_t r = opt.alternatives;
  if (r == 0) {
    NakamuraResult nak = nakamura_number(grounded);
    if (!nak.finite) throw analysis_error("no witness exists: the game is weak");
    r = nak.value;
  }
  Alternatives alts = Alternatives::numbered(r);
  CycleWitness witness = cycle_profile_witness(parsed.game, alts);
  ordered_json j = cycle_witness_to_json(witness, alts, grounded);
  ordered_json labels = ordered_json::array();
  for (const auto& l : alts.labels) labels.push_back(l);
  j["alternatives"] = std::move(labels);
  emit(out, j);
  return 0;
}

int cmd_verify_nakamura(const Options& opt, std::ostream& out) {
  ParsedGame parsed = load_game(opt);
  std::uint32_t r_max = opt.alternatives ? opt.alternatives : 3;
  VerifyReport report = verify_nakamura(parsed.game, r_max, search_mode(opt));
  emit(out, verify_report_to_json(report));
  return report.total_violations == 0 ? 0 : 1;
}

int cmd_enum_sim(const Options& opt, std::ostream& out) {
  ParsedGame parsed = load_game(opt);
  if (!parsed.construction)
    throw parse_error("enum-sim needs a game of type \"enum_construction\"");
  emit(out, enum_construction_to_json(*parsed.construction));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"simple-game analysis tool"};
  app.require_subcommand(1);

  Options opt;
  std::string command;
  for (const char* name : {"analyze", "extract", "nakamura", "core", "witness-cycle",
                           "verify-nakamura", "enum-sim", "eval"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--game", opt.game_path, "game description file (JSON)");
    sub->add_option("--profile", opt.profile_path, "profile file (JSON)");
    sub->add_option("--coalition", opt.coalition_text, "coalition, e.g. {0,2} or co{1} or 101+0");
    sub->add_option("--alternatives", opt.alternatives, "number of alternatives");
    sub->add_option("--mode", opt.mode, "exhaustive or sampled");
    sub->add_option("--samples", opt.samples, "profiles per sampled round");
    sub->add_option("--seed", opt.seed, "seed for sampled searches");
    sub->add_option("--max-support", opt.max_support, "finite-anonymity support bound");
    sub->add_flag("--json", opt.json_output, "machine-readable output");
    sub->callback([&command, name] { command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (command == "eval") return cmd_eval(opt, out);
    if (command == "analyze") return cmd_analyze(opt, out);
    if (command == "extract") return cmd_extract(opt, out);
    if (command == "nakamura") return cmd_nakamura(opt, out);
    if (command == "core") return cmd_core(opt, out);
    if (command == "witness-cycle") return cmd_witness_cycle(opt, out);
    if (command == "verify-nakamura") return cmd_verify_nakamura(opt, out);
    if (command == "enum-sim") return cmd_enum_sim(opt, out);
    err << "usage error: unknown command\n";
    return 2;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const analysis_error& e) {
    err << "analysis error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sg
