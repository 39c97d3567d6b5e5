#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sg/cli.hpp"
#include "sg/errors.hpp"
#include "sg/json_io.hpp"

using namespace sg;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path("sg_test_" + name) {
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("game descriptions round-trip through JSON") {
  const char* descriptions[] = {
      R"({"type":"table","n":3,"winning":[[0,1],[1,2],[0,1,2]]})",
      R"({"type":"carrier","carrier":[0,2],"winning_on_carrier":[[0],[0,2]]})",
      R"({"type":"prefix","depth":3,"t0":["00","010","100"],"t1":["011","101","11"]})",
  };
  for (const char* text : descriptions) {
    ParsedGame first = parse_game_text(text);
    auto emitted = game_to_json(first.game).dump();
    ParsedGame second = parse_game_text(emitted);
    CHECK(game_to_json(second.game).dump() == emitted);
  }
}

TEST_CASE("named games parse") {
  auto named = parse_game_text(R"({"type":"named","name":"a_game","params":{"n":4}})");
  CHECK(std::holds_alternative<TableGame>(named.game));
  CHECK(eval_game(named.game, Coalition::finite({0, 1})).is_winning());

  CHECK_THROWS_AS(parse_game_text(R"({"type":"named","name":"nope","params":{}})"),
                  parse_error);
  CHECK_THROWS_AS(parse_game_text(R"({"type":"named","name":"threshold","params":{"k":1}})"),
                  parse_error);
  CHECK_THROWS_AS(parse_game_text("not json"), parse_error);
  CHECK_THROWS_AS(parse_game_text(R"({"type":"mystery"})"), parse_error);
  CHECK_THROWS_AS(parse_game_text(R"({"type":"table","n":2,"winning":[[7]]})"), parse_error);
}

TEST_CASE("enum_construction games carry their trace") {
  auto parsed = parse_game_text(R"({"type":"enum_construction","entries":[[2,1],[0,0]]})");
  REQUIRE(parsed.construction.has_value());
  CHECK(parsed.construction->trace.size() == 2);
  CHECK_THROWS_AS(parse_game_text(R"({"type":"enum_construction","entries":[[2,1],[2,0]]})"),
                  parse_error);
}

TEST_CASE("profiles parse against the game universe") {
  GroundedGame g = ground(parse_game_text(R"({"type":"named","name":"majority",
                                              "params":{"n":3}})").game);
  auto [alts, profile] = parse_profile_text(
      R"({"alternatives":["a","b"],
          "players":{"0":[["a","b"]],"1":[["a","b"]],"2":[["b","a"]],"9":[["b","a"]]}})",
      g);
  CHECK(alts.count() == 2);
  CHECK(profile.of(0).prefers(0, 1));
  CHECK(profile.of(2).prefers(1, 0));

  CHECK_THROWS_AS(parse_profile_text(R"({"alternatives":["a"],"players":{}})", g),
                  parse_error);
  CHECK_THROWS_AS(
      parse_profile_text(R"({"alternatives":["a","b"],"players":{"0":[["a","z"]]}})", g),
      parse_error);
  CHECK_THROWS_AS(
      parse_profile_text(
          R"({"alternatives":["a","b"],"players":{"0":[["a","b"],["b","a"]]}})", g),
      parse_error);
}

TEST_CASE("eval command") {
  TempFile game("a4.json", R"({"type":"named","name":"a_game","params":{"n":4}})");
  auto winning = cli({"eval", "--game", game.path, "--coalition", "{0,1}"});
  CHECK(winning.status == 0);
  CHECK(winning.out == "Winning\n");

  auto losing = cli({"eval", "--game", game.path, "--coalition", "{2,3}"});
  CHECK(losing.out == "Losing\n");

  auto json_form = cli({"eval", "--game", game.path, "--coalition", "{0,1}", "--json"});
  CHECK(json_form.out.find("\"verdict\": \"winning\"") != std::string::npos);

  TempFile empty_losing("empty.json", R"({"type":"table","n":2,"winning":[[0],[0,1]]})");
  auto empty = cli({"eval", "--game", empty_losing.path, "--coalition", "{}"});
  CHECK(empty.out == "Losing\n");
}

TEST_CASE("exit codes distinguish parse and analysis failures") {
  TempFile bad("bad.json", R"({"type":"named","name":"no_such_game"})");
  auto unknown = cli({"eval", "--game", bad.path, "--coalition", "{}"});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("unknown game name") != std::string::npos);

  TempFile malformed("malformed.json", "{{{");
  auto broken = cli({"eval", "--game", malformed.path, "--coalition", "{}"});
  CHECK(broken.status == 2);
  CHECK(broken.err.find("malformed JSON") != std::string::npos);

  TempFile inconsistent("inconsistent.json", R"({"type":"table","n":2,"winning":[[5]]})");
  auto outside = cli({"eval", "--game", inconsistent.path, "--coalition", "{}"});
  CHECK(outside.status == 2);
  CHECK(outside.err.find("player outside universe") != std::string::npos);

  // Non-total prefix game: parses fine, fails at analysis time.
  TempFile partial("partial.json", R"({"type":"prefix","depth":2,"t0":["00"],"t1":["11"]})");
  auto not_total = cli({"analyze", "--game", partial.path});
  CHECK(not_total.status == 1);
  CHECK(not_total.err.find("game not total") != std::string::npos);

  auto usage = cli({"frobnicate"});
  CHECK(usage.status == 2);

  auto missing = cli({"eval", "--coalition", "{}"});
  CHECK(missing.status == 2);
  CHECK(missing.err.find("--game") != std::string::npos);
}

TEST_CASE("nakamura command emits the contract shape") {
  TempFile game("th3.json", R"({"type":"named","name":"threshold","params":{"k":3}})");
  auto r = cli({"nakamura", "--game", game.path});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"nu\": 3") != std::string::npos);
  CHECK(r.out.find("\"witness\"") != std::string::npos);

  TempFile dict("dict.json", R"({"type":"named","name":"dictator","params":{"player":0}})");
  auto weak = cli({"nakamura", "--game", dict.path});
  CHECK(weak.out.find("\"nu\": \"infinite\"") != std::string::npos);
}

TEST_CASE("extract emits the minimal representation") {
  TempFile game("a3.json", R"({"type":"named","name":"a_game","params":{"n":3}})");
  auto r = cli({"extract", "--game", game.path});
  CHECK(r.status == 0);
  ParsedGame back = parse_game_text(r.out);
  const auto& p = std::get<PrefixGame>(back.game);
  CHECK(p.depth() == 3);
  CHECK(p.t0().size() == 3);
  CHECK(p.t1().size() == 3);
}

TEST_CASE("core command reports dominance and cycles") {
  TempFile game("maj3.json", R"({"type":"named","name":"majority","params":{"n":3}})");
  TempFile profile("condorcet.json", R"({
    "alternatives": ["a", "b", "c"],
    "players": {
      "0": [["a","b"],["b","c"],["a","c"]],
      "1": [["b","c"],["c","a"],["b","a"]],
      "2": [["c","a"],["a","b"],["c","b"]]
    }})");
  auto r = cli({"core", "--game", game.path, "--profile", profile.path});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"core\": []") != std::string::npos);
  CHECK(r.out.find("\"cycle\"") != std::string::npos);
}

TEST_CASE("witness-cycle and verify-nakamura commands") {
  TempFile game("th3.json", R"({"type":"named","name":"threshold","params":{"k":3}})");
  auto witness = cli({"witness-cycle", "--game", game.path, "--alternatives", "3"});
  CHECK(witness.status == 0);
  CHECK(witness.out.find("\"core\": []") != std::string::npos);

  auto verify = cli({"verify-nakamura", "--game", game.path, "--alternatives", "3",
                     "--mode", "exhaustive"});
  CHECK(verify.status == 0);
  CHECK(verify.out.find("\"total_violations\": 0") != std::string::npos);

  TempFile dict("dict.json", R"({"type":"named","name":"dictator","params":{"player":0}})");
  auto weak_witness = cli({"witness-cycle", "--game", dict.path, "--alternatives", "3"});
  CHECK(weak_witness.status == 1);
}

TEST_CASE("enum-sim replays the construction") {
  TempFile game("enum.json", R"({"type":"enum_construction","entries":[[0,1],[2,0]]})");
  auto r = cli({"enum-sim", "--game", game.path});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"stages\"") != std::string::npos);
  CHECK(r.out.find("\"carrier_refutations\"") != std::string::npos);
  CHECK(r.out.find("\"winning_extension\": \"1\"") != std::string::npos);

  TempFile table("t.json", R"({"type":"named","name":"majority","params":{"n":3}})");
  auto wrong = cli({"enum-sim", "--game", table.path});
  CHECK(wrong.status == 2);
}

TEST_CASE("identical requests produce byte-identical reports") {
  TempFile game("a4.json", R"({"type":"named","name":"a_game","params":{"n":4}})");
  auto first = cli({"analyze", "--game", game.path, "--json"});
  auto second = cli({"analyze", "--game", game.path, "--json"});
  CHECK(first.status == 0);
  CHECK(first.out == second.out);

  auto n1 = cli({"nakamura", "--game", game.path});
  auto n2 = cli({"nakamura", "--game", game.path});
  CHECK(n1.out == n2.out);
}
