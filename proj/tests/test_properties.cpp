#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sg/errors.hpp"
#include "sg/properties.hpp"
#include "sg/rng.hpp"

using namespace sg;

TEST_CASE("monotonicity") {
  CHECK(is_monotonic(Game(a_game(5))).holds);
  CHECK(is_monotonic(Game(q_complement(2, 5))).holds);

  auto bad = is_monotonic(Game(TableGame(2, {{0}})));
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness_coalitions.size() == 2);
  CHECK(bad.witness_coalitions[0] == Coalition::finite({0}));
  CHECK(bad.witness_coalitions[1] == Coalition::finite({0, 1}));
}

TEST_CASE("properness and strongness") {
  CHECK(is_proper(Game(a_game(4))).holds);
  CHECK(is_strong(Game(a_game(4))).holds);

  CHECK(is_proper(Game(q_complement(2, 5))).holds);
  CHECK_FALSE(is_strong(Game(q_complement(2, 5))).holds);

  std::vector<std::vector<std::uint32_t>> all_subsets = {{}, {0}, {1}, {0, 1}};
  CHECK_FALSE(is_proper(Game(TableGame(2, all_subsets))).holds);
}

TEST_CASE("veto players and weakness") {
  CHECK(veto_players(Game(dictator(0))) == std::vector<std::uint32_t>{0});
  CHECK(is_weak(Game(dictator(0))).holds);

  CHECK(veto_players(Game(a_game(4))).empty());
  CHECK_FALSE(is_weak(Game(a_game(4))).holds);

  CHECK(veto_players(Game(unanimity(3))) == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("filter taxonomy") {
  auto unan = is_filter(Game(unanimity(3)));
  CHECK(unan.holds);

  auto a4 = is_prefilter(Game(a_game(4)));
  CHECK_FALSE(a4.holds);
  REQUIRE(a4.witness_coalitions.size() == 3);
  CHECK(a4.witness_coalitions[0] == Coalition::finite({0, 1}));
  CHECK(a4.witness_coalitions[1] == Coalition::finite({0, 2}));
  CHECK(a4.witness_coalitions[2] == Coalition::finite({1, 2, 3}));

  CHECK(is_ultrafilter(Game(dictator(0))).holds);
  CHECK_FALSE(is_ultrafilter(Game(unanimity(3))).holds);
  CHECK_FALSE(is_filter(Game(majority(3))).holds);
}

TEST_CASE("checkers agree with quantifier-expansion oracles on every game, n <= 3") {
  for (std::uint32_t n = 0; n <= 3; ++n) {
    const std::uint64_t games = 1ull << (1ull << n);
    for (std::uint64_t packed = 0; packed < games; ++packed) {
      TableGame t = TableGame::from_packed(n, packed);
      GroundedGame g = ground(Game(t));
      REQUIRE(is_monotonic(g).holds == oracle::monotonic(t));
      REQUIRE(is_proper(g).holds == oracle::proper(t));
      REQUIRE(is_strong(g).holds == oracle::strong(t));
      REQUIRE(is_weak(g).holds == oracle::weak(t));
      REQUIRE(is_prefilter(g).holds == oracle::prefilter(t));
      REQUIRE(is_filter(g).holds == oracle::filter(t));
      REQUIRE(is_ultrafilter(g).holds == oracle::ultrafilter(t));

      std::uint64_t veto = 0;
      for (std::uint32_t p : veto_players(g)) veto |= 1ull << p;
      if (!t.winning_masks().empty()) REQUIRE(veto == oracle::veto_mask(t));

      bool uf = is_ultrafilter(g).holds, fi = is_filter(g).holds, pf = is_prefilter(g).holds;
      REQUIRE((!uf || fi));
      REQUIRE((!fi || pf));
    }
  }
}

TEST_CASE("finite anonymity") {
  CHECK(is_finitely_anonymous(Game(q_complement(2, 5)), 5).holds);
  CHECK(is_finitely_anonymous(Game(majority(3)), 3).holds);

  auto dict = is_finitely_anonymous(Game(dictator(0)), 2);
  CHECK_FALSE(dict.holds);
  REQUIRE(dict.witness_permutation.has_value());
  CHECK(dict.witness_permutation->apply(0) == 1);
  CHECK(dict.witness_permutation->apply(1) == 0);
  CHECK(dict.witness_coalitions[0] == Coalition::finite({0}));

  // threshold_game(2) widened to three players: {0} wins but {2} loses.
  TableGame widened = explicit_universe_table(Game(threshold_game(2)));
  TableGame over3(3, {});
  {
    std::vector<bool> table(8);
    for (std::uint64_t m = 0; m < 8; ++m) table[m] = widened.wins(m & 0b11);
    over3 = TableGame::from_mask_table(3, table);
  }
  auto th = is_finitely_anonymous(Game(over3), 3);
  CHECK_FALSE(th.holds);
  REQUIRE(th.witness_permutation.has_value());
  CHECK(th.witness_permutation->apply(0) == 2);
  CHECK(th.witness_coalitions[0] == Coalition::finite({0}));
}

TEST_CASE("carrier checks") {
  CHECK(is_carrier(Game(dictator(0)), {0}).holds);
  CHECK(find_min_carrier(Game(threshold_game(3))) == std::vector<std::uint32_t>{0, 1, 2});

  auto not_carrier = is_carrier(Game(a_game(4)), {0});
  CHECK_FALSE(not_carrier.holds);
  REQUIRE(not_carrier.witness_coalitions.size() == 1);
  // First violation in mask order: {0,1} wins but its restriction to {0}
  // loses. ({1,2,3} against the empty set certifies the same failure.)
  CHECK(not_carrier.witness_coalitions[0] == Coalition::finite({0, 1}));
  TableGame a4 = a_game(4);
  std::uint64_t witness_mask = 0;
  for (std::uint32_t p : not_carrier.witness_coalitions[0].finite_members())
    witness_mask |= 1ull << p;
  CHECK(a4.wins(witness_mask) != a4.wins(witness_mask & 0b0001));

  auto found = find_min_carrier(Game(a_game(4)));
  REQUIRE(found.has_value());
  CHECK(is_carrier(Game(a_game(4)), *found).holds);
}

TEST_CASE("finite and cofinite examples") {
  CHECK(find_finite_winning(Game(a_game(4))) == Coalition::finite({0, 1}));
  CHECK(find_finite_losing(Game(q_complement(1, 3))) == Coalition::empty_set());

  PrefixGame dict = extract_determining_strings(TableGame(2, {{0}, {0, 1}}));
  CHECK(find_cofinite_winning(Game(dict)) == Coalition::all_players());
  CHECK(find_cofinite_losing(Game(dict)) == Coalition::cofinite_excluding({0}));
  CHECK(find_finite_winning(Game(dict)) == Coalition::finite({0}));
  CHECK(find_finite_losing(Game(dict)) == Coalition::empty_set());
}

TEST_CASE("nonanonymity witness pairs") {
  // threshold_game(2): the string 1 is already winning determining, the
  // shortest losing run of zeros is 00.
  PrefixGame th2 = extract_determining_strings(explicit_universe_table(Game(threshold_game(2))));
  auto [win2, lose2] = nonanonymity_witness(th2);
  CHECK(win2 == Coalition::finite({0}));
  CHECK(lose2 == Coalition::finite({2}));

  PrefixGame dict = extract_determining_strings(TableGame(2, {{0}, {0, 1}}));
  auto [win1, lose1] = nonanonymity_witness(dict);
  CHECK(win1 == Coalition::finite({0}));
  CHECK(lose1 == Coalition::finite({1}));

  // Unanimity over two players: 11 wins, 0 loses, so the block shifts by one.
  PrefixGame unan = extract_determining_strings(unanimity(2));
  auto [win3, lose3] = nonanonymity_witness(unan);
  CHECK(win3 == Coalition::finite({0, 1}));
  CHECK(lose3 == Coalition::finite({1, 2}));

  // Everything losing: the full set fails the winning precondition.
  CHECK_THROWS_AS(nonanonymity_witness(extract_determining_strings(TableGame(2, {}))),
                  analysis_error);
}

TEST_CASE("witness pairs refute finite anonymity for every qualifying game, n <= 3") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const std::uint64_t games = 1ull << (1ull << n);
    for (std::uint64_t packed = 0; packed < games; ++packed) {
      TableGame t = TableGame::from_packed(n, packed);
      const std::uint64_t full = (1ull << n) - 1;
      if (!t.wins(full) || t.wins(0)) continue;
      PrefixGame p = extract_determining_strings(t);
      auto [winner, loser] = nonanonymity_witness(p);
      REQUIRE(cardinality_class(winner).count == cardinality_class(loser).count);
      REQUIRE(eval_prefix(p, winner).is_winning());
      REQUIRE(eval_prefix(p, loser).is_losing());

      std::uint32_t support = cardinality_class(winner).count +
                              loser.prefix().length() - winner.prefix().length();
      auto report = is_finitely_anonymous(Game(p), std::max(2u * p.depth(), support));
      REQUIRE_FALSE(report.holds);
    }
  }
}

TEST_CASE("property checks require total games") {
  PrefixGame partial(2, {BitString::parse("00")}, {BitString::parse("11")});
  CHECK_THROWS_AS(is_monotonic(Game(partial)), analysis_error);
  CHECK_THROWS_AS(find_finite_winning(Game(partial)), analysis_error);
}
