#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "sg/errors.hpp"
#include "sg/nakamura.hpp"
#include "sg/properties.hpp"
#include "sg/rng.hpp"

using namespace sg;

namespace {

bool intersection_empty(const GroundedGame& g, const std::vector<Coalition>& family) {
  std::uint64_t inter = g.universe_mask();
  for (const auto& c : family) inter &= g.position_mask(c);
  return inter == 0;
}

}  // namespace

TEST_CASE("threshold games hit every value") {
  for (std::uint32_t k = 2; k <= 6; ++k) {
    NakamuraResult r = nakamura_number(Game(threshold_game(k)));
    REQUIRE(r.finite);
    REQUIRE(r.value == k);
    REQUIRE(r.witness.size() == k);
  }
}

TEST_CASE("the section-six game sits at three") {
  NakamuraResult r = nakamura_number(Game(a_game(4)));
  REQUIRE(r.finite);
  CHECK(r.value == 3);
  REQUIRE(r.witness.size() == 3);
  CHECK(r.witness[0] == Coalition::finite({0, 1}));
  CHECK(r.witness[1] == Coalition::finite({0, 2}));
  CHECK(r.witness[2] == Coalition::finite({1, 2, 3}));
}

TEST_CASE("weak games get the infinite sentinel") {
  NakamuraResult dict = nakamura_number(Game(dictator(0)));
  CHECK_FALSE(dict.finite);
  CHECK(dict.exceeds(1u << 20));

  NakamuraResult unan = nakamura_number(Game(unanimity(3)));
  CHECK_FALSE(unan.finite);

  NakamuraResult none = nakamura_number(Game(TableGame(3, {})));
  CHECK_FALSE(none.finite);
}

TEST_CASE("games with a winning empty coalition are rejected") {
  CHECK_THROWS_AS(nakamura_number(Game(TableGame(2, {{}, {0}}))), analysis_error);
}

TEST_CASE("ceiling bound") {
  CHECK(ceiling_bound(Game(threshold_game(3))) == 3);
  CHECK(ceiling_bound(Game(a_game(4))) == 3);
  CHECK(ceiling_bound(Game(majority(3))) == 3);
  CHECK_THROWS_AS(ceiling_bound(Game(dictator(0))), analysis_error);
  CHECK_THROWS_AS(ceiling_bound(Game(TableGame(3, {}))), analysis_error);
}

TEST_CASE("agreement with the subfamily oracle, all games n <= 3") {
  for (std::uint32_t n = 0; n <= 3; ++n) {
    const std::uint64_t games = 1ull << (1ull << n);
    for (std::uint64_t packed = 0; packed < games; ++packed) {
      TableGame t = TableGame::from_packed(n, packed);
      if (t.wins(0)) continue;  // outside the definition space
      auto expected = oracle::nakamura_by_subfamilies(t);
      NakamuraResult got = nakamura_number(Game(t));
      if (!expected) {
        REQUIRE_FALSE(got.finite);
        continue;
      }
      REQUIRE(got.finite);
      REQUIRE(got.value == expected->size);
    }
  }
}

TEST_CASE("witness families are minimal, seeded n = 4 games") {
  Rng rng(37);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 300; ++trial) {
    TableGame t = TableGame::from_packed(4, rng.next());
    if (t.wins(0)) continue;
    GroundedGame g = ground(Game(t));
    NakamuraResult r = nakamura_number(g);
    if (!r.finite) continue;
    ++checked;
    REQUIRE(r.witness.size() == r.value);
    REQUIRE(intersection_empty(g, r.witness));
    for (std::size_t drop = 0; drop < r.witness.size(); ++drop) {
      std::vector<Coalition> reduced;
      for (std::size_t i = 0; i < r.witness.size(); ++i)
        if (i != drop) reduced.push_back(r.witness[i]);
      REQUIRE_FALSE(intersection_empty(g, reduced));
    }
    std::uint32_t bound = ceiling_bound(g);
    REQUIRE(r.value <= bound);
  }
  REQUIRE(checked >= 100);
}

TEST_CASE("q-complement numbers grow with the universe") {
  for (std::uint32_t n = 3; n <= 6; ++n) {
    NakamuraResult r = nakamura_number(Game(q_complement(2, n)));
    REQUIRE(r.finite);
    REQUIRE(r.value == n);
    auto expected = oracle::nakamura_by_subfamilies(q_complement(2, n));
    REQUIRE(expected.has_value());
    REQUIRE(expected->size == n);
  }
}

TEST_CASE("total nonweak prefix games always land on a finite number") {
  for (std::uint64_t packed = 0; packed < 256; ++packed) {
    TableGame t = TableGame::from_packed(3, packed);
    if (t.wins(0)) continue;
    PrefixGame p = extract_determining_strings(t);
    GroundedGame g = ground(Game(p));
    if (is_weak(g).holds) continue;
    NakamuraResult r = nakamura_number(Game(p));
    REQUIRE(r.finite);
  }
}
