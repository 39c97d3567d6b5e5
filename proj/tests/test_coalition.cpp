#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sg/coalition.hpp"
#include "sg/errors.hpp"
#include "sg/rng.hpp"

using namespace sg;

namespace {

Coalition random_coalition(Rng& rng) {
  std::uint32_t len = static_cast<std::uint32_t>(rng.below(16));
  return Coalition(BitString(rng.next(), len), rng.coin());
}

bool canonical(const Coalition& c) {
  const auto& p = c.prefix();
  return p.length() == 0 || p.bit(p.length() - 1) != c.tail();
}

void all_permutations(std::uint32_t m, std::vector<FinitePermutation>& out) {
  std::vector<std::uint32_t> mapping(m);
  for (std::uint32_t i = 0; i < m; ++i) mapping[i] = i;
  do {
    out.push_back(FinitePermutation(mapping));
  } while (std::next_permutation(mapping.begin(), mapping.end()));
}

}  // namespace

TEST_CASE("initial segments read membership bits in order") {
  Coalition c = Coalition::finite({0, 2, 4});
  CHECK(initial_segment(c, 7).to_string() == "1010100");
  CHECK(initial_segment(c, 0).to_string() == "");
  CHECK(initial_segment(Coalition::all_players(), 3).to_string() == "111");
}

TEST_CASE("extends checks initial segments") {
  Coalition c = Coalition::finite({0, 2, 4});
  CHECK(extends(c, BitString::parse("1010")));
  CHECK_FALSE(extends(c, BitString::parse("11")));
  CHECK(extends(c, BitString()));
}

TEST_CASE("concatenation") {
  CHECK(concat(BitString::parse("00"), BitString::parse("11")).to_string() == "0011");
  CHECK(concat(BitString(), BitString::parse("101")).to_string() == "101");
  CHECK(concat(BitString::parse("1"), BitString()).to_string() == "1");
}

TEST_CASE("bit string ordering is textual") {
  CHECK(BitString::parse("00") < BitString::parse("010"));
  CHECK(BitString::parse("011") < BitString::parse("10"));
  CHECK(BitString::parse("10") < BitString::parse("11"));
  CHECK(BitString::parse("1") < BitString::parse("10"));
}

TEST_CASE("permutation images") {
  FinitePermutation swap02 = FinitePermutation::transposition(0, 2);
  CHECK(permute(Coalition::finite({0, 1}), swap02) == Coalition::finite({1, 2}));

  Coalition cofinite = Coalition::cofinite_excluding({0, 1});  // {2,3,4,...}
  Coalition image = permute(cofinite, swap02);
  CHECK(image.contains(0));
  CHECK_FALSE(image.contains(1));
  CHECK_FALSE(image.contains(2));
  for (std::uint32_t j = 3; j < 10; ++j) CHECK(image.contains(j));
  CHECK(image == Coalition::cofinite_excluding({1, 2}));

  Coalition any = Coalition::finite({3, 5});
  CHECK(permute(any, FinitePermutation::identity()) == any);
}

TEST_CASE("cardinality classes") {
  CHECK(cardinality_class(Coalition::finite({0, 1})) == CardinalityClass{true, 2});
  CHECK(cardinality_class(Coalition::cofinite_excluding({0})) == CardinalityClass{false, 1});
  CHECK(cardinality_class(Coalition::empty_set()) == CardinalityClass{true, 0});
}

TEST_CASE("coalition text forms parse and round-trip") {
  CHECK(Coalition::parse("10101+0") == Coalition::finite({0, 2, 4}));
  CHECK(Coalition::parse("{0,2,4}") == Coalition::finite({0, 2, 4}));
  CHECK(Coalition::parse("co{0}") == Coalition::cofinite_excluding({0}));
  CHECK(Coalition::parse("{}") == Coalition::empty_set());
  CHECK(Coalition::parse("co{}") == Coalition::all_players());
  CHECK(Coalition::parse("111+1") == Coalition::all_players());

  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Coalition c = random_coalition(rng);
    CHECK(Coalition::parse(c.to_string()) == c);
  }

  CHECK_THROWS_AS(Coalition::parse("012"), parse_error);
  CHECK_THROWS_AS(Coalition::parse("10+2"), parse_error);
  CHECK_THROWS_AS(Coalition::parse("{0,}"), parse_error);
  CHECK_THROWS_AS(Coalition::parse("{1 2}"), parse_error);
}

TEST_CASE("segment length and extension invariants") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Coalition c = random_coalition(rng);
    std::uint32_t k = static_cast<std::uint32_t>(rng.below(65));
    BitString seg = initial_segment(c, k);
    CHECK(seg.length() == k);
    CHECK(extends(c, seg));
  }
}

TEST_CASE("permutation round-trips and cardinality invariance, all domains up to 6") {
  std::vector<FinitePermutation> perms;
  for (std::uint32_t m = 0; m <= 6; ++m) all_permutations(m, perms);
  REQUIRE(perms.size() == 1 + 1 + 2 + 6 + 24 + 120 + 720);

  Rng rng(13);
  std::vector<Coalition> coalitions;
  for (int i = 0; i < 12; ++i) coalitions.push_back(random_coalition(rng));

  for (const auto& p : perms) {
    FinitePermutation inv = p.inverse();
    for (const auto& c : coalitions) {
      Coalition image = permute(c, p);
      CHECK(canonical(image));
      CHECK(permute(image, inv) == c);
      CHECK(cardinality_class(image) == cardinality_class(c));
    }
  }
}

TEST_CASE("constructors produce canonical forms") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    CHECK(canonical(random_coalition(rng)));
    Coalition c = random_coalition(rng);
    CHECK(canonical(c.complement()));
  }
  CHECK(canonical(Coalition(BitString::parse("1010000"), false)));
  CHECK(Coalition(BitString::parse("1010000"), false) == Coalition::finite({0, 2}));
  CHECK(canonical(Coalition(BitString::parse("0111"), true)));
}

TEST_CASE("the 64-bit cap is enforced") {
  CHECK_THROWS_AS(initial_segment(Coalition::empty_set(), 65), std::length_error);
  CHECK_THROWS_AS(concat(BitString::repeated(true, 40), BitString::repeated(false, 40)),
                  std::length_error);
  CHECK(initial_segment(Coalition::all_players(), 64).popcount() == 64);
}

TEST_CASE("permutations validate bijectivity") {
  CHECK_THROWS_AS(FinitePermutation({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePermutation({2, 1}), std::invalid_argument);
  CHECK(FinitePermutation({1, 0, 2}).support() == std::vector<std::uint32_t>{0, 1});
}
