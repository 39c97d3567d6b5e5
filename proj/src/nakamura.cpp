#include "sg/nakamura.hpp"

#include <bit>
#include <stdexcept>

#include "sg/errors.hpp"
#include "sg/properties.hpp"

namespace sg {

namespace {

// Depth-limited DFS for a cover of `universe` by exactly `remaining` of the
// complement masks starting at index `from`, taking candidates in ascending
// index order so the first full cover found is the lexicographically least.
// suffix_union[i] = union of complements[i..]; branches that cannot finish
// are cut without disturbing the order.
bool cover_search(const std::vector<std::uint64_t>& complements,
                  const std::vector<std::uint64_t>& suffix_union, std::uint64_t universe,
                  std::uint64_t covered, std::size_t from, std::uint32_t remaining,
                  std::vector<std::size_t>& chosen) {
  if (covered == universe) return remaining == 0;
  if (remaining == 0) return false;
  if ((covered | suffix_union[from]) != universe) return false;
  for (std::size_t i = from; i + remaining <= complements.size(); ++i) {
    chosen.push_back(i);
    if (cover_search(complements, suffix_union, universe, covered | complements[i], i + 1,
                     remaining - 1, chosen))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

NakamuraResult nakamura_number(const GroundedGame& g) {
  if (g.table.wins(0))
    throw analysis_error("empty coalition is winning; Nakamura number undefined");

  auto winning = g.table.winning_masks();
  if (winning.empty()) return {};  // weak: no winning coalitions

  const std::uint64_t universe = g.universe_mask();
  std::uint64_t veto = universe;
  for (std::uint64_t m : winning) veto &= m;
  if (veto != 0) return {};  // weak: veto players

  std::vector<std::uint64_t> complements(winning.size());
  for (std::size_t i = 0; i < winning.size(); ++i) complements[i] = universe & ~winning[i];
  std::vector<std::uint64_t> suffix_union(winning.size() + 1, 0);
  for (std::size_t i = winning.size(); i-- > 0;)
    suffix_union[i] = suffix_union[i + 1] | complements[i];

  // Nonweak and the empty set loses, so no single coalition works: nu >= 2.
  for (std::uint32_t size = 2; size <= winning.size(); ++size) {
    std::vector<std::size_t> chosen;
    if (cover_search(complements, suffix_union, universe, 0, 0, size, chosen)) {
      NakamuraResult result;
      result.finite = true;
      result.value = size;
      for (std::size_t i : chosen) result.witness.push_back(g.coalition_of(winning[i]));
      return result;
    }
  }
  throw std::logic_error("nonweak game without an empty-intersection family");
}

NakamuraResult nakamura_number(const Game& g) { return nakamura_number(ground(g)); }

std::uint32_t ceiling_bound(const GroundedGame& g) {
  auto winning = g.table.winning_masks();
  if (winning.empty()) throw analysis_error("bound undefined: no winning coalitions");
  std::uint64_t veto = g.universe_mask();
  std::uint32_t min_size = ~0u;
  for (std::uint64_t m : winning) {
    veto &= m;
    min_size = std::min(min_size, static_cast<std::uint32_t>(std::popcount(m)));
  }
  if (veto != 0) throw analysis_error("bound undefined for weak games");
  return min_size + 1;
}

std::uint32_t ceiling_bound(const Game& g) { return ceiling_bound(ground(g)); }

}  // namespace sg
