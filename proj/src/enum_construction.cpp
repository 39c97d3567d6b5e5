#include "sg/enum_construction.hpp"

#include <algorithm>
#include <stdexcept>

namespace sg {

namespace {

std::uint64_t low_mask(std::uint32_t k) { return k >= 64 ? ~0ull : ((1ull << k) - 1); }

constexpr std::uint32_t kMaxCutoff = 20;  // explicit string sets grow as 2^l

}  // namespace

Coalition EnumConstruction::disagreeing_set() const {
  std::vector<std::uint32_t> members;
  for (const auto& stage : trace)
    if (stage.v == 0) members.push_back(stage.k);
  return Coalition::finite(members);
}

EnumConstruction enum_construction(const std::vector<EnumEntry>& entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].v != 0 && entries[i].v != 1)
      throw std::invalid_argument("enumeration values must be 0 or 1");
    for (std::size_t j = 0; j < i; ++j)
      if (entries[i].k == entries[j].k)
        throw std::invalid_argument("enumeration positions must be distinct");
  }

  std::vector<EnumStage> trace;
  std::uint32_t cutoff = 0;
  for (std::size_t s = 0; s < entries.size(); ++s) {
    cutoff = std::max(cutoff, entries[s].k + 1);
    if (cutoff > kMaxCutoff) throw std::invalid_argument("enumeration cutoff too large (max 20)");

    EnumStage stage;
    stage.s = static_cast<std::uint32_t>(s);
    stage.k = entries[s].k;
    stage.v = entries[s].v;
    stage.cutoff = cutoff;

    // Constrained positions: agree with v_s at k_s, disagree with each
    // earlier value at its position. Every earlier k is below the cutoff.
    std::uint64_t forced_value = 0, forced_at = 0;
    for (std::size_t t = 0; t < s; ++t) {
      forced_at |= 1ull << entries[t].k;
      if (entries[t].v == 0) forced_value |= 1ull << entries[t].k;
    }
    forced_at |= 1ull << stage.k;
    if (stage.v == 1) forced_value |= 1ull << stage.k;

    std::vector<std::uint32_t> free_positions;
    for (std::uint32_t p = 0; p < cutoff; ++p)
      if (!((forced_at >> p) & 1ull)) free_positions.push_back(p);

    for (std::uint64_t combo = 0; combo < (1ull << free_positions.size()); ++combo) {
      std::uint64_t bits = forced_value;
      for (std::size_t j = 0; j < free_positions.size(); ++j)
        if ((combo >> j) & 1ull) bits |= 1ull << free_positions[j];
      stage.strings.push_back(BitString(bits, cutoff));
    }
    std::sort(stage.strings.begin(), stage.strings.end());
    trace.push_back(std::move(stage));
  }

  std::vector<BitString> t0, t1;
  for (const auto& stage : trace) {
    auto& side = stage.v == 0 ? t0 : t1;
    side.insert(side.end(), stage.strings.begin(), stage.strings.end());
  }
  std::uint32_t depth = trace.empty() ? 0 : trace.back().cutoff;
  return {PrefixGame(depth, std::move(t0), std::move(t1)), std::move(trace)};
}

MembershipClass prefix_membership_decision(const EnumConstruction& c, const BitString& sigma) {
  const auto& trace = c.trace;
  std::size_t s = 0;
  while (s < trace.size() && trace[s].cutoff < sigma.length()) ++s;
  if (s == trace.size() || trace[s].cutoff > sigma.length()) return MembershipClass::NotInF;
  for (; s < trace.size() && trace[s].cutoff == sigma.length(); ++s) {
    if (std::binary_search(trace[s].strings.begin(), trace[s].strings.end(), sigma))
      return trace[s].v == 1 ? MembershipClass::InT1 : MembershipClass::InT0;
  }
  return MembershipClass::NotInF;
}

std::vector<CarrierRefutation> no_finite_carrier_witness(const EnumConstruction& c) {
  std::uint64_t disagreeing_bits = 0;
  for (const auto& stage : c.trace)
    if (stage.v == 0) disagreeing_bits |= 1ull << stage.k;

  auto first_extension = [&](const std::vector<BitString>& side, std::uint32_t l,
                             std::uint64_t segment) -> const BitString* {
    for (const auto& s : side)
      if (s.length() >= l && (s.bits() & low_mask(l)) == segment) return &s;
    return nullptr;
  };

  std::vector<CarrierRefutation> out;
  for (std::uint32_t l = 0; l <= c.game.depth(); ++l) {
    std::uint64_t segment = disagreeing_bits & low_mask(l);
    const BitString* win = first_extension(c.game.t1(), l, segment);
    if (!win) continue;
    const BitString* lose = first_extension(c.game.t0(), l, segment);
    if (!lose) continue;
    out.push_back({l, *win, *lose});
  }
  return out;
}

}  // namespace sg
