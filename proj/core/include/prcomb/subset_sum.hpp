#pragma once

#include <cstdint>
#include <vector>

#include "prcomb/bitset.hpp"

namespace prcomb {

/// Distinct-subset-sum closure of sorted positive elements, as a mask over
/// [0, cap] with bit 0 cleared. Word-parallel DP with a sound early exit:
/// once every bit of [m, cap] is set, an element >= m shifts everything into
/// the already-full suffix, so the ascending scan can stop.
inline Bitset subset_sum_closure(const std::vector<std::uint64_t>& sorted_elems,
                                 std::uint64_t cap) {
  Bitset acc(cap + 1);
  acc.set(0);
  std::uint64_t full_from = cap + 1;  // smallest m with [m, cap] all set
  for (auto d : sorted_elems) {
    if (d == 0 || d > cap) continue;
    if (d >= full_from) break;
    acc.or_shift_left(d);
    while (full_from > 0 && acc.test(full_from - 1)) --full_from;
  }
  acc.reset(0);
  return acc;
}

}  // namespace prcomb
