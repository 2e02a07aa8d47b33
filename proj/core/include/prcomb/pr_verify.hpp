#pragma once

#include <cstdint>
#include <vector>

namespace prcomb {

struct ThresholdResult {
  std::uint64_t threshold = 0;
  /// The lexicographically least avoiding coloring of [1, threshold), one
  /// color value per position (index 0 holds position 1).
  std::vector<std::uint8_t> extremal_coloring;
};

/// Least n <= n_max such that every `colors`-coloring of [1..n] contains a
/// monochromatic k-term arithmetic progression. Exhaustive backtracking with
/// the first position's color fixed; prefix-sharded across workers with a
/// deterministic least-solution merge. Throws ThresholdAboveCap.
ThresholdResult vdw_threshold(unsigned k, unsigned colors, std::uint64_t n_max,
                              unsigned workers = 1);

/// Least n such that every `colors`-coloring of [1..n] has monochromatic
/// x, y, x+y (x != y when `distinct` is set).
ThresholdResult schur_threshold(unsigned colors, bool distinct, std::uint64_t n_max,
                                unsigned workers = 1);

}  // namespace prcomb
