#pragma once

#include <cstdint>
#include <vector>

#include "prcomb/bitset.hpp"
#include "prcomb/ground.hpp"

namespace prcomb {

/// A concrete evaluation of a set below a bound: membership mask over the
/// half-open code range [0, bound) of the ground set.
struct Window {
  Ground ground = Ground::omega();
  std::uint64_t bound = 0;
  Bitset bits;

  Window() = default;
  Window(Ground g, std::uint64_t n) : ground(std::move(g)), bound(n), bits(n) {}

  bool contains(std::uint64_t x) const { return bits.test(x); }
  void insert(std::uint64_t x) {
    if (x < bound) bits.set(x);
  }
  std::uint64_t count() const { return bits.count(); }
  bool empty() const { return !bits.any(); }
  std::uint64_t min() const { return bits.next_set(0); }
  std::uint64_t max() const;

  std::vector<std::uint64_t> elements() const { return bits.elements(); }

  /// Restriction to [0, n); n <= bound.
  Window restricted(std::uint64_t n) const;

  static Window from_elements(Ground g, std::uint64_t bound,
                              const std::vector<std::uint64_t>& xs);

  /// Set algebra on the common bound (the smaller of the two).
  friend Window operator&(const Window& a, const Window& b);
  friend Window operator|(const Window& a, const Window& b);
  Window minus(const Window& o) const;
  /// this \ xs
  Window minus_elements(const std::vector<std::uint64_t>& xs) const;

  /// Equality of masks on the common prefix [0, min(bound)).
  static bool agree_below(const Window& a, const Window& b, std::uint64_t n);

  bool is_subset_of(const Window& o) const;

  bool operator==(const Window& o) const {
    return ground == o.ground && bound == o.bound && bits == o.bits;
  }
};

}  // namespace prcomb
