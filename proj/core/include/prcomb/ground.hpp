#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>

#include "prcomb/errors.hpp"

namespace prcomb {

/// Ground sets carried by windows and descriptors. Omega is the default;
/// Pairs is [omega]^2 under the triangular packing below; Grid2/Grid3 are
/// omega^2/omega^3 under Cantor pairing; Sum/Prod are the compound grounds
/// used by the oplus/product descriptors.
enum class GroundKind : std::uint8_t { Omega, Pairs, Grid2, Grid3, Sum, Prod };

struct Ground {
  GroundKind kind = GroundKind::Omega;
  std::shared_ptr<const Ground> left, right;  // Sum/Prod components

  static Ground omega() { return {GroundKind::Omega, nullptr, nullptr}; }
  static Ground pairs() { return {GroundKind::Pairs, nullptr, nullptr}; }
  static Ground grid2() { return {GroundKind::Grid2, nullptr, nullptr}; }
  static Ground grid3() { return {GroundKind::Grid3, nullptr, nullptr}; }
  static Ground sum(Ground l, Ground r) {
    return {GroundKind::Sum, std::make_shared<Ground>(std::move(l)),
            std::make_shared<Ground>(std::move(r))};
  }
  static Ground prod(Ground l, Ground r) {
    return {GroundKind::Prod, std::make_shared<Ground>(std::move(l)),
            std::make_shared<Ground>(std::move(r))};
  }

  bool operator==(const Ground& o) const {
    if (kind != o.kind) return false;
    if (kind != GroundKind::Sum && kind != GroundKind::Prod) return true;
    return *left == *o.left && *right == *o.right;
  }
  std::string name() const;
};

/// Pair packing: {a,b} with a < b maps to b(b-1)/2 + a. This enumerates
/// pairs lexicographically over (b, a) and is part of the JSON contract.
inline std::uint64_t pack_pair(std::uint64_t a, std::uint64_t b) {
  if (a == b) fail(Errc::InvalidArgument, "pair elements must be distinct");
  if (a > b) std::swap(a, b);
  return b * (b - 1) / 2 + a;
}

std::pair<std::uint64_t, std::uint64_t> unpack_pair(std::uint64_t code);

/// Smallest code whose pair has an endpoint >= v: pairs entirely inside
/// [0, v) occupy codes [0, v(v-1)/2).
inline std::uint64_t pair_code_bound(std::uint64_t v) { return v == 0 ? 0 : v * (v - 1) / 2; }

/// Smallest v with pair_code_bound(v) >= n, i.e. the coordinate range that
/// covers every packed pair below code n.
inline std::uint64_t pair_coord_bound(std::uint64_t n) {
  std::uint64_t v = 1;
  while (v < (std::uint64_t{1} << 33) && pair_code_bound(v) < n) {
    v = v + v / 2 + 1;
  }
  while (v > 1 && pair_code_bound(v - 1) >= n) --v;
  return v;
}

/// Cantor pairing for omega^2 (and, iterated, omega^3).
inline std::uint64_t pack_grid2(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<std::uint64_t, std::uint64_t> unpack_grid2(std::uint64_t code);

inline std::uint64_t pack_grid3(std::uint64_t x, std::uint64_t y, std::uint64_t z) {
  return pack_grid2(x, pack_grid2(y, z));
}

/// Disjoint sum: (x, side) -> 2x + side.
inline std::uint64_t pack_sum(std::uint64_t x, unsigned side) { return 2 * x + side; }
inline std::pair<std::uint64_t, unsigned> unpack_sum(std::uint64_t code) {
  return {code / 2, static_cast<unsigned>(code & 1)};
}

}  // namespace prcomb
