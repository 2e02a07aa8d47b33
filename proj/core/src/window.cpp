#include "prcomb/window.hpp"

#include <algorithm>
#include <cmath>

namespace prcomb {

std::string Ground::name() const {
  switch (kind) {
    case GroundKind::Omega: return "omega";
    case GroundKind::Pairs: return "pairs";
    case GroundKind::Grid2: return "omega^2";
    case GroundKind::Grid3: return "omega^3";
    case GroundKind::Sum: return "(" + left->name() + ")+(" + right->name() + ")";
    case GroundKind::Prod: return "(" + left->name() + ")x(" + right->name() + ")";
  }
  return "?";
}

std::pair<std::uint64_t, std::uint64_t> unpack_pair(std::uint64_t code) {
  // b is the largest integer with b(b-1)/2 <= code.
  std::uint64_t b = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(code))) / 2.0);
  while (b * (b - 1) / 2 > code) --b;
  while ((b + 1) * b / 2 <= code) ++b;
  return {code - b * (b - 1) / 2, b};
}

std::pair<std::uint64_t, std::uint64_t> unpack_grid2(std::uint64_t code) {
  std::uint64_t s = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(code) + 1.0) - 1.0) / 2.0);
  while (s * (s + 1) / 2 > code) --s;
  while ((s + 1) * (s + 2) / 2 <= code) ++s;
  const std::uint64_t y = code - s * (s + 1) / 2;
  return {s - y, y};
}

std::uint64_t Window::max() const {
  std::uint64_t best = Bitset::npos;
  bits.for_each_set([&](std::uint64_t i) { best = i; });
  return best;
}

Window Window::restricted(std::uint64_t n) const {
  Window w(ground, std::min(n, bound));
  bits.for_each_set([&](std::uint64_t i) {
    if (i < w.bound) w.bits.set(i);
  });
  return w;
}

Window Window::from_elements(Ground g, std::uint64_t bound,
                             const std::vector<std::uint64_t>& xs) {
  Window w(std::move(g), bound);
  for (auto x : xs) w.insert(x);
  return w;
}

Window operator&(const Window& a, const Window& b) {
  Window w(a.ground, std::min(a.bound, b.bound));
  w.bits = a.bits;
  w.bits &= b.bits;
  Window out(a.ground, w.bound);
  w.bits.for_each_set([&](std::uint64_t i) {
    if (i < out.bound) out.bits.set(i);
  });
  return out;
}

Window operator|(const Window& a, const Window& b) {
  Window w(a.ground, std::min(a.bound, b.bound));
  a.bits.for_each_set([&](std::uint64_t i) {
    if (i < w.bound) w.bits.set(i);
  });
  b.bits.for_each_set([&](std::uint64_t i) {
    if (i < w.bound) w.bits.set(i);
  });
  return w;
}

Window Window::minus(const Window& o) const {
  Window w = *this;
  w.bits.subtract(o.bits);
  return w;
}

Window Window::minus_elements(const std::vector<std::uint64_t>& xs) const {
  Window w = *this;
  for (auto x : xs)
    if (x < w.bound) w.bits.reset(x);
  return w;
}

bool Window::agree_below(const Window& a, const Window& b, std::uint64_t n) {
  n = std::min({n, a.bound, b.bound});
  for (std::uint64_t i = 0; i < n; ++i)
    if (a.bits.test(i) != b.bits.test(i)) return false;
  return true;
}

bool Window::is_subset_of(const Window& o) const {
  bool ok = true;
  bits.for_each_set([&](std::uint64_t i) {
    if (!o.bits.test(i)) ok = false;
  });
  return ok;
}

}  // namespace prcomb
