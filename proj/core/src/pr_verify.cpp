#include "prcomb/pr_verify.hpp"

#include <algorithm>
#include <optional>
#include <thread>

#include "prcomb/errors.hpp"

namespace prcomb {

namespace {

// Monochromatic-structure pruning: assigning color c to position `pos` must
// not complete a bad pattern among [1..pos].
struct VdwConstraint {
  unsigned k;
  bool violates(const std::vector<std::uint8_t>& col, std::uint64_t pos,
                std::uint8_t c) const {
    for (std::uint64_t d = 1; (k - 1) * d < pos; ++d) {
      bool mono = true;
      for (unsigned i = 1; i < k; ++i)
        if (col[pos - i * d - 1] != c) {
          mono = false;
          break;
        }
      if (mono) return true;
    }
    return false;
  }
};

struct SchurConstraint {
  bool distinct;
  bool violates(const std::vector<std::uint8_t>& col, std::uint64_t pos,
                std::uint8_t c) const {
    for (std::uint64_t x = 1; 2 * x <= pos; ++x) {
      const std::uint64_t y = pos - x;
      if (distinct && x == y) continue;
      if (col[x - 1] == c && col[y - 1] == c) return true;
    }
    return false;
  }
};

template <typename Constraint>
bool extend(const Constraint& cons, std::vector<std::uint8_t>& col, std::uint64_t pos,
            std::uint64_t n, unsigned colors) {
  if (pos > n) return true;
  for (std::uint8_t c = 0; c < colors; ++c) {
    if (cons.violates(col, pos, c)) continue;
    col[pos - 1] = c;
    if (extend(cons, col, pos + 1, n, colors)) return true;
  }
  return false;
}

// least valid coloring of [1..n], color of 1 fixed to 0 (color symmetry);
// prefix-sharded across workers, merged to the least solution
template <typename Constraint>
std::optional<std::vector<std::uint8_t>> find_coloring(const Constraint& cons, std::uint64_t n,
                                                       unsigned colors, unsigned workers) {
  if (n == 0) return std::vector<std::uint8_t>{};
  std::vector<std::uint8_t> col(n, 0);
  if (cons.violates(col, 1, 0)) return std::nullopt;
  if (workers <= 1 || n < 8 || colors != 2) {
    if (extend(cons, col, 2, n, colors)) return col;
    return std::nullopt;
  }
  const unsigned prefix_len = std::min<std::uint64_t>(10, n - 1);
  const std::uint64_t prefix_count = std::uint64_t{1} << prefix_len;
  std::vector<std::optional<std::pair<std::uint64_t, std::vector<std::uint8_t>>>> found(
      workers);
  auto run = [&](unsigned w) {
    for (std::uint64_t p = w; p < prefix_count; p += workers) {
      std::vector<std::uint8_t> local(n, 0);
      bool ok = true;
      for (unsigned i = 0; i < prefix_len && ok; ++i) {
        const std::uint8_t c = (p >> (prefix_len - 1 - i)) & 1;
        if (cons.violates(local, i + 2, c))
          ok = false;
        else
          local[i + 1] = c;
      }
      if (!ok) continue;
      if (extend(cons, local, prefix_len + 2, n, colors)) {
        found[w] = {p, std::move(local)};
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  for (auto& t : pool) t.join();
  std::optional<std::pair<std::uint64_t, std::vector<std::uint8_t>>> best;
  for (auto& f : found)
    if (f && (!best || f->first < best->first)) best = f;
  if (best) return best->second;
  return std::nullopt;
}

template <typename Constraint>
ThresholdResult threshold_scan(const Constraint& cons, std::uint64_t start,
                               std::uint64_t n_max, unsigned colors, unsigned workers) {
  ThresholdResult res;
  std::vector<std::uint8_t> last;
  for (std::uint64_t n = start; n <= n_max; ++n) {
    auto col = find_coloring(cons, n, colors, workers);
    if (!col) {
      res.threshold = n;
      res.extremal_coloring = last;
      return res;
    }
    last = *col;
  }
  fail(Errc::ThresholdAboveCap, "no threshold up to " + std::to_string(n_max));
}

}  // namespace

ThresholdResult vdw_threshold(unsigned k, unsigned colors, std::uint64_t n_max,
                              unsigned workers) {
  if (k < 3) fail(Errc::InvalidArgument, "progression length must be at least 3");
  if (colors != 1 && colors != 2) fail(Errc::InvalidArgument, "one or two colors supported");
  return threshold_scan(VdwConstraint{k}, 1, n_max, colors, workers);
}

ThresholdResult schur_threshold(unsigned colors, bool distinct, std::uint64_t n_max,
                                unsigned workers) {
  if (colors != 1 && colors != 2) fail(Errc::InvalidArgument, "one or two colors supported");
  return threshold_scan(SchurConstraint{distinct}, 1, n_max, colors, workers);
}

}  // namespace prcomb
