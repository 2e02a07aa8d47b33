#include "prcomb/witness_search.hpp"

#include <algorithm>

#include "prcomb/errors.hpp"

namespace prcomb {

namespace {

struct IpState {
  const Window* a;
  std::uint64_t cap;
  std::uint64_t nodes_left;
  unsigned d;
  std::vector<std::uint64_t> chosen;
  std::vector<std::uint64_t> sums;  // all nonempty subset sums so far
  bool truncated = false;
};

bool ip_dfs(IpState& st, std::uint64_t from) {
  if (st.chosen.size() == st.d) return true;
  for (std::uint64_t x = st.a->bits.next_set(std::max<std::uint64_t>(from, 1));
       x != Bitset::npos; x = st.a->bits.next_set(x + 1)) {
    if (st.nodes_left-- == 0) {
      st.truncated = true;
      return false;
    }
    if (x > st.cap) break;
    // new sums: x and s + x for every existing sum
    bool ok = true;
    for (auto s : st.sums) {
      const std::uint64_t t = s + x;
      if (t > st.cap || t >= st.a->bound || !st.a->contains(t)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const std::size_t mark = st.sums.size();
    st.sums.push_back(x);
    for (std::size_t i = 0; i < mark; ++i) st.sums.push_back(st.sums[i] + x);
    st.chosen.push_back(x);
    if (ip_dfs(st, x + 1)) return true;
    st.chosen.pop_back();
    st.sums.resize(mark);
    if (st.truncated) return false;
  }
  return false;
}

struct DiffState {
  const Window* a;
  std::uint64_t cap;
  std::uint64_t nodes_left;
  unsigned d;
  std::vector<std::uint64_t> chosen;
  std::vector<std::uint64_t> step_elems;  // elements of A, ascending
  bool truncated = false;
};

bool diff_dfs(DiffState& st) {
  if (st.chosen.size() == st.d) return true;
  if (st.chosen.empty()) return false;  // first element handled by caller
  const std::uint64_t last = st.chosen.back();
  for (auto g : st.step_elems) {
    if (g == 0) continue;
    if (st.nodes_left-- == 0) {
      st.truncated = true;
      return false;
    }
    const std::uint64_t x = last + g;
    if (x > st.cap) break;
    bool ok = true;
    for (auto e : st.chosen) {
      const std::uint64_t diff = x - e;
      if (diff >= st.a->bound || !st.a->contains(diff)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    st.chosen.push_back(x);
    if (diff_dfs(st)) return true;
    st.chosen.pop_back();
    if (st.truncated) return false;
  }
  return false;
}

}  // namespace

SearchResult<std::vector<std::uint64_t>> ip_witness_search(const Window& a, unsigned d,
                                                           std::uint64_t cap,
                                                           SearchBudget budget) {
  if (d == 0) return {std::vector<std::uint64_t>{}, true};
  IpState st{&a, std::min(cap, a.bound ? a.bound - 1 : 0), budget.nodes, d, {}, {}, false};
  if (ip_dfs(st, 0)) return {st.chosen, !st.truncated};
  return {std::nullopt, !st.truncated};
}

SearchResult<std::vector<std::uint64_t>> diff_witness_search(const Window& a, unsigned d,
                                                             std::uint64_t cap,
                                                             SearchBudget budget) {
  if (d == 0) return {std::vector<std::uint64_t>{}, true};
  DiffState st{&a, cap, budget.nodes, d, {}, a.elements(), false};
  if (d == 1) return {std::vector<std::uint64_t>{0}, true};
  // Delta is shift-invariant, so a least witness always starts at 0.
  st.chosen.assign(1, 0);
  if (diff_dfs(st)) return {st.chosen, !st.truncated};
  return {std::nullopt, !st.truncated};
}

SearchResult<std::vector<std::uint64_t>> clique_search(const Window& a, unsigned d,
                                                       SearchBudget budget) {
  // vertex range: endpoints of any packed pair below the window bound
  std::uint64_t vmax = 0;
  a.bits.for_each_set([&](std::uint64_t c) {
    const auto [x, y] = unpack_pair(c);
    vmax = std::max(vmax, y + 1);
  });
  if (d == 0) return {std::vector<std::uint64_t>{}, true};
  if (d == 1) {
    // any vertex occurring in the window (least endpoint), else vertex 0
    std::uint64_t best = 0;
    return {std::vector<std::uint64_t>{best}, true};
  }
  std::vector<Bitset> adj(vmax, Bitset(vmax));
  a.bits.for_each_set([&](std::uint64_t c) {
    const auto [x, y] = unpack_pair(c);
    adj[x].set(y);
    adj[y].set(x);
  });
  std::uint64_t nodes_left = budget.nodes;
  bool truncated = false;
  std::vector<std::uint64_t> chosen;
  // DFS for the lexicographically least clique
  std::vector<Bitset> cand_stack;
  auto dfs = [&](auto&& self, const Bitset& cand) -> bool {
    if (chosen.size() == d) return true;
    for (std::uint64_t v = cand.next_set(chosen.empty() ? 0 : chosen.back() + 1);
         v != Bitset::npos; v = cand.next_set(v + 1)) {
      if (nodes_left-- == 0) {
        truncated = true;
        return false;
      }
      Bitset next = cand;
      next &= adj[v];
      chosen.push_back(v);
      if (self(self, next)) return true;
      chosen.pop_back();
      if (truncated) return false;
    }
    return false;
  };
  Bitset all(vmax);
  for (std::uint64_t v = 0; v < vmax; ++v) all.set(v);
  if (dfs(dfs, all)) return {chosen, !truncated};
  return {std::nullopt, !truncated};
}

namespace {

// Stamped run-length table: runs[x] is valid only when stamp[x] == cur.
struct RunTable {
  std::vector<std::uint32_t> stamp;
  std::vector<std::uint32_t> run;
  std::uint32_t cur = 0;
  explicit RunTable(std::uint64_t n) : stamp(n, 0), run(n, 0) {}
  void next_step() { ++cur; }
  std::uint32_t get(std::uint64_t x) const { return stamp[x] == cur ? run[x] : 0; }
  void set(std::uint64_t x, std::uint32_t v) {
    stamp[x] = cur;
    run[x] = v;
  }
};

}  // namespace

ApResult longest_ap(const Window& a) {
  const auto xs = a.elements();
  if (xs.empty()) return {0, 0, 0};
  ApResult best{1, xs.front(), 0};
  if (xs.size() == 1) return best;
  const std::uint64_t bound = a.bound;
  if (bound * xs.size() > 250'000'000)
    fail(Errc::InvalidArgument,
         "longest_ap window too large for the exact scan; use a fixed-length search");
  RunTable rt(bound);
  for (std::uint64_t d = 1; d < bound; ++d) {
    rt.next_step();
    for (auto x : xs) {
      const std::uint32_t r = (x >= d && a.contains(x - d)) ? rt.get(x - d) + 1 : 1;
      rt.set(x, r);
      const std::uint64_t start = x - static_cast<std::uint64_t>(r - 1) * d;
      if (r > best.length ||
          (r == best.length &&
           (start < best.start || (start == best.start && d < best.step)))) {
        best = {r, start, r >= 2 ? d : 0};
      }
    }
  }
  return best;
}

std::optional<ApResult> find_ap(const Window& a, std::uint64_t k) {
  const auto xs = a.elements();
  if (k <= 1) {
    if (xs.empty()) return std::nullopt;
    return ApResult{std::min<std::uint64_t>(k, 1), xs.front(), 0};
  }
  if (xs.size() < k) return std::nullopt;
  if (k == 2) return ApResult{2, xs[0], xs[1] - xs[0]};
  const std::uint64_t bound = a.bound;
  const std::uint64_t max_step = (bound - 1) / (k - 1);
  RunTable rt(bound);
  for (std::uint64_t d = 1; d <= max_step; ++d) {
    rt.next_step();
    for (auto x : xs) {
      const std::uint32_t r = (x >= d && a.contains(x - d)) ? rt.get(x - d) + 1 : 1;
      rt.set(x, r);
      if (r >= k) return ApResult{k, x - (k - 1) * d, d};
    }
  }
  return std::nullopt;
}

}  // namespace prcomb
