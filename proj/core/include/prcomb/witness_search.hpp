#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prcomb/window.hpp"

namespace prcomb {

struct SearchBudget {
  std::uint64_t nodes = 5'000'000;  // DFS node visits before giving up
};

template <typename T>
struct SearchResult {
  std::optional<T> witness;
  bool complete = true;  // false when the node budget cut the search short
};

/// Least D (|D| = d, 0 excluded) with every nonempty subset sum <= cap and
/// inside A. Elements of D are drawn from A itself.
SearchResult<std::vector<std::uint64_t>> ip_witness_search(const Window& a, unsigned d,
                                                           std::uint64_t cap,
                                                           SearchBudget budget = {});

/// Least E (|E| = d, elements <= cap) with every positive pairwise
/// difference inside A. E itself need not lie in A.
SearchResult<std::vector<std::uint64_t>> diff_witness_search(const Window& a, unsigned d,
                                                             std::uint64_t cap,
                                                             SearchBudget budget = {});

/// Least H (|H| = d) with every packed pair of H inside the pairs-window A.
SearchResult<std::vector<std::uint64_t>> clique_search(const Window& a, unsigned d,
                                                       SearchBudget budget = {});

struct ApResult {
  std::uint64_t length = 0;
  std::uint64_t start = 0;
  std::uint64_t step = 0;  // 0 for length <= 1
};

/// Maximum-length AP in the window; ties resolved to least (start, step).
ApResult longest_ap(const Window& a);

/// First AP of length >= k (scanning steps ascending, elements ascending),
/// or nothing. Exact within the window.
std::optional<ApResult> find_ap(const Window& a, std::uint64_t k);

}  // namespace prcomb
