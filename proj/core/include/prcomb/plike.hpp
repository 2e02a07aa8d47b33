#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prcomb/ideal.hpp"
#include "prcomb/pr_ops.hpp"

namespace prcomb {

/// A decreasing chain A_0, A_1, ... supplied as rules. Inclusion and
/// difference-class claims are re-checked on every evaluated window; the
/// optional carrier hints at the generator for FS/Delta diagonalization.
struct ChainDesc {
  std::vector<ExprPtr> levels;
  std::optional<ExprPtr> carrier;
};

/// The ideal associated with a simple descriptor (I_rho).
IdealId ideal_of(const PRDescriptor& rho);

struct ChainCheck {
  bool ok = true;
  unsigned first_bad_level = 0;
  std::string detail;
};

/// Window-checks A_{n+1} inside A_n and each difference's membership in
/// I_rho at the given budget (a NOT_IN difference aborts the chain).
ChainCheck check_chain(const PRDescriptor& rho, const ChainDesc& chain, unsigned depth,
                       const Budget& budget);

struct Diagonalization {
  bool ok = false;
  unsigned failing_level = 0;
  std::vector<std::uint64_t> obstruction;  // irremovable violations (sample)
  std::string detail;
  std::vector<std::uint64_t> generator;               // the window prefix of F
  std::vector<std::vector<std::uint64_t>> trims;      // K_n per level
  bool verified = false;  // re-check of rho(F\K_n) inside A_n on windows
};

/// P-minus diagonalization: a generator prefix F and finite trims K_n with
/// rho(F\K_n) inside A_n for every n <= depth. Sparse trimming for FS/Delta,
/// vertex pruning for pairs, pseudo-intersection picking for ideal kinds; a
/// failure reports the level and the obstruction sample.
Diagonalization pminus_diagonalize(const PRDescriptor& rho, const ChainDesc& chain,
                                   unsigned depth, std::uint64_t cap, const Budget& budget);

struct WeakPPlusR {
  std::vector<std::uint64_t> picks;
  bool verified = false;
};

/// Diagonal through a chain of pair images: picks x_n in F_n, verifying
/// [G \ {x_i : i < n}]^2 inside [F_n]^2 on windows.
WeakPPlusR weak_pplus_r(const ExprPtr& f, const std::vector<ExprPtr>& chain, unsigned depth,
                        std::uint64_t cap);

struct WeakPPlusDelta {
  std::vector<std::uint64_t> e_prime;       // selected elements of E
  std::vector<std::uint64_t> pick_indices;  // gap indices n_k
  unsigned depth_used = 0;
  bool verified = false;
};

/// The difference-map weak diagonal: recovers the interval partitions of
/// each chain level by decoding consecutive differences as interval sums of
/// the base gaps, then selects common left endpoints. Throws
/// NotSuperincreasing / DecodingFailed on violated preconditions; shrinks
/// depth when the window runs out.
WeakPPlusDelta weak_pplus_delta(const ExprPtr& e, const std::vector<ExprPtr>& chain,
                                unsigned depth, std::uint64_t cap);

struct NotPPlusFamily {
  PrKind rho = PrKind::FS;
  ExprPtr carrier;
  std::vector<std::vector<std::uint64_t>> parts;  // P_i on the window
  std::vector<Window> images;                     // rho(P_i)
  std::vector<Window> b_levels;                   // B_n = union of images from n on
  bool disjoint_verified = false;
  std::uint64_t cap = 0;
};

/// Builds the partition family whose tails no single generator can
/// diagonalize: a sparse carrier split into `parts` pieces with pairwise
/// disjoint images.
NotPPlusFamily not_pplus_family(PrKind rho, unsigned parts, std::uint64_t cap);

struct WlpProbe {
  int fired_case = 0;  // 1, 2, or 0 for inconclusive
  std::uint64_t part_index = 0;
  std::uint64_t a = 0, b = 0;  // the two generator elements used
  std::uint64_t tau = 0;       // their combined image point
  std::string detail;
};

/// Replays the two-case contradiction for a candidate diagonalizer G.
WlpProbe not_pplus_probe(const NotPPlusFamily& family, const Window& g);

struct NotPMinusReport {
  std::uint64_t k = 0;      // the 2-adic class (H/D) or h_1 (R)
  std::uint64_t count = 0;  // intersection size / verified star pairs
  std::vector<std::uint64_t> sample;
  std::string detail;
};

/// H/D: a 2-adic class meeting B at least m times below the cap (pigeonhole
/// over the witness closure). R: replays the star obstruction against the
/// clique witness. Throws Exhausted when the budget precludes the count.
NotPMinusReport not_pminus_probe(const IdealId& ideal, const SetExpr& b, std::uint64_t m,
                                 std::uint64_t cap, const Budget& budget);

/// Catalog chains: the canonical positive chain for Fin (+) Fin^2 together
/// with the everywhere-working witness B = omega |_| empty, and the
/// density-ideal chain with 0 < upper density < 1/n per level.
ChainDesc fin_oplus_fin2_chain(unsigned depth);
ExprPtr fin_oplus_fin2_universal_witness();
ChainDesc density_chain(unsigned depth);

}  // namespace prcomb
