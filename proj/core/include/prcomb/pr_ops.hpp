#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prcomb/ideal_id.hpp"
#include "prcomb/set_expr.hpp"
#include "prcomb/window.hpp"

namespace prcomb {

// ---------------------------------------------------------------------------
// Sparseness certificates
// ---------------------------------------------------------------------------

enum class SparseKind : std::uint8_t { Sparse, VerySparse, DSparse, Lacunary };

/// Re-checkable in time polynomial in the window: the witness data names the
/// concrete collision (two subsets, two difference representations, or the
/// pair (x, y) violating the overlap condition).
struct SparseCertificate {
  SparseKind kind = SparseKind::Sparse;
  bool pass = false;
  std::uint64_t cap = 0;
  std::uint64_t value = 0;                     // colliding sum / difference / gap index
  std::vector<std::uint64_t> witness_a, witness_b;
  std::string note;
};

// ---------------------------------------------------------------------------
// Core operations on windows
// ---------------------------------------------------------------------------

/// All nonempty sums of distinct elements of D that are <= cap. Exact
/// (word-parallel subset-sum closure). Throws ZeroElement if 0 in D.
Window fs(const Window& d, std::uint64_t cap);

/// All positive pairwise differences. Throws TooFewElements if |E| < 2.
Window delta(const Window& e);

/// All packed unordered pairs of distinct elements. Throws TooFewElements.
Window pairs(const Window& h);

/// The unique subset of sparse D summing to n. Throws NotRepresentable /
/// NotSparse (the latter carries both witnesses in the exception message;
/// use decode_subset_sums for programmatic access).
std::vector<std::uint64_t> alpha_decode(const Window& d, std::uint64_t n);

/// Representation count of n as a distinct-subset sum of D, saturated at 2,
/// plus up to two witness subsets.
struct DecodeResult {
  int count = 0;  // 0, 1 or 2 (2 means ">= 2")
  std::vector<std::uint64_t> first, second;
};
DecodeResult decode_subset_sums(const std::vector<std::uint64_t>& elems, std::uint64_t n,
                                std::uint64_t cap);

SparseCertificate sparse_check(const Window& d, std::uint64_t cap);
SparseCertificate very_sparse_check(const Window& d, std::uint64_t cap);
SparseCertificate d_sparse_check(const Window& e, std::uint64_t cap);

struct LacunaryResult {
  bool pass = false;
  std::uint64_t violation_index = 0;  // first n with e(n+1)-e(n) <= e(n)
};
LacunaryResult lacunary_check(const Window& a);

struct SuperincreasingSelection {
  std::vector<std::uint64_t> elements;
  Window window;  // bound = total sum + 1
  SparseCertificate sparse;
  std::optional<SparseCertificate> very_sparse;  // populated when factor >= 2
};

/// Greedy d_{k+1} = least source element > factor * (d_0 + ... + d_k);
/// ties broken to the smallest eligible element by construction.
SuperincreasingSelection superincreasing_subset(const SetExpr& source, const Rational& factor,
                                                std::uint64_t count,
                                                std::uint64_t widen_cap = kDefaultWidenCap);

/// Lexicographically least S = {s_0 < ... < s_{count-1}} in fs(D) whose
/// alpha_D-blocks and binary blocks are strictly separated. Throws Exhausted
/// when the window admits no such sequence.
std::vector<std::uint64_t> kojman_select(const Window& d, std::uint64_t count);

// ---------------------------------------------------------------------------
// Partition-regular descriptors
// ---------------------------------------------------------------------------

enum class PrKind : std::uint8_t { FS, Delta, Pairs, Ideal };
enum class PrCompound : std::uint8_t { None, Oplus, Product, Restrict };

struct PRDescriptor {
  PrKind kind = PrKind::FS;
  PrCompound compound = PrCompound::None;
  std::shared_ptr<const PRDescriptor> left, right;  // Oplus/Product; Restrict base in left
  std::optional<IdealId> ideal;                     // PrKind::Ideal
  ExprPtr restrict_to;                              // Restrict

  static PRDescriptor fs_op() { return {PrKind::FS}; }
  static PRDescriptor delta_op() { return {PrKind::Delta}; }
  static PRDescriptor pairs_op() { return {PrKind::Pairs}; }
  static PRDescriptor ideal_op(IdealId id) {
    PRDescriptor d{PrKind::Ideal};
    d.ideal = std::move(id);
    return d;
  }
  static PRDescriptor oplus(PRDescriptor l, PRDescriptor r) {
    PRDescriptor d;
    d.compound = PrCompound::Oplus;
    d.left = std::make_shared<PRDescriptor>(std::move(l));
    d.right = std::make_shared<PRDescriptor>(std::move(r));
    return d;
  }
  static PRDescriptor product(PRDescriptor l, PRDescriptor r) {
    PRDescriptor d;
    d.compound = PrCompound::Product;
    d.left = std::make_shared<PRDescriptor>(std::move(l));
    d.right = std::make_shared<PRDescriptor>(std::move(r));
    return d;
  }
  static PRDescriptor restrict(PRDescriptor base, ExprPtr b) {
    PRDescriptor d;
    d.compound = PrCompound::Restrict;
    d.left = std::make_shared<PRDescriptor>(std::move(base));
    d.restrict_to = std::move(b);
    return d;
  }

  /// Image ground set Lambda.
  Ground lambda() const;
  /// Generator ground set Omega.
  Ground omega() const;
  std::string name() const;
};

/// rho(F) evaluated below cap. Structural domain checks only (cardinality,
/// zero elements, compound shape, restriction inclusion on the window);
/// budgeted ideal-positivity of F is the caller's concern.
Window apply_pr(const PRDescriptor& rho, const SetExpr& f, std::uint64_t cap);

/// apply_pr on an already-evaluated generator window.
Window apply_pr_window(const PRDescriptor& rho, const Window& f, std::uint64_t cap);

/// Finite K subset of the generator with apply_pr(rho, F\K) avoiding L.
/// FS: union of decodings of L inside fs(F); Delta: one endpoint per unique
/// representation; Pairs: one vertex per pair; Ideal: K = L & F.
/// Smallest-element tie-breaking throughout.
std::vector<std::uint64_t> trim_support(const PRDescriptor& rho, const Window& f,
                                        const std::vector<std::uint64_t>& l, std::uint64_t cap);

struct GreedyTrim {
  bool ok = false;
  std::vector<std::uint64_t> k;
  std::vector<std::uint64_t> obstruction;  // sample of irremovable violations
};

/// Grows K (smallest-violation first, decodings/endpoints/vertices per kind)
/// until apply_pr(rho, F\K) lands inside `allowed`, or the trim budget runs
/// out. The engine behind diagonalization and convergence trimming.
GreedyTrim greedy_trim(const PRDescriptor& rho, const Window& f, const Window& allowed,
                       std::uint64_t cap, unsigned trim_budget);

struct AccretionProbe {
  bool pass = false;
  std::uint64_t accretion_size = 0;
  std::vector<std::uint64_t> witness;  // generator of the image found inside the accretion
};

/// Searches rho(F) \ rho(F\K) for a full rho-image of a size-d generator.
/// Requires the per-rho certificate (very sparse for FS, D-sparse for Delta).
AccretionProbe small_accretion_probe(const PRDescriptor& rho, const Window& f,
                                     const std::vector<std::uint64_t>& k, std::uint64_t cap,
                                     unsigned d);

// ---------------------------------------------------------------------------
// Window locality (continuity probes)
// ---------------------------------------------------------------------------

enum class LocalityKind : std::uint8_t { FS, Pairs, Delta, DeltaOnL };

struct LocalityReport {
  bool pass = false;
  std::uint64_t agreement_bound = 0;  // the G' below which images were compared
  std::optional<std::uint64_t> witness;  // first disagreement (Delta: the discontinuity value)
  std::string note;
};

/// FS/Pairs/DeltaOnL: if A and B agree below G, their images agree below the
/// kind-specific bound. Delta: builds C = (A & [0,n)) | [n, G) and reports a
/// value of Delta(C) \ Delta(A) below G -- the discontinuity witness.
LocalityReport window_locality_probe(LocalityKind kind, const SetExpr& a, const SetExpr& b,
                                     std::uint64_t g, std::uint64_t n = 0);

}  // namespace prcomb
