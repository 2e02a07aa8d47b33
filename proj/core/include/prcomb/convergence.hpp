#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "prcomb/ideal.hpp"
#include "prcomb/plike.hpp"
#include "prcomb/pr_ops.hpp"
#include "prcomb/rational.hpp"

namespace prcomb {

// ---------------------------------------------------------------------------
// Spaces and points
// ---------------------------------------------------------------------------

enum class SpaceKind : std::uint8_t { Discrete, Alexandroff, UnitInterval, Phi };

/// Computable space description with an indexed decreasing neighborhood base
/// at every point. Phi carries an almost disjoint family (window-checked
/// against the declared intersection bound).
struct SpaceDesc {
  SpaceKind kind = SpaceKind::Alexandroff;
  std::uint64_t discrete_size = 0;
  std::vector<ExprPtr> family;
  std::uint64_t ad_bound = 8;  // declared |A_i & A_j| bound on every window

  static SpaceDesc discrete(std::uint64_t n) { return {SpaceKind::Discrete, n, {}, 0}; }
  static SpaceDesc alexandroff() { return {SpaceKind::Alexandroff, 0, {}, 0}; }
  static SpaceDesc unit_interval() { return {SpaceKind::UnitInterval, 0, {}, 0}; }
  static SpaceDesc phi(std::vector<ExprPtr> fam, std::uint64_t ad_bound = 8) {
    return {SpaceKind::Phi, 0, std::move(fam), ad_bound};
  }

  /// Verifies the declared almost-disjointness on a window.
  bool check_family(std::uint64_t cap) const;
};

enum class PointKind : std::uint8_t { Nat, Infty, FamilyMember, Rat };

struct Point {
  PointKind kind = PointKind::Nat;
  std::uint64_t n = 0;  // Nat value or family index
  Rational q;

  static Point nat(std::uint64_t v) { return {PointKind::Nat, v, {}}; }
  static Point infty() { return {PointKind::Infty, 0, {}}; }
  static Point family_member(std::uint64_t i) { return {PointKind::FamilyMember, i, {}}; }
  static Point rat(Rational v) { return {PointKind::Rat, 0, std::move(v)}; }

  bool operator==(const Point& o) const {
    return kind == o.kind && n == o.n && (kind != PointKind::Rat || q == o.q);
  }
  std::string to_string() const;
};

/// p in U_m(limit), the m-th basic neighborhood. Bases are decreasing in m.
bool in_neighborhood(const SpaceDesc& space, const Point& p, const Point& limit, unsigned m,
                     std::uint64_t cap);

// ---------------------------------------------------------------------------
// Sequences
// ---------------------------------------------------------------------------

enum class RuleKind : std::uint8_t {
  Const,
  Identity,           // lambda -> Nat(lambda)
  Mod,                // lambda -> Nat(lambda mod m)
  Reciprocal,         // lambda -> 1/(lambda+1)
  PairGapReciprocal,  // packed {a,b} -> 1/(b-a+1)
  Piecewise,          // first matching piece, else the fallback
};

struct SeqRule;
using RulePtr = std::shared_ptr<const SeqRule>;

struct SeqRule {
  RuleKind kind = RuleKind::Identity;
  Point c;
  std::uint64_t m = 0;
  std::vector<std::pair<ExprPtr, RulePtr>> pieces;
  RulePtr fallback;

  static RulePtr constant(Point p);
  static RulePtr identity();
  static RulePtr modulo(std::uint64_t m);
  static RulePtr reciprocal();
  static RulePtr pair_gap_reciprocal();
  static RulePtr piecewise(std::vector<std::pair<ExprPtr, RulePtr>> pieces, RulePtr fallback);
};

/// f evaluated over the window's elements (piece windows computed once).
std::vector<Point> map_window(const SeqRule& f, const Window& dom);

/// Point evaluation (evaluates piece membership at the element's own scale).
Point eval_rule(const SeqRule& f, std::uint64_t lambda);

/// Symbolic preimage of the set [0, n] of Nat values, when the rule class
/// admits one (identity and constant pieces).
std::optional<ExprPtr> preimage_of_nat_prefix(const SeqRule& f, std::uint64_t n);

// ---------------------------------------------------------------------------
// Convergence verdicts
// ---------------------------------------------------------------------------

enum class ConvStatus : std::uint8_t { Verified, Refuted, Exhausted };

struct ConvergenceVerdict {
  ConvStatus status = ConvStatus::Exhausted;
  unsigned depth = 0;
  std::vector<std::vector<std::uint64_t>> trims;  // K_m per base index
  unsigned refuted_index = 0;
  std::vector<std::uint64_t> escape;  // inexhaustible escape sample
  bool rechecked = false;
  std::string note;
};

/// For each base neighborhood U_m (m <= depth) searches a finite trim K with
/// f[rho(F\K) & window] inside U_m; VERIFIED re-checks independently.
ConvergenceVerdict rho_converge_check(const SpaceDesc& space, const SeqRule& f,
                                      const PRDescriptor& rho, const SetExpr& gen,
                                      const Point& limit, unsigned depth, std::uint64_t cap,
                                      const Budget& budget);

/// The diagonal echo: from a VERIFIED verdict, extracts a one-to-one
/// sequence a_n in rho(F \ [0,n)) whose f-values converge plainly at the
/// same depth. Returns the picks; empty when extraction stalls.
std::vector<std::uint64_t> diagonal_subsequence(const PRDescriptor& rho, const SetExpr& gen,
                                                std::uint64_t count, std::uint64_t cap);

// ---------------------------------------------------------------------------
// Searches over the catalog spaces
// ---------------------------------------------------------------------------

struct FinBwResult {
  bool found = false;
  bool inconclusive = false;
  ExprPtr generator;
  Point limit;
  ConvergenceVerdict verdict;
  std::string note;
};

/// One-point-compactification search: the constant-preimage branch when some
/// fiber is positive, else the finite-avoidance diagonalization with limit
/// at infinity.
FinBwResult finbw_search_alexandroff(const SeqRule& f, const PRDescriptor& rho, unsigned depth,
                                     std::uint64_t cap, const Budget& budget);

struct MetricStage {
  Rational center;
  Rational radius;
  std::vector<std::uint64_t> generator;  // window prefix of F_n
};

struct MetricResult {
  bool found = false;
  bool inconclusive = false;
  Rational limit;
  std::vector<MetricStage> stages;
  ExprPtr generator;
  ConvergenceVerdict verdict;
  std::string note;
};

/// Ball refinement over [0,1] with dyadic centers j/(2(n+1)) at stage n,
/// ties to the least center; finishes with the weak-diagonal generator and
/// re-verifies convergence to tolerance 1/(depth+1).
MetricResult metric_limit_search(const SeqRule& f, const PRDescriptor& rho, unsigned depth,
                                 std::uint64_t cap, const Budget& budget);

struct PhiClassification {
  int case_id = 0;        // 1, 2, 31, 32, 33 (3a/3b/3c)
  bool resolved = false;  // a generator and limit were produced
  bool inconclusive = false;
  ExprPtr generator;
  Point limit;
  ConvergenceVerdict verdict;
  bool fallback_used = false;  // countable-family fallback after case 3c
  std::string note;
};

/// The five-case classification over the almost-disjoint-family space, with
/// the countable-family fallback after the unresolved case.
PhiClassification finbw_classify_phi(const SpaceDesc& space, const SeqRule& f,
                                     const PRDescriptor& rho, unsigned depth,
                                     std::uint64_t cap, const Budget& budget);

struct MadObstruction {
  bool holds = true;
  std::vector<std::pair<std::string, std::uint64_t>> witnesses;  // sample -> family index
  std::string counterexample;  // nonempty when a sample defeats every member
};

/// For each sampled generator, hunts a family member meeting every budgeted
/// trim of the image: the finite shadow of the non-FinBW condition.
MadObstruction mad_obstruction_check(const std::vector<ExprPtr>& family,
                                     const PRDescriptor& rho,
                                     const std::vector<ExprPtr>& f_samples, unsigned trims,
                                     std::uint64_t cap);

}  // namespace prcomb
