#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prcomb/rational.hpp"
#include "prcomb/window.hpp"

namespace prcomb {

struct SetExpr;
using ExprPtr = std::shared_ptr<const SetExpr>;

enum class ExprKind : std::uint8_t {
  Explicit,        // finite list, normalized strictly increasing
  ArithProg,       // {start + k*step : k}
  ScaledOdd,       // {2^k (2n+1) : n}
  Geometric,       // {start * base^n : n}
  Superincreasing, // greedy d_{k+1} = least integer > factor * sum(d_0..d_k)
  PartialSums,     // running sums of the inner enumeration
  FSOf,            // finite sums of distinct inner elements (window-exact)
  DeltaOf,         // positive differences of the inner window (see note below)
  PairsOf,         // [inner]^2, packed
  MatchingOf,      // pairs of consecutive inner elements, packed
  Union,
  Intersection,
  Difference,
  Complement,      // within the ground set
  Shift,           // +n / -n (the -n variant drops elements <= n)
  GridProduct,     // A x B in omega^2
  GridDiagonal,    // {(n,n)}
  Grid3Slices,     // omega^3 from finitely many omega^2 slices
  DisjointSum,     // A |_| B, codes 2x+side
  CrossProduct,    // A x B over arbitrary grounds, Cantor-packed codes
};

/// Tri-state cardinality classification inside the closed expression grammar.
enum class SizeClass : std::uint8_t { Finite, Infinite, Unknown };

/// Reciprocal-sum behaviour, decidable only for recognized shapes.
enum class GrowthClass : std::uint8_t {
  FiniteSet,
  ReciprocalSummable,  // geometric growth, superincreasing, quadratic images
  Divergent,           // arithmetic progressions, 2-adic classes, full omega
  Unknown,
};

struct GrowthInfo {
  GrowthClass cls = GrowthClass::Unknown;
  std::string reason;
};

/// Symbolic description of a subset of omega (or pairs / grids). Immutable;
/// every operation on it is a pure function of (expr, window bound).
///
/// Window evaluation is exact and monotone -- eval(e,N) == eval(e,M) & [0,N)
/// for N <= M -- for every kind except DeltaOf, whose value below N may gain
/// elements as the window grows (differences of large elements can be small;
/// this is the discontinuity of the difference map, and it is exact below
/// the usual gap bound when the inner set is lacunary).
struct SetExpr {
  ExprKind kind;
  std::vector<std::uint64_t> elems;  // Explicit
  std::uint64_t a = 0;               // start / k / base / seed / shift offset
  std::uint64_t b = 0;               // step / start / (shift: 1 = negative)
  Rational factor;                   // Superincreasing
  ExprPtr lhs, rhs;
  std::vector<std::pair<std::uint64_t, ExprPtr>> slices;  // Grid3Slices
  std::optional<Ground> explicit_ground;  // Explicit on a non-omega ground

  Ground ground() const;

  // -- factories (validated) --
  static ExprPtr explicit_set(std::vector<std::uint64_t> xs);
  /// Explicit codes on an arbitrary ground (packed pairs, grid points, ...).
  static ExprPtr explicit_on(Ground g, std::vector<std::uint64_t> xs);
  static ExprPtr arith_prog(std::uint64_t start, std::uint64_t step);
  static ExprPtr scaled_odd(std::uint64_t k);
  static ExprPtr geometric(std::uint64_t base, std::uint64_t start);
  static ExprPtr superincreasing(std::uint64_t seed, Rational factor);
  static ExprPtr partial_sums(ExprPtr inner);
  static ExprPtr fs_of(ExprPtr inner);
  static ExprPtr delta_of(ExprPtr inner);
  static ExprPtr pairs_of(ExprPtr inner);
  static ExprPtr matching_of(ExprPtr inner);
  static ExprPtr set_union(ExprPtr l, ExprPtr r);
  static ExprPtr set_intersection(ExprPtr l, ExprPtr r);
  static ExprPtr set_difference(ExprPtr l, ExprPtr r);
  static ExprPtr complement(ExprPtr inner);
  static ExprPtr shift(ExprPtr inner, std::uint64_t offset, bool negative);
  static ExprPtr grid_product(ExprPtr l, ExprPtr r);
  static ExprPtr grid_diagonal();
  static ExprPtr grid3_slices(std::vector<std::pair<std::uint64_t, ExprPtr>> slices);
  static ExprPtr disjoint_sum(ExprPtr l, ExprPtr r);
  static ExprPtr cross_product(ExprPtr l, ExprPtr r);

  static ExprPtr omega() { return arith_prog(0, 1); }
};

inline constexpr std::uint64_t kDefaultWidenCap = std::uint64_t{1} << 26;
inline constexpr int kMaxExprDepth = 64;

/// Exact membership mask of expr below N.
Window eval_window(const SetExpr& expr, std::uint64_t n);
inline Window eval_window(const ExprPtr& e, std::uint64_t n) { return eval_window(*e, n); }

/// First `count` elements in increasing order, widening the window
/// geometrically up to widen_cap. Throws Exhausted if the source runs dry.
std::vector<std::uint64_t> enumerate_elements(const SetExpr& expr, std::uint64_t count,
                                              std::uint64_t widen_cap = kDefaultWidenCap);

/// sum over x in eval(expr, N) of 1/(x+1), exact.
Rational partial_reciprocal_sum(const SetExpr& expr, std::uint64_t n);

/// max over 1 <= m <= N of |A & [0,m)| / m, exact.
Rational upper_density_estimate(const SetExpr& expr, std::uint64_t n);

SizeClass size_class(const SetExpr& expr);
GrowthInfo growth_class(const SetExpr& expr);

std::string to_string(const SetExpr& expr);

}  // namespace prcomb
