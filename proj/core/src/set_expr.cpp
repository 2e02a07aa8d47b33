#include "prcomb/set_expr.hpp"

#include <algorithm>
#include <cmath>

#include "prcomb/errors.hpp"
#include "prcomb/subset_sum.hpp"

namespace prcomb {

namespace {

ExprPtr make(SetExpr e) { return std::make_shared<const SetExpr>(std::move(e)); }

// Coordinates of Cantor codes < n are < n (since pack(x,y) >= max(x,y)).
std::uint64_t grid_coord_bound(std::uint64_t n) { return n; }

}  // namespace

Ground SetExpr::ground() const {
  if (kind == ExprKind::Explicit && explicit_ground) return *explicit_ground;
  switch (kind) {
    case ExprKind::PairsOf:
    case ExprKind::MatchingOf:
      return Ground::pairs();
    case ExprKind::GridProduct:
    case ExprKind::GridDiagonal:
      return Ground::grid2();
    case ExprKind::Grid3Slices:
      return Ground::grid3();
    case ExprKind::DisjointSum:
      return Ground::sum(lhs->ground(), rhs->ground());
    case ExprKind::CrossProduct: {
      Ground l = lhs->ground(), r = rhs->ground();
      if (l == Ground::omega() && r == Ground::omega()) return Ground::grid2();
      return Ground::prod(std::move(l), std::move(r));
    }
    case ExprKind::Union:
    case ExprKind::Intersection:
    case ExprKind::Difference:
      return lhs->ground();
    case ExprKind::Complement:
    case ExprKind::Shift:
      return lhs->ground();
    default:
      return Ground::omega();
  }
}

ExprPtr SetExpr::explicit_set(std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  SetExpr e{ExprKind::Explicit};
  e.elems = std::move(xs);
  return make(std::move(e));
}

ExprPtr SetExpr::explicit_on(Ground g, std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  SetExpr e{ExprKind::Explicit};
  e.elems = std::move(xs);
  e.explicit_ground = std::move(g);
  return make(std::move(e));
}

ExprPtr SetExpr::arith_prog(std::uint64_t start, std::uint64_t step) {
  if (step == 0) fail(Errc::InvalidArgument, "arith_prog step must be >= 1");
  SetExpr e{ExprKind::ArithProg};
  e.a = start;
  e.b = step;
  return make(std::move(e));
}

ExprPtr SetExpr::scaled_odd(std::uint64_t k) {
  if (k >= 63) fail(Errc::InvalidArgument, "scaled_odd exponent too large");
  SetExpr e{ExprKind::ScaledOdd};
  e.a = k;
  return make(std::move(e));
}

ExprPtr SetExpr::geometric(std::uint64_t base, std::uint64_t start) {
  if (base < 2) fail(Errc::InvalidArgument, "geometric base must be >= 2");
  if (start == 0) fail(Errc::InvalidArgument, "geometric start must be >= 1");
  SetExpr e{ExprKind::Geometric};
  e.a = base;
  e.b = start;
  return make(std::move(e));
}

ExprPtr SetExpr::superincreasing(std::uint64_t seed, Rational factor) {
  if (seed == 0) fail(Errc::InvalidArgument, "superincreasing seed must be >= 1");
  if (factor < 1) fail(Errc::InvalidArgument, "superincreasing factor must be >= 1");
  SetExpr e{ExprKind::Superincreasing};
  e.a = seed;
  e.factor = std::move(factor);
  return make(std::move(e));
}

ExprPtr SetExpr::partial_sums(ExprPtr inner) {
  SetExpr e{ExprKind::PartialSums};
  e.lhs = std::move(inner);
  return make(std::move(e));
}
ExprPtr SetExpr::fs_of(ExprPtr inner) {
  SetExpr e{ExprKind::FSOf};
  e.lhs = std::move(inner);
  return make(std::move(e));
}
ExprPtr SetExpr::delta_of(ExprPtr inner) {
  SetExpr e{ExprKind::DeltaOf};
  e.lhs = std::move(inner);
  return make(std::move(e));
}
ExprPtr SetExpr::pairs_of(ExprPtr inner) {
  SetExpr e{ExprKind::PairsOf};
  e.lhs = std::move(inner);
  return make(std::move(e));
}
ExprPtr SetExpr::matching_of(ExprPtr inner) {
  SetExpr e{ExprKind::MatchingOf};
  e.lhs = std::move(inner);
  return make(std::move(e));
}

ExprPtr SetExpr::set_union(ExprPtr l, ExprPtr r) {
  if (!(l->ground() == r->ground())) fail(Errc::GroundSetMismatch, "union operands");
  SetExpr e{ExprKind::Union};
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make(std::move(e));
}
ExprPtr SetExpr::set_intersection(ExprPtr l, ExprPtr r) {
  if (!(l->ground() == r->ground())) fail(Errc::GroundSetMismatch, "intersection operands");
  SetExpr e{ExprKind::Intersection};
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make(std::move(e));
}
ExprPtr SetExpr::set_difference(ExprPtr l, ExprPtr r) {
  if (!(l->ground() == r->ground())) fail(Errc::GroundSetMismatch, "difference operands");
  SetExpr e{ExprKind::Difference};
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make(std::move(e));
}
ExprPtr SetExpr::complement(ExprPtr inner) {
  SetExpr e{ExprKind::Complement};
  e.lhs = std::move(inner);
  return make(std::move(e));
}
ExprPtr SetExpr::shift(ExprPtr inner, std::uint64_t offset, bool negative) {
  if (!(inner->ground() == Ground::omega()))
    fail(Errc::GroundSetMismatch, "shift requires an omega expression");
  SetExpr e{ExprKind::Shift};
  e.lhs = std::move(inner);
  e.a = offset;
  e.b = negative ? 1 : 0;
  return make(std::move(e));
}
ExprPtr SetExpr::grid_product(ExprPtr l, ExprPtr r) {
  SetExpr e{ExprKind::GridProduct};
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make(std::move(e));
}
ExprPtr SetExpr::grid_diagonal() { return make(SetExpr{ExprKind::GridDiagonal}); }
ExprPtr SetExpr::grid3_slices(std::vector<std::pair<std::uint64_t, ExprPtr>> slices) {
  SetExpr e{ExprKind::Grid3Slices};
  e.slices = std::move(slices);
  return make(std::move(e));
}
ExprPtr SetExpr::disjoint_sum(ExprPtr l, ExprPtr r) {
  SetExpr e{ExprKind::DisjointSum};
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make(std::move(e));
}
ExprPtr SetExpr::cross_product(ExprPtr l, ExprPtr r) {
  SetExpr e{ExprKind::CrossProduct};
  e.lhs = std::move(l);
  e.rhs = std::move(r);
  return make(std::move(e));
}

namespace {

Window eval_rec(const SetExpr& e, std::uint64_t n, int depth);

Window eval_fs(const SetExpr& e, std::uint64_t n, int depth) {
  Window inner = eval_rec(*e.lhs, n, depth);
  Window out(Ground::omega(), n);
  if (n == 0) return out;
  const bool has_zero = inner.contains(0);
  out.bits = subset_sum_closure(inner.elements(), n - 1);
  if (has_zero) out.insert(0);
  return out;
}

Window eval_delta_window(const Window& inner, std::uint64_t n) {
  Window out(Ground::omega(), n);
  auto xs = inner.elements();
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const std::uint64_t d = xs[j] - xs[i];
      if (d < n) out.bits.set(d);
    }
  return out;
}

Window eval_rec(const SetExpr& e, std::uint64_t n, int depth) {
  if (depth > kMaxExprDepth) fail(Errc::DepthLimit, "expression nesting too deep");
  switch (e.kind) {
    case ExprKind::Explicit: {
      Window w(Ground::omega(), n);
      for (auto x : e.elems) w.insert(x);
      return w;
    }
    case ExprKind::ArithProg: {
      Window w(Ground::omega(), n);
      for (std::uint64_t x = e.a; x < n; x += e.b) w.bits.set(x);
      return w;
    }
    case ExprKind::ScaledOdd: {
      Window w(Ground::omega(), n);
      const std::uint64_t scale = std::uint64_t{1} << e.a;
      for (std::uint64_t m = 0;; ++m) {
        const std::uint64_t x = scale * (2 * m + 1);
        if (x >= n) break;
        w.bits.set(x);
      }
      return w;
    }
    case ExprKind::Geometric: {
      Window w(Ground::omega(), n);
      for (std::uint64_t x = e.b; x < n; x *= e.a) {
        w.bits.set(x);
        if (x > n / e.a) break;
      }
      return w;
    }
    case ExprKind::Superincreasing: {
      Window w(Ground::omega(), n);
      std::uint64_t next = e.a;
      mpz_class sum = 0;
      while (next < n) {
        w.bits.set(next);
        sum += static_cast<unsigned long>(next);
        mpz_class bound_z = (sum * e.factor.get_num()) / e.factor.get_den() + 1;
        if (!bound_z.fits_ulong_p()) break;
        next = std::max<std::uint64_t>(bound_z.get_ui(), next + 1);
      }
      return w;
    }
    case ExprKind::PartialSums: {
      Window inner = eval_rec(*e.lhs, n, depth + 1);
      Window w(Ground::omega(), n);
      std::uint64_t sum = 0;
      bool alive = true;
      inner.bits.for_each_set([&](std::uint64_t x) {
        if (!alive) return;
        sum += x;
        if (sum < n)
          w.bits.set(sum);
        else
          alive = false;
      });
      return w;
    }
    case ExprKind::FSOf:
      return eval_fs(e, n, depth + 1);
    case ExprKind::DeltaOf:
      return eval_delta_window(eval_rec(*e.lhs, n, depth + 1), n);
    case ExprKind::PairsOf: {
      Window inner = eval_rec(*e.lhs, pair_coord_bound(n), depth + 1);
      Window w(Ground::pairs(), n);
      auto xs = inner.elements();
      for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          const std::uint64_t c = pack_pair(xs[i], xs[j]);
          if (c < n) w.bits.set(c);
        }
      return w;
    }
    case ExprKind::MatchingOf: {
      Window inner = eval_rec(*e.lhs, pair_coord_bound(n), depth + 1);
      Window w(Ground::pairs(), n);
      auto xs = inner.elements();
      for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
        const std::uint64_t c = pack_pair(xs[i], xs[i + 1]);
        if (c < n) w.bits.set(c);
      }
      return w;
    }
    case ExprKind::Union: {
      Window w = eval_rec(*e.lhs, n, depth + 1);
      w.bits |= eval_rec(*e.rhs, n, depth + 1).bits;
      return w;
    }
    case ExprKind::Intersection: {
      Window w = eval_rec(*e.lhs, n, depth + 1);
      w.bits &= eval_rec(*e.rhs, n, depth + 1).bits;
      return w;
    }
    case ExprKind::Difference: {
      Window w = eval_rec(*e.lhs, n, depth + 1);
      w.bits.subtract(eval_rec(*e.rhs, n, depth + 1).bits);
      return w;
    }
    case ExprKind::Complement: {
      Window inner = eval_rec(*e.lhs, n, depth + 1);
      Window w(inner.ground, n);
      for (std::uint64_t i = 0; i < n; ++i)
        if (!inner.bits.test(i)) w.bits.set(i);
      return w;
    }
    case ExprKind::Shift: {
      if (e.b == 0) {
        Window inner = eval_rec(*e.lhs, n > e.a ? n - e.a : 0, depth + 1);
        Window w(Ground::omega(), n);
        inner.bits.for_each_set([&](std::uint64_t x) { w.insert(x + e.a); });
        return w;
      }
      Window inner = eval_rec(*e.lhs, n + e.a, depth + 1);
      Window w(Ground::omega(), n);
      inner.bits.for_each_set([&](std::uint64_t x) {
        if (x > e.a) w.insert(x - e.a);
      });
      return w;
    }
    case ExprKind::GridProduct: {
      const std::uint64_t cb = grid_coord_bound(n);
      Window l = eval_rec(*e.lhs, cb, depth + 1);
      Window r = eval_rec(*e.rhs, cb, depth + 1);
      Window w(Ground::grid2(), n);
      auto xs = l.elements();
      auto ys = r.elements();
      for (auto x : xs)
        for (auto y : ys) {
          if (x + y >= cb) break;
          const std::uint64_t c = pack_grid2(x, y);
          if (c < n) w.bits.set(c);
        }
      return w;
    }
    case ExprKind::GridDiagonal: {
      Window w(Ground::grid2(), n);
      for (std::uint64_t m = 0;; ++m) {
        const std::uint64_t c = pack_grid2(m, m);
        if (c >= n) break;
        w.bits.set(c);
      }
      return w;
    }
    case ExprKind::Grid3Slices: {
      Window w(Ground::grid3(), n);
      for (const auto& [i, sl] : e.slices) {
        Window s2 = eval_rec(*sl, n, depth + 1);
        s2.bits.for_each_set([&](std::uint64_t c2) {
          const std::uint64_t c = pack_grid2(i, c2);
          if (c < n) w.bits.set(c);
        });
      }
      return w;
    }
    case ExprKind::DisjointSum: {
      Window l = eval_rec(*e.lhs, (n + 1) / 2, depth + 1);
      Window r = eval_rec(*e.rhs, n / 2, depth + 1);
      Window w(e.ground(), n);
      l.bits.for_each_set([&](std::uint64_t x) { w.insert(pack_sum(x, 0)); });
      r.bits.for_each_set([&](std::uint64_t x) { w.insert(pack_sum(x, 1)); });
      return w;
    }
    case ExprKind::CrossProduct: {
      const std::uint64_t cb = grid_coord_bound(n);
      Window l = eval_rec(*e.lhs, cb, depth + 1);
      Window r = eval_rec(*e.rhs, cb, depth + 1);
      Window w(e.ground(), n);
      auto xs = l.elements();
      auto ys = r.elements();
      for (auto x : xs)
        for (auto y : ys) {
          if (x + y >= cb) break;
          const std::uint64_t c = pack_grid2(x, y);
          if (c < n) w.bits.set(c);
        }
      return w;
    }
  }
  fail(Errc::InvalidArgument, "unknown expression kind");
}

}  // namespace

Window eval_window(const SetExpr& expr, std::uint64_t n) { return eval_rec(expr, n, 0); }

std::vector<std::uint64_t> enumerate_elements(const SetExpr& expr, std::uint64_t count,
                                              std::uint64_t widen_cap) {
  if (count == 0) return {};
  for (std::uint64_t n = 64;; n *= 2) {
    if (n > widen_cap) n = widen_cap;
    Window w = eval_window(expr, n);
    auto xs = w.elements();
    if (xs.size() >= count) {
      xs.resize(count);
      return xs;
    }
    if (n == widen_cap) {
      if (size_class(expr) == SizeClass::Finite && xs.size() < count)
        fail(Errc::Exhausted, "finite source has too few elements");
      fail(Errc::Exhausted, "widening cap hit before enough elements appeared");
    }
  }
}

Rational partial_reciprocal_sum(const SetExpr& expr, std::uint64_t n) {
  Window w = eval_window(expr, n);
  Rational sum = 0;
  w.bits.for_each_set([&](std::uint64_t x) {
    sum += Rational(1, static_cast<unsigned long>(x + 1));
  });
  return sum;
}

Rational upper_density_estimate(const SetExpr& expr, std::uint64_t n) {
  if (n == 0) fail(Errc::InvalidArgument, "window bound must be >= 1");
  Window w = eval_window(expr, n);
  std::uint64_t cnt = 0;
  std::uint64_t best_num = 0, best_den = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (w.bits.test(m - 1)) ++cnt;
    // compare cnt/m with best
    if (static_cast<unsigned __int128>(cnt) * best_den >
        static_cast<unsigned __int128>(best_num) * m) {
      best_num = cnt;
      best_den = m;
    }
  }
  Rational q(static_cast<unsigned long>(best_num), static_cast<unsigned long>(best_den));
  q.canonicalize();
  return q;
}

SizeClass size_class(const SetExpr& e) {
  switch (e.kind) {
    case ExprKind::Explicit:
      return SizeClass::Finite;
    case ExprKind::ArithProg:
    case ExprKind::ScaledOdd:
    case ExprKind::Geometric:
    case ExprKind::Superincreasing:
    case ExprKind::GridDiagonal:
      return SizeClass::Infinite;
    case ExprKind::PartialSums:
    case ExprKind::Shift:
      return size_class(*e.lhs);
    case ExprKind::FSOf:
    case ExprKind::DeltaOf:
    case ExprKind::PairsOf:
    case ExprKind::MatchingOf:
      return size_class(*e.lhs);
    case ExprKind::Union: {
      auto l = size_class(*e.lhs), r = size_class(*e.rhs);
      if (l == SizeClass::Infinite || r == SizeClass::Infinite) return SizeClass::Infinite;
      if (l == SizeClass::Finite && r == SizeClass::Finite) return SizeClass::Finite;
      return SizeClass::Unknown;
    }
    case ExprKind::Intersection: {
      auto l = size_class(*e.lhs), r = size_class(*e.rhs);
      if (l == SizeClass::Finite || r == SizeClass::Finite) return SizeClass::Finite;
      return SizeClass::Unknown;
    }
    case ExprKind::Difference: {
      auto l = size_class(*e.lhs), r = size_class(*e.rhs);
      if (l == SizeClass::Finite) return SizeClass::Finite;
      if (l == SizeClass::Infinite && r == SizeClass::Finite) return SizeClass::Infinite;
      return SizeClass::Unknown;
    }
    case ExprKind::Complement:
      return size_class(*e.lhs) == SizeClass::Finite ? SizeClass::Infinite : SizeClass::Unknown;
    case ExprKind::GridProduct:
    case ExprKind::CrossProduct: {
      auto l = size_class(*e.lhs), r = size_class(*e.rhs);
      if (l == SizeClass::Finite && r == SizeClass::Finite) return SizeClass::Finite;
      if (l == SizeClass::Unknown || r == SizeClass::Unknown) return SizeClass::Unknown;
      return SizeClass::Infinite;  // at least one infinite, none empty-checked
    }
    case ExprKind::Grid3Slices: {
      bool all_fin = true;
      for (const auto& [i, sl] : e.slices) {
        auto c = size_class(*sl);
        if (c == SizeClass::Infinite) return SizeClass::Infinite;
        if (c != SizeClass::Finite) all_fin = false;
      }
      return all_fin ? SizeClass::Finite : SizeClass::Unknown;
    }
    case ExprKind::DisjointSum: {
      auto l = size_class(*e.lhs), r = size_class(*e.rhs);
      if (l == SizeClass::Infinite || r == SizeClass::Infinite) return SizeClass::Infinite;
      if (l == SizeClass::Finite && r == SizeClass::Finite) return SizeClass::Finite;
      return SizeClass::Unknown;
    }
  }
  return SizeClass::Unknown;
}

GrowthInfo growth_class(const SetExpr& e) {
  const auto summable = [](const GrowthInfo& g) {
    return g.cls == GrowthClass::FiniteSet || g.cls == GrowthClass::ReciprocalSummable;
  };
  switch (e.kind) {
    case ExprKind::Explicit:
      return {GrowthClass::FiniteSet, "finite set"};
    case ExprKind::ArithProg:
      return {GrowthClass::Divergent, "arithmetic progression: harmonic-type divergence"};
    case ExprKind::ScaledOdd:
      return {GrowthClass::Divergent, "2-adic class: constant multiple of the odd harmonic series"};
    case ExprKind::Geometric:
      return {GrowthClass::ReciprocalSummable, "geometric growth"};
    case ExprKind::Superincreasing:
      return {GrowthClass::ReciprocalSummable, "superincreasing growth dominates a geometric"};
    case ExprKind::PartialSums: {
      auto c = size_class(*e.lhs);
      if (c == SizeClass::Finite) return {GrowthClass::FiniteSet, "partial sums of a finite set"};
      if (c == SizeClass::Infinite)
        return {GrowthClass::ReciprocalSummable,
                "partial sums of distinct naturals grow at least quadratically"};
      return {GrowthClass::Unknown, "inner cardinality undecided"};
    }
    case ExprKind::FSOf: {
      // removing finitely many elements keeps all growth classes below
      const SetExpr* core = e.lhs.get();
      while (core->kind == ExprKind::Difference &&
             size_class(*core->rhs) == SizeClass::Finite)
        core = core->lhs.get();
      const SetExpr& in = *core;
      if (in.kind == ExprKind::Superincreasing && in.factor >= 2)
        return {GrowthClass::ReciprocalSummable,
                "finite sums of a factor->=2 superincreasing set: 2^k sums below the k-th "
                "element, elements grow with ratio > 2"};
      if (in.kind == ExprKind::Geometric && in.a >= 3)
        return {GrowthClass::ReciprocalSummable,
                "finite sums of a base->=3 geometric set: count growth 2^k below element "
                "growth"};
      if (size_class(in) == SizeClass::Finite)
        return {GrowthClass::FiniteSet, "finite sums of a finite set"};
      return {GrowthClass::Unknown, "finite-sums image outside the recognized growth classes"};
    }
    case ExprKind::Shift:
      return growth_class(*e.lhs);
    case ExprKind::Union: {
      auto l = growth_class(*e.lhs), r = growth_class(*e.rhs);
      if (l.cls == GrowthClass::Divergent) return l;
      if (r.cls == GrowthClass::Divergent) return r;
      if (summable(l) && summable(r))
        return {GrowthClass::ReciprocalSummable, "union of two summable classes"};
      return {GrowthClass::Unknown, "union outside the closed class"};
    }
    case ExprKind::Intersection: {
      auto l = growth_class(*e.lhs), r = growth_class(*e.rhs);
      if (summable(l)) return {l.cls, "subset of a summable class"};
      if (summable(r)) return {r.cls, "subset of a summable class"};
      return {GrowthClass::Unknown, "intersection outside the closed class"};
    }
    case ExprKind::Difference: {
      auto l = growth_class(*e.lhs), r = growth_class(*e.rhs);
      if (summable(l)) return {l.cls, "subset of a summable class"};
      if (l.cls == GrowthClass::Divergent && summable(r))
        return {GrowthClass::Divergent, "divergent minus summable stays divergent"};
      return {GrowthClass::Unknown, "difference outside the closed class"};
    }
    case ExprKind::Complement: {
      auto in = growth_class(*e.lhs);
      if (summable(in))
        return {GrowthClass::Divergent, "complement of a summable set diverges"};
      return {GrowthClass::Unknown, "complement outside the closed class"};
    }
    default:
      return {GrowthClass::Unknown, "no growth classification for this kind"};
  }
}

std::string to_string(const SetExpr& e) {
  switch (e.kind) {
    case ExprKind::Explicit: {
      std::string s = "{";
      for (std::size_t i = 0; i < e.elems.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.elems[i]);
      }
      return s + "}";
    }
    case ExprKind::ArithProg:
      return "ap(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case ExprKind::ScaledOdd:
      return "scaled_odd(" + std::to_string(e.a) + ")";
    case ExprKind::Geometric:
      return "geom(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case ExprKind::Superincreasing:
      return "superinc(" + std::to_string(e.a) + "," + e.factor.get_str() + ")";
    case ExprKind::PartialSums:
      return "psums(" + to_string(*e.lhs) + ")";
    case ExprKind::FSOf:
      return "fs(" + to_string(*e.lhs) + ")";
    case ExprKind::DeltaOf:
      return "delta(" + to_string(*e.lhs) + ")";
    case ExprKind::PairsOf:
      return "pairs(" + to_string(*e.lhs) + ")";
    case ExprKind::MatchingOf:
      return "matching(" + to_string(*e.lhs) + ")";
    case ExprKind::Union:
      return "(" + to_string(*e.lhs) + " | " + to_string(*e.rhs) + ")";
    case ExprKind::Intersection:
      return "(" + to_string(*e.lhs) + " & " + to_string(*e.rhs) + ")";
    case ExprKind::Difference:
      return "(" + to_string(*e.lhs) + " \\ " + to_string(*e.rhs) + ")";
    case ExprKind::Complement:
      return "~(" + to_string(*e.lhs) + ")";
    case ExprKind::Shift:
      return "(" + to_string(*e.lhs) + (e.b ? " - " : " + ") + std::to_string(e.a) + ")";
    case ExprKind::GridProduct:
      return "(" + to_string(*e.lhs) + " x " + to_string(*e.rhs) + ")";
    case ExprKind::GridDiagonal:
      return "diag";
    case ExprKind::Grid3Slices:
      return "slices[" + std::to_string(e.slices.size()) + "]";
    case ExprKind::DisjointSum:
      return "(" + to_string(*e.lhs) + " (+) " + to_string(*e.rhs) + ")";
    case ExprKind::CrossProduct:
      return "(" + to_string(*e.lhs) + " (x) " + to_string(*e.rhs) + ")";
  }
  return "?";
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DepthLimit: return "DepthLimit";
    case Errc::Exhausted: return "Exhausted";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::TooFewElements: return "TooFewElements";
    case Errc::NotSparse: return "NotSparse";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::NotLacunary: return "NotLacunary";
    case Errc::NotSuperincreasing: return "NotSuperincreasing";
    case Errc::DecodingFailed: return "DecodingFailed";
    case Errc::CertificateMissing: return "CertificateMissing";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::GroundSetMismatch: return "GroundSetMismatch";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::ThresholdAboveCap: return "ThresholdAboveCap";
    case Errc::RuleUnsupported: return "RuleUnsupported";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace prcomb
