#include <doctest.h>

#include <set>

#include "prcomb/errors.hpp"
#include "prcomb/prng.hpp"
#include "prcomb/set_expr.hpp"

using namespace prcomb;

namespace {

std::vector<std::uint64_t> elems(const ExprPtr& e, std::uint64_t n) {
  return eval_window(*e, n).elements();
}

// random expression over the exact-evaluation kinds (DeltaOf excluded: its
// window value grows with the bound by design)
ExprPtr random_expr(SplitMix64& rng, int depth = 0) {
  const std::uint64_t pick = rng.below(depth >= 3 ? 7 : 10);
  switch (pick) {
    case 0: {
      std::vector<std::uint64_t> xs;
      for (int i = rng.below(6); i-- > 0;) xs.push_back(rng.below(64));
      return SetExpr::explicit_set(xs);
    }
    case 1: return SetExpr::arith_prog(rng.below(8), 1 + rng.below(5));
    case 2: return SetExpr::scaled_odd(rng.below(4));
    case 3: return SetExpr::geometric(2 + rng.below(3), 1 + rng.below(4));
    case 4: return SetExpr::superincreasing(1 + rng.below(3), Rational(1 + (long)rng.below(3)));
    case 5: return SetExpr::partial_sums(random_expr(rng, depth + 1));
    case 6: return SetExpr::fs_of(SetExpr::superincreasing(1 + rng.below(2), Rational(2)));
    case 7: return SetExpr::set_union(random_expr(rng, depth + 1), random_expr(rng, depth + 1));
    case 8:
      return SetExpr::set_difference(random_expr(rng, depth + 1), random_expr(rng, depth + 1));
    default:
      return SetExpr::shift(SetExpr::arith_prog(rng.below(4), 1 + rng.below(3)), rng.below(5),
                            rng.below(2) == 0);
  }
}

}  // namespace

TEST_CASE("window evaluation matches the catalog examples") {
  CHECK(elems(SetExpr::arith_prog(1, 2), 10) == std::vector<std::uint64_t>{1, 3, 5, 7, 9});
  CHECK(elems(SetExpr::scaled_odd(1), 16) == std::vector<std::uint64_t>{2, 6, 10, 14});
  CHECK(elems(SetExpr::partial_sums(SetExpr::explicit_set({1, 2, 4})), 10) ==
        std::vector<std::uint64_t>{1, 3, 7});
  CHECK(elems(SetExpr::geometric(2, 1), 9) == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(elems(SetExpr::superincreasing(1, Rational(1)), 16) ==
        std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(elems(SetExpr::superincreasing(1, Rational(2)), 100) ==
        std::vector<std::uint64_t>{1, 3, 9, 27, 81});
}

TEST_CASE("enumeration widens geometrically and reports exhaustion") {
  CHECK(enumerate_elements(*SetExpr::geometric(2, 1), 4) ==
        std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(enumerate_elements(*SetExpr::scaled_odd(0), 3) == std::vector<std::uint64_t>{1, 3, 5});
  CHECK_THROWS_AS((void)enumerate_elements(*SetExpr::explicit_set({5}), 2), Error);
}

TEST_CASE("partial reciprocal sums are exact rationals") {
  CHECK(partial_reciprocal_sum(*SetExpr::arith_prog(0, 1), 3) == Rational(11, 6));
  CHECK(partial_reciprocal_sum(*SetExpr::explicit_set({}), 100) == 0);
  // oracle: direct rational summation over {1,2,4,8}
  Rational expect = Rational(1, 2) + Rational(1, 3) + Rational(1, 5) + Rational(1, 9);
  CHECK(partial_reciprocal_sum(*SetExpr::geometric(2, 1), 9) == expect);
  CHECK(expect == Rational(103, 90));
}

TEST_CASE("upper density estimate equals the brute-force prefix maximum") {
  auto oracle = [](const ExprPtr& e, std::uint64_t n) {
    Window w = eval_window(*e, n);
    Rational best = 0;
    std::uint64_t cnt = 0;
    for (std::uint64_t m = 1; m <= n; ++m) {
      if (w.contains(m - 1)) ++cnt;
      Rational q(static_cast<unsigned long>(cnt), static_cast<unsigned long>(m));
      q.canonicalize();
      if (q > best) best = q;
    }
    return best;
  };
  auto evens = SetExpr::arith_prog(0, 2);
  CHECK(upper_density_estimate(*evens, 1000) >= Rational(1, 2));
  CHECK(upper_density_estimate(*evens, 1000) == oracle(evens, 1000));
  auto geo = SetExpr::geometric(2, 1);
  CHECK(upper_density_estimate(*geo, 1024) == oracle(geo, 1024));
  CHECK(upper_density_estimate(*SetExpr::explicit_set({1}), 10) == Rational(1, 2));
}

TEST_CASE("window evaluation is monotone across bounds") {
  SplitMix64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    auto e = random_expr(rng);
    const std::uint64_t n = 1 + rng.below(300);
    const std::uint64_t m = n + rng.below(300);
    Window small = eval_window(*e, n);
    Window big = eval_window(*e, m);
    CHECK(small == big.restricted(n));
  }
}

TEST_CASE("mask algebra agrees with elementwise set operations") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_expr(rng);
    auto b = random_expr(rng);
    const std::uint64_t n = 64 + rng.below(200);
    std::set<std::uint64_t> sa, sb;
    for (auto x : elems(a, n)) sa.insert(x);
    for (auto x : elems(b, n)) sb.insert(x);
    std::set<std::uint64_t> su = sa, si, sd;
    su.insert(sb.begin(), sb.end());
    for (auto x : sa)
      if (sb.count(x)) si.insert(x);
    for (auto x : sa)
      if (!sb.count(x)) sd.insert(x);
    auto check = [&](const ExprPtr& e, const std::set<std::uint64_t>& expect) {
      auto xs = elems(e, n);
      CHECK(std::set<std::uint64_t>(xs.begin(), xs.end()) == expect);
    };
    check(SetExpr::set_union(a, b), su);
    check(SetExpr::set_intersection(a, b), si);
    check(SetExpr::set_difference(a, b), sd);
  }
}

TEST_CASE("shifting up then down is the identity on the valid range") {
  // the negative shift keeps only elements strictly above the offset, so
  // the round trip recovers everything except a leading zero
  SplitMix64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_expr(rng);
    const std::uint64_t off = 1 + rng.below(10);
    auto round = SetExpr::shift(SetExpr::shift(a, off, false), off, true);
    auto expect = SetExpr::set_difference(a, SetExpr::explicit_set({0}));
    const std::uint64_t n = 100 + rng.below(100);
    CHECK(eval_window(*round, n) == eval_window(*expect, n));
  }
}

TEST_CASE("2-adic classes partition the positive range") {
  const unsigned kk = 10;
  const std::uint64_t bound = std::uint64_t{1} << kk;
  std::vector<Window> classes;
  for (unsigned k = 0; k < kk; ++k) classes.push_back(eval_window(*SetExpr::scaled_odd(k), bound));
  for (std::uint64_t n = 1; n < bound; ++n) {
    int hits = 0;
    for (const auto& w : classes)
      if (w.contains(n)) ++hits;
    REQUIRE(hits == 1);
  }
}

TEST_CASE("nesting depth is guarded") {
  ExprPtr e = SetExpr::explicit_set({1});
  for (int i = 0; i < 100; ++i) e = SetExpr::partial_sums(e);
  CHECK_THROWS_AS((void)eval_window(*e, 10), Error);
}

TEST_CASE("growth classification recognizes the closed classes") {
  CHECK(growth_class(*SetExpr::geometric(2, 1)).cls == GrowthClass::ReciprocalSummable);
  CHECK(growth_class(*SetExpr::arith_prog(0, 1)).cls == GrowthClass::Divergent);
  CHECK(growth_class(*SetExpr::scaled_odd(3)).cls == GrowthClass::Divergent);
  CHECK(growth_class(*SetExpr::partial_sums(SetExpr::arith_prog(1, 1))).cls ==
        GrowthClass::ReciprocalSummable);
  CHECK(growth_class(*SetExpr::fs_of(SetExpr::superincreasing(1, Rational(2)))).cls ==
        GrowthClass::ReciprocalSummable);
  CHECK(growth_class(*SetExpr::fs_of(SetExpr::arith_prog(1, 1))).cls == GrowthClass::Unknown);
}
