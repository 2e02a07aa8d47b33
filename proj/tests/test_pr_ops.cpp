#include <doctest.h>

#include <set>

#include "prcomb/errors.hpp"
#include "prcomb/pr_ops.hpp"
#include "prcomb/prng.hpp"

using namespace prcomb;

namespace {

Window win(std::vector<std::uint64_t> xs, std::uint64_t bound = 0) {
  std::uint64_t b = bound;
  if (b == 0) {
    for (auto x : xs) b = std::max(b, x + 1);
    b = std::max<std::uint64_t>(b, 1);
  }
  return Window::from_elements(Ground::omega(), b, xs);
}

// brute-force oracle: all 2^|D|-1 nonempty subset sums
std::set<std::uint64_t> fs_oracle(const std::vector<std::uint64_t>& d, std::uint64_t cap) {
  std::set<std::uint64_t> out;
  const std::uint64_t n = d.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t s = 0;
    for (std::uint64_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) s += d[i];
    if (s <= cap) out.insert(s);
  }
  return out;
}

std::set<std::uint64_t> as_set(const Window& w) {
  auto xs = w.elements();
  return {xs.begin(), xs.end()};
}

}  // namespace

TEST_CASE("finite sums: catalog examples and the brute-force oracle") {
  CHECK(as_set(fs(win({1, 2, 4}), 10)) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(as_set(fs(win({1, 2}), 10)) == std::set<std::uint64_t>{1, 2, 3});
  CHECK(as_set(fs(win({2, 3, 11}), 20)) == fs_oracle({2, 3, 11}, 20));
  CHECK(fs_oracle({2, 3, 11}, 20) == std::set<std::uint64_t>{2, 3, 5, 11, 13, 14, 16});
  CHECK_THROWS_AS((void)fs(win({0, 1, 2}), 10), Error);

  SplitMix64 rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<std::uint64_t> ds;
    const int k = 1 + rng.below(10);
    while (static_cast<int>(ds.size()) < k) ds.insert(1 + rng.below(100));
    std::vector<std::uint64_t> d(ds.begin(), ds.end());
    const std::uint64_t cap = 50 + rng.below(500);
    CHECK(as_set(fs(win(d), cap)) == fs_oracle(d, cap));
  }
}

TEST_CASE("positive differences") {
  CHECK(as_set(delta(win({0, 1, 3, 7}))) == std::set<std::uint64_t>{1, 2, 3, 4, 6, 7});
  CHECK(as_set(delta(win({5, 10}))) == std::set<std::uint64_t>{5});
  CHECK(as_set(delta(win({1, 3, 7}))) == std::set<std::uint64_t>{2, 4, 6});
  CHECK_THROWS_AS((void)delta(win({5})), Error);
}

TEST_CASE("packed pairs") {
  CHECK(as_set(pairs(win({1, 3, 7}))) ==
        std::set<std::uint64_t>{pack_pair(1, 3), pack_pair(1, 7), pack_pair(3, 7)});
  CHECK(as_set(pairs(win({0, 1}))) == std::set<std::uint64_t>{pack_pair(0, 1)});
  CHECK(pairs(win({2, 4, 6, 8})).count() == 6);
  CHECK_THROWS_AS((void)pairs(win({3})), Error);
}

TEST_CASE("pair packing is the lexicographic-over-(b,a) bijection") {
  CHECK(pack_pair(0, 1) == 0);
  std::uint64_t code = 0;
  for (std::uint64_t b = 1; b < 30; ++b)
    for (std::uint64_t a = 0; a < b; ++a) {
      CHECK(pack_pair(a, b) == code);
      auto [x, y] = unpack_pair(code);
      CHECK(x == a);
      CHECK(y == b);
      ++code;
    }
}

TEST_CASE("alpha decoding of sparse windows") {
  std::vector<std::uint64_t> pow2;
  for (int i = 0; i < 10; ++i) pow2.push_back(std::uint64_t{1} << i);
  CHECK(alpha_decode(win(pow2), 13) == std::vector<std::uint64_t>{1, 4, 8});
  CHECK(alpha_decode(win({2, 3, 11}), 14) == std::vector<std::uint64_t>{3, 11});
  CHECK_THROWS_AS((void)alpha_decode(win({2, 3, 11}), 7), Error);
  CHECK_THROWS_AS((void)alpha_decode(win({1, 2, 3}), 3), Error);  // two representations
}

TEST_CASE("alpha decode then re-sum is the identity on sparse images") {
  Window d = win({2, 3, 11});
  Window image = fs(d, 20);
  image.bits.for_each_set([&](std::uint64_t s) {
    auto sub = alpha_decode(d, s);
    std::uint64_t total = 0;
    for (auto x : sub) total += x;
    CHECK(total == s);
  });
}

TEST_CASE("sparseness checks") {
  CHECK(sparse_check(win({1, 2, 4, 8}), 20).pass);
  auto bad = sparse_check(win({1, 2, 3}), 10);
  CHECK_FALSE(bad.pass);
  CHECK(bad.value == 3);
  CHECK(bad.witness_a == std::vector<std::uint64_t>{3});
  CHECK(bad.witness_b == std::vector<std::uint64_t>{1, 2});
  CHECK(sparse_check(win({2, 3, 11}), 20).pass);
}

TEST_CASE("very sparse checks with the exhaustive pair oracle") {
  auto v = very_sparse_check(win({1, 2, 4, 8}), 40);
  CHECK_FALSE(v.pass);
  CHECK(v.witness_a == std::vector<std::uint64_t>{3});
  CHECK(v.witness_b == std::vector<std::uint64_t>{1});
  CHECK(very_sparse_check(win({1, 3, 9, 27}), 80).pass);
  CHECK(very_sparse_check(win({5}), 20).pass);
  CHECK_THROWS_AS((void)very_sparse_check(win({1, 2, 3}), 10), Error);

  // oracle: decode every finite-sum pair by brute force and replay the rule
  auto oracle_pass = [](const std::vector<std::uint64_t>& d, std::uint64_t cap) {
    auto image = fs_oracle(d, cap);
    auto decode = [&](std::uint64_t s) {
      std::set<std::uint64_t> out;
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d.size()); ++mask) {
        std::uint64_t total = 0;
        for (std::uint64_t i = 0; i < d.size(); ++i)
          if (mask & (std::uint64_t{1} << i)) total += d[i];
        if (total == s) {
          for (std::uint64_t i = 0; i < d.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) out.insert(d[i]);
          return out;
        }
      }
      return out;
    };
    for (auto x : image)
      for (auto y : image) {
        if (x == y) continue;
        auto ax = decode(x), ay = decode(y);
        bool overlap = false;
        for (auto e : ax)
          if (ay.count(e)) overlap = true;
        if (overlap && x + y <= cap && image.count(x + y)) return false;
      }
    return true;
  };
  CHECK(oracle_pass({1, 3, 9, 27}, 80));
  CHECK_FALSE(oracle_pass({1, 2, 4, 8}, 40));
  SplitMix64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    auto sel = superincreasing_subset(*SetExpr::arith_prog(1 + rng.below(5), 1 + rng.below(4)),
                                      Rational(2), 5);
    CHECK(very_sparse_check(sel.window, sel.sparse.cap).pass ==
          oracle_pass(sel.elements, sel.sparse.cap));
  }
}

TEST_CASE("greedy superincreasing selection") {
  auto a = superincreasing_subset(*SetExpr::arith_prog(1, 1), Rational(1), 4);
  CHECK(a.elements == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(a.sparse.pass);
  auto b = superincreasing_subset(*SetExpr::arith_prog(1, 1), Rational(2), 4);
  CHECK(b.elements == std::vector<std::uint64_t>{1, 3, 9, 27});
  CHECK(b.very_sparse.has_value());
  CHECK(b.very_sparse->pass);
  auto c = superincreasing_subset(*SetExpr::arith_prog(0, 2), Rational(1), 3);
  CHECK(c.elements == std::vector<std::uint64_t>{2, 4, 8});
  CHECK_THROWS_AS((void)superincreasing_subset(*SetExpr::explicit_set({1, 2}), Rational(1), 5),
                  Error);
}

TEST_CASE("difference-representation uniqueness") {
  CHECK(d_sparse_check(win({0, 1, 3, 7}), 10).pass);
  auto bad = d_sparse_check(win({0, 1, 2}), 10);
  CHECK_FALSE(bad.pass);
  CHECK(bad.value == 1);
  CHECK(d_sparse_check(win({0, 5}), 10).pass);
}

TEST_CASE("lacunary gaps") {
  CHECK(lacunary_check(win({1, 3, 7, 15, 31})).pass);
  auto r = lacunary_check(win({1, 2, 4}));
  CHECK_FALSE(r.pass);
  CHECK(r.violation_index == 0);
  CHECK(lacunary_check(win({0, 1})).pass);
}

TEST_CASE("block-separated selection inside finite-sums images") {
  std::vector<std::uint64_t> pow2;
  for (int i = 0; i <= 9; ++i) pow2.push_back(std::uint64_t{1} << i);
  auto s = kojman_select(win(pow2, std::uint64_t{1} << 10), 3);
  CHECK(s == std::vector<std::uint64_t>{1, 2, 4});

  // exhaustive oracle on the tiny window: no valid pair exists
  Window d = win({2, 3, 11}, 32);
  CHECK_THROWS_AS((void)kojman_select(d, 2), Error);
  {
    Window image = fs(d, 31);
    auto xs = image.elements();
    auto blocks = [&](std::uint64_t s) {
      auto a = alpha_decode(d, s);
      const std::uint64_t high = std::uint64_t{1} << (63 - std::countl_zero(s));
      const std::uint64_t low = s & (~s + 1);
      return std::tuple{a.front(), a.back(), low, high};
    };
    for (auto x : xs)
      for (auto y : xs) {
        if (x >= y) continue;
        auto [minx, maxx, lowx, highx] = blocks(x);
        auto [miny, maxy, lowy, highy] = blocks(y);
        const bool both_separated = maxx < miny && highx < lowy;
        CHECK_FALSE(both_separated);
      }
  }

  auto t = kojman_select(win({1, 3, 9, 27, 81}, 128), 2);
  REQUIRE(t.size() == 2);
  // re-verify both block conditions through decoding
  Window dd = win({1, 3, 9, 27, 81}, 128);
  auto a0 = alpha_decode(dd, t[0]);
  auto a1 = alpha_decode(dd, t[1]);
  CHECK(a0.back() < a1.front());
  CHECK((std::uint64_t{1} << (63 - std::countl_zero(t[0]))) < (t[1] & (~t[1] + 1)));
}

TEST_CASE("descriptor application") {
  auto fs_img = apply_pr(PRDescriptor::fs_op(), *SetExpr::explicit_set({1, 2, 4}), 10);
  CHECK(as_set(fs_img) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
  auto ident = apply_pr(PRDescriptor::ideal_op(IdealId::summable()),
                        *SetExpr::arith_prog(0, 2), 10);
  CHECK(as_set(ident) == std::set<std::uint64_t>{0, 2, 4, 6, 8, 10});

  auto comp = PRDescriptor::oplus(PRDescriptor::fs_op(), PRDescriptor::delta_op());
  auto gen = SetExpr::disjoint_sum(SetExpr::explicit_set({1, 2, 4}),
                                   SetExpr::explicit_set({0, 1, 3}));
  auto img = apply_pr(comp, *gen, 10);
  std::set<std::uint64_t> expect;
  for (auto x : fs_oracle({1, 2, 4}, 5)) expect.insert(pack_sum(x, 0));
  for (auto x : {1, 2, 3}) expect.insert(pack_sum(static_cast<std::uint64_t>(x), 1));
  std::set<std::uint64_t> got = as_set(img);
  for (auto x : expect) CHECK(got.count(x));

  // restriction admits only generators whose image stays inside B
  auto restr = PRDescriptor::restrict(PRDescriptor::fs_op(), SetExpr::arith_prog(0, 2));
  CHECK_NOTHROW((void)apply_pr(restr, *SetExpr::explicit_set({2, 4}), 20));
  CHECK_THROWS_AS((void)apply_pr(restr, *SetExpr::explicit_set({1, 2}), 20), Error);
}

TEST_CASE("monotonicity of images in the generator") {
  SplitMix64 rng(31415);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<std::uint64_t> fs_;
    const int k = 2 + rng.below(6);
    while (static_cast<int>(fs_.size()) < k) fs_.insert(1 + rng.below(60));
    std::vector<std::uint64_t> f(fs_.begin(), fs_.end());
    std::vector<std::uint64_t> e;
    for (auto x : f)
      if (rng.below(2)) e.push_back(x);
    if (e.size() < 2) continue;
    const std::uint64_t cap = 200;
    for (auto rho : {PRDescriptor::fs_op(), PRDescriptor::delta_op(), PRDescriptor::pairs_op(),
                     PRDescriptor::ideal_op(IdealId::fin())}) {
      Window small = apply_pr_window(rho, win(e, 64), cap);
      Window big = apply_pr_window(rho, win(f, 64), cap);
      CHECK(small.is_subset_of(big));
    }
  }
}

TEST_CASE("every 3-element difference image contains a Schur triple") {
  for (std::uint64_t a = 0; a <= 60; ++a)
    for (std::uint64_t b = a + 1; b <= 60; ++b)
      for (std::uint64_t c = b + 1; c <= 60; ++c) {
        Window d = delta(win({a, b, c}));
        const std::uint64_t x = b - a, y = c - b;
        REQUIRE(d.contains(x));
        REQUIRE(d.contains(y));
        REQUIRE(d.contains(x + y));
      }
}

TEST_CASE("support trimming") {
  auto k = trim_support(PRDescriptor::fs_op(), win({1, 2, 4, 8}), {3}, 20);
  CHECK(k == std::vector<std::uint64_t>{1, 2});
  auto kp = trim_support(PRDescriptor::pairs_op(), win({0, 1, 2, 3}), {pack_pair(0, 1)}, 20);
  CHECK(kp == std::vector<std::uint64_t>{0});
  auto ki = trim_support(PRDescriptor::ideal_op(IdealId::fin()), win({0, 2, 4, 6}), {2, 3}, 20);
  CHECK(ki == std::vector<std::uint64_t>{2});
  CHECK_THROWS_AS(
      (void)trim_support(PRDescriptor::fs_op(), win({1, 2, 3}), {3}, 20), Error);

  // postcondition re-checks on random sparse windows
  SplitMix64 rng(777);
  for (int trial = 0; trial < 30; ++trial) {
    auto sel = superincreasing_subset(*SetExpr::arith_prog(1 + rng.below(3), 1), Rational(1), 6);
    Window f = sel.window;
    const std::uint64_t cap = sel.sparse.cap;
    Window image = fs(f, cap);
    std::vector<std::uint64_t> l;
    image.bits.for_each_set([&](std::uint64_t x) {
      if (rng.below(8) == 0 && l.size() < 3) l.push_back(x);
    });
    auto kk = trim_support(PRDescriptor::fs_op(), f, l, cap);
    Window trimmed_img = fs(f.minus_elements(kk), cap);
    for (auto t : l) CHECK_FALSE(trimmed_img.contains(t));
  }
}

TEST_CASE("small accretion probes") {
  auto p1 = small_accretion_probe(PRDescriptor::fs_op(), win({1, 3, 9, 27, 81}), {1}, 200, 2);
  CHECK(p1.pass);
  std::vector<std::uint64_t> ten;
  for (std::uint64_t i = 0; i < 10; ++i) ten.push_back(i);
  auto p2 = small_accretion_probe(PRDescriptor::pairs_op(), win(ten), {0}, 200, 3);
  CHECK(p2.pass);
  CHECK_THROWS_AS((void)small_accretion_probe(PRDescriptor::fs_op(), win({1, 2, 4, 8, 16}),
                                              {1}, 40, 2),
                  Error);  // certificate missing: not very sparse
}

TEST_CASE("window locality of the three operations") {
  auto a = SetExpr::geometric(2, 1);
  auto b = SetExpr::set_union(SetExpr::explicit_set({1, 2, 4}),
                              SetExpr::arith_prog(100, 7));
  auto fs_rep = window_locality_probe(LocalityKind::FS, *a, *b, 7);
  CHECK(fs_rep.pass);
  auto pr_rep = window_locality_probe(LocalityKind::Pairs, *a, *b, 7);
  CHECK(pr_rep.pass);

  auto d_rep = window_locality_probe(LocalityKind::Delta, *SetExpr::arith_prog(0, 2),
                                     *SetExpr::arith_prog(0, 2), 50, 10);
  CHECK(d_rep.pass);  // a discontinuity witness was produced
  REQUIRE(d_rep.witness.has_value());
  CHECK(*d_rep.witness == 1);
  {
    // oracle: C = (evens & [0,10)) | [10,50) has all small differences
    Window c(Ground::omega(), 50);
    for (std::uint64_t x = 0; x < 10; x += 2) c.bits.set(x);
    for (std::uint64_t x = 10; x < 50; ++x) c.bits.set(x);
    Window dc = delta(c);
    for (std::uint64_t v = 1; v <= 40; ++v) CHECK(dc.contains(v));
  }

  auto l1 = SetExpr::explicit_set({1, 3, 7, 15, 31, 1000, 2001});
  auto l2 = SetExpr::explicit_set({1, 3, 7, 15, 31, 900, 1801});
  auto dl = window_locality_probe(LocalityKind::DeltaOnL, *l1, *l2, 32);
  CHECK(dl.pass);
  CHECK_THROWS_AS(
      (void)window_locality_probe(LocalityKind::DeltaOnL, *SetExpr::arith_prog(0, 2),
                                  *SetExpr::arith_prog(0, 2), 32),
      Error);
}
