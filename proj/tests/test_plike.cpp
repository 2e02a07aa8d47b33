#include <doctest.h>

#include "prcomb/errors.hpp"
#include "prcomb/plike.hpp"
#include "prcomb/witness_search.hpp"

using namespace prcomb;

namespace {

ExprPtr superinc() { return SetExpr::superincreasing(1, Rational(2)); }

ExprPtr minus_lead(const ExprPtr& e, unsigned n) {
  if (n == 0) return e;
  auto lead = enumerate_elements(*e, n);
  return SetExpr::set_difference(e, SetExpr::explicit_set(lead));
}

}  // namespace

TEST_CASE("chain checks") {
  Budget b;
  b.cap = 500;
  ChainDesc good;
  for (unsigned n = 0; n <= 4; ++n) good.levels.push_back(SetExpr::arith_prog(n, 1));
  CHECK(check_chain(PRDescriptor::ideal_op(IdealId::fin()), good, 4, b).ok);

  ChainDesc broken;
  broken.levels = {SetExpr::arith_prog(0, 1), SetExpr::arith_prog(0, 2)};
  // the difference (odds) is positive for the progression ideal
  Budget bb = b;
  bb.ap_len = 4;
  auto chk = check_chain(PRDescriptor::ideal_op(IdealId::vdw()), broken, 1, bb);
  CHECK_FALSE(chk.ok);
}

TEST_CASE("diagonalization: the tail chain for the finite ideal") {
  Budget b;
  b.cap = 200;
  ChainDesc chain;
  for (unsigned n = 0; n <= 5; ++n) chain.levels.push_back(SetExpr::arith_prog(n, 1));
  auto d = pminus_diagonalize(PRDescriptor::ideal_op(IdealId::fin()), chain, 5, 200, b);
  REQUIRE(d.ok);
  CHECK(d.verified);
  for (unsigned n = 0; n <= 5; ++n) {
    std::vector<std::uint64_t> expect;
    for (std::uint64_t i = 0; i < n; ++i) expect.push_back(i);
    CHECK(d.trims[n] == expect);
  }
}

TEST_CASE("diagonalization: sparse trimming through finite-sums chains") {
  Budget b;
  b.cap = 500;
  ChainDesc chain;
  for (unsigned n = 0; n <= 4; ++n) chain.levels.push_back(SetExpr::fs_of(minus_lead(superinc(), n)));
  auto d = pminus_diagonalize(PRDescriptor::fs_op(), chain, 4, 500, b);
  REQUIRE(d.ok);
  CHECK(d.verified);
  // the trims are exactly the removed leading carrier elements
  auto lead = enumerate_elements(*superinc(), 4);
  for (unsigned n = 0; n <= 4; ++n)
    CHECK(d.trims[n] == std::vector<std::uint64_t>(lead.begin(), lead.begin() + n));
}

TEST_CASE("diagonalization hits the star obstruction on the pair-tail chain") {
  Budget b;
  b.cap = 600;
  b.trim = 16;
  ChainDesc chain;
  for (unsigned n = 0; n <= 3; ++n)
    chain.levels.push_back(SetExpr::pairs_of(SetExpr::arith_prog(n, 1)));
  auto d = pminus_diagonalize(PRDescriptor::ideal_op(IdealId::ramsey()), chain, 3, 600, b);
  CHECK_FALSE(d.ok);
  CHECK(d.failing_level >= 1);
  REQUIRE_FALSE(d.obstruction.empty());
  // the obstruction is a star through the least vertex
  for (auto code : d.obstruction) CHECK(unpack_pair(code).first == 0);

  // the function-level player wins the same chain by pruning vertices
  auto dv = pminus_diagonalize(PRDescriptor::pairs_op(), chain, 3, 600, b);
  CHECK(dv.ok);
  CHECK(dv.verified);
}

TEST_CASE("diagonalization picks structure blocks for the positive ideals") {
  Budget b;
  b.cap = 4000;
  b.trim = 200;
  SUBCASE("progressions") {
    ChainDesc chain;
    for (unsigned n = 0; n <= 3; ++n) chain.levels.push_back(SetExpr::arith_prog(n, 1));
    auto d = pminus_diagonalize(PRDescriptor::ideal_op(IdealId::vdw()), chain, 3, 4000, b);
    REQUIRE(d.ok);
    CHECK(d.verified);
    Window f = Window::from_elements(Ground::omega(), 4000, d.generator);
    CHECK(find_ap(f, 4).has_value());
  }
  SUBCASE("reciprocal mass") {
    ChainDesc chain;
    for (unsigned n = 0; n <= 2; ++n) chain.levels.push_back(SetExpr::arith_prog(n, 1));
    auto d = pminus_diagonalize(PRDescriptor::ideal_op(IdealId::summable()), chain, 2, 4000, b);
    REQUIRE(d.ok);
    CHECK(d.verified);
    Rational mass = 0;
    for (auto x : d.generator) mass += Rational(1, static_cast<unsigned long>(x + 1));
    CHECK(mass >= 3);  // one unit of mass per level
  }
}

TEST_CASE("pair diagonal through a shrinking chain") {
  std::vector<ExprPtr> chain;
  for (unsigned n = 0; n <= 4; ++n) chain.push_back(SetExpr::arith_prog(n, 1));
  auto r = weak_pplus_r(SetExpr::omega(), chain, 4, 200);
  CHECK(r.verified);
  CHECK(r.picks == std::vector<std::uint64_t>{0, 1, 2, 3, 4});

  std::vector<ExprPtr> mults;
  for (unsigned n = 0; n <= 4; ++n)
    mults.push_back(SetExpr::arith_prog(std::uint64_t{1} << n, std::uint64_t{1} << n));
  auto r2 = weak_pplus_r(SetExpr::omega(), mults, 4, 200);
  CHECK(r2.verified);
  CHECK(r2.picks == std::vector<std::uint64_t>{1, 2, 4, 8, 16});

  std::vector<ExprPtr> dying = {SetExpr::omega(), SetExpr::explicit_set({})};
  CHECK_THROWS_AS((void)weak_pplus_r(SetExpr::omega(), dying, 1, 200), Error);
}

TEST_CASE("difference diagonal: decoding the interval structure") {
  // E = partial sums of gaps {1,3,9,27,81}
  auto e = SetExpr::explicit_set({0, 1, 4, 13, 40, 121});
  SUBCASE("thinned chain") {
    std::vector<ExprPtr> chain = {e, SetExpr::explicit_set({0, 4, 40}),
                                  SetExpr::explicit_set({0, 40})};
    auto r = weak_pplus_delta(e, chain, 2, 200);
    CHECK(r.verified);
    CHECK(r.pick_indices == std::vector<std::uint64_t>{0, 2, 4});
    CHECK(r.e_prime == std::vector<std::uint64_t>{0, 4, 40});
  }
  SUBCASE("trivial chain") {
    std::vector<ExprPtr> chain = {e, e, e};
    auto r = weak_pplus_delta(e, chain, 2, 200);
    CHECK(r.verified);
    CHECK(r.e_prime.size() >= 3);
  }
  SUBCASE("violating chain") {
    std::vector<ExprPtr> chain = {e, SetExpr::explicit_set({0, 5})};
    CHECK_THROWS_AS((void)weak_pplus_delta(e, chain, 1, 200), Error);
  }
  SUBCASE("a non-superincreasing base is rejected") {
    auto bad = SetExpr::explicit_set({0, 2, 4, 6});
    std::vector<ExprPtr> chain = {bad};
    CHECK_THROWS_AS((void)weak_pplus_delta(bad, chain, 0, 200), Error);
  }
}

TEST_CASE("the partition family and its two-case probe") {
  SUBCASE("sums, three parts, a part-heavy candidate fires case 1") {
    auto fam = not_pplus_family(PrKind::FS, 3, 2000);
    CHECK(fam.disjoint_verified);
    Window g = eval_window(*fam.carrier, 2000);
    auto probe = not_pplus_probe(fam, g);
    CHECK(probe.fired_case == 1);
    CHECK(probe.detail.find("UNEXPECTED") == std::string::npos);
  }
  SUBCASE("pairs, two parts, a transversal fires case 2") {
    auto fam = not_pplus_family(PrKind::Pairs, 2, 1000);
    CHECK(fam.disjoint_verified);
    Window g(Ground::omega(), 100);
    g.insert(fam.parts[0][0]);
    g.insert(fam.parts[1][0]);
    auto probe = not_pplus_probe(fam, g);
    CHECK(probe.fired_case == 2);
    CHECK(probe.detail.find("UNEXPECTED") == std::string::npos);
  }
  SUBCASE("differences, tiny window, honest tri-state") {
    auto fam = not_pplus_family(PrKind::Delta, 2, 2000);
    Window g(Ground::omega(), 2);
    g.insert(1);
    auto probe = not_pplus_probe(fam, g);
    CHECK(probe.fired_case == 0);
  }
}

TEST_CASE("the 2-adic probe against positive sets") {
  Budget b;
  b.cap = 100'000;
  auto r1 = not_pminus_probe(IdealId::hindman(),
                             *SetExpr::fs_of(SetExpr::superincreasing(1, Rational(2))), 4,
                             100'000, b);
  CHECK(r1.k <= 17);
  CHECK(r1.count >= 4);

  auto r2 = not_pminus_probe(IdealId::hindman(), *SetExpr::arith_prog(0, 2), 10, 100'000, b);
  CHECK(r2.k >= 1);
  CHECK(r2.count >= 10);

  Budget br;
  br.cap = 200;
  auto r3 = not_pminus_probe(IdealId::ramsey(), *SetExpr::pairs_of(SetExpr::omega()), 0, 200, br);
  CHECK(r3.count >= 1);
  for (auto code : r3.sample) CHECK(unpack_pair(code).first < r3.k);
}

TEST_CASE("the sum-ideal catalog chain and its universal witness") {
  Budget b;
  b.cap = 400;
  auto chain = fin_oplus_fin2_chain(4);
  auto witness = fin_oplus_fin2_universal_witness();
  Window bw = eval_window(*witness, 400);
  for (unsigned n = 0; n <= 4; ++n) {
    Window an = eval_window(*chain.levels[n], 400);
    // B \ A_n is finite on every window: bounded by the packed prefix
    Window escape = bw.minus(an);
    CHECK(escape.count() <= 2 * n);
    // and the difference of consecutive levels stays in the ideal
    if (n < 4) {
      auto diff = SetExpr::disjoint_sum(
          SetExpr::explicit_set({}),
          SetExpr::grid_product(SetExpr::explicit_set({n}), SetExpr::omega()));
      CHECK(membership(IdealId::fin_oplus_fin2(), *diff, b).status == VerdictStatus::In);
    }
  }
}

TEST_CASE("the density chain keeps terminal densities inside (0, 1/n)") {
  auto chain = density_chain(6);
  const std::uint64_t n_win = 1 << 14;
  for (unsigned n = 1; n <= 6; ++n) {
    Window w = eval_window(*chain.levels[n], n_win);
    Rational terminal(static_cast<unsigned long>(w.count()),
                      static_cast<unsigned long>(n_win));
    terminal.canonicalize();
    CHECK(terminal > 0);
    CHECK(terminal < Rational(1, static_cast<unsigned long>(n)));
    // nested
    CHECK(eval_window(*chain.levels[n], 512).is_subset_of(eval_window(*chain.levels[n - 1], 512)));
  }
}
