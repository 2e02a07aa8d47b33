#include <doctest.h>

#include "prcomb/errors.hpp"
#include "prcomb/katetov.hpp"

using namespace prcomb;

TEST_CASE("partial-sums witness: difference images inside finite-sums images") {
  auto rep = witness_delta_le_fs(*SetExpr::explicit_set({1, 2, 4}), 64, 1);
  CHECK(rep.pass);
  // frozen expectations from direct computation
  Window wb = eval_window(*rep.b, 64);
  CHECK(wb.elements() == std::vector<std::uint64_t>{1, 3, 7});
  // trim 1 removes a_0: L = [0,1], Delta({3,7}) = {4} inside FS({2,4}) = {2,4,6}
  REQUIRE(rep.checks.size() == 2);
  CHECK(rep.checks[1].l_bound == 1);
  CHECK(rep.checks[1].ok);

  auto rep2 = witness_delta_le_fs(*SetExpr::geometric(3, 1), 10'000, 4);
  CHECK(rep2.pass);
}

TEST_CASE("pair-difference witness: exact window equality") {
  auto rep = witness_delta_le_r(*SetExpr::explicit_set({1, 3, 7}), 8, 0);
  CHECK(rep.pass);
  auto rep2 = witness_delta_le_r(*SetExpr::explicit_set({0, 1}), 2, 0);
  CHECK(rep2.pass);
  auto rep3 = witness_delta_le_r(*SetExpr::arith_prog(0, 5), 1000, 3);
  CHECK(rep3.pass);
}

TEST_CASE("diagonal extraction certifies minimality") {
  auto r1 = witness_rho_min(PRDescriptor::fs_op(), *SetExpr::geometric(2, 1), 3, 64);
  CHECK(r1.pass);
  CHECK(r1.picks == std::vector<std::uint64_t>{1, 2, 4});
  auto r2 = witness_rho_min(PRDescriptor::pairs_op(), *SetExpr::omega(), 3, 64);
  CHECK(r2.pass);
  auto r3 = witness_rho_min(PRDescriptor::ideal_op(IdealId::fin()), *SetExpr::omega(), 3, 64);
  CHECK(r3.pass);
  CHECK(r3.picks == std::vector<std::uint64_t>{0, 1, 2});
}

TEST_CASE("witness checking: the two theorem maps are consistent") {
  Budget b;
  b.cap = 2000;
  std::vector<ExprPtr> samples = {SetExpr::explicit_on(Ground::omega(), {1, 2, 4}),
                                  SetExpr::geometric(2, 1),
                                  SetExpr::arith_prog(1, 3)};
  auto rep = check_rho_witness(WitnessMap::identity(Ground::omega()), PRDescriptor::delta_op(),
                               PRDescriptor::fs_op(), samples, b, 2);
  CHECK(rep.status == CheckStatus::Consistent);

  WitnessMap pd = WitnessMap::pair_difference();
  auto rep2 = check_rho_witness(pd, PRDescriptor::delta_op(), PRDescriptor::pairs_op(),
                                samples, b, 2);
  CHECK(rep2.status == CheckStatus::Consistent);
}

TEST_CASE("witness checking refutes the summable-thin candidate") {
  Budget b;
  b.cap = 5000;
  std::vector<ExprPtr> samples = {SetExpr::superincreasing(1, Rational(2))};
  auto rep = check_rho_witness(WitnessMap::identity(Ground::omega()),
                               PRDescriptor::ideal_op(IdealId::summable()),
                               PRDescriptor::fs_op(), samples, b, 2);
  CHECK(rep.status == CheckStatus::Refuted);
}

TEST_CASE("ideal-level witness checks") {
  Budget b;
  b.cap = 2000;
  SUBCASE("identity carries difference positivity into sums positivity") {
    std::vector<ExprPtr> samples = {SetExpr::fs_of(SetExpr::superincreasing(1, Rational(2))),
                                    SetExpr::arith_prog(0, 2)};
    auto rep = check_ideal_witness(WitnessMap::identity(Ground::omega()), IdealId::diff(),
                                   IdealId::hindman(), samples, b);
    CHECK(rep.status == CheckStatus::Consistent);
  }
  SUBCASE("a single-column embedding refutes itself") {
    std::vector<ExprPtr> samples = {SetExpr::grid_product(SetExpr::omega(), SetExpr::omega())};
    WitnessMap phi = WitnessMap::column_embed(0);
    phi.from = Ground::grid2();
    auto rep = check_ideal_witness(phi, IdealId::fin2(), IdealId::fin2(), samples, b);
    CHECK(rep.status == CheckStatus::Refuted);
  }
  SUBCASE("the open question stays consistent-at-budget without upgrading") {
    std::vector<ExprPtr> samples = {SetExpr::arith_prog(0, 1), SetExpr::arith_prog(3, 4)};
    Budget bb = b;
    bb.ap_len = 5;
    auto rep = check_ideal_witness(WitnessMap::identity(Ground::omega()), IdealId::vdw(),
                                   IdealId::summable(), samples, bb);
    CHECK(rep.status == CheckStatus::Consistent);
    auto m = RelationMatrix::curated();
    const auto* e = m.query("W", "I1n", false);
    REQUIRE(e != nullptr);
    CHECK(e->status == RelStatus::OPEN);
  }
}

TEST_CASE("the relation matrix loads consistently") {
  auto m = RelationMatrix::curated();
  const auto* le = m.query("Delta", "FS", true);
  REQUIRE(le != nullptr);
  CHECK(le->status == RelStatus::LE);
  CHECK(le->mode == VerifyMode::WitnessVerified);
  const auto* nle = m.query("FS", "Delta", true);
  REQUIRE(nle != nullptr);
  CHECK(nle->status == RelStatus::NLE);
  CHECK(nle->mode == VerifyMode::Asserted);
  // open entries are exactly the four asked questions
  unsigned open = 0;
  for (const auto& e : m.edges)
    if (e.status == RelStatus::OPEN) {
      ++open;
      CHECK(e.lhs == "W");
      CHECK_FALSE(e.rho_level);
    }
  CHECK(open == 4);
  // the split between the two levels is present
  const auto* split = m.query("rho_Fin2", "FS", true);
  REQUIRE(split != nullptr);
  CHECK(split->status == RelStatus::NLE);
  const auto* ideal_le = m.query("Fin2", "H", false);
  REQUIRE(ideal_le != nullptr);
  CHECK(ideal_le->status == RelStatus::LE);

  auto dot = m.to_dot();
  CHECK(dot.find("style=solid") != std::string::npos);
  CHECK(dot.find("style=dashed, color=red") != std::string::npos);
  CHECK(dot.find("style=dotted") != std::string::npos);
}

TEST_CASE("composed witnesses verify transitively at budget") {
  Budget b;
  b.cap = 1000;
  // rho_Fin <= Delta (identity diagonal) composed with Delta <= r
  // (pair-difference) gives rho_Fin <= r through the pair-difference map
  std::vector<ExprPtr> samples = {SetExpr::arith_prog(0, 3),
                                  SetExpr::explicit_on(Ground::omega(), {0, 1, 4, 9, 20})};
  auto rep = check_rho_witness(WitnessMap::pair_difference(),
                               PRDescriptor::ideal_op(IdealId::fin()),
                               PRDescriptor::pairs_op(), samples, b, 2);
  CHECK(rep.status == CheckStatus::Consistent);
}

TEST_CASE("compound descriptors carry their injection and projection maps") {
  auto cw = oplus_rho(PRDescriptor::fs_op(), PRDescriptor::delta_op());
  CHECK(verify_compound_witness(cw, 0, SetExpr::explicit_set({1, 2, 4}),
                                SetExpr::explicit_set({0, 1, 3}), 64));
  CHECK(verify_compound_witness(cw, 1, SetExpr::explicit_set({0, 1, 3}),
                                SetExpr::explicit_set({1, 2, 4}), 64));
  // distinct injections with disjoint ranges
  CHECK(cw.phi0.apply(5) != cw.phi1.apply(5));
  CHECK(cw.phi0.apply(5) % 2 == 0);
  CHECK(cw.phi1.apply(5) % 2 == 1);

  auto pw = product_rho(PRDescriptor::fs_op(), PRDescriptor::fs_op());
  CHECK(verify_compound_witness(pw, 0, SetExpr::explicit_set({1, 2}),
                                SetExpr::explicit_set({1, 2}), 200));
}

TEST_CASE("every witness-verified function edge also passes at the ideal level") {
  Budget b;
  b.cap = 2000;
  // the same witnessing maps, replayed between the associated ideals
  std::vector<ExprPtr> h_samples = {SetExpr::fs_of(SetExpr::superincreasing(1, Rational(2)))};
  auto de_h = check_ideal_witness(WitnessMap::identity(Ground::omega()), IdealId::diff(),
                                  IdealId::hindman(), h_samples, b);
  CHECK(de_h.status == CheckStatus::Consistent);
  std::vector<ExprPtr> r_samples = {SetExpr::pairs_of(SetExpr::arith_prog(0, 2))};
  auto de_r = check_ideal_witness(WitnessMap::pair_difference(), IdealId::diff(),
                                  IdealId::ramsey(), r_samples, b);
  CHECK(de_r.status == CheckStatus::Consistent);
}
