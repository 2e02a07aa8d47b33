#include "prcomb/json_io.hpp"

#include "prcomb/errors.hpp"

namespace prcomb {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  Rational q(j.get<std::string>());
  q.canonicalize();
  return q;
}

std::string ground_name(const Ground& g) { return g.name(); }

}  // namespace

Json expr_to_json(const SetExpr& e) {
  Json j;
  switch (e.kind) {
    case ExprKind::Explicit:
      j["kind"] = "explicit";
      j["elements"] = e.elems;
      if (e.explicit_ground) j["ground"] = ground_name(*e.explicit_ground);
      break;
    case ExprKind::ArithProg:
      j["kind"] = "arith_prog";
      j["start"] = e.a;
      j["step"] = e.b;
      break;
    case ExprKind::ScaledOdd:
      j["kind"] = "scaled_odd";
      j["k"] = e.a;
      break;
    case ExprKind::Geometric:
      j["kind"] = "geometric";
      j["base"] = e.a;
      j["start"] = e.b;
      break;
    case ExprKind::Superincreasing:
      j["kind"] = "superincreasing";
      j["seed"] = e.a;
      j["factor"] = e.factor.get_str();
      break;
    case ExprKind::PartialSums:
      j["kind"] = "partial_sums";
      j["inner"] = expr_to_json(*e.lhs);
      break;
    case ExprKind::FSOf:
      j["kind"] = "fs_of";
      j["inner"] = expr_to_json(*e.lhs);
      break;
    case ExprKind::DeltaOf:
      j["kind"] = "delta_of";
      j["inner"] = expr_to_json(*e.lhs);
      break;
    case ExprKind::PairsOf:
      j["kind"] = "pairs_of";
      j["inner"] = expr_to_json(*e.lhs);
      break;
    case ExprKind::MatchingOf:
      j["kind"] = "matching_of";
      j["inner"] = expr_to_json(*e.lhs);
      break;
    case ExprKind::Union:
      j["kind"] = "union";
      j["left"] = expr_to_json(*e.lhs);
      j["right"] = expr_to_json(*e.rhs);
      break;
    case ExprKind::Intersection:
      j["kind"] = "intersection";
      j["left"] = expr_to_json(*e.lhs);
      j["right"] = expr_to_json(*e.rhs);
      break;
    case ExprKind::Difference:
      j["kind"] = "difference";
      j["left"] = expr_to_json(*e.lhs);
      j["right"] = expr_to_json(*e.rhs);
      break;
    case ExprKind::Complement:
      j["kind"] = "complement";
      j["inner"] = expr_to_json(*e.lhs);
      break;
    case ExprKind::Shift:
      j["kind"] = "shift";
      j["inner"] = expr_to_json(*e.lhs);
      j["offset"] = e.a;
      j["negative"] = e.b == 1;
      break;
    case ExprKind::GridProduct:
      j["kind"] = "grid_product";
      j["left"] = expr_to_json(*e.lhs);
      j["right"] = expr_to_json(*e.rhs);
      break;
    case ExprKind::GridDiagonal:
      j["kind"] = "grid_diagonal";
      break;
    case ExprKind::Grid3Slices: {
      j["kind"] = "grid3_slices";
      Json arr = Json::array();
      for (const auto& [i, sl] : e.slices)
        arr.push_back(Json{{"index", i}, {"slice", expr_to_json(*sl)}});
      j["slices"] = arr;
      break;
    }
    case ExprKind::DisjointSum:
      j["kind"] = "disjoint_sum";
      j["left"] = expr_to_json(*e.lhs);
      j["right"] = expr_to_json(*e.rhs);
      break;
    case ExprKind::CrossProduct:
      j["kind"] = "cross_product";
      j["left"] = expr_to_json(*e.lhs);
      j["right"] = expr_to_json(*e.rhs);
      break;
  }
  return j;
}

ExprPtr expr_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind"))
    fail(Errc::InvalidArgument, "set expression must be a tagged object");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit") {
    auto xs = j.at("elements").get<std::vector<std::uint64_t>>();
    if (j.contains("ground")) {
      const std::string g = j.at("ground").get<std::string>();
      if (g == "pairs") return SetExpr::explicit_on(Ground::pairs(), std::move(xs));
      if (g == "omega^2") return SetExpr::explicit_on(Ground::grid2(), std::move(xs));
      if (g == "omega^3") return SetExpr::explicit_on(Ground::grid3(), std::move(xs));
      if (g != "omega") fail(Errc::InvalidArgument, "unknown ground tag " + g);
    }
    return SetExpr::explicit_set(std::move(xs));
  }
  if (kind == "arith_prog")
    return SetExpr::arith_prog(j.at("start").get<std::uint64_t>(),
                               j.at("step").get<std::uint64_t>());
  if (kind == "scaled_odd") return SetExpr::scaled_odd(j.at("k").get<std::uint64_t>());
  if (kind == "geometric")
    return SetExpr::geometric(j.at("base").get<std::uint64_t>(),
                              j.at("start").get<std::uint64_t>());
  if (kind == "superincreasing")
    return SetExpr::superincreasing(j.at("seed").get<std::uint64_t>(),
                                    rational_from_json(j.at("factor")));
  if (kind == "partial_sums") return SetExpr::partial_sums(expr_from_json(j.at("inner")));
  if (kind == "fs_of") return SetExpr::fs_of(expr_from_json(j.at("inner")));
  if (kind == "delta_of") return SetExpr::delta_of(expr_from_json(j.at("inner")));
  if (kind == "pairs_of") return SetExpr::pairs_of(expr_from_json(j.at("inner")));
  if (kind == "matching_of") return SetExpr::matching_of(expr_from_json(j.at("inner")));
  if (kind == "union")
    return SetExpr::set_union(expr_from_json(j.at("left")), expr_from_json(j.at("right")));
  if (kind == "intersection")
    return SetExpr::set_intersection(expr_from_json(j.at("left")),
                                     expr_from_json(j.at("right")));
  if (kind == "difference")
    return SetExpr::set_difference(expr_from_json(j.at("left")),
                                   expr_from_json(j.at("right")));
  if (kind == "complement") return SetExpr::complement(expr_from_json(j.at("inner")));
  if (kind == "shift")
    return SetExpr::shift(expr_from_json(j.at("inner")), j.at("offset").get<std::uint64_t>(),
                          j.value("negative", false));
  if (kind == "grid_product")
    return SetExpr::grid_product(expr_from_json(j.at("left")), expr_from_json(j.at("right")));
  if (kind == "grid_diagonal") return SetExpr::grid_diagonal();
  if (kind == "grid3_slices") {
    std::vector<std::pair<std::uint64_t, ExprPtr>> slices;
    for (const auto& s : j.at("slices"))
      slices.emplace_back(s.at("index").get<std::uint64_t>(), expr_from_json(s.at("slice")));
    return SetExpr::grid3_slices(std::move(slices));
  }
  if (kind == "disjoint_sum")
    return SetExpr::disjoint_sum(expr_from_json(j.at("left")), expr_from_json(j.at("right")));
  if (kind == "cross_product")
    return SetExpr::cross_product(expr_from_json(j.at("left")), expr_from_json(j.at("right")));
  fail(Errc::InvalidArgument, "unknown expression kind " + kind);
}

Json window_to_json(const Window& w) {
  return Json{{"ground", ground_name(w.ground)},
              {"bound", w.bound},
              {"elements", w.elements()}};
}

Json certificate_to_json(const Certificate& c) {
  Json j{{"kind", c.kind}};
  if (!c.elements.empty()) j["elements"] = c.elements;
  if (c.kind == "ap") {
    j["start"] = c.ap_start;
    j["step"] = c.ap_step;
    j["length"] = c.ap_len;
  }
  if (c.param) j["param"] = c.param;
  if (c.partial_sum) j["partial_sum"] = c.partial_sum->get_str();
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  return Json{{"status", to_string(v.status)},
              {"budget", Json{{"cap", v.used.cap},
                              {"gen", v.used.gen},
                              {"ap_len", v.used.ap_len},
                              {"trim", v.used.trim}}},
              {"complete", v.complete},
              {"certificate", certificate_to_json(v.cert)}};
}

Json sparse_certificate_to_json(const SparseCertificate& c) {
  const char* kinds[] = {"sparse", "very_sparse", "d_sparse", "lacunary"};
  Json j{{"kind", kinds[static_cast<int>(c.kind)]}, {"pass", c.pass}, {"cap", c.cap}};
  if (!c.pass) {
    j["value"] = c.value;
    j["witness_a"] = c.witness_a;
    j["witness_b"] = c.witness_b;
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

IdealId ideal_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "H") return IdealId::hindman();
    if (s == "R") return IdealId::ramsey();
    if (s == "D") return IdealId::diff();
    if (s == "W") return IdealId::vdw();
    if (s == "I1n") return IdealId::summable();
    if (s == "Fin") return IdealId::fin();
    if (s == "Fin2") return IdealId::fin2();
    if (s == "Fin+Fin2") return IdealId::fin_oplus_fin2();
    if (s == "BI") return IdealId::bi();
    fail(Errc::InvalidArgument, "unknown ideal " + s);
  }
  if (j.contains("restrict"))
    return IdealId::restrict(ideal_from_json(j.at("restrict").at("base")),
                             expr_from_json(j.at("restrict").at("set")));
  if (j.contains("oplus"))
    return IdealId::oplus(ideal_from_json(j.at("oplus").at(0)),
                          ideal_from_json(j.at("oplus").at(1)));
  fail(Errc::InvalidArgument, "unknown ideal form");
}

Json ideal_to_json(const IdealId& id) {
  switch (id.tag) {
    case IdealTag::Restrict:
      return Json{{"restrict", Json{{"base", ideal_to_json(*id.left)},
                                    {"set", expr_to_json(*id.restrict_to)}}}};
    case IdealTag::Oplus:
      return Json{{"oplus", Json::array({ideal_to_json(*id.left), ideal_to_json(*id.right)})}};
    default:
      return Json(id.name());
  }
}

PRDescriptor descriptor_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "FS") return PRDescriptor::fs_op();
    if (s == "Delta") return PRDescriptor::delta_op();
    if (s == "r" || s == "pairs") return PRDescriptor::pairs_op();
    fail(Errc::InvalidArgument, "unknown descriptor " + s);
  }
  if (j.contains("ideal")) return PRDescriptor::ideal_op(ideal_from_json(j.at("ideal")));
  if (j.contains("oplus"))
    return PRDescriptor::oplus(descriptor_from_json(j.at("oplus").at(0)),
                               descriptor_from_json(j.at("oplus").at(1)));
  if (j.contains("product"))
    return PRDescriptor::product(descriptor_from_json(j.at("product").at(0)),
                                 descriptor_from_json(j.at("product").at(1)));
  if (j.contains("restrict"))
    return PRDescriptor::restrict(descriptor_from_json(j.at("restrict").at("base")),
                                  expr_from_json(j.at("restrict").at("set")));
  fail(Errc::InvalidArgument, "unknown descriptor form");
}

Json descriptor_to_json(const PRDescriptor& d) {
  switch (d.compound) {
    case PrCompound::Oplus:
      return Json{{"oplus", Json::array({descriptor_to_json(*d.left),
                                         descriptor_to_json(*d.right)})}};
    case PrCompound::Product:
      return Json{{"product", Json::array({descriptor_to_json(*d.left),
                                           descriptor_to_json(*d.right)})}};
    case PrCompound::Restrict:
      return Json{{"restrict", Json{{"base", descriptor_to_json(*d.left)},
                                    {"set", expr_to_json(*d.restrict_to)}}}};
    case PrCompound::None:
      break;
  }
  switch (d.kind) {
    case PrKind::FS: return Json("FS");
    case PrKind::Delta: return Json("Delta");
    case PrKind::Pairs: return Json("r");
    case PrKind::Ideal: return Json{{"ideal", ideal_to_json(*d.ideal)}};
  }
  return Json();
}

Point point_from_json(const Json& j) {
  const std::string t = j.at("type").get<std::string>();
  if (t == "nat") return Point::nat(j.at("n").get<std::uint64_t>());
  if (t == "infinity") return Point::infty();
  if (t == "family") return Point::family_member(j.at("index").get<std::uint64_t>());
  if (t == "rational") return Point::rat(rational_from_json(j.at("value")));
  fail(Errc::InvalidArgument, "unknown point type " + t);
}

Json point_to_json(const Point& p) {
  switch (p.kind) {
    case PointKind::Nat: return Json{{"type", "nat"}, {"n", p.n}};
    case PointKind::Infty: return Json{{"type", "infinity"}};
    case PointKind::FamilyMember: return Json{{"type", "family"}, {"index", p.n}};
    case PointKind::Rat: return Json{{"type", "rational"}, {"value", p.q.get_str()}};
  }
  return Json();
}

RulePtr rule_from_json(const Json& j) {
  const std::string r = j.at("rule").get<std::string>();
  if (r == "const") return SeqRule::constant(point_from_json(j.at("point")));
  if (r == "identity") return SeqRule::identity();
  if (r == "mod") return SeqRule::modulo(j.at("m").get<std::uint64_t>());
  if (r == "reciprocal") return SeqRule::reciprocal();
  if (r == "pair_gap_reciprocal") return SeqRule::pair_gap_reciprocal();
  if (r == "piecewise") {
    std::vector<std::pair<ExprPtr, RulePtr>> pieces;
    for (const auto& p : j.at("pieces"))
      pieces.emplace_back(expr_from_json(p.at("piece")), rule_from_json(p.at("rule")));
    RulePtr fallback;
    if (j.contains("fallback")) fallback = rule_from_json(j.at("fallback"));
    return SeqRule::piecewise(std::move(pieces), std::move(fallback));
  }
  fail(Errc::InvalidArgument, "unknown rule " + r);
}

Json rule_to_json(const SeqRule& r) {
  switch (r.kind) {
    case RuleKind::Const: return Json{{"rule", "const"}, {"point", point_to_json(r.c)}};
    case RuleKind::Identity: return Json{{"rule", "identity"}};
    case RuleKind::Mod: return Json{{"rule", "mod"}, {"m", r.m}};
    case RuleKind::Reciprocal: return Json{{"rule", "reciprocal"}};
    case RuleKind::PairGapReciprocal: return Json{{"rule", "pair_gap_reciprocal"}};
    case RuleKind::Piecewise: {
      Json pieces = Json::array();
      for (const auto& [piece, rule] : r.pieces)
        pieces.push_back(Json{{"piece", expr_to_json(*piece)}, {"rule", rule_to_json(*rule)}});
      Json j{{"rule", "piecewise"}, {"pieces", pieces}};
      if (r.fallback) j["fallback"] = rule_to_json(*r.fallback);
      return j;
    }
  }
  return Json();
}

SpaceDesc space_from_json(const Json& j) {
  const std::string s = j.at("space").get<std::string>();
  if (s == "discrete") return SpaceDesc::discrete(j.at("size").get<std::uint64_t>());
  if (s == "alexandroff") return SpaceDesc::alexandroff();
  if (s == "unit_interval") return SpaceDesc::unit_interval();
  if (s == "phi") {
    std::vector<ExprPtr> fam;
    for (const auto& a : j.at("family")) fam.push_back(expr_from_json(a));
    return SpaceDesc::phi(std::move(fam), j.value("ad_bound", std::uint64_t{8}));
  }
  fail(Errc::InvalidArgument, "unknown space " + s);
}

Json space_to_json(const SpaceDesc& s) {
  switch (s.kind) {
    case SpaceKind::Discrete: return Json{{"space", "discrete"}, {"size", s.discrete_size}};
    case SpaceKind::Alexandroff: return Json{{"space", "alexandroff"}};
    case SpaceKind::UnitInterval: return Json{{"space", "unit_interval"}};
    case SpaceKind::Phi: {
      Json fam = Json::array();
      for (const auto& a : s.family) fam.push_back(expr_to_json(*a));
      return Json{{"space", "phi"}, {"family", fam}, {"ad_bound", s.ad_bound}};
    }
  }
  return Json();
}

ChainDesc chain_from_json(const Json& j) {
  ChainDesc c;
  for (const auto& l : j.at("levels")) c.levels.push_back(expr_from_json(l));
  if (j.contains("carrier")) c.carrier = expr_from_json(j.at("carrier"));
  return c;
}

Json convergence_to_json(const ConvergenceVerdict& v) {
  Json j;
  switch (v.status) {
    case ConvStatus::Verified: j["status"] = "VERIFIED"; break;
    case ConvStatus::Refuted: j["status"] = "REFUTED"; break;
    case ConvStatus::Exhausted: j["status"] = "EXHAUSTED"; break;
  }
  j["depth"] = v.depth;
  if (v.status == ConvStatus::Verified) {
    Json trims = Json::array();
    for (const auto& k : v.trims) trims.push_back(k);
    j["trims"] = trims;
    j["rechecked"] = v.rechecked;
  }
  if (v.status == ConvStatus::Refuted) {
    j["base_index"] = v.refuted_index;
    j["escape"] = v.escape;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json witness_report_to_json(const WitnessCheckReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json js{{"sample", s.f1}, {"detail", s.detail}};
    switch (s.status) {
      case CheckStatus::Consistent: js["status"] = "consistent"; break;
      case CheckStatus::Refuted: js["status"] = "refuted"; break;
      case CheckStatus::Inconclusive: js["status"] = "inconclusive"; break;
    }
    samples.push_back(js);
  }
  Json j{{"samples", samples}, {"note", r.note}};
  switch (r.status) {
    case CheckStatus::Consistent: j["status"] = "consistent"; break;
    case CheckStatus::Refuted: j["status"] = "refuted"; break;
    case CheckStatus::Inconclusive: j["status"] = "inconclusive"; break;
  }
  return j;
}

Json relation_edge_to_json(const RelationEdge& e) {
  Json j{{"lhs", e.lhs}, {"rhs", e.rhs}, {"level", e.rho_level ? "function" : "ideal"}};
  switch (e.status) {
    case RelStatus::LE: j["status"] = "LE"; break;
    case RelStatus::NLE: j["status"] = "NLE"; break;
    case RelStatus::OPEN: j["status"] = "OPEN"; break;
  }
  switch (e.mode) {
    case VerifyMode::WitnessVerified: j["mode"] = "WITNESS_VERIFIED"; break;
    case VerifyMode::Asserted: j["mode"] = "ASSERTED"; break;
    case VerifyMode::Open: j["mode"] = "OPEN"; break;
  }
  j["provenance"] = e.provenance;
  return j;
}

}  // namespace prcomb
