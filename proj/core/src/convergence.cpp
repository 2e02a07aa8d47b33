#include "prcomb/convergence.hpp"

#include <algorithm>

#include "prcomb/errors.hpp"
#include "prcomb/witness_search.hpp"

namespace prcomb {

// ---------------------------------------------------------------------------
// Spaces
// ---------------------------------------------------------------------------

bool SpaceDesc::check_family(std::uint64_t cap) const {
  if (kind != SpaceKind::Phi) return true;
  std::vector<Window> ws;
  ws.reserve(family.size());
  for (const auto& a : family) ws.push_back(eval_window(*a, cap));
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      Window meet = ws[i] & ws[j];
      if (meet.count() > ad_bound) return false;
    }
  return true;
}

std::string Point::to_string() const {
  switch (kind) {
    case PointKind::Nat: return std::to_string(n);
    case PointKind::Infty: return "infinity";
    case PointKind::FamilyMember: return "A_" + std::to_string(n);
    case PointKind::Rat: return q.get_str();
  }
  return "?";
}

bool in_neighborhood(const SpaceDesc& space, const Point& p, const Point& limit, unsigned m,
                     std::uint64_t cap) {
  switch (space.kind) {
    case SpaceKind::Discrete:
      return p == limit;
    case SpaceKind::Alexandroff:
      if (limit.kind == PointKind::Infty)
        return p.kind == PointKind::Infty || (p.kind == PointKind::Nat && p.n > m);
      return p == limit;
    case SpaceKind::UnitInterval: {
      if (p.kind != PointKind::Rat || limit.kind != PointKind::Rat) return false;
      Rational d = p.q - limit.q;
      if (d < 0) d = -d;
      return d < Rational(1, static_cast<unsigned long>(m + 1));
    }
    case SpaceKind::Phi: {
      if (limit.kind == PointKind::Nat) return p == limit;
      if (limit.kind == PointKind::FamilyMember) {
        if (p == limit) return true;
        if (p.kind != PointKind::Nat || p.n <= m) return false;
        if (limit.n >= space.family.size()) return false;
        Window a = eval_window(*space.family[limit.n], std::max<std::uint64_t>(cap, p.n + 1));
        return a.contains(p.n);
      }
      // limit = infinity: complement of the m-th compact set
      if (p.kind == PointKind::Infty) return true;
      if (p.kind == PointKind::FamilyMember) return p.n >= m;
      if (p.kind != PointKind::Nat) return false;
      if (p.n <= m) return false;
      for (std::size_t i = 0; i < std::min<std::size_t>(m, space.family.size()); ++i) {
        Window a = eval_window(*space.family[i], std::max<std::uint64_t>(cap, p.n + 1));
        if (a.contains(p.n)) return false;
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Sequence rules
// ---------------------------------------------------------------------------

namespace {
RulePtr make_rule(SeqRule r) { return std::make_shared<const SeqRule>(std::move(r)); }
}  // namespace

RulePtr SeqRule::constant(Point p) {
  SeqRule r;
  r.kind = RuleKind::Const;
  r.c = std::move(p);
  return make_rule(std::move(r));
}
RulePtr SeqRule::identity() { return make_rule(SeqRule{}); }
RulePtr SeqRule::modulo(std::uint64_t m) {
  SeqRule r;
  r.kind = RuleKind::Mod;
  r.m = m;
  return make_rule(std::move(r));
}
RulePtr SeqRule::reciprocal() {
  SeqRule r;
  r.kind = RuleKind::Reciprocal;
  return make_rule(std::move(r));
}
RulePtr SeqRule::pair_gap_reciprocal() {
  SeqRule r;
  r.kind = RuleKind::PairGapReciprocal;
  return make_rule(std::move(r));
}
RulePtr SeqRule::piecewise(std::vector<std::pair<ExprPtr, RulePtr>> pieces, RulePtr fallback) {
  SeqRule r;
  r.kind = RuleKind::Piecewise;
  r.pieces = std::move(pieces);
  r.fallback = std::move(fallback);
  return make_rule(std::move(r));
}

Point eval_rule(const SeqRule& f, std::uint64_t lambda) {
  switch (f.kind) {
    case RuleKind::Const:
      return f.c;
    case RuleKind::Identity:
      return Point::nat(lambda);
    case RuleKind::Mod:
      return Point::nat(lambda % f.m);
    case RuleKind::Reciprocal:
      return Point::rat(Rational(1, static_cast<unsigned long>(lambda + 1)));
    case RuleKind::PairGapReciprocal: {
      const auto [a, b] = unpack_pair(lambda);
      return Point::rat(Rational(1, static_cast<unsigned long>(b - a + 1)));
    }
    case RuleKind::Piecewise: {
      for (const auto& [piece, rule] : f.pieces) {
        Window w = eval_window(*piece, lambda + 1);
        if (w.contains(lambda)) return eval_rule(*rule, lambda);
      }
      if (f.fallback) return eval_rule(*f.fallback, lambda);
      fail(Errc::RuleUnsupported, "piecewise rule has no matching piece");
    }
  }
  fail(Errc::RuleUnsupported, "unknown rule kind");
}

std::vector<Point> map_window(const SeqRule& f, const Window& dom) {
  std::vector<Point> out;
  const auto xs = dom.elements();
  out.reserve(xs.size());
  if (f.kind == RuleKind::Piecewise) {
    std::vector<Window> piece_windows;
    piece_windows.reserve(f.pieces.size());
    for (const auto& [piece, rule] : f.pieces)
      piece_windows.push_back(eval_window(*piece, dom.bound));
    for (auto x : xs) {
      bool placed = false;
      for (std::size_t i = 0; i < f.pieces.size() && !placed; ++i) {
        if (piece_windows[i].contains(x)) {
          out.push_back(eval_rule(*f.pieces[i].second, x));
          placed = true;
        }
      }
      if (!placed) {
        if (!f.fallback) fail(Errc::RuleUnsupported, "piecewise rule has no matching piece");
        out.push_back(eval_rule(*f.fallback, x));
      }
    }
    return out;
  }
  for (auto x : xs) out.push_back(eval_rule(f, x));
  return out;
}

std::optional<ExprPtr> preimage_of_nat_prefix(const SeqRule& f, std::uint64_t n) {
  switch (f.kind) {
    case RuleKind::Identity: {
      std::vector<std::uint64_t> xs(n + 1);
      for (std::uint64_t i = 0; i <= n; ++i) xs[i] = i;
      return SetExpr::explicit_set(xs);
    }
    case RuleKind::Const:
      if (f.c.kind == PointKind::Nat && f.c.n <= n) return SetExpr::omega();
      return SetExpr::explicit_set({});
    case RuleKind::Mod:
      if (f.m <= n + 1) return SetExpr::omega();
      return std::nullopt;  // a union of residue classes; not needed yet
    case RuleKind::Piecewise: {
      // union of piece preimages restricted to the pieces
      ExprPtr acc = SetExpr::explicit_set({});
      ExprPtr covered = SetExpr::explicit_set({});
      for (const auto& [piece, rule] : f.pieces) {
        auto inner = preimage_of_nat_prefix(*rule, n);
        if (!inner) return std::nullopt;
        auto fresh = SetExpr::set_difference(piece, covered);
        acc = SetExpr::set_union(acc, SetExpr::set_intersection(fresh, *inner));
        covered = SetExpr::set_union(covered, piece);
      }
      if (f.fallback) {
        auto inner = preimage_of_nat_prefix(*f.fallback, n);
        if (!inner) return std::nullopt;
        acc = SetExpr::set_union(acc, SetExpr::set_difference(*inner, covered));
      }
      return acc;
    }
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Convergence checking
// ---------------------------------------------------------------------------

ConvergenceVerdict rho_converge_check(const SpaceDesc& space, const SeqRule& f,
                                      const PRDescriptor& rho, const SetExpr& gen,
                                      const Point& limit, unsigned depth, std::uint64_t cap,
                                      const Budget& budget) {
  ConvergenceVerdict v;
  v.depth = depth;
  Window fw = rho.compound == PrCompound::None ? eval_window(gen, cap + 1) : Window();
  Window dom;
  try {
    dom = rho.compound == PrCompound::None ? apply_pr_window(rho, fw, cap)
                                           : apply_pr(rho, gen, cap);
  } catch (const Error& e) {
    v.status = ConvStatus::Exhausted;
    v.note = std::string("image evaluation failed: ") + e.what();
    return v;
  }
  if (dom.empty()) {
    v.status = ConvStatus::Exhausted;
    v.note = "empty image window";
    return v;
  }
  const auto pts = map_window(f, dom);
  const auto xs = dom.elements();
  for (unsigned m = 0; m <= depth; ++m) {
    // escape set at level m, always against the untrimmed image
    std::vector<std::uint64_t> bad;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!in_neighborhood(space, pts[i], limit, m, cap)) bad.push_back(xs[i]);
    if (bad.empty()) {
      v.trims.emplace_back();
      continue;
    }
    if (rho.compound != PrCompound::None) {
      v.status = ConvStatus::Exhausted;
      v.note = "compound generators support only trivially convergent checks";
      return v;
    }
    Window bad_w = Window::from_elements(dom.ground, dom.bound, bad);
    Window allowed = dom.minus(bad_w);
    GreedyTrim t = greedy_trim(rho, fw, allowed, cap, budget.trim);
    if (!t.ok) {
      v.status = ConvStatus::Refuted;
      v.refuted_index = m;
      v.escape = t.obstruction.empty() ? bad : t.obstruction;
      v.note = "escape set survives every budgeted trim at base index " + std::to_string(m);
      return v;
    }
    v.trims.push_back(t.k);
  }
  // independent re-check from the (F, K_m) data alone
  v.rechecked = true;
  for (unsigned m = 0; m <= depth; ++m) {
    Window gw = rho.compound == PrCompound::None
                    ? apply_pr_window(rho, fw.minus_elements(v.trims[m]), cap)
                    : apply_pr(rho, gen, cap);
    auto pts = map_window(f, gw);
    auto xs = gw.elements();
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (!in_neighborhood(space, pts[i], limit, m, cap)) v.rechecked = false;
  }
  v.status = v.rechecked ? ConvStatus::Verified : ConvStatus::Exhausted;
  if (!v.rechecked) v.note = "re-check failed";
  return v;
}

std::vector<std::uint64_t> diagonal_subsequence(const PRDescriptor& rho, const SetExpr& gen,
                                                std::uint64_t count, std::uint64_t cap) {
  std::vector<std::uint64_t> picks;
  auto gen_ptr = std::make_shared<const SetExpr>(gen);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<std::uint64_t> prefix(n);
    for (std::uint64_t i = 0; i < n; ++i) prefix[i] = i;
    auto trimmed =
        n == 0 ? gen_ptr
               : SetExpr::set_difference(gen_ptr,
                                         SetExpr::explicit_on(gen_ptr->ground(), prefix));
    Window img;
    try {
      img = apply_pr(rho, *trimmed, cap);
    } catch (const Error&) {
      break;
    }
    std::uint64_t x = img.bits.next_set(0);
    while (x != Bitset::npos && std::find(picks.begin(), picks.end(), x) != picks.end())
      x = img.bits.next_set(x + 1);
    if (x == Bitset::npos) break;
    picks.push_back(x);
  }
  return picks;
}

// ---------------------------------------------------------------------------
// Alexandroff search
// ---------------------------------------------------------------------------

namespace {

ExprPtr default_carrier(const PRDescriptor& rho) {
  switch (rho.kind) {
    case PrKind::FS:
    case PrKind::Delta:
      return SetExpr::superincreasing(1, Rational(2));
    case PrKind::Pairs:
      return SetExpr::omega();
    case PrKind::Ideal:
      return SetExpr::omega();
  }
  return SetExpr::omega();
}

// A generator whose image stays inside `piece` on the window: either the
// greedy superincreasing selection (when its image fits) or the membership
// witness structure.
std::optional<ExprPtr> generator_inside(const PRDescriptor& rho, const ExprPtr& piece,
                                        const Verdict& not_in, std::uint64_t cap,
                                        const Budget& budget) {
  Window pw = eval_window(*piece, cap + 1);
  if (rho.kind == PrKind::FS || rho.kind == PrKind::Delta) {
    try {
      auto sel = superincreasing_subset(*piece, Rational(2), 10, cap);
      auto f = SetExpr::explicit_set(sel.elements);
      if (apply_pr(rho, *f, cap).is_subset_of(pw)) return f;
    } catch (const Error&) {
    }
  }
  if (!not_in.cert.elements.empty()) {
    auto f = SetExpr::explicit_on(rho.omega(), not_in.cert.elements);
    try {
      if (apply_pr(rho, *f, cap).is_subset_of(pw)) return f;
    } catch (const Error&) {
    }
  }
  if (rho.kind == PrKind::Ideal) return piece;
  (void)budget;
  return std::nullopt;
}

}  // namespace

FinBwResult finbw_search_alexandroff(const SeqRule& f, const PRDescriptor& rho, unsigned depth,
                                     std::uint64_t cap, const Budget& budget) {
  FinBwResult res;
  const SpaceDesc space = SpaceDesc::alexandroff();
  const IdealId ideal = ideal_of(rho);
  bool any_unknown = false;

  // branch 1: a positive fiber of a constant piece
  if (f.kind == RuleKind::Piecewise || f.kind == RuleKind::Const) {
    std::vector<std::pair<ExprPtr, Point>> fibers;
    if (f.kind == RuleKind::Const) fibers.emplace_back(SetExpr::omega(), f.c);
    for (const auto& [piece, rule] : f.pieces)
      if (rule->kind == RuleKind::Const) fibers.emplace_back(piece, rule->c);
    for (const auto& [piece, value] : fibers) {
      Verdict v = membership(ideal, *piece, budget);
      if (v.status == VerdictStatus::NotIn) {
        if (auto gen = generator_inside(rho, piece, v, cap, budget)) {
          res.found = true;
          res.generator = *gen;
          res.limit = value;
          res.verdict = rho_converge_check(space, f, rho, **gen, value, depth, cap, budget);
          res.note = "constant branch: a positive fiber";
          return res;
        }
      }
      if (v.status == VerdictStatus::Unknown) any_unknown = true;
    }
  }

  // branch 2: every fiber small -- diagonalize the finite-avoidance chain
  ChainDesc chain;
  for (unsigned n = 0; n <= depth; ++n) {
    auto pre = preimage_of_nat_prefix(f, n);
    if (!pre) {
      res.inconclusive = true;
      res.note = "rule class admits no symbolic prefix preimages";
      return res;
    }
    chain.levels.push_back(SetExpr::set_difference(SetExpr::omega(), *pre));
  }
  chain.carrier = default_carrier(rho);
  Diagonalization d = pminus_diagonalize(rho, chain, depth, cap, budget);
  if (!d.ok) {
    res.inconclusive = any_unknown;
    res.note = "diagonalization failed at level " + std::to_string(d.failing_level) +
               (any_unknown ? " with unknown fiber verdicts" : "");
    return res;
  }
  res.found = true;
  res.generator = SetExpr::explicit_on(rho.omega(), d.generator);
  res.limit = Point::infty();
  res.verdict =
      rho_converge_check(space, f, rho, *res.generator, res.limit, depth, cap, budget);
  res.note = "finite-avoidance diagonalization";
  return res;
}

// ---------------------------------------------------------------------------
// Metric ball refinement
// ---------------------------------------------------------------------------

namespace {

// window of lambda with f(lambda) inside the open ball
std::vector<std::uint64_t> ball_preimage(const SeqRule& f, const Window& dom,
                                         const Rational& center, const Rational& radius) {
  std::vector<std::uint64_t> out;
  auto pts = map_window(f, dom);
  auto xs = dom.elements();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (pts[i].kind != PointKind::Rat) continue;
    Rational d = pts[i].q - center;
    if (d < 0) d = -d;
    if (d < radius) out.push_back(xs[i]);
  }
  return out;
}

// greedy vertex diagonal: all mutual pairs stay inside the allowed window
std::vector<std::uint64_t> spread_pick(const Window& allowed_pairs, std::uint64_t count,
                                       std::uint64_t cap) {
  std::vector<std::uint64_t> picked;
  const std::uint64_t vmax = pair_coord_bound(std::min(cap + 1, allowed_pairs.bound));
  for (std::uint64_t v = 0; v < vmax && picked.size() < count; ++v) {
    bool ok = true;
    for (auto u : picked) {
      const std::uint64_t code = pack_pair(u, v);
      if (code >= allowed_pairs.bound || !allowed_pairs.contains(code)) {
        ok = false;
        break;
      }
    }
    if (ok) picked.push_back(v);
  }
  return picked;
}

}  // namespace

MetricResult metric_limit_search(const SeqRule& f, const PRDescriptor& rho, unsigned depth,
                                 std::uint64_t cap, const Budget& budget) {
  MetricResult res;
  const SpaceDesc space = SpaceDesc::unit_interval();
  if (f.kind == RuleKind::Const) {
    // trivial refinement: every stage keeps the constant
    res.found = true;
    res.limit = f.c.q;
    res.generator = default_carrier(rho);
    for (unsigned n = 0; n <= depth; ++n)
      res.stages.push_back({f.c.q, Rational(1, static_cast<unsigned long>(n + 1)), {}});
    res.verdict = rho_converge_check(space, f, rho, *res.generator, Point::rat(f.c.q), depth,
                                     cap, budget);
    res.note = "constant sequence";
    return res;
  }
  ExprPtr current = default_carrier(rho);
  Window cur_w = eval_window(*current, cap + 1);
  Rational center = Rational(1, 2);
  for (unsigned n = 0; n <= depth; ++n) {
    const Rational radius(1, static_cast<unsigned long>(n + 1));
    Window img = apply_pr_window(rho, cur_w, cap);
    bool advanced = false;
    for (std::uint64_t j = 0; j <= 2 * (n + 1) && !advanced; ++j) {
      Rational c(static_cast<unsigned long>(j), static_cast<unsigned long>(2 * (n + 1)));
      c.canonicalize();
      auto inside = ball_preimage(f, img, c, radius);
      if (inside.empty()) continue;
      Window allowed = Window::from_elements(img.ground, img.bound, inside);
      // positivity of the ball fiber at budget
      std::optional<std::vector<std::uint64_t>> wit;
      switch (rho.kind) {
        case PrKind::FS:
          wit = ip_witness_search(allowed, budget.gen, cap, {budget.nodes}).witness;
          break;
        case PrKind::Delta:
          wit = diff_witness_search(allowed, budget.gen, cap, {budget.nodes}).witness;
          break;
        case PrKind::Pairs:
          wit = clique_search(allowed, budget.gen, {budget.nodes}).witness;
          break;
        case PrKind::Ideal:
          if (inside.size() > budget.gen) wit = inside;
          break;
      }
      if (!wit) continue;
      // refine: a trim of the running generator when its image survives,
      // else a spread diagonal (pairs) or the witness structure
      bool refined = false;
      GreedyTrim t = greedy_trim(rho, cur_w, allowed, cap, budget.trim);
      if (t.ok) {
        Window cand = cur_w.minus_elements(t.k);
        try {
          if (!apply_pr_window(rho, cand, cap).empty()) {
            cur_w = cand;
            refined = true;
          }
        } catch (const Error&) {
        }
      }
      if (!refined && rho.kind == PrKind::Pairs) {
        auto spread = spread_pick(allowed, 8, cap);
        if (spread.size() >= budget.gen) {
          cur_w = Window::from_elements(cur_w.ground, cur_w.bound, spread);
          refined = true;
        }
      }
      if (!refined) cur_w = Window::from_elements(cur_w.ground, cur_w.bound, *wit);
      center = c;
      res.stages.push_back({c, radius, cur_w.elements()});
      advanced = true;
    }
    if (!advanced) {
      res.inconclusive = true;
      res.note = "no ball fiber stayed positive at stage " + std::to_string(n);
      return res;
    }
  }
  res.found = true;
  res.limit = center;
  res.generator = SetExpr::explicit_on(rho.omega(), cur_w.elements());
  res.verdict = rho_converge_check(space, f, rho, *res.generator, Point::rat(center), depth,
                                   cap, budget);
  res.note = "ball refinement";
  return res;
}

// ---------------------------------------------------------------------------
// Phi-space classification
// ---------------------------------------------------------------------------

namespace {

// preimage of a single point reference under the piecewise rule class
ExprPtr preimage_of_point(const SeqRule& f, const Point& p) {
  switch (f.kind) {
    case RuleKind::Const:
      return f.c == p ? SetExpr::omega() : SetExpr::explicit_set({});
    case RuleKind::Identity:
      if (p.kind == PointKind::Nat) return SetExpr::explicit_set({p.n});
      return SetExpr::explicit_set({});
    case RuleKind::Piecewise: {
      ExprPtr acc = SetExpr::explicit_set({});
      ExprPtr covered = SetExpr::explicit_set({});
      for (const auto& [piece, rule] : f.pieces) {
        auto fresh = SetExpr::set_difference(piece, covered);
        acc = SetExpr::set_union(acc,
                                 SetExpr::set_intersection(fresh, preimage_of_point(*rule, p)));
        covered = SetExpr::set_union(covered, piece);
      }
      if (f.fallback)
        acc = SetExpr::set_union(
            acc, SetExpr::set_difference(preimage_of_point(*f.fallback, p), covered));
      return acc;
    }
    default:
      fail(Errc::RuleUnsupported, "point preimages need the piecewise rule class");
  }
}

// preimage of {points of the family layer}
ExprPtr preimage_of_family_layer(const SeqRule& f) {
  switch (f.kind) {
    case RuleKind::Const:
      return f.c.kind == PointKind::FamilyMember ? SetExpr::omega() : SetExpr::explicit_set({});
    case RuleKind::Identity:
      return SetExpr::explicit_set({});
    case RuleKind::Piecewise: {
      ExprPtr acc = SetExpr::explicit_set({});
      ExprPtr covered = SetExpr::explicit_set({});
      for (const auto& [piece, rule] : f.pieces) {
        auto fresh = SetExpr::set_difference(piece, covered);
        acc = SetExpr::set_union(acc,
                                 SetExpr::set_intersection(fresh, preimage_of_family_layer(*rule)));
        covered = SetExpr::set_union(covered, piece);
      }
      if (f.fallback)
        acc = SetExpr::set_union(
            acc, SetExpr::set_difference(preimage_of_family_layer(*f.fallback), covered));
      return acc;
    }
    default:
      fail(Errc::RuleUnsupported, "layer preimages need the piecewise rule class");
  }
}

// preimage of the SET a (lambda with f(lambda) a natural inside a)
ExprPtr preimage_of_nat_set(const SeqRule& f, const ExprPtr& a) {
  switch (f.kind) {
    case RuleKind::Const:
      // membership of the constant in a is window-decidable
      if (f.c.kind == PointKind::Nat && eval_window(*a, f.c.n + 1).contains(f.c.n))
        return SetExpr::omega();
      return SetExpr::explicit_set({});
    case RuleKind::Identity:
      return a;
    case RuleKind::Piecewise: {
      ExprPtr acc = SetExpr::explicit_set({});
      ExprPtr covered = SetExpr::explicit_set({});
      for (const auto& [piece, rule] : f.pieces) {
        auto fresh = SetExpr::set_difference(piece, covered);
        acc = SetExpr::set_union(acc,
                                 SetExpr::set_intersection(fresh, preimage_of_nat_set(*rule, a)));
        covered = SetExpr::set_union(covered, piece);
      }
      if (f.fallback)
        acc = SetExpr::set_union(
            acc, SetExpr::set_difference(preimage_of_nat_set(*f.fallback, a), covered));
      return acc;
    }
    default:
      fail(Errc::RuleUnsupported, "set preimages need the piecewise rule class");
  }
}

}  // namespace

PhiClassification finbw_classify_phi(const SpaceDesc& space, const SeqRule& f,
                                     const PRDescriptor& rho, unsigned depth,
                                     std::uint64_t cap, const Budget& budget) {
  PhiClassification out;
  if (space.kind != SpaceKind::Phi) fail(Errc::InvalidArgument, "needs a Phi space");
  if (!space.check_family(cap))
    fail(Errc::InvalidArgument, "family exceeds its declared almost-disjointness bound");
  const IdealId ideal = ideal_of(rho);
  bool any_unknown = false;
  auto verdict_of = [&](const ExprPtr& e) {
    Verdict v = membership(ideal, *e, budget);
    if (v.status == VerdictStatus::Unknown) any_unknown = true;
    return v;
  };

  // case 1: the fiber of infinity is positive
  ExprPtr pre_inf = preimage_of_point(f, Point::infty());
  Verdict v_inf = verdict_of(pre_inf);
  if (v_inf.status == VerdictStatus::NotIn) {
    out.case_id = 1;
    if (auto gen = generator_inside(rho, pre_inf, v_inf, cap, budget)) {
      out.resolved = true;
      out.generator = *gen;
      out.limit = Point::infty();
      out.verdict = rho_converge_check(space, f, rho, **gen, out.limit, depth, cap, budget);
      out.note = "constant branch at infinity";
    } else {
      out.inconclusive = true;
      out.note = "positive fiber found but no generator fit inside it";
    }
    return out;
  }

  // case 2: the family layer is positive
  ExprPtr pre_layer = preimage_of_family_layer(f);
  Verdict v_layer = verdict_of(pre_layer);
  if (v_layer.status == VerdictStatus::NotIn) {
    out.case_id = 2;
    // a single member's fiber positive => constant; else diagonalize away
    for (std::size_t i = 0; i < space.family.size(); ++i) {
      ExprPtr fiber = preimage_of_point(f, Point::family_member(i));
      Verdict v = verdict_of(fiber);
      if (v.status == VerdictStatus::NotIn) {
        if (auto gen = generator_inside(rho, fiber, v, cap, budget)) {
          out.resolved = true;
          out.generator = *gen;
          out.limit = Point::family_member(i);
          out.verdict = rho_converge_check(space, f, rho, **gen, out.limit, depth, cap, budget);
          out.note = "constant branch at a family point";
          return out;
        }
      }
    }
    ChainDesc chain;
    ExprPtr removed = SetExpr::explicit_set({});
    for (unsigned n = 0; n <= depth; ++n) {
      chain.levels.push_back(SetExpr::set_difference(pre_layer, removed));
      if (n < space.family.size())
        removed = SetExpr::set_union(removed, preimage_of_point(f, Point::family_member(n)));
    }
    chain.carrier = default_carrier(rho);
    Diagonalization d = pminus_diagonalize(rho, chain, depth, cap, budget);
    if (d.ok) {
      out.resolved = true;
      out.generator = SetExpr::explicit_on(rho.omega(), d.generator);
      out.limit = Point::infty();
      out.verdict =
          rho_converge_check(space, f, rho, *out.generator, out.limit, depth, cap, budget);
      out.note = "family-layer diagonalization toward infinity";
    } else {
      out.inconclusive = true;
      out.note = "family-layer diagonalization failed at level " +
                 std::to_string(d.failing_level);
    }
    return out;
  }

  // case 3a: a single natural's fiber is positive
  // (only constant-to-Nat pieces can make one)
  if (f.kind == RuleKind::Piecewise || f.kind == RuleKind::Const) {
    std::vector<std::pair<ExprPtr, Point>> fibers;
    if (f.kind == RuleKind::Const && f.c.kind == PointKind::Nat)
      fibers.emplace_back(SetExpr::omega(), f.c);
    for (const auto& [piece, rule] : f.pieces)
      if (rule->kind == RuleKind::Const && rule->c.kind == PointKind::Nat)
        fibers.emplace_back(piece, rule->c);
    for (const auto& [piece, value] : fibers) {
      Verdict v = verdict_of(piece);
      if (v.status == VerdictStatus::NotIn) {
        if (auto gen = generator_inside(rho, piece, v, cap, budget)) {
          out.case_id = 31;
          out.resolved = true;
          out.generator = *gen;
          out.limit = value;
          out.verdict = rho_converge_check(space, f, rho, **gen, out.limit, depth, cap, budget);
          out.note = "constant branch at an isolated point";
          return out;
        }
      }
    }
  }

  // case 3b: some family member pulls back positively
  for (std::size_t i = 0; i < space.family.size(); ++i) {
    ExprPtr pre_a = preimage_of_nat_set(f, space.family[i]);
    Verdict v = verdict_of(pre_a);
    if (v.status != VerdictStatus::NotIn) continue;
    out.case_id = 32;
    Window aw = eval_window(*space.family[i], cap);
    ChainDesc chain;
    for (unsigned n = 0; n <= depth; ++n) {
      // avoid the first n points of A_i
      std::vector<std::uint64_t> head;
      aw.bits.for_each_set([&](std::uint64_t x) {
        if (head.size() < n) head.push_back(x);
      });
      chain.levels.push_back(
          SetExpr::set_difference(pre_a, preimage_of_nat_set(f, SetExpr::explicit_set(head))));
    }
    if (auto gen = generator_inside(rho, pre_a, v, cap, budget)) chain.carrier = *gen;
    Diagonalization d = pminus_diagonalize(rho, chain, depth, cap, budget);
    if (d.ok) {
      out.resolved = true;
      out.generator = SetExpr::explicit_on(rho.omega(), d.generator);
      out.limit = Point::family_member(i);
      out.verdict =
          rho_converge_check(space, f, rho, *out.generator, out.limit, depth, cap, budget);
      out.note = "trimmed convergence into the family member";
    } else {
      out.inconclusive = true;
      out.note = "member diagonalization failed at level " + std::to_string(d.failing_level);
    }
    return out;
  }

  // case 3c: everything is small
  out.case_id = 33;
  out.note = "unresolved case: every fiber small";
  if (any_unknown) {
    out.inconclusive = true;
    out.note += " (with unknown verdicts along the way)";
    return out;
  }
  // countable-family fallback: avoid every member's pullback simultaneously
  ChainDesc chain;
  ExprPtr removed = SetExpr::explicit_set({});
  for (unsigned n = 0; n <= depth; ++n) {
    chain.levels.push_back(SetExpr::set_difference(SetExpr::omega(), removed));
    if (n < space.family.size())
      removed = SetExpr::set_union(removed, preimage_of_nat_set(f, space.family[n]));
  }
  chain.carrier = default_carrier(rho);
  Diagonalization d = pminus_diagonalize(rho, chain, depth, cap, budget);
  if (d.ok) {
    out.resolved = true;
    out.fallback_used = true;
    out.generator = SetExpr::explicit_on(rho.omega(), d.generator);
    out.limit = Point::infty();
    out.verdict =
        rho_converge_check(space, f, rho, *out.generator, out.limit, depth, cap, budget);
    out.note += "; countable-family fallback emitted a limit at infinity";
  } else {
    out.inconclusive = true;
    out.note += "; fallback diagonalization failed at level " + std::to_string(d.failing_level);
  }
  return out;
}

MadObstruction mad_obstruction_check(const std::vector<ExprPtr>& family,
                                     const PRDescriptor& rho,
                                     const std::vector<ExprPtr>& f_samples, unsigned trims,
                                     std::uint64_t cap) {
  MadObstruction out;
  std::vector<Window> fam_w;
  fam_w.reserve(family.size());
  for (const auto& a : family) fam_w.push_back(eval_window(*a, cap + 1));
  for (const auto& f : f_samples) {
    std::optional<std::uint64_t> found;
    for (std::size_t ai = 0; ai < fam_w.size() && !found; ++ai) {
      bool meets_all = true;
      unsigned inspected = 0;
      for (unsigned j = 0; j <= trims && meets_all; ++j) {
        ExprPtr trimmed = f;
        if (j > 0) {
          auto lead = enumerate_elements(*f, j);
          trimmed = SetExpr::set_difference(f, SetExpr::explicit_on(f->ground(), lead));
        }
        Window img;
        try {
          img = apply_pr(rho, *trimmed, cap);
        } catch (const Error&) {
          break;  // the window ran out of generator elements
        }
        if (img.empty()) break;
        ++inspected;
        Window meet = img & fam_w[ai];
        if (meet.empty()) meets_all = false;
      }
      if (meets_all && inspected > 0) found = ai;
    }
    if (found) {
      out.witnesses.emplace_back(to_string(*f), *found);
    } else {
      out.holds = false;
      out.counterexample = to_string(*f);
      return out;
    }
  }
  return out;
}

}  // namespace prcomb
