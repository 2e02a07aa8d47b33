#include "prcomb/katetov.hpp"

#include <algorithm>

#include "prcomb/errors.hpp"
#include "prcomb/witness_search.hpp"

namespace prcomb {

// ---------------------------------------------------------------------------
// WitnessMap
// ---------------------------------------------------------------------------

std::uint64_t WitnessMap::apply(std::uint64_t code) const {
  switch (kind) {
    case MapKind::Identity:
      return code;
    case MapKind::PairDifference: {
      const auto [a, b] = unpack_pair(code);
      return b - a;
    }
    case MapKind::Inject0:
      return pack_sum(code, 0);
    case MapKind::Inject1:
      return pack_sum(code, 1);
    case MapKind::Project0:
      return unpack_grid2(code).first;
    case MapKind::Project1:
      return unpack_grid2(code).second;
    case MapKind::ColumnEmbed:
      return pack_grid2(param, code);
    case MapKind::Table: {
      auto it = table.find(code);
      return it == table.end() ? code : it->second;
    }
  }
  fail(Errc::InvalidArgument, "unknown map kind");
}

Window WitnessMap::image(const Window& w, std::uint64_t out_bound) const {
  Window out(to, out_bound);
  w.bits.for_each_set([&](std::uint64_t c) { out.insert(apply(c)); });
  return out;
}

std::string WitnessMap::name() const {
  switch (kind) {
    case MapKind::Identity: return "identity";
    case MapKind::PairDifference: return "pair_difference";
    case MapKind::Inject0: return "inject0";
    case MapKind::Inject1: return "inject1";
    case MapKind::Project0: return "project0";
    case MapKind::Project1: return "project1";
    case MapKind::ColumnEmbed: return "column_embed(" + std::to_string(param) + ")";
    case MapKind::Table: return "table";
  }
  return "?";
}

std::optional<ExprPtr> symbolic_image(const WitnessMap& phi, const ExprPtr& a) {
  switch (phi.kind) {
    case MapKind::Identity:
      return a;
    case MapKind::PairDifference:
      if (a->kind == ExprKind::PairsOf) return SetExpr::delta_of(a->lhs);
      return std::nullopt;
    case MapKind::ColumnEmbed:
      return SetExpr::grid_product(SetExpr::explicit_set({phi.param}), a);
    case MapKind::Inject0:
      return SetExpr::disjoint_sum(a, SetExpr::explicit_set({}));
    case MapKind::Inject1:
      return SetExpr::disjoint_sum(SetExpr::explicit_set({}), a);
    case MapKind::Project0:
      if (a->kind == ExprKind::GridProduct || a->kind == ExprKind::CrossProduct)
        return a->lhs;
      return std::nullopt;
    case MapKind::Project1:
      if (a->kind == ExprKind::GridProduct || a->kind == ExprKind::CrossProduct)
        return a->rhs;
      return std::nullopt;
    case MapKind::Table:
      return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Theorem witnesses
// ---------------------------------------------------------------------------

DeltaFsReport witness_delta_le_fs(const SetExpr& a, std::uint64_t cap, unsigned trims) {
  DeltaFsReport rep;
  auto a_ptr = std::make_shared<const SetExpr>(a);
  rep.b = SetExpr::partial_sums(a_ptr);
  // clamp the trim range to the window's supply of leading elements
  std::vector<std::uint64_t> lead;
  {
    Window head = eval_window(a, cap + 1);
    lead = head.elements();
    if (lead.size() < 2) fail(Errc::InvalidArgument, "need at least two base elements");
    if (lead.size() <= trims) trims = static_cast<unsigned>(lead.size() - 1);
    lead.resize(trims + 1);
  }
  if (lead.front() == 0) fail(Errc::InvalidArgument, "0 must not occur in the base set");
  std::vector<std::uint64_t> psums(lead.size());
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < lead.size(); ++i) {
    run += lead[i];
    psums[i] = run;
  }
  Window wb = eval_window(*rep.b, cap + 1);
  Window wa = eval_window(a, cap + 1);
  rep.pass = true;
  for (unsigned j = 0; j <= trims; ++j) {
    // K = first j elements of A; the rule takes k = max(j-1, 0)
    const std::uint64_t k = j == 0 ? 0 : j - 1;
    const std::uint64_t l_bound = psums[k];
    Window trimmed_b(Ground::omega(), wb.bound);
    wb.bits.for_each_set([&](std::uint64_t x) {
      if (x > l_bound) trimmed_b.bits.set(x);
    });
    TrimCheck chk;
    chk.trim = j;
    chk.l_bound = l_bound;
    if (trimmed_b.count() < 2) {
      chk.ok = true;  // no differences left in the window
      rep.checks.push_back(chk);
      continue;
    }
    Window lhs = delta(trimmed_b);
    std::vector<std::uint64_t> k_elems(lead.begin(), lead.begin() + j);
    Window fsrc = wa.minus_elements(k_elems);
    Window rhs = fs(fsrc, cap);
    chk.lhs_count = lhs.count();
    chk.ok = lhs.is_subset_of(rhs);
    if (!chk.ok) rep.pass = false;
    rep.checks.push_back(chk);
  }
  if (!rep.pass) fail(Errc::VerificationFailed, "partial-sums inclusion failed on the window");
  return rep;
}

DeltaRReport witness_delta_le_r(const SetExpr& a, std::uint64_t cap, unsigned trims) {
  if (size_class(a) == SizeClass::Finite && eval_window(a, cap).count() < 2)
    fail(Errc::InvalidArgument, "need at least two elements");
  DeltaRReport rep;
  Window wa = eval_window(a, cap + 1);
  auto lead = wa.elements();
  rep.pass = true;
  const WitnessMap phi = WitnessMap::pair_difference();
  for (unsigned j = 0; j <= trims && j + 2 <= lead.size(); ++j) {
    std::vector<std::uint64_t> k_elems(lead.begin(), lead.begin() + j);
    Window src = wa.minus_elements(k_elems);
    Window lhs = delta(src);
    Window rhs = phi.image(pairs(src), lhs.bound);
    TrimCheck chk;
    chk.trim = j;
    chk.lhs_count = lhs.count();
    chk.ok = lhs == rhs;
    if (!chk.ok) rep.pass = false;
    rep.checks.push_back(chk);
  }
  if (!rep.pass) fail(Errc::VerificationFailed, "difference/pair-image equality failed");
  return rep;
}

DiagonalReport witness_rho_min(const PRDescriptor& rho, const SetExpr& f, std::uint64_t count,
                               std::uint64_t cap) {
  if (rho.compound != PrCompound::None)
    fail(Errc::RuleUnsupported, "diagonal extraction works on simple descriptors");
  DiagonalReport rep;
  std::vector<Window> images;
  auto f_ptr = std::make_shared<const SetExpr>(f);
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<std::uint64_t> omega_prefix(n);
    for (std::uint64_t i = 0; i < n; ++i) omega_prefix[i] = i;
    auto trimmed = n == 0 ? f_ptr
                          : SetExpr::set_difference(
                                f_ptr, SetExpr::explicit_on(f.ground(), omega_prefix));
    images.push_back(apply_pr(rho, *trimmed, cap));
    // least element of the image not picked yet
    std::uint64_t x = images.back().bits.next_set(0);
    while (x != Bitset::npos &&
           std::find(rep.picks.begin(), rep.picks.end(), x) != rep.picks.end())
      x = images.back().bits.next_set(x + 1);
    if (x == Bitset::npos) fail(Errc::Exhausted, "image exhausted during diagonal extraction");
    rep.picks.push_back(x);
  }
  rep.pass = true;
  for (std::uint64_t n = 0; n < count; ++n)
    for (std::uint64_t i = n; i < count; ++i)
      if (!images[n].contains(rep.picks[i])) rep.pass = false;
  return rep;
}

// ---------------------------------------------------------------------------
// Generic checking
// ---------------------------------------------------------------------------

namespace {

ExprPtr minus_first(const ExprPtr& e, unsigned j, std::uint64_t widen_cap = kDefaultWidenCap) {
  if (j == 0) return e;
  auto lead = enumerate_elements(*e, j, widen_cap);
  return SetExpr::set_difference(e, SetExpr::explicit_on(e->ground(), lead));
}

// rho2(F2 \ first j2) inside target for some j2 <= max_trim?
bool trims_into(const PRDescriptor& rho2, const ExprPtr& f2, const Window& target,
                std::uint64_t cap, unsigned max_trim, unsigned* used = nullptr) {
  for (unsigned j = 0; j <= max_trim; ++j) {
    ExprPtr trimmed;
    try {
      trimmed = minus_first(f2, j);
    } catch (const Error&) {
      return false;
    }
    try {
      Window img = apply_pr(rho2, *trimmed, cap);
      if (img.is_subset_of(target)) {
        if (used) *used = j;
        return true;
      }
    } catch (const Error&) {
      // structural domain errors on over-trimmed windows: keep trying
    }
  }
  return false;
}

}  // namespace

WitnessCheckReport check_rho_witness(const WitnessMap& phi, const PRDescriptor& rho2,
                                     const PRDescriptor& rho1,
                                     const std::vector<ExprPtr>& f1_samples,
                                     const Budget& budget, unsigned trims) {
  if (!(phi.from == rho1.lambda()) || !(phi.to == rho2.lambda()))
    fail(Errc::GroundSetMismatch, "witness map grounds do not match the descriptors");
  WitnessCheckReport rep;
  rep.note = "window-scale check: consistency never upgrades to a theorem and "
             "a failed search never establishes a negative";
  const std::uint64_t cap = budget.cap;
  bool any_inconclusive = false, any_refuted = false;
  for (const auto& f1 : f1_samples) {
    SampleCheck sc;
    sc.f1 = to_string(*f1);
    // shrinking targets phi[rho1(F1 \ K1)]; small windows cut the trim range
    std::vector<Window> targets;
    unsigned sample_trims = trims;
    for (unsigned j = 0; j <= trims; ++j) {
      try {
        Window img = apply_pr(rho1, *minus_first(f1, j), cap);
        targets.push_back(phi.image(img, cap + 1));
      } catch (const Error&) {
        break;
      }
    }
    if (targets.empty()) {
      sc.status = CheckStatus::Inconclusive;
      sc.detail = "sample image empty at the base trim";
      any_inconclusive = true;
      rep.samples.push_back(std::move(sc));
      continue;
    }
    sample_trims = static_cast<unsigned>(targets.size() - 1);

    // ideal-type lower descriptors draw generators from the positive family;
    // a candidate without a positivity certificate cannot carry consistency
    auto in_domain = [&](const ExprPtr& f2) {
      if (rho2.kind != PrKind::Ideal || rho2.compound != PrCompound::None) return true;
      return membership(*rho2.ideal, *f2, budget).status == VerdictStatus::NotIn;
    };

    // the pairs window at a packed cap only sees coordinates below this
    const std::uint64_t visible =
        rho1.compound == PrCompound::None && rho1.kind == PrKind::Pairs
            ? pair_coord_bound(cap + 1)
            : cap + 1;

    bool found = false;
    // candidate 1: the same generator (clipped to the visible coordinate
    // range of the upper image), trimmed in step
    if (!found && rho2.compound == PrCompound::None && rho2.omega() == f1->ground()) {
      ExprPtr f2 = f1;
      if (visible <= cap) {
        std::vector<std::uint64_t> range(visible);
        for (std::uint64_t i = 0; i < visible; ++i) range[i] = i;
        f2 = SetExpr::set_intersection(f1, SetExpr::explicit_set(range));
      }
      if (in_domain(f2)) {
        bool all = true;
        for (unsigned j = 0; j <= sample_trims && all; ++j)
          all = trims_into(rho2, f2, targets[j], cap, j + 1);
        if (all) {
          found = true;
          sc.detail = "the sampled generator itself works, trimmed in step";
        }
      }
    }
    // candidate 2: partial sums (difference images inside finite-sums images)
    if (!found && rho2.compound == PrCompound::None && rho2.kind == PrKind::Delta) {
      ExprPtr b = SetExpr::partial_sums(f1);
      bool all = true;
      for (unsigned j = 0; j <= sample_trims && all; ++j)
        all = trims_into(rho2, b, targets[j], cap, sample_trims + 2);
      if (all) {
        found = true;
        sc.detail = "partial-sums generator";
      }
    }
    // candidate 3: a generator found inside the smallest target
    if (!found && rho2.compound == PrCompound::None) {
      const Window& last = targets.back();
      std::optional<std::vector<std::uint64_t>> gen;
      switch (rho2.kind) {
        case PrKind::FS:
          gen = ip_witness_search(last, budget.gen, cap, {budget.nodes}).witness;
          break;
        case PrKind::Delta:
          gen = diff_witness_search(last, budget.gen, cap, {budget.nodes}).witness;
          break;
        case PrKind::Pairs:
          gen = clique_search(last, budget.gen, {budget.nodes}).witness;
          break;
        case PrKind::Ideal:
          if (rho2.ideal->tag == IdealTag::Fin) {
            // diagonal picks: one element per target level, nested by design
            std::vector<std::uint64_t> picks;
            bool ok = true;
            for (unsigned j = 0; j <= sample_trims; ++j) {
              std::uint64_t x = targets[j].bits.next_set(0);
              while (x != Bitset::npos &&
                     std::find(picks.begin(), picks.end(), x) != picks.end())
                x = targets[j].bits.next_set(x + 1);
              if (x == Bitset::npos) {
                ok = false;
                break;
              }
              picks.push_back(x);
            }
            if (ok) gen = picks;
          }
          break;
      }
      if (gen) {
        // images of the found generator live inside the smallest target,
        // hence inside every target with K2 = empty
        bool all = true;
        if (rho2.kind != PrKind::Ideal) {
          auto f2 = SetExpr::explicit_on(rho2.omega(), *gen);
          for (unsigned j = 0; j <= sample_trims && all; ++j)
            all = trims_into(rho2, f2, targets[j], cap, 0);
        }
        if (all) {
          found = true;
          sc.detail = "generator found inside the deepest trimmed image";
        }
      }
    }
    if (found) {
      sc.status = CheckStatus::Consistent;
    } else {
      // certified obstruction: an ideal-type rho2 whose whole target image
      // carries an IN certificate admits no positive generator at all
      bool refuted = false;
      if (rho2.compound == PrCompound::None && rho2.kind == PrKind::Ideal) {
        if (auto img_expr = symbolic_image(phi, [&] {
              // symbolic rho1-image of the deepest trim
              ExprPtr trimmed = minus_first(f1, sample_trims);
              switch (rho1.kind) {
                case PrKind::FS: return SetExpr::fs_of(trimmed);
                case PrKind::Delta: return SetExpr::delta_of(trimmed);
                case PrKind::Pairs: return SetExpr::pairs_of(trimmed);
                default: return trimmed;
              }
            }())) {
          if (auto cert = closed_form_in(*rho2.ideal, **img_expr)) {
            refuted = true;
            sc.status = CheckStatus::Refuted;
            sc.refuting_trim = sample_trims;
            sc.detail = "the trimmed image is certified inside the ideal (" + cert->note +
                        "), so no positive generator fits";
          }
        }
      }
      if (!refuted) {
        sc.status = CheckStatus::Inconclusive;
        sc.detail = "candidate library exhausted without a certified obstruction";
      }
    }
    any_refuted |= sc.status == CheckStatus::Refuted;
    any_inconclusive |= sc.status == CheckStatus::Inconclusive;
    rep.samples.push_back(std::move(sc));
  }
  rep.status = any_refuted ? CheckStatus::Refuted
               : any_inconclusive ? CheckStatus::Inconclusive
                                  : CheckStatus::Consistent;
  return rep;
}

WitnessCheckReport check_ideal_witness(const WitnessMap& phi, const IdealId& target,
                                       const IdealId& source,
                                       const std::vector<ExprPtr>& samples,
                                       const Budget& budget) {
  if (!(phi.from == source.ground()) || !(phi.to == target.ground()))
    fail(Errc::GroundSetMismatch, "witness map grounds do not match the ideals");
  WitnessCheckReport rep;
  rep.note = "window-scale check: consistency never upgrades to a theorem";
  bool any_inconclusive = false, any_refuted = false;
  for (const auto& a : samples) {
    SampleCheck sc;
    sc.f1 = to_string(*a);
    Verdict src = membership(source, *a, budget);
    if (src.status != VerdictStatus::NotIn) {
      sc.status = CheckStatus::Inconclusive;
      sc.detail = "sample is not source-positive at this budget";
      any_inconclusive = true;
      rep.samples.push_back(std::move(sc));
      continue;
    }
    Verdict img_v;
    if (auto img = symbolic_image(phi, a)) {
      img_v = membership(target, **img, budget);
    } else {
      Window w = eval_window(*a, budget.cap);
      Window img_w = phi.image(w, budget.cap);
      auto img_expr = SetExpr::explicit_on(target.ground(), img_w.elements());
      img_v = membership(target, *img_expr, budget);
      if (img_v.status == VerdictStatus::In && img_v.cert.kind == "finite") {
        // a windowed image is finite by construction; that is no certificate
        img_v.status = VerdictStatus::Unknown;
        img_v.cert.note = "windowed image only";
      }
    }
    switch (img_v.status) {
      case VerdictStatus::NotIn:
        sc.status = CheckStatus::Consistent;
        sc.detail = "image stays target-positive (" + img_v.cert.kind + ")";
        break;
      case VerdictStatus::In:
        sc.status = CheckStatus::Refuted;
        sc.detail = "image earns an IN certificate: " + img_v.cert.note;
        break;
      case VerdictStatus::Unknown:
        sc.status = CheckStatus::Inconclusive;
        sc.detail = "image verdict unknown at this budget";
        break;
    }
    any_refuted |= sc.status == CheckStatus::Refuted;
    any_inconclusive |= sc.status == CheckStatus::Inconclusive;
    rep.samples.push_back(std::move(sc));
  }
  rep.status = any_refuted ? CheckStatus::Refuted
               : any_inconclusive ? CheckStatus::Inconclusive
                                  : CheckStatus::Consistent;
  return rep;
}

// ---------------------------------------------------------------------------
// Relation matrix
// ---------------------------------------------------------------------------

namespace {

void add_edge(RelationMatrix& m, bool rho_level, const std::string& l, const std::string& r,
              RelStatus st, VerifyMode mode, const std::string& prov) {
  m.edges.push_back({l, r, st, prov, mode, rho_level});
}

}  // namespace

RelationMatrix RelationMatrix::curated() {
  RelationMatrix m;
  m.rho_nodes = {"FS", "r", "Delta", "rho_W", "rho_I1n", "rho_Fin", "rho_Fin2"};
  m.ideal_nodes = {"H", "R", "D", "W", "I1n", "Fin", "Fin2"};

  // function level
  add_edge(m, true, "Delta", "FS", RelStatus::LE, VerifyMode::WitnessVerified,
           "identity map; partial sums turn difference images into finite-sums images");
  add_edge(m, true, "Delta", "r", RelStatus::LE, VerifyMode::WitnessVerified,
           "pair-difference map; pair images map exactly onto difference images");
  for (const char* upper : {"FS", "r", "Delta", "rho_W", "rho_I1n"})
    add_edge(m, true, "rho_Fin", upper, RelStatus::LE, VerifyMode::WitnessVerified,
             "diagonal extraction from shrinking images");
  add_edge(m, true, "FS", "r", RelStatus::NLE, VerifyMode::Asserted, "catalog assertion");
  add_edge(m, true, "r", "FS", RelStatus::NLE, VerifyMode::Asserted, "catalog assertion");
  add_edge(m, true, "r", "Delta", RelStatus::NLE, VerifyMode::Asserted, "catalog assertion");
  add_edge(m, true, "FS", "Delta", RelStatus::NLE, VerifyMode::Asserted, "catalog assertion");
  for (const char* upper : {"FS", "r", "Delta", "rho_W"})
    add_edge(m, true, "rho_I1n", upper, RelStatus::NLE, VerifyMode::Asserted,
             "catalog assertion");
  for (const char* lower : {"Delta", "FS", "r"}) {
    add_edge(m, true, lower, "rho_I1n", RelStatus::NLE, VerifyMode::Asserted,
             "catalog assertion");
    add_edge(m, true, lower, "rho_W", RelStatus::NLE, VerifyMode::Asserted,
             "catalog assertion");
  }
  add_edge(m, true, "rho_Fin2", "FS", RelStatus::NLE, VerifyMode::Asserted,
           "the function level splits from the ideal level here");

  // ideal level
  add_edge(m, false, "D", "H", RelStatus::LE, VerifyMode::WitnessVerified,
           "identity map: finite-sums-positive sets are difference-positive");
  add_edge(m, false, "D", "R", RelStatus::LE, VerifyMode::WitnessVerified,
           "pair-difference map");
  for (const char* upper : {"D", "H", "R"})
    add_edge(m, false, "Fin2", upper, RelStatus::LE, VerifyMode::Asserted,
             "columnwise diagonalization fails in these ideals");
  for (const char* upper : {"H", "R", "D", "W", "I1n", "Fin2"})
    add_edge(m, false, "Fin", upper, RelStatus::LE, VerifyMode::WitnessVerified,
             "identity map: positive sets are infinite");
  add_edge(m, false, "H", "R", RelStatus::NLE, VerifyMode::Asserted, "catalog assertion");
  add_edge(m, false, "R", "H", RelStatus::NLE, VerifyMode::Asserted, "catalog assertion");
  add_edge(m, false, "R", "D", RelStatus::NLE, VerifyMode::Asserted, "catalog assertion");
  add_edge(m, false, "H", "D", RelStatus::NLE, VerifyMode::Asserted, "catalog assertion");
  for (const char* upper : {"R", "H", "D", "W"})
    add_edge(m, false, "I1n", upper, RelStatus::NLE, VerifyMode::Asserted,
             "catalog assertion");
  for (const char* lower : {"D", "H", "R"}) {
    add_edge(m, false, lower, "I1n", RelStatus::NLE, VerifyMode::Asserted,
             "catalog assertion");
    add_edge(m, false, lower, "W", RelStatus::NLE, VerifyMode::Asserted, "catalog assertion");
  }
  add_edge(m, false, "Fin2", "W", RelStatus::NLE, VerifyMode::Asserted,
           "sigma-type complexity keeps the square ideal away");
  add_edge(m, false, "Fin2", "I1n", RelStatus::NLE, VerifyMode::Asserted,
           "sigma-type complexity keeps the square ideal away");

  // open entries, exactly the question list
  for (const char* upper : {"I1n", "H", "R", "D"})
    add_edge(m, false, "W", upper, RelStatus::OPEN, VerifyMode::Open, "open question");

  // --- consistency: LE closure must avoid every NLE edge -------------------
  auto closure_check = [&](bool rho_level, const std::vector<std::string>& nodes) {
    const std::size_t n = nodes.size();
    auto idx = [&](const std::string& s) {
      return static_cast<std::size_t>(
          std::find(nodes.begin(), nodes.end(), s) - nodes.begin());
    };
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (const auto& e : m.edges)
      if (e.rho_level == rho_level && e.status == RelStatus::LE) le[idx(e.lhs)][idx(e.rhs)] = true;
    if (!rho_level) {
      // a function-level LE forces the ideal-level LE between the images
      const std::map<std::string, std::string> drop = {
          {"FS", "H"},      {"r", "R"},        {"Delta", "D"},  {"rho_W", "W"},
          {"rho_I1n", "I1n"}, {"rho_Fin", "Fin"}, {"rho_Fin2", "Fin2"}};
      for (const auto& e : m.edges)
        if (e.rho_level && e.status == RelStatus::LE)
          le[idx(drop.at(e.lhs))][idx(drop.at(e.rhs))] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (le[i][k] && le[k][j]) le[i][j] = true;
    for (const auto& e : m.edges)
      if (e.rho_level == rho_level && e.status == RelStatus::NLE &&
          le[idx(e.lhs)][idx(e.rhs)])
        fail(Errc::VerificationFailed,
             "consistency violation: the LE closure reaches " + e.lhs + " <= " + e.rhs);
  };
  closure_check(true, m.rho_nodes);
  closure_check(false, m.ideal_nodes);
  return m;
}

const RelationEdge* RelationMatrix::query(const std::string& lhs, const std::string& rhs,
                                          bool rho_level) const {
  for (const auto& e : edges)
    if (e.rho_level == rho_level && e.lhs == lhs && e.rhs == rhs) return &e;
  return nullptr;
}

std::string RelationMatrix::to_dot() const {
  std::string dot = "digraph katetov {\n  rankdir=BT;\n";
  dot += "  subgraph cluster_rho {\n    label=\"partition-regular operations\";\n";
  for (const auto& n : rho_nodes) dot += "    \"" + n + "\";\n";
  dot += "  }\n";
  dot += "  subgraph cluster_ideal {\n    label=\"ideals\";\n";
  for (const auto& n : ideal_nodes) dot += "    \"" + n + "\";\n";
  dot += "  }\n";
  for (const auto& e : edges) {
    dot += "  \"" + e.lhs + "\" -> \"" + e.rhs + "\"";
    switch (e.status) {
      case RelStatus::LE:
        dot += " [style=solid";
        break;
      case RelStatus::NLE:
        dot += " [style=dashed, color=red";
        break;
      case RelStatus::OPEN:
        dot += " [style=dotted";
        break;
    }
    dot += "];\n";
  }
  dot += "}\n";
  return dot;
}

// ---------------------------------------------------------------------------
// Compounds
// ---------------------------------------------------------------------------

CompoundWitness oplus_rho(const PRDescriptor& rho0, const PRDescriptor& rho1) {
  CompoundWitness cw;
  cw.descriptor = PRDescriptor::oplus(rho0, rho1);
  const Ground sum = cw.descriptor.lambda();
  cw.phi0 = WitnessMap::inject(0, rho0.lambda(), sum);
  cw.phi1 = WitnessMap::inject(1, rho1.lambda(), sum);
  return cw;
}

CompoundWitness product_rho(const PRDescriptor& rho0, const PRDescriptor& rho1) {
  CompoundWitness cw;
  cw.descriptor = PRDescriptor::product(rho0, rho1);
  const Ground prod = cw.descriptor.lambda();
  cw.phi0 = WitnessMap::project(0, prod, rho0.lambda());
  cw.phi1 = WitnessMap::project(1, prod, rho1.lambda());
  return cw;
}

bool verify_compound_witness(const CompoundWitness& cw, unsigned side,
                             const ExprPtr& f_component, const ExprPtr& f_other,
                             std::uint64_t cap, unsigned trims) {
  const PRDescriptor& comp =
      side == 0 ? *cw.descriptor.left : *cw.descriptor.right;
  const WitnessMap& phi = side == 0 ? cw.phi0 : cw.phi1;
  if (cw.descriptor.compound == PrCompound::Oplus) {
    // sigma <= rho_side: trims are component-wise, and the window trace of
    // the complementary component is removed wholesale (a finite set at any
    // fixed window)
    const std::uint64_t comp_cap = cap / 2;
    for (unsigned j = 0; j <= trims; ++j) {
      Window comp_img;
      try {
        comp_img = apply_pr(comp, *minus_first(f_component, j), comp_cap);
      } catch (const Error&) {
        break;  // the window ran out of component elements
      }
      Window target = phi.image(comp_img, cap + 1);
      Window sigma_img(cw.descriptor.lambda(), cap + 1);
      comp_img.bits.for_each_set(
          [&](std::uint64_t x) { sigma_img.insert(pack_sum(x, side)); });
      if (!sigma_img.is_subset_of(target)) return false;
    }
    return true;
  }
  if (cw.descriptor.compound == PrCompound::Product) {
    // rho_side <= pi: with component trims, the projection of the product
    // image recovers the component image on the coordinate range the packed
    // window covers
    const PRDescriptor& other =
        side == 0 ? *cw.descriptor.right : *cw.descriptor.left;
    for (unsigned j = 0; j <= trims; ++j) {
      auto f_prod = side == 0 ? SetExpr::cross_product(minus_first(f_component, j), f_other)
                              : SetExpr::cross_product(f_other, minus_first(f_component, j));
      Window prod_img;
      try {
        prod_img = apply_pr(cw.descriptor, *f_prod, cap);
      } catch (const Error&) {
        break;
      }
      Window projected = phi.image(prod_img, cap + 1);
      Window comp_img = apply_pr(comp, *minus_first(f_component, j), cap);
      Window other_img = apply_pr(other, *f_other, cap);
      if (other_img.empty()) return false;
      const std::uint64_t partner = other_img.min();
      // largest coordinate packed below the cap together with `partner`
      std::uint64_t reach = 0;
      while ((side == 0 ? pack_grid2(reach + 1, partner) : pack_grid2(partner, reach + 1)) <=
             cap)
        ++reach;
      if (!comp_img.restricted(reach + 1).is_subset_of(projected)) return false;
    }
    return true;
  }
  fail(Errc::InvalidArgument, "not a compound descriptor");
}

}  // namespace prcomb
