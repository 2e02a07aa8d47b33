#include "prcomb/ideal.hpp"

#include <algorithm>

#include "prcomb/errors.hpp"
#include "prcomb/witness_search.hpp"

namespace prcomb {

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::In: return "IN";
    case VerdictStatus::NotIn: return "NOT_IN";
    case VerdictStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

Ground IdealId::ground() const {
  switch (tag) {
    case IdealTag::Hindman:
    case IdealTag::Diff:
    case IdealTag::Vdw:
    case IdealTag::Summable:
    case IdealTag::Fin:
      return Ground::omega();
    case IdealTag::Ramsey:
      return Ground::pairs();
    case IdealTag::Fin2:
      return Ground::grid2();
    case IdealTag::FinOplusFin2:
      return Ground::sum(Ground::omega(), Ground::grid2());
    case IdealTag::BI:
      return Ground::grid3();
    case IdealTag::Restrict:
      return left->ground();
    case IdealTag::Oplus:
      return Ground::sum(left->ground(), right->ground());
  }
  return Ground::omega();
}

std::string IdealId::name() const {
  switch (tag) {
    case IdealTag::Hindman: return "H";
    case IdealTag::Ramsey: return "R";
    case IdealTag::Diff: return "D";
    case IdealTag::Vdw: return "W";
    case IdealTag::Summable: return "I1n";
    case IdealTag::Fin: return "Fin";
    case IdealTag::Fin2: return "Fin2";
    case IdealTag::FinOplusFin2: return "Fin+Fin2";
    case IdealTag::BI: return "BI";
    case IdealTag::Restrict: return left->name() + "|B";
    case IdealTag::Oplus: return left->name() + "(+)" + right->name();
  }
  return "?";
}

namespace {

// ---- closed-form structure classes -----------------------------------------

// No solution of x + y = z with x != y (enough to keep finite-sums images out).
std::optional<Certificate> distinct_schur_free(const SetExpr& e) {
  switch (e.kind) {
    case ExprKind::ScaledOdd: {
      Certificate c;
      c.kind = "two_adic";
      c.param = e.a;
      c.note = "members share 2-adic valuation " + std::to_string(e.a) +
               "; any x+y has strictly larger valuation";
      return c;
    }
    case ExprKind::Superincreasing:
      if (e.factor >= 2) {
        Certificate c;
        c.kind = "sum_free";
        c.note = "factor >= 2 superincreasing growth: x + y falls strictly between "
                 "consecutive elements";
        return c;
      }
      return std::nullopt;
    case ExprKind::Geometric: {
      Certificate c;
      c.kind = "sum_free";
      c.note = "distinct powers: x + y is never another term of the progression";
      return c;
    }
    case ExprKind::Intersection: {
      auto l = distinct_schur_free(*e.lhs);
      if (l) return l;
      return distinct_schur_free(*e.rhs);
    }
    case ExprKind::Difference:
      return distinct_schur_free(*e.lhs);
    default:
      return std::nullopt;
  }
}

// No solution of x + y = z at all (x = y allowed); needed for Delta images,
// whose consecutive-gap triples may have equal parts.
std::optional<Certificate> schur_free(const SetExpr& e) {
  switch (e.kind) {
    case ExprKind::ScaledOdd: {
      Certificate c;
      c.kind = "two_adic";
      c.param = e.a;
      c.note = "members share 2-adic valuation " + std::to_string(e.a) +
               "; any x+y (even x=y) has strictly larger valuation";
      return c;
    }
    case ExprKind::Superincreasing:
      if (e.factor >= 2) {
        Certificate c;
        c.kind = "sum_free";
        c.note = "factor >= 2 superincreasing growth: sums (including doubles) fall "
                 "between consecutive elements";
        return c;
      }
      return std::nullopt;
    case ExprKind::Geometric:
      if (e.a >= 3) {
        Certificate c;
        c.kind = "sum_free";
        c.note = "base >= 3: even 2x lies strictly between consecutive terms";
        return c;
      }
      return std::nullopt;
    case ExprKind::Intersection: {
      auto l = schur_free(*e.lhs);
      if (l) return l;
      return schur_free(*e.rhs);
    }
    case ExprKind::Difference:
      return schur_free(*e.lhs);
    default:
      return std::nullopt;
  }
}

// No three-term arithmetic progression.
std::optional<Certificate> ap_free(const SetExpr& e) {
  switch (e.kind) {
    case ExprKind::Superincreasing: {
      Certificate c;
      c.kind = "ap_free";
      c.note = "superincreasing gaps: the right gap of any triple exceeds the left";
      return c;
    }
    case ExprKind::Geometric: {
      Certificate c;
      c.kind = "ap_free";
      c.note = "geometric terms admit no three-term progression";
      return c;
    }
    case ExprKind::Intersection: {
      auto l = ap_free(*e.lhs);
      if (l) return l;
      return ap_free(*e.rhs);
    }
    case ExprKind::Difference:
      return ap_free(*e.lhs);
    default:
      return std::nullopt;
  }
}

// Pairwise vertex-disjoint pair sets (clique number <= 2).
std::optional<Certificate> matching_class(const SetExpr& e) {
  switch (e.kind) {
    case ExprKind::MatchingOf: {
      Certificate c;
      c.kind = "matching";
      c.note = "pairwise disjoint edges: no triangle touches a matching twice";
      return c;
    }
    case ExprKind::Intersection: {
      auto l = matching_class(*e.lhs);
      if (l) return l;
      return matching_class(*e.rhs);
    }
    case ExprKind::Difference:
      return matching_class(*e.lhs);
    default:
      return std::nullopt;
  }
}

Verdict finite_verdict(const Budget& budget) {
  Verdict v;
  v.status = VerdictStatus::In;
  v.used = budget;
  v.cert.kind = "finite";
  v.cert.note = "every ideal contains the finite sets";
  return v;
}

Verdict unknown_verdict(const Budget& budget, std::string note, bool complete = true) {
  Verdict v;
  v.status = VerdictStatus::Unknown;
  v.used = budget;
  v.cert.kind = "none";
  v.cert.note = std::move(note);
  v.complete = complete;
  return v;
}

Verdict hindman_membership(const SetExpr& a, const Budget& budget) {
  if (auto cert = distinct_schur_free(a)) {
    Verdict v{VerdictStatus::In, budget, *cert, true};
    return v;
  }
  Window w = eval_window(a, budget.cap);
  // closed-form witness: the expression is itself a finite-sums image
  if (a.kind == ExprKind::FSOf && size_class(*a.lhs) == SizeClass::Infinite) {
    auto d = enumerate_elements(*a.lhs, budget.gen, budget.cap);
    std::uint64_t total = 0;
    for (auto x : d) total += x;
    if (total < budget.cap && std::none_of(d.begin(), d.end(), [](auto x) { return x == 0; })) {
      Verdict v;
      v.status = VerdictStatus::NotIn;
      v.used = budget;
      v.cert.kind = "fs_witness";
      v.cert.elements = d;
      v.cert.note = "prefix of the set whose finite sums the expression denotes";
      return v;
    }
  }
  auto res = ip_witness_search(w, budget.gen, budget.cap, {budget.nodes});
  if (res.witness) {
    Verdict v;
    v.status = VerdictStatus::NotIn;
    v.used = budget;
    v.cert.kind = "fs_witness";
    v.cert.elements = *res.witness;
    v.complete = res.complete;
    return v;
  }
  return unknown_verdict(budget, "no finite-sums witness at this budget", res.complete);
}

Verdict diff_membership(const SetExpr& a, const Budget& budget) {
  if (auto cert = schur_free(a)) {
    Verdict v{VerdictStatus::In, budget, *cert, true};
    return v;
  }
  Window w = eval_window(a, budget.cap);
  if (a.kind == ExprKind::DeltaOf && size_class(*a.lhs) == SizeClass::Infinite) {
    auto e = enumerate_elements(*a.lhs, budget.gen, budget.cap);
    if (e.back() < budget.cap) {
      Verdict v;
      v.status = VerdictStatus::NotIn;
      v.used = budget;
      v.cert.kind = "delta_witness";
      v.cert.elements = e;
      v.cert.note = "prefix of the set whose differences the expression denotes";
      return v;
    }
  }
  auto res = diff_witness_search(w, budget.gen, budget.cap, {budget.nodes});
  if (res.witness) {
    Verdict v;
    v.status = VerdictStatus::NotIn;
    v.used = budget;
    v.cert.kind = "delta_witness";
    v.cert.elements = *res.witness;
    v.complete = res.complete;
    return v;
  }
  return unknown_verdict(budget, "no difference witness at this budget", res.complete);
}

Verdict ramsey_membership(const SetExpr& a, const Budget& budget) {
  if (auto cert = matching_class(a)) {
    Verdict v{VerdictStatus::In, budget, *cert, true};
    return v;
  }
  Window w = eval_window(a, budget.cap);
  if (a.kind == ExprKind::PairsOf && size_class(*a.lhs) == SizeClass::Infinite) {
    auto h = enumerate_elements(*a.lhs, budget.gen, budget.cap);
    if (pair_code_bound(h.back() + 1) <= budget.cap) {
      Verdict v;
      v.status = VerdictStatus::NotIn;
      v.used = budget;
      v.cert.kind = "clique";
      v.cert.elements = h;
      v.cert.note = "prefix of the vertex set whose pairs the expression denotes";
      return v;
    }
  }
  auto res = clique_search(w, budget.gen, {budget.nodes});
  if (res.witness) {
    Verdict v;
    v.status = VerdictStatus::NotIn;
    v.used = budget;
    v.cert.kind = "clique";
    v.cert.elements = *res.witness;
    v.complete = res.complete;
    return v;
  }
  return unknown_verdict(budget, "no clique of the budgeted size", res.complete);
}

Verdict vdw_membership(const SetExpr& a, const Budget& budget) {
  if (a.kind == ExprKind::ArithProg) {
    Verdict v;
    v.status = VerdictStatus::NotIn;
    v.used = budget;
    v.cert.kind = "ap";
    v.cert.ap_start = a.a;
    v.cert.ap_step = a.b;
    v.cert.ap_len = budget.ap_len;
    v.cert.note = "the progression itself realizes every finite length";
    return v;
  }
  if (a.kind == ExprKind::ScaledOdd) {
    Verdict v;
    v.status = VerdictStatus::NotIn;
    v.used = budget;
    v.cert.kind = "ap";
    v.cert.ap_start = std::uint64_t{1} << a.a;
    v.cert.ap_step = std::uint64_t{1} << (a.a + 1);
    v.cert.ap_len = budget.ap_len;
    v.cert.note = "a 2-adic class is an arithmetic progression";
    return v;
  }
  if (auto cert = ap_free(a)) {
    Verdict v{VerdictStatus::In, budget, *cert, true};
    return v;
  }
  Window w = eval_window(a, budget.cap);
  if (auto ap = find_ap(w, budget.ap_len)) {
    Verdict v;
    v.status = VerdictStatus::NotIn;
    v.used = budget;
    v.cert.kind = "ap";
    v.cert.ap_start = ap->start;
    v.cert.ap_step = ap->step;
    v.cert.ap_len = ap->length;
    return v;
  }
  return unknown_verdict(budget, "no progression of the budgeted length in the window");
}

Verdict summable_membership(const SetExpr& a, const Budget& budget) {
  GrowthInfo g = growth_class(a);
  Verdict v;
  v.used = budget;
  v.cert.kind = "growth";
  v.cert.partial_sum = partial_reciprocal_sum(a, budget.cap);
  v.cert.note = g.reason;
  switch (g.cls) {
    case GrowthClass::FiniteSet:
    case GrowthClass::ReciprocalSummable:
      v.status = VerdictStatus::In;
      return v;
    case GrowthClass::Divergent:
      v.status = VerdictStatus::NotIn;
      return v;
    case GrowthClass::Unknown:
      v.status = VerdictStatus::Unknown;
      v.cert.note = "outside the recognized growth classes; partial sum attached";
      return v;
  }
  return v;
}

Verdict fin_membership(const SetExpr& a, const Budget& budget) {
  switch (size_class(a)) {
    case SizeClass::Finite:
      return finite_verdict(budget);
    case SizeClass::Infinite: {
      Verdict v;
      v.status = VerdictStatus::NotIn;
      v.used = budget;
      v.cert.kind = "infinite_prefix";
      v.cert.elements = enumerate_elements(a, budget.gen, budget.cap);
      v.cert.note = "infinite by rule class";
      return v;
    }
    case SizeClass::Unknown:
      return unknown_verdict(budget, "cardinality undecided in the expression class");
  }
  return unknown_verdict(budget, "");
}

Verdict combine_oplus(const Verdict& l, const Verdict& r, const Budget& budget) {
  Verdict v;
  v.used = budget;
  v.cert.kind = "slices";
  if (l.status == VerdictStatus::NotIn || r.status == VerdictStatus::NotIn) {
    v.status = VerdictStatus::NotIn;
    const Verdict& bad = l.status == VerdictStatus::NotIn ? l : r;
    v.cert = bad.cert;
    v.cert.note = std::string(l.status == VerdictStatus::NotIn ? "left" : "right") +
                  " component positive: " + bad.cert.note;
    return v;
  }
  if (l.status == VerdictStatus::In && r.status == VerdictStatus::In) {
    v.status = VerdictStatus::In;
    v.cert.note = "both components in their ideals";
    return v;
  }
  v.status = VerdictStatus::Unknown;
  v.cert.note = "a component verdict is unknown";
  return v;
}

}  // namespace

Verdict fin2_membership(const SetExpr& grid, const Budget& budget) {
  Verdict v;
  v.used = budget;
  v.cert.kind = "slices";
  switch (grid.kind) {
    case ExprKind::Explicit:
      return finite_verdict(budget);
    case ExprKind::GridDiagonal:
      v.status = VerdictStatus::In;
      v.cert.note = "every column is a singleton";
      return v;
    case ExprKind::GridProduct: {
      auto cols = size_class(*grid.lhs);   // column index set
      auto fiber = size_class(*grid.rhs);  // each nonempty column
      if (fiber == SizeClass::Finite) {
        v.status = VerdictStatus::In;
        v.cert.note = "every column finite";
        return v;
      }
      if (fiber == SizeClass::Infinite) {
        if (cols == SizeClass::Finite) {
          v.status = VerdictStatus::In;
          v.cert.note = "finitely many infinite columns";
          return v;
        }
        if (cols == SizeClass::Infinite) {
          v.status = VerdictStatus::NotIn;
          v.cert.note = "infinitely many infinite columns";
          v.cert.elements = enumerate_elements(*grid.lhs, budget.gen, budget.cap);
          return v;
        }
      }
      return unknown_verdict(budget, "undecidable slice: column classes unresolved");
    }
    case ExprKind::Union: {
      Verdict l = fin2_membership(*grid.lhs, budget);
      Verdict r = fin2_membership(*grid.rhs, budget);
      if (l.status == VerdictStatus::NotIn) return l;
      if (r.status == VerdictStatus::NotIn) return r;
      if (l.status == VerdictStatus::In && r.status == VerdictStatus::In) {
        v.status = VerdictStatus::In;
        v.cert.note = "union of two members";
        return v;
      }
      return unknown_verdict(budget, "undecidable slice in a union");
    }
    case ExprKind::Intersection: {
      Verdict l = fin2_membership(*grid.lhs, budget);
      if (l.status == VerdictStatus::In) return l;
      Verdict r = fin2_membership(*grid.rhs, budget);
      if (r.status == VerdictStatus::In) return r;
      return unknown_verdict(budget, "undecidable slice in an intersection");
    }
    case ExprKind::Difference: {
      Verdict l = fin2_membership(*grid.lhs, budget);
      if (l.status == VerdictStatus::In) return l;
      return unknown_verdict(budget, "undecidable slice in a difference");
    }
    default:
      return unknown_verdict(budget, "undecidable slice: expression outside the closed class");
  }
}

std::optional<Certificate> closed_form_in(const IdealId& ideal, const SetExpr& a) {
  if (size_class(a) == SizeClass::Finite) {
    Certificate c;
    c.kind = "finite";
    c.note = "every ideal contains the finite sets";
    return c;
  }
  switch (ideal.tag) {
    case IdealTag::Hindman:
      return distinct_schur_free(a);
    case IdealTag::Diff:
      return schur_free(a);
    case IdealTag::Vdw:
      return ap_free(a);
    case IdealTag::Ramsey:
      return matching_class(a);
    case IdealTag::Summable: {
      GrowthInfo g = growth_class(a);
      if (g.cls == GrowthClass::ReciprocalSummable || g.cls == GrowthClass::FiniteSet) {
        Certificate c;
        c.kind = "growth";
        c.note = g.reason;
        return c;
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

Verdict membership(const IdealId& ideal, const SetExpr& a, const Budget& budget) {
  if (!(a.ground() == ideal.ground()))
    fail(Errc::GroundSetMismatch,
         "set lives on " + a.ground().name() + ", ideal on " + ideal.ground().name());
  if (size_class(a) == SizeClass::Finite && ideal.tag != IdealTag::Restrict)
    return finite_verdict(budget);
  switch (ideal.tag) {
    case IdealTag::Hindman:
      return hindman_membership(a, budget);
    case IdealTag::Diff:
      return diff_membership(a, budget);
    case IdealTag::Ramsey:
      return ramsey_membership(a, budget);
    case IdealTag::Vdw:
      return vdw_membership(a, budget);
    case IdealTag::Summable:
      return summable_membership(a, budget);
    case IdealTag::Fin:
      return fin_membership(a, budget);
    case IdealTag::Fin2:
      return fin2_membership(a, budget);
    case IdealTag::FinOplusFin2: {
      if (a.kind != ExprKind::DisjointSum)
        return unknown_verdict(budget, "sum ideal needs a disjoint-sum expression");
      Verdict l = fin_membership(*a.lhs, budget);
      Verdict r = fin2_membership(*a.rhs, budget);
      return combine_oplus(l, r, budget);
    }
    case IdealTag::BI: {
      if (a.kind != ExprKind::Grid3Slices)
        return unknown_verdict(budget, "BI needs a slice-list expression");
      bool all_in = true;
      for (const auto& [i, sl] : a.slices) {
        Verdict s = fin2_membership(*sl, budget);
        if (s.status == VerdictStatus::NotIn) {
          Verdict v;
          v.status = VerdictStatus::NotIn;
          v.used = budget;
          v.cert = s.cert;
          v.cert.param = i;
          v.cert.note = "slice " + std::to_string(i) + " escapes Fin^2: " + s.cert.note;
          return v;
        }
        if (s.status != VerdictStatus::In) all_in = false;
      }
      if (all_in) {
        Verdict v;
        v.status = VerdictStatus::In;
        v.used = budget;
        v.cert.kind = "slices";
        v.cert.note = "every listed slice lies in Fin^2 and the tail is empty";
        return v;
      }
      return unknown_verdict(budget, "a slice verdict is unknown");
    }
    case IdealTag::Restrict: {
      auto restricted = SetExpr::set_intersection(
          std::make_shared<SetExpr>(a), ideal.restrict_to);
      return membership(*ideal.left, *restricted, budget);
    }
    case IdealTag::Oplus: {
      if (a.kind != ExprKind::DisjointSum)
        return unknown_verdict(budget, "sum ideal needs a disjoint-sum expression");
      Verdict l = membership(*ideal.left, *a.lhs, budget);
      Verdict r = membership(*ideal.right, *a.rhs, budget);
      return combine_oplus(l, r, budget);
    }
  }
  return unknown_verdict(budget, "");
}

bool recheck_certificate(const IdealId& ideal, const SetExpr& a, const Verdict& v) {
  if (v.status != VerdictStatus::NotIn) return true;  // IN/UNKNOWN carry closed forms
  const Budget& b = v.used;
  switch (ideal.tag) {
    case IdealTag::Hindman: {
      Window w = eval_window(a, b.cap);
      Window d = Window::from_elements(Ground::omega(), b.cap, v.cert.elements);
      Window image = fs(d, b.cap - 1);
      return image.is_subset_of(w);
    }
    case IdealTag::Diff: {
      Window w = eval_window(a, b.cap);
      Window e = Window::from_elements(Ground::omega(), b.cap, v.cert.elements);
      return delta(e).is_subset_of(w);
    }
    case IdealTag::Ramsey: {
      Window w = eval_window(a, b.cap);
      Window h = Window::from_elements(Ground::omega(), b.cap, v.cert.elements);
      return pairs(h).is_subset_of(w);
    }
    case IdealTag::Vdw: {
      if (a.kind == ExprKind::ArithProg || a.kind == ExprKind::ScaledOdd) {
        // re-check a long finite stretch of the closed-form progression
        const std::uint64_t len = v.cert.ap_len ? v.cert.ap_len : b.ap_len;
        Window w = eval_window(a, v.cert.ap_start + v.cert.ap_step * len + 1);
        for (std::uint64_t i = 0; i < len; ++i)
          if (!w.contains(v.cert.ap_start + i * v.cert.ap_step)) return false;
        return true;
      }
      Window w = eval_window(a, b.cap);
      for (std::uint64_t i = 0; i < v.cert.ap_len; ++i) {
        const std::uint64_t x = v.cert.ap_start + i * v.cert.ap_step;
        if (x >= w.bound || !w.contains(x)) return false;
      }
      return true;
    }
    case IdealTag::Summable:
      return true;  // growth classes re-derive from the expression
    default:
      return true;
  }
}

TallWitness tall_witness(const IdealId& ideal, const SetExpr& a, std::uint64_t count,
                         const Budget& budget) {
  TallWitness tw;
  switch (ideal.tag) {
    case IdealTag::Hindman:
    case IdealTag::Diff:
    case IdealTag::Vdw:
    case IdealTag::Summable: {
      auto sel = superincreasing_subset(a, Rational(2), count);
      tw.elements = sel.elements;
      tw.b = SetExpr::explicit_set(sel.elements);
      tw.cert.kind = "sum_free";
      tw.cert.elements = sel.elements;
      // exhaustive scans over the selection
      for (std::size_t i = 0; i < tw.elements.size(); ++i)
        for (std::size_t j = i; j < tw.elements.size(); ++j) {
          const std::uint64_t s = tw.elements[i] + tw.elements[j];
          if (std::binary_search(tw.elements.begin(), tw.elements.end(), s))
            fail(Errc::VerificationFailed, "greedy selection admitted a Schur triple");
        }
      for (std::size_t i = 0; i < tw.elements.size(); ++i)
        for (std::size_t j = i + 1; j < tw.elements.size(); ++j)
          for (std::size_t k = j + 1; k < tw.elements.size(); ++k)
            if (tw.elements[k] - tw.elements[j] == tw.elements[j] - tw.elements[i])
              fail(Errc::VerificationFailed, "greedy selection admitted a progression");
      switch (ideal.tag) {
        case IdealTag::Hindman:
        case IdealTag::Diff:
          tw.cert.note = "growth ratio > 2: sum-free, so no Schur triple and no "
                         "finite-sums or difference image fits inside";
          break;
        case IdealTag::Vdw:
          tw.cert.kind = "ap_free";
          tw.cert.note = "gaps dominate prefixes: no three-term progression";
          break;
        case IdealTag::Summable:
          tw.cert.kind = "growth";
          tw.cert.partial_sum = partial_reciprocal_sum(*tw.b, budget.cap);
          tw.cert.note = "geometric decay of reciprocals";
          break;
        default:
          break;
      }
      return tw;
    }
    case IdealTag::Ramsey: {
      // greedy vertex-disjoint pairs scanned in code order
      Window w = eval_window(a, std::max<std::uint64_t>(budget.cap, pair_code_bound(4 * count)));
      std::vector<std::uint64_t> picked;
      std::vector<std::uint64_t> used_vertices;
      w.bits.for_each_set([&](std::uint64_t code) {
        if (picked.size() >= count) return;
        const auto [x, y] = unpack_pair(code);
        if (std::find(used_vertices.begin(), used_vertices.end(), x) != used_vertices.end())
          return;
        if (std::find(used_vertices.begin(), used_vertices.end(), y) != used_vertices.end())
          return;
        picked.push_back(code);
        used_vertices.push_back(x);
        used_vertices.push_back(y);
      });
      if (picked.size() < count) fail(Errc::Exhausted, "not enough disjoint pairs in the window");
      tw.elements = picked;
      tw.b = SetExpr::explicit_on(Ground::pairs(), picked);
      tw.cert.kind = "matching";
      tw.cert.elements = picked;
      Window bw = Window::from_elements(Ground::pairs(), picked.back() + 1, picked);
      if (clique_search(bw, 3).witness)
        fail(Errc::VerificationFailed, "matching extraction produced a triangle");
      tw.cert.note = "greedy matching: clique number 2";
      return tw;
    }
    default:
      fail(Errc::RuleUnsupported, "tallness witnesses exist for H, R, D, W, I1n");
  }
}

}  // namespace prcomb
