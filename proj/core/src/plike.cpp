#include "prcomb/plike.hpp"

#include <algorithm>

#include "prcomb/errors.hpp"
#include "prcomb/witness_search.hpp"

namespace prcomb {

IdealId ideal_of(const PRDescriptor& rho) {
  if (rho.compound != PrCompound::None)
    fail(Errc::RuleUnsupported, "compound descriptors have no catalog ideal");
  switch (rho.kind) {
    case PrKind::FS: return IdealId::hindman();
    case PrKind::Delta: return IdealId::diff();
    case PrKind::Pairs: return IdealId::ramsey();
    case PrKind::Ideal: return *rho.ideal;
  }
  return IdealId::fin();
}

ChainCheck check_chain(const PRDescriptor& rho, const ChainDesc& chain, unsigned depth,
                       const Budget& budget) {
  ChainCheck chk;
  if (chain.levels.size() < depth + 1) {
    chk.ok = false;
    chk.detail = "chain shorter than the requested depth";
    return chk;
  }
  const IdealId ideal = ideal_of(rho);
  for (unsigned n = 0; n + 1 <= depth; ++n) {
    Window lo = eval_window(*chain.levels[n + 1], budget.cap);
    Window hi = eval_window(*chain.levels[n], budget.cap);
    if (!lo.is_subset_of(hi)) {
      chk.ok = false;
      chk.first_bad_level = n;
      chk.detail = "level " + std::to_string(n + 1) + " escapes level " + std::to_string(n);
      return chk;
    }
    auto diff = SetExpr::set_difference(chain.levels[n], chain.levels[n + 1]);
    Verdict v = membership(ideal, *diff, budget);
    if (v.status == VerdictStatus::NotIn) {
      chk.ok = false;
      chk.first_bad_level = n;
      chk.detail = "difference at level " + std::to_string(n) + " is positive (" +
                   v.cert.kind + ")";
      return chk;
    }
  }
  return chk;
}

Diagonalization pminus_diagonalize(const PRDescriptor& rho, const ChainDesc& chain,
                                   unsigned depth, std::uint64_t cap, const Budget& budget) {
  Diagonalization d;
  if (rho.compound != PrCompound::None)
    fail(Errc::RuleUnsupported, "diagonalization works on simple descriptors");
  ChainCheck chk = check_chain(rho, chain, depth, budget);
  if (!chk.ok) fail(Errc::InvalidArgument, "chain checks failed: " + chk.detail);

  std::vector<Window> levels;
  for (unsigned n = 0; n <= depth; ++n)
    levels.push_back(eval_window(*chain.levels[n], cap));

  if (rho.kind == PrKind::Ideal) {
    const IdealTag tag = rho.ideal->tag;
    if (tag == IdealTag::Hindman || tag == IdealTag::Ramsey || tag == IdealTag::Diff) {
      // these catalog ideals admit no diagonalization; play the honest game
      // with the full positive window of A_0 and a bounded trim allowance
      Window f = levels[0];
      d.generator = f.elements();
      d.trims.assign(1, {});
      for (unsigned n = 1; n <= depth; ++n) {
        std::vector<std::uint64_t> viol;
        f.bits.for_each_set([&](std::uint64_t x) {
          if (x >= levels[n].bound || !levels[n].contains(x)) viol.push_back(x);
        });
        if (viol.size() > budget.trim) {
          d.ok = false;
          d.failing_level = n;
          d.obstruction.assign(viol.begin(),
                               viol.begin() + std::min<std::size_t>(viol.size(), 8));
          d.detail = "irremovable violation set of size " + std::to_string(viol.size()) +
                     " at level " + std::to_string(n);
          return d;
        }
        d.trims.push_back(viol);
      }
      d.ok = true;
    } else {
      // pseudo-intersection picking: per-level structure blocks
      std::vector<std::uint64_t> picked;
      std::vector<std::size_t> level_start(depth + 2, 0);
      for (unsigned n = 0; n <= depth; ++n) {
        level_start[n] = picked.size();
        Window avail = levels[n].minus_elements(picked);
        switch (tag) {
          case IdealTag::Vdw: {
            // an arithmetic progression of growing length
            auto ap = find_ap(avail, n + 2);
            if (!ap) {
              d.ok = false;
              d.failing_level = n;
              d.detail = "no progression of length " + std::to_string(n + 2) +
                         " left at level " + std::to_string(n);
              return d;
            }
            for (std::uint64_t i = 0; i < ap->length; ++i)
              picked.push_back(ap->start + i * ap->step);
            break;
          }
          case IdealTag::Summable: {
            // a block with reciprocal mass >= 1
            Rational mass = 0;
            std::vector<std::uint64_t> block;
            avail.bits.for_each_set([&](std::uint64_t x) {
              if (mass >= 1) return;
              mass += Rational(1, static_cast<unsigned long>(x + 1));
              block.push_back(x);
            });
            if (mass < 1) {
              d.ok = false;
              d.failing_level = n;
              d.detail = "window reciprocal mass exhausted at level " + std::to_string(n);
              return d;
            }
            picked.insert(picked.end(), block.begin(), block.end());
            break;
          }
          default: {
            const std::uint64_t x = avail.bits.next_set(0);
            if (x == Bitset::npos) {
              d.ok = false;
              d.failing_level = n;
              d.detail = "level window exhausted";
              return d;
            }
            picked.push_back(x);
            break;
          }
        }
      }
      level_start[depth + 1] = picked.size();
      std::sort(picked.begin(), picked.end());
      d.generator = picked;
      // K_n = everything picked for levels below n
      for (unsigned n = 0; n <= depth; ++n) {
        std::vector<std::uint64_t> k;
        Window gen = Window::from_elements(Ground::omega(), cap, d.generator);
        gen.bits.for_each_set([&](std::uint64_t x) {
          if (x >= levels[n].bound || !levels[n].contains(x)) k.push_back(x);
        });
        if (k.size() > budget.trim) {
          d.ok = false;
          d.failing_level = n;
          d.obstruction = k;
          d.detail = "picked blocks spill over the trim budget";
          return d;
        }
        d.trims.push_back(k);
      }
      d.ok = true;
    }
  } else {
    // FS / Delta / Pairs: a sparse generator plus greedy violation trimming
    ExprPtr carrier;
    if (chain.carrier) {
      carrier = *chain.carrier;
    } else if (chain.levels[0]->kind == ExprKind::FSOf && rho.kind == PrKind::FS) {
      carrier = chain.levels[0]->lhs;
    } else if (chain.levels[0]->kind == ExprKind::DeltaOf && rho.kind == PrKind::Delta) {
      carrier = chain.levels[0]->lhs;
    } else if (chain.levels[0]->kind == ExprKind::PairsOf && rho.kind == PrKind::Pairs) {
      carrier = chain.levels[0]->lhs;
    } else if (rho.kind == PrKind::Pairs) {
      carrier = SetExpr::omega();
    } else {
      // a sparse seed inside the top level
      auto seed = ip_witness_search(levels[0], budget.gen, cap, {budget.nodes});
      if (rho.kind == PrKind::Delta)
        seed = diff_witness_search(levels[0], budget.gen, cap, {budget.nodes});
      if (!seed.witness) {
        d.ok = false;
        d.failing_level = 0;
        d.detail = "no generator seed inside the top level";
        return d;
      }
      carrier = SetExpr::explicit_set(*seed.witness);
    }
    Window f = eval_window(*carrier, cap);
    if (rho.kind == PrKind::FS && !sparse_check(f, cap).pass) {
      auto sel = superincreasing_subset(*carrier, Rational(1), 24, cap);
      f = eval_window(*SetExpr::explicit_set(sel.elements), cap);
    }
    if (rho.kind == PrKind::Delta && !d_sparse_check(f, cap).pass) {
      auto sel = superincreasing_subset(*carrier, Rational(2), 20, cap);
      f = eval_window(*SetExpr::explicit_set(sel.elements), cap);
    }
    d.generator = f.elements();
    for (unsigned n = 0; n <= depth; ++n) {
      GreedyTrim t = greedy_trim(rho, f, levels[n], cap, budget.trim);
      if (!t.ok) {
        d.ok = false;
        d.failing_level = n;
        d.obstruction = t.obstruction;
        d.detail = "trim budget exhausted at level " + std::to_string(n);
        return d;
      }
      d.trims.push_back(t.k);
    }
    d.ok = true;
  }

  // independent re-check of the defining inclusions
  if (d.ok) {
    d.verified = true;
    Window f = Window::from_elements(
        rho.kind == PrKind::Pairs ? Ground::omega() : rho.omega(), cap, d.generator);
    for (unsigned n = 0; n <= depth && n < d.trims.size(); ++n) {
      Window gen = f.minus_elements(d.trims[n]);
      if ((rho.kind == PrKind::Delta || rho.kind == PrKind::Pairs) && gen.count() < 2) continue;
      Window img = apply_pr_window(rho, gen, cap);
      bool inside = true;
      img.bits.for_each_set([&](std::uint64_t x) {
        if (x >= levels[n].bound || !levels[n].contains(x)) inside = false;
      });
      if (!inside) d.verified = false;
    }
  }
  return d;
}

WeakPPlusR weak_pplus_r(const ExprPtr& f, const std::vector<ExprPtr>& chain, unsigned depth,
                        std::uint64_t cap) {
  WeakPPlusR out;
  Window wf = eval_window(*f, cap);
  std::vector<Window> wn;
  for (unsigned n = 0; n <= depth && n < chain.size(); ++n) {
    wn.push_back(eval_window(*chain[n], cap));
    if (!wn.back().is_subset_of(wf))
      fail(Errc::InvalidArgument, "chain level escapes the base set on the window");
  }
  for (auto& w : wn) {
    std::uint64_t x = w.bits.next_set(0);
    while (x != Bitset::npos &&
           std::find(out.picks.begin(), out.picks.end(), x) != out.picks.end())
      x = w.bits.next_set(x + 1);
    if (x == Bitset::npos) fail(Errc::Exhausted, "chain level ran out of fresh picks");
    out.picks.push_back(x);
  }
  out.verified = true;
  for (std::size_t n = 0; n < wn.size(); ++n)
    for (std::size_t i = n; i < out.picks.size(); ++i)
      if (!wn[n].contains(out.picks[i])) out.verified = false;
  return out;
}

WeakPPlusDelta weak_pplus_delta(const ExprPtr& e, const std::vector<ExprPtr>& chain,
                                unsigned depth, std::uint64_t cap) {
  WeakPPlusDelta out;
  const auto xs = eval_window(*e, cap).elements();
  if (xs.size() < 3) fail(Errc::TooFewElements, "base set too small on the window");
  std::vector<std::uint64_t> gaps(xs.size() - 1);
  std::uint64_t run = 0;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    gaps[i] = xs[i + 1] - xs[i];
    if (i > 0 && gaps[i] <= run)
      fail(Errc::NotSuperincreasing, "gap " + std::to_string(i) + " fails the growth rule");
    run += gaps[i];
  }
  // cumulative gap sums: csum[i] = gaps[0] + ... + gaps[i-1]
  std::vector<std::uint64_t> csum(gaps.size() + 1, 0);
  for (std::size_t i = 0; i < gaps.size(); ++i) csum[i + 1] = csum[i] + gaps[i];

  Window we = eval_window(*e, cap);
  Window de = delta(we);

  // decode each level into its interval partition of the gap indices
  std::vector<std::vector<std::uint64_t>> boundaries;  // left endpoints per level
  unsigned levels_usable = 0;
  Window prev_delta = de;
  for (unsigned k = 0; k <= depth && k < chain.size(); ++k) {
    Window wk = eval_window(*chain[k], cap);
    if (wk.count() < 2) break;
    Window dk = delta(wk);
    if (!dk.is_subset_of(prev_delta))
      fail(Errc::DecodingFailed, "chain level " + std::to_string(k) +
                                     " violates the declared difference inclusion");
    auto ys = wk.elements();
    std::vector<std::uint64_t> lefts;
    std::size_t pos = 0;
    lefts.push_back(0);
    bool decoded = true;
    for (std::size_t n = 0; n + 1 < ys.size(); ++n) {
      const std::uint64_t target = ys[n + 1] - ys[n];
      std::uint64_t acc = 0;
      std::size_t end = pos;
      while (end < gaps.size() && acc < target) acc += gaps[end++];
      if (acc != target) {
        if (end >= gaps.size()) {
          decoded = (n > 0);  // window ran out; keep what we have
          break;
        }
        fail(Errc::DecodingFailed,
             "difference at level " + std::to_string(k) + " is not an interval sum");
      }
      pos = end;
      lefts.push_back(pos);
    }
    if (!decoded || lefts.size() < 2) break;
    // level boundaries must refine: every left endpoint must be one of the
    // previous level's endpoints
    if (k > 0) {
      for (auto b : lefts)
        if (!std::binary_search(boundaries.back().begin(), boundaries.back().end(), b))
          fail(Errc::DecodingFailed, "interval structure does not nest at level " +
                                         std::to_string(k));
    }
    boundaries.push_back(lefts);
    prev_delta = dk;
    ++levels_usable;
  }
  if (levels_usable == 0) fail(Errc::DecodingFailed, "no level decodable in this window");
  out.depth_used = levels_usable - 1;

  // pick n_k: strictly increasing left endpoints, one from each level, then
  // keep walking the deepest level while the window lasts
  std::uint64_t last = 0;
  for (unsigned k = 0; k < levels_usable; ++k) {
    const auto& bs = boundaries[k];
    auto it = k == 0 ? bs.begin() : std::upper_bound(bs.begin(), bs.end(), last);
    if (it == bs.end()) {
      out.depth_used = k ? k - 1 : 0;
      break;
    }
    last = *it;
    out.pick_indices.push_back(last);
  }
  const auto& deep = boundaries[out.pick_indices.size() - 1];
  for (auto it = std::upper_bound(deep.begin(), deep.end(), last); it != deep.end(); ++it)
    out.pick_indices.push_back(*it);
  for (auto idx : out.pick_indices)
    if (idx < xs.size()) out.e_prime.push_back(xs[idx]);

  // verify the displayed inclusion at every usable level
  out.verified = true;
  for (unsigned k = 0; k < levels_usable && k < out.pick_indices.size(); ++k) {
    const std::uint64_t cut = out.e_prime[k];
    std::vector<std::uint64_t> tail;
    for (auto x : out.e_prime)
      if (x >= cut) tail.push_back(x);
    if (tail.size() < 2) continue;
    Window wt = Window::from_elements(Ground::omega(), cap, tail);
    Window dt = delta(wt);
    Window dk = delta(eval_window(*chain[k], cap));
    if (!dt.is_subset_of(dk)) out.verified = false;
  }
  return out;
}

NotPPlusFamily not_pplus_family(PrKind rho, unsigned parts, std::uint64_t cap) {
  if (parts < 2) fail(Errc::InvalidArgument, "need at least two parts");
  NotPPlusFamily fam;
  fam.rho = rho;
  fam.cap = cap;
  std::vector<std::uint64_t> carrier_elems;
  if (rho == PrKind::Pairs) {
    fam.carrier = SetExpr::omega();
    carrier_elems = eval_window(*fam.carrier, pair_coord_bound(cap + 1)).elements();
  } else {
    fam.carrier = SetExpr::superincreasing(1, Rational(2));
    carrier_elems = eval_window(*fam.carrier, cap).elements();
  }
  if (carrier_elems.size() < 2 * parts)
    fail(Errc::InvalidArgument, "window too small for the requested partition");
  fam.parts.resize(parts);
  for (std::size_t j = 0; j < carrier_elems.size(); ++j)
    fam.parts[j % parts].push_back(carrier_elems[j]);
  for (unsigned i = 0; i < parts; ++i) {
    Window p = Window::from_elements(Ground::omega(), cap + 1, fam.parts[i]);
    switch (rho) {
      case PrKind::FS:
        fam.images.push_back(fs(p, cap));
        break;
      case PrKind::Delta:
        fam.images.push_back(delta(p));
        break;
      case PrKind::Pairs:
        fam.images.push_back(pairs(p).restricted(cap + 1));
        break;
      default:
        fail(Errc::RuleUnsupported, "the probe covers FS, Delta and pairs");
    }
  }
  fam.disjoint_verified = true;
  for (unsigned i = 0; i < parts && fam.disjoint_verified; ++i)
    for (unsigned j = i + 1; j < parts; ++j) {
      Window meet = fam.images[i] & fam.images[j];
      if (!meet.empty()) fam.disjoint_verified = false;
    }
  // B_n = union of images from n on
  const std::uint64_t img_bound = fam.images.front().bound;
  for (unsigned n = 0; n < parts; ++n) {
    Window b(fam.images.front().ground, img_bound);
    for (unsigned i = n; i < parts; ++i)
      fam.images[i].bits.for_each_set([&](std::uint64_t x) { b.insert(x); });
    fam.b_levels.push_back(b);
  }
  return fam;
}

namespace {

std::uint64_t tau_of(PrKind rho, std::uint64_t a, std::uint64_t b) {
  switch (rho) {
    case PrKind::FS: return a + b;
    case PrKind::Delta: return a > b ? a - b : b - a;
    case PrKind::Pairs: return pack_pair(a, b);
    default: return 0;
  }
}

}  // namespace

WlpProbe not_pplus_probe(const NotPPlusFamily& family, const Window& g) {
  WlpProbe probe;
  // case 1: two generator points inside one part
  for (std::size_t i = 0; i < family.parts.size(); ++i) {
    std::vector<std::uint64_t> meet;
    for (auto x : family.parts[i])
      if (x < g.bound && g.contains(x)) meet.push_back(x);
    if (meet.size() >= 2) {
      probe.fired_case = 1;
      probe.part_index = i;
      probe.a = meet[0];
      probe.b = meet[1];
      probe.tau = tau_of(family.rho, meet[0], meet[1]);
      const Window& img = family.images[i];
      const bool in_own = probe.tau < img.bound && img.contains(probe.tau);
      const Window& later = family.b_levels[std::min<std::size_t>(i + 1, family.b_levels.size() - 1)];
      const bool in_later = probe.tau < later.bound && later.contains(probe.tau);
      probe.detail = std::string("combined image point lands in its own part's image (") +
                     (in_own ? "confirmed" : "UNEXPECTED") +
                     ") and misses every later image (" +
                     (!in_later ? "confirmed" : "UNEXPECTED") + ")";
      return probe;
    }
  }
  // case 2: one point from each of two different parts
  std::vector<std::pair<std::uint64_t, std::uint64_t>> singles;  // (element, part)
  for (std::size_t i = 0; i < family.parts.size(); ++i)
    for (auto x : family.parts[i])
      if (x < g.bound && g.contains(x)) {
        singles.emplace_back(x, i);
        break;
      }
  if (singles.size() >= 2) {
    std::sort(singles.begin(), singles.end());
    probe.fired_case = 2;
    probe.a = singles[0].first;
    probe.b = singles[1].first;
    probe.part_index = singles[0].second;
    probe.tau = tau_of(family.rho, probe.a, probe.b);
    bool in_some = false;
    for (const auto& img : family.images)
      if (probe.tau < img.bound && img.contains(probe.tau)) in_some = true;
    probe.detail = std::string("cross-part image point misses every single part's image (") +
                   (!in_some ? "confirmed" : "UNEXPECTED") + ")";
    return probe;
  }
  probe.fired_case = 0;
  probe.detail = "window too small: fewer than two generator points in the partition";
  return probe;
}

NotPMinusReport not_pminus_probe(const IdealId& ideal, const SetExpr& b, std::uint64_t m,
                                 std::uint64_t cap, const Budget& budget) {
  Verdict v = membership(ideal, b, budget);
  if (v.status != VerdictStatus::NotIn) {
    // an image expression carries its defining generator as the witness,
    // even when the window only shows a finite closure prefix
    const bool structural = (ideal.tag == IdealTag::Hindman && b.kind == ExprKind::FSOf) ||
                            (ideal.tag == IdealTag::Diff && b.kind == ExprKind::DeltaOf) ||
                            (ideal.tag == IdealTag::Ramsey && b.kind == ExprKind::PairsOf);
    if (!structural)
      fail(Errc::CertificateMissing, "the probe needs a positive set with its witness");
    v.cert.elements = eval_window(*b.lhs, cap).elements();
    if (v.cert.elements.size() > 16) v.cert.elements.resize(16);
  }
  NotPMinusReport rep;
  switch (ideal.tag) {
    case IdealTag::Hindman:
    case IdealTag::Diff: {
      Window w = eval_window(b, cap);
      std::vector<std::uint64_t> counts(64, 0);
      w.bits.for_each_set([&](std::uint64_t x) {
        if (x == 0) return;
        unsigned k = static_cast<unsigned>(std::countr_zero(x));
        ++counts[k];
      });
      for (std::uint64_t k = 0; k < counts.size(); ++k) {
        if (counts[k] >= m) {
          rep.k = k;
          rep.count = counts[k];
          std::uint64_t scale = std::uint64_t{1} << k;
          w.bits.for_each_set([&](std::uint64_t x) {
            if (rep.sample.size() < 8 && x != 0 &&
                static_cast<unsigned>(std::countr_zero(x)) == k)
              rep.sample.push_back(x);
          });
          (void)scale;
          rep.detail = "2-adic class " + std::to_string(k) + " meets the set " +
                       std::to_string(counts[k]) + " times below the cap";
          return rep;
        }
      }
      fail(Errc::Exhausted, "no 2-adic class reaches the requested count below the cap");
    }
    case IdealTag::Ramsey: {
      const auto& h = v.cert.elements;  // the clique witness h_0 < h_1 < ...
      if (h.size() < 2) fail(Errc::CertificateMissing, "clique witness too small");
      rep.k = h[1];
      for (std::size_t n = 1; n < h.size(); ++n) {
        // {h_0, h_n} has minimum h_0 < h_1, so it avoids the tail family level
        if (std::min(h[0], h[n]) < h[1]) {
          ++rep.count;
          if (rep.sample.size() < 8) rep.sample.push_back(pack_pair(h[0], h[n]));
        }
      }
      rep.detail = "every pair through the least clique vertex avoids the level-" +
                   std::to_string(h[1]) + " tail set";
      return rep;
    }
    default:
      fail(Errc::RuleUnsupported, "the probe covers H, D and R");
  }
}

ChainDesc fin_oplus_fin2_chain(unsigned depth) {
  ChainDesc chain;
  for (unsigned n = 0; n <= depth; ++n)
    chain.levels.push_back(SetExpr::disjoint_sum(
        SetExpr::omega(), SetExpr::grid_product(SetExpr::arith_prog(n, 1), SetExpr::omega())));
  return chain;
}

ExprPtr fin_oplus_fin2_universal_witness() {
  return SetExpr::disjoint_sum(SetExpr::omega(),
                               SetExpr::explicit_on(Ground::grid2(), {}));
}

ChainDesc density_chain(unsigned depth) {
  ChainDesc chain;
  for (unsigned n = 0; n <= depth; ++n)
    chain.levels.push_back(SetExpr::arith_prog(0, std::uint64_t{1} << (n + 1)));
  return chain;
}

}  // namespace prcomb
