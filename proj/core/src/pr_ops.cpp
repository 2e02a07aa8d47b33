#include "prcomb/pr_ops.hpp"

#include <algorithm>
#include <map>

#include "prcomb/errors.hpp"
#include "prcomb/subset_sum.hpp"
#include "prcomb/witness_search.hpp"

namespace prcomb {

namespace {

std::vector<std::uint64_t> usable_elements(const Window& d, std::uint64_t cap) {
  std::vector<std::uint64_t> xs;
  d.bits.for_each_set([&](std::uint64_t x) {
    if (x <= cap) xs.push_back(x);
  });
  return xs;
}

}  // namespace

Window fs(const Window& d, std::uint64_t cap) {
  if (d.contains(0)) fail(Errc::ZeroElement, "fs rejects 0 as an element");
  Window out(Ground::omega(), cap + 1);
  out.bits = subset_sum_closure(usable_elements(d, cap), cap);
  return out;
}

Window delta(const Window& e) {
  if (e.count() < 2) fail(Errc::TooFewElements, "delta needs at least two elements");
  Window out(Ground::omega(), e.bound);
  const auto xs = e.elements();
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) out.bits.set(xs[j] - xs[i]);
  return out;
}

Window pairs(const Window& h) {
  if (h.count() < 2) fail(Errc::TooFewElements, "pairs needs at least two elements");
  const auto xs = h.elements();
  Window out(Ground::pairs(), pair_code_bound(xs.back() + 1));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) out.bits.set(pack_pair(xs[i], xs[j]));
  return out;
}

// ---------------------------------------------------------------------------
// Subset-sum decoding
// ---------------------------------------------------------------------------

namespace {

// Prefix reachability: reach[i] = sums formed from elems[0..i).
std::vector<Bitset> prefix_reach(const std::vector<std::uint64_t>& elems, std::uint64_t cap) {
  if ((elems.size() + 1) * ((cap + 64) / 64) > (std::uint64_t{1} << 26))
    fail(Errc::InvalidArgument, "subset-sum table too large for this window");
  std::vector<Bitset> reach;
  reach.reserve(elems.size() + 1);
  Bitset acc(cap + 1);
  acc.set(0);
  reach.push_back(acc);
  for (auto d : elems) {
    if (d <= cap) acc.or_shift_left(d);
    reach.push_back(acc);
  }
  return reach;
}

void collect_subsets(const std::vector<std::uint64_t>& elems, const std::vector<Bitset>& reach,
                     std::uint64_t target, std::size_t i, std::vector<std::uint64_t>& cur,
                     std::vector<std::vector<std::uint64_t>>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  if (target == 0 && i == 0) {
    std::vector<std::uint64_t> s(cur.rbegin(), cur.rend());
    out.push_back(std::move(s));
    return;
  }
  if (i == 0) return;
  const std::uint64_t d = elems[i - 1];
  // skip branch first so subsets using later elements only come out first
  if (reach[i - 1].test(target))
    collect_subsets(elems, reach, target, i - 1, cur, out, limit);
  if (out.size() >= limit) return;
  if (d <= target && reach[i - 1].test(target - d)) {
    cur.push_back(d);
    collect_subsets(elems, reach, target - d, i - 1, cur, out, limit);
    cur.pop_back();
  }
}

}  // namespace

DecodeResult decode_subset_sums(const std::vector<std::uint64_t>& elems, std::uint64_t n,
                                std::uint64_t cap) {
  DecodeResult res;
  if (n > cap || n == 0) return res;
  auto reach = prefix_reach(elems, cap);
  if (!reach.back().test(n)) return res;
  std::vector<std::vector<std::uint64_t>> subsets;
  std::vector<std::uint64_t> cur;
  collect_subsets(elems, reach, n, elems.size(), cur, subsets, 2);
  res.count = static_cast<int>(subsets.size());
  if (res.count >= 1) res.first = subsets[0];
  if (res.count >= 2) res.second = subsets[1];
  return res;
}

std::vector<std::uint64_t> alpha_decode(const Window& d, std::uint64_t n) {
  if (d.contains(0)) fail(Errc::ZeroElement, "sparse decoding rejects 0");
  const auto xs = d.elements();
  const std::uint64_t cap = n;
  auto res = decode_subset_sums(xs, n, cap);
  if (res.count == 0) fail(Errc::NotRepresentable, std::to_string(n));
  if (res.count >= 2) fail(Errc::NotSparse, "two representations of " + std::to_string(n));
  return res.first;
}

SparseCertificate sparse_check(const Window& d, std::uint64_t cap) {
  SparseCertificate cert;
  cert.kind = SparseKind::Sparse;
  cert.cap = cap;
  if (d.contains(0)) {
    cert.pass = false;
    cert.note = "0 breaks uniqueness";
    cert.value = 0;
    cert.witness_a = {0};
    return cert;
  }
  const auto xs = usable_elements(d, cap);
  Bitset reach(cap + 1);
  reach.set(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::uint64_t x = xs[i];
    // a new collision after adding x means some s is reachable without x
    // while s - x is also reachable without x
    Bitset overlap = reach.shifted_left(x);
    overlap &= reach;
    const std::uint64_t s = overlap.next_set(0);
    if (s != Bitset::npos) {
      std::vector<std::uint64_t> prefix(xs.begin(), xs.begin() + static_cast<long>(i));
      auto with_rest = decode_subset_sums(prefix, s - x, cap);    // plus x itself
      auto without = decode_subset_sums(prefix, s, cap);
      cert.pass = false;
      cert.value = s;
      cert.witness_a = with_rest.first;
      cert.witness_a.push_back(x);
      std::sort(cert.witness_a.begin(), cert.witness_a.end());
      cert.witness_b = without.first;
      cert.note = "two subsets share the sum " + std::to_string(s);
      return cert;
    }
    reach.or_shift_left(x);
  }
  cert.pass = true;
  return cert;
}

namespace {

// Index masks of alpha decodings for every fs element; requires sparsity.
struct MaskTable {
  std::vector<std::uint64_t> fs_elems;
  std::vector<std::vector<std::uint64_t>> masks;  // multiword over element indices
  std::size_t words = 0;
};

MaskTable decode_all(const std::vector<std::uint64_t>& xs, const Window& image,
                     std::uint64_t cap) {
  MaskTable t;
  t.words = (xs.size() + 63) / 64;
  auto reach = prefix_reach(xs, cap);
  image.bits.for_each_set([&](std::uint64_t s) {
    std::vector<std::uint64_t> mask(t.words, 0);
    std::uint64_t rem = s;
    for (std::size_t i = xs.size(); i-- > 0;) {
      if (reach[i].test(rem)) continue;  // representable without xs[i]
      rem -= xs[i];
      mask[i >> 6] |= std::uint64_t{1} << (i & 63);
      if (rem == 0) break;
    }
    t.fs_elems.push_back(s);
    t.masks.push_back(std::move(mask));
  });
  return t;
}

bool masks_overlap(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

}  // namespace

SparseCertificate very_sparse_check(const Window& d, std::uint64_t cap) {
  SparseCertificate sp = sparse_check(d, cap);
  if (!sp.pass) fail(Errc::NotSparse, "very_sparse_check requires a sparse window");
  SparseCertificate cert;
  cert.kind = SparseKind::VerySparse;
  cert.cap = cap;
  const auto xs = usable_elements(d, cap);
  Window image = fs(d, cap);
  const std::uint64_t m = image.count();
  if (m * m > 400'000'000)
    fail(Errc::InvalidArgument, "very_sparse_check: image too large for the pair scan");
  MaskTable t = decode_all(xs, image, cap);
  // scan x ascending, y < x ascending; first violation wins
  for (std::size_t xi = 0; xi < t.fs_elems.size(); ++xi) {
    for (std::size_t yi = 0; yi < xi; ++yi) {
      if (!masks_overlap(t.masks[xi], t.masks[yi])) continue;
      const std::uint64_t s = t.fs_elems[xi] + t.fs_elems[yi];
      if (s <= cap && image.contains(s)) {
        cert.pass = false;
        cert.value = s;
        cert.witness_a = {t.fs_elems[xi]};
        cert.witness_b = {t.fs_elems[yi]};
        cert.note = "x and y share a summand yet x+y stays a finite sum";
        return cert;
      }
    }
  }
  cert.pass = true;
  return cert;
}

SparseCertificate d_sparse_check(const Window& e, std::uint64_t cap) {
  if (e.count() < 2) fail(Errc::TooFewElements, "d_sparse_check needs two elements");
  SparseCertificate cert;
  cert.kind = SparseKind::DSparse;
  cert.cap = cap;
  const auto xs = e.elements();
  std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> rep;
  bool found = false;
  std::uint64_t bad = 0;
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const std::uint64_t a = xs[j] - xs[i];
      if (a > cap) continue;
      auto it = rep.find(a);
      if (it == rep.end()) {
        rep.emplace(a, std::make_pair(xs[j], xs[i]));
        continue;
      }
      if (!found || a < bad) {
        found = true;
        bad = a;
        cert.witness_a = {it->second.first, it->second.second};
        cert.witness_b = {xs[j], xs[i]};
      }
    }
  if (found) {
    cert.pass = false;
    cert.value = bad;
    cert.note = "two representations of the difference " + std::to_string(bad);
    return cert;
  }
  cert.pass = true;
  return cert;
}

LacunaryResult lacunary_check(const Window& a) {
  const auto xs = a.elements();
  if (xs.size() < 2) fail(Errc::TooFewElements, "lacunary_check needs two elements");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i + 1] - xs[i] <= xs[i]) return {false, i};
  }
  return {true, 0};
}

SuperincreasingSelection superincreasing_subset(const SetExpr& source, const Rational& factor,
                                                std::uint64_t count, std::uint64_t widen_cap) {
  if (factor < 1) fail(Errc::InvalidArgument, "factor must be >= 1");
  SuperincreasingSelection sel;
  mpz_class sum = 0;
  std::uint64_t window = 256;
  Window w = eval_window(source, window);
  std::uint64_t scan_from = 0;
  while (sel.elements.size() < count) {
    mpz_class bound_z = (sum * factor.get_num()) / factor.get_den() + 1;
    if (!bound_z.fits_ulong_p()) fail(Errc::Exhausted, "selection exceeds the integer range");
    const std::uint64_t need = std::max<std::uint64_t>(bound_z.get_ui(), scan_from);
    std::uint64_t x = w.bits.next_set(need);
    while (x == Bitset::npos) {
      if (window >= widen_cap) fail(Errc::Exhausted, "widening cap hit during greedy selection");
      window = std::min(window * 4, widen_cap);
      w = eval_window(source, window);
      x = w.bits.next_set(need);
    }
    sel.elements.push_back(x);
    sum += static_cast<unsigned long>(x);
    scan_from = x + 1;
  }
  if (!sum.fits_ulong_p()) fail(Errc::Exhausted, "selection total exceeds the integer range");
  const std::uint64_t total = static_cast<std::uint64_t>(sum.get_ui());
  const std::uint64_t cert_cap = std::min<std::uint64_t>(total, std::uint64_t{1} << 20);
  sel.window = Window::from_elements(Ground::omega(), total + 1, sel.elements);
  sel.sparse = sparse_check(sel.window, cert_cap);
  if (factor >= 2) sel.very_sparse = very_sparse_check(sel.window, cert_cap);
  return sel;
}

// ---------------------------------------------------------------------------
// Kojman selection
// ---------------------------------------------------------------------------

namespace {

struct KojmanEntry {
  std::uint64_t value;
  std::uint64_t min_d, max_d;      // least/greatest element of alpha_D
  std::uint64_t low_bit, high_bit; // least/greatest binary summand
};

}  // namespace

std::vector<std::uint64_t> kojman_select(const Window& d, std::uint64_t count) {
  SparseCertificate sp = sparse_check(d, d.bound ? d.bound - 1 : 0);
  if (!sp.pass) fail(Errc::CertificateMissing, "kojman_select requires a sparse window");
  const std::uint64_t cap = d.bound ? d.bound - 1 : 0;
  const auto xs = usable_elements(d, cap);
  Window image = fs(d, cap);
  auto reach = prefix_reach(xs, cap);
  std::vector<KojmanEntry> entries;
  image.bits.for_each_set([&](std::uint64_t s) {
    KojmanEntry e{s, 0, 0, 0, 0};
    std::uint64_t rem = s;
    bool first = true;
    for (std::size_t i = xs.size(); i-- > 0;) {
      if (reach[i].test(rem)) continue;
      rem -= xs[i];
      if (first) {
        e.max_d = xs[i];
        first = false;
      }
      e.min_d = xs[i];
      if (rem == 0) break;
    }
    e.high_bit = std::uint64_t{1} << (63 - std::countl_zero(s));
    e.low_bit = s & (~s + 1);
    entries.push_back(e);
  });
  std::vector<std::uint64_t> chosen_idx;
  std::uint64_t nodes = 5'000'000;
  auto dfs = [&](auto&& self, std::size_t from) -> bool {
    if (chosen_idx.size() == count) return true;
    for (std::size_t i = from; i < entries.size(); ++i) {
      if (nodes-- == 0) return false;
      if (!chosen_idx.empty()) {
        const KojmanEntry& prev = entries[chosen_idx.back()];
        if (entries[i].min_d <= prev.max_d) continue;
        if (entries[i].low_bit <= prev.high_bit) continue;
      }
      chosen_idx.push_back(i);
      if (self(self, i + 1)) return true;
      chosen_idx.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0)) fail(Errc::Exhausted, "no block-separated sequence in this window");
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (auto i : chosen_idx) out.push_back(entries[i].value);
  return out;
}

// ---------------------------------------------------------------------------
// Descriptors
// ---------------------------------------------------------------------------

Ground PRDescriptor::lambda() const {
  switch (compound) {
    case PrCompound::Oplus:
      return Ground::sum(left->lambda(), right->lambda());
    case PrCompound::Product: {
      Ground l = left->lambda(), r = right->lambda();
      if (l == Ground::omega() && r == Ground::omega()) return Ground::grid2();
      return Ground::prod(std::move(l), std::move(r));
    }
    case PrCompound::Restrict:
      return left->lambda();
    case PrCompound::None:
      break;
  }
  switch (kind) {
    case PrKind::FS:
    case PrKind::Delta:
      return Ground::omega();
    case PrKind::Pairs:
      return Ground::pairs();
    case PrKind::Ideal:
      return ideal->ground();
  }
  return Ground::omega();
}

Ground PRDescriptor::omega() const {
  switch (compound) {
    case PrCompound::Oplus:
      return Ground::sum(left->omega(), right->omega());
    case PrCompound::Product: {
      Ground l = left->omega(), r = right->omega();
      if (l == Ground::omega() && r == Ground::omega()) return Ground::grid2();
      return Ground::prod(std::move(l), std::move(r));
    }
    case PrCompound::Restrict:
      return left->omega();
    case PrCompound::None:
      break;
  }
  switch (kind) {
    case PrKind::FS:
    case PrKind::Delta:
    case PrKind::Pairs:
      return Ground::omega();
    case PrKind::Ideal:
      return ideal->ground();
  }
  return Ground::omega();
}

std::string PRDescriptor::name() const {
  switch (compound) {
    case PrCompound::Oplus:
      return "oplus(" + left->name() + "," + right->name() + ")";
    case PrCompound::Product:
      return "product(" + left->name() + "," + right->name() + ")";
    case PrCompound::Restrict:
      return "restrict(" + left->name() + ")";
    case PrCompound::None:
      break;
  }
  switch (kind) {
    case PrKind::FS: return "FS";
    case PrKind::Delta: return "Delta";
    case PrKind::Pairs: return "r";
    case PrKind::Ideal: return "rho_" + ideal->name();
  }
  return "?";
}

Window apply_pr_window(const PRDescriptor& rho, const Window& f, std::uint64_t cap) {
  switch (rho.compound) {
    case PrCompound::Restrict: {
      Window img = apply_pr_window(*rho.left, f, cap);
      Window b = eval_window(*rho.restrict_to, img.bound);
      if (!img.is_subset_of(b))
        fail(Errc::DomainViolation, "restriction family: rho(F) is not inside B on the window");
      return img;
    }
    case PrCompound::Oplus:
    case PrCompound::Product:
      fail(Errc::RuleUnsupported, "compound images are applied through expressions");
    case PrCompound::None:
      break;
  }
  switch (rho.kind) {
    case PrKind::FS:
      return fs(f, cap);
    case PrKind::Delta:
      return delta(f).restricted(cap + 1);
    case PrKind::Pairs:
      return pairs(f).restricted(cap + 1);
    case PrKind::Ideal:
      return f.restricted(cap + 1);
  }
  fail(Errc::InvalidArgument, "unknown descriptor");
}

Window apply_pr(const PRDescriptor& rho, const SetExpr& f, std::uint64_t cap) {
  switch (rho.compound) {
    case PrCompound::Oplus: {
      if (f.kind != ExprKind::DisjointSum)
        fail(Errc::DomainViolation, "oplus expects a disjoint-sum generator");
      Window li = apply_pr(*rho.left, *f.lhs, cap / 2);
      Window ri = apply_pr(*rho.right, *f.rhs, cap / 2);
      Window out(Ground::sum(li.ground, ri.ground), cap + 1);
      li.bits.for_each_set([&](std::uint64_t x) { out.insert(pack_sum(x, 0)); });
      ri.bits.for_each_set([&](std::uint64_t x) { out.insert(pack_sum(x, 1)); });
      return out;
    }
    case PrCompound::Product: {
      if (f.kind != ExprKind::CrossProduct && f.kind != ExprKind::GridProduct)
        fail(Errc::DomainViolation, "product expects a cross-product generator");
      Window li = apply_pr(*rho.left, *f.lhs, cap);
      Window ri = apply_pr(*rho.right, *f.rhs, cap);
      Window out(rho.lambda(), cap + 1);
      li.bits.for_each_set([&](std::uint64_t x) {
        ri.bits.for_each_set([&](std::uint64_t y) {
          const std::uint64_t c = pack_grid2(x, y);
          if (c <= cap) out.bits.set(c);
        });
      });
      return out;
    }
    case PrCompound::Restrict: {
      Window img = apply_pr(*rho.left, f, cap);
      Window b = eval_window(*rho.restrict_to, img.bound);
      if (!img.is_subset_of(b))
        fail(Errc::DomainViolation, "restriction family: rho(F) is not inside B on the window");
      return img;
    }
    case PrCompound::None:
      break;
  }
  switch (rho.kind) {
    case PrKind::FS:
      return fs(eval_window(f, cap + 1), cap);
    case PrKind::Delta:
      return delta(eval_window(f, cap + 1)).restricted(cap + 1);
    case PrKind::Pairs:
      return pairs(eval_window(f, pair_coord_bound(cap + 1))).restricted(cap + 1);
    case PrKind::Ideal:
      return eval_window(f, cap + 1);
  }
  fail(Errc::InvalidArgument, "unknown descriptor");
}

std::vector<std::uint64_t> trim_support(const PRDescriptor& rho, const Window& f,
                                        const std::vector<std::uint64_t>& l, std::uint64_t cap) {
  if (rho.compound != PrCompound::None)
    fail(Errc::RuleUnsupported, "trim_support applies to simple descriptors");
  std::vector<std::uint64_t> k;
  auto contains = [&k](std::uint64_t x) {
    return std::find(k.begin(), k.end(), x) != k.end();
  };
  switch (rho.kind) {
    case PrKind::FS: {
      if (!sparse_check(f, cap).pass)
        fail(Errc::CertificateMissing, "trim_support(FS) requires a sparse generator");
      Window image = fs(f, cap);
      const auto xs = usable_elements(f, cap);
      std::vector<std::uint64_t> sorted_l(l);
      std::sort(sorted_l.begin(), sorted_l.end());
      for (auto t : sorted_l) {
        if (t > cap || !image.contains(t)) continue;
        for (auto e : decode_subset_sums(xs, t, cap).first)
          if (!contains(e)) k.push_back(e);
      }
      break;
    }
    case PrKind::Delta: {
      if (!d_sparse_check(f, cap).pass)
        fail(Errc::CertificateMissing, "trim_support(Delta) requires a D-sparse generator");
      const auto xs = f.elements();
      std::vector<std::uint64_t> sorted_l(l);
      std::sort(sorted_l.begin(), sorted_l.end());
      for (auto t : sorted_l) {
        bool killed = false;
        for (std::size_t j = 1; j < xs.size() && !killed; ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (xs[j] - xs[i] == t) {
              if (!contains(xs[i]) && !contains(xs[j])) k.push_back(xs[i]);
              killed = true;
              break;
            }
      }
      break;
    }
    case PrKind::Pairs: {
      std::vector<std::uint64_t> sorted_l(l);
      std::sort(sorted_l.begin(), sorted_l.end());
      for (auto code : sorted_l) {
        const auto [a, b] = unpack_pair(code);
        if (!contains(a) && !contains(b)) k.push_back(a);
      }
      break;
    }
    case PrKind::Ideal: {
      for (auto t : l)
        if (t < f.bound && f.contains(t)) k.push_back(t);
      break;
    }
  }
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  // postcondition re-check
  Window trimmed = f.minus_elements(k);
  if (rho.kind == PrKind::Delta || rho.kind == PrKind::Pairs) {
    if (trimmed.count() < 2) return k;  // image empty; avoidance holds vacuously
  }
  Window img = apply_pr_window(rho, trimmed, cap);
  for (auto t : l)
    if (t < img.bound && img.contains(t))
      fail(Errc::VerificationFailed, "trim_support postcondition violated");
  return k;
}

GreedyTrim greedy_trim(const PRDescriptor& rho, const Window& f, const Window& allowed,
                       std::uint64_t cap, unsigned trim_budget) {
  GreedyTrim out;
  std::vector<std::uint64_t> k;
  while (true) {
    Window gen = f.minus_elements(k);
    if ((rho.kind == PrKind::Delta || rho.kind == PrKind::Pairs) && gen.count() < 2) {
      out.obstruction = k;
      return out;  // generator died before the image cleared
    }
    Window img = apply_pr_window(rho, gen, cap);
    std::vector<std::uint64_t> bad;
    img.bits.for_each_set([&](std::uint64_t x) {
      if (x >= allowed.bound || !allowed.contains(x)) bad.push_back(x);
    });
    if (bad.empty()) {
      out.ok = true;
      out.k = k;
      return out;
    }
    if (k.size() >= trim_budget) {
      out.obstruction.assign(bad.begin(), bad.begin() + std::min<std::size_t>(bad.size(), 8));
      return out;
    }
    const std::uint64_t v = bad.front();
    switch (rho.kind) {
      case PrKind::FS: {
        auto dec = decode_subset_sums(gen.elements(), v, cap);
        if (dec.first.empty()) {
          out.obstruction = {v};
          return out;
        }
        for (auto e : dec.first) k.push_back(e);
        break;
      }
      case PrKind::Delta: {
        auto xs = gen.elements();
        bool done = false;
        for (std::size_t j = 1; j < xs.size() && !done; ++j)
          for (std::size_t i = 0; i < j; ++i)
            if (xs[j] - xs[i] == v) {
              k.push_back(xs[i]);
              done = true;
              break;
            }
        if (!done) {
          out.obstruction = {v};
          return out;
        }
        break;
      }
      case PrKind::Pairs:
        k.push_back(unpack_pair(v).first);
        break;
      case PrKind::Ideal:
        k.push_back(v);
        break;
    }
    std::sort(k.begin(), k.end());
    k.erase(std::unique(k.begin(), k.end()), k.end());
  }
}

AccretionProbe small_accretion_probe(const PRDescriptor& rho, const Window& f,
                                     const std::vector<std::uint64_t>& k, std::uint64_t cap,
                                     unsigned d) {
  if (rho.compound != PrCompound::None)
    fail(Errc::RuleUnsupported, "small_accretion_probe applies to simple descriptors");
  if (rho.kind == PrKind::FS && !very_sparse_check(f, cap).pass)
    fail(Errc::CertificateMissing, "accretion probe for FS requires a very sparse generator");
  if (rho.kind == PrKind::Delta && !d_sparse_check(f, cap).pass)
    fail(Errc::CertificateMissing, "accretion probe for Delta requires a D-sparse generator");
  Window whole = apply_pr_window(rho, f, cap);
  Window trimmed_gen = f.minus_elements(k);
  Window rest = (rho.kind == PrKind::Delta || rho.kind == PrKind::Pairs) && trimmed_gen.count() < 2
                    ? Window(whole.ground, whole.bound)
                    : apply_pr_window(rho, trimmed_gen, cap);
  Window accretion = whole.minus(rest);
  AccretionProbe probe;
  probe.accretion_size = accretion.count();
  SearchResult<std::vector<std::uint64_t>> found;
  switch (rho.kind) {
    case PrKind::FS:
      found = ip_witness_search(accretion, d, cap);
      break;
    case PrKind::Delta:
      found = diff_witness_search(accretion, d, cap);
      break;
    case PrKind::Pairs:
      found = clique_search(accretion, d);
      break;
    case PrKind::Ideal: {
      // identity images: a size-d generator inside the accretion is any
      // d-element subset, which exists iff the accretion has d elements
      auto xs = accretion.elements();
      if (xs.size() >= d) {
        xs.resize(d);
        found.witness = xs;
      }
      break;
    }
  }
  if (found.witness) {
    probe.pass = false;
    probe.witness = *found.witness;
  } else {
    probe.pass = true;
  }
  return probe;
}

LocalityReport window_locality_probe(LocalityKind kind, const SetExpr& a, const SetExpr& b,
                                     std::uint64_t g, std::uint64_t n) {
  LocalityReport rep;
  switch (kind) {
    case LocalityKind::FS: {
      Window wa = eval_window(a, g + 1), wb = eval_window(b, g + 1);
      if (!Window::agree_below(wa, wb, g + 1))
        fail(Errc::InvalidArgument, "inputs must agree below G");
      if (wa.contains(0) || wb.contains(0))
        fail(Errc::ZeroElement, "fs locality rejects 0");
      Window ia = fs(wa, g), ib = fs(wb, g);
      rep.agreement_bound = g + 1;
      rep.pass = Window::agree_below(ia, ib, g + 1);
      if (!rep.pass) rep.note = "images disagree below G";
      return rep;
    }
    case LocalityKind::Pairs: {
      Window wa = eval_window(a, g + 1), wb = eval_window(b, g + 1);
      if (!Window::agree_below(wa, wb, g + 1))
        fail(Errc::InvalidArgument, "inputs must agree below G");
      const std::uint64_t pb = pair_code_bound(g + 1);
      rep.agreement_bound = pb;
      if (wa.count() < 2 || wb.count() < 2) {
        // no pair fits below G on either side; agreement is vacuous
        rep.pass = wa.count() == wb.count();
        return rep;
      }
      Window ia = pairs(wa).restricted(pb), ib = pairs(wb).restricted(pb);
      rep.pass = Window::agree_below(ia, ib, pb);
      if (!rep.pass) rep.note = "pair images disagree below the packed bound";
      return rep;
    }
    case LocalityKind::Delta: {
      if (n == 0) n = g / 2;
      Window wa = eval_window(a, g);
      Window c(Ground::omega(), g);
      wa.bits.for_each_set([&](std::uint64_t x) {
        if (x < n) c.bits.set(x);
      });
      for (std::uint64_t x = n; x < g; ++x) c.bits.set(x);
      Window da = wa.count() >= 2 ? delta(wa) : Window(Ground::omega(), g);
      Window dc = delta(c);
      rep.agreement_bound = g;
      for (std::uint64_t x = 1; x < g; ++x) {
        if (dc.contains(x) && !(x < da.bound && da.contains(x))) {
          rep.witness = x;
          break;
        }
      }
      rep.pass = rep.witness.has_value();
      rep.note = rep.pass ? "discontinuity witnessed: Delta(C) exceeds Delta(A) below G"
                          : "difference image already covers the window below G";
      return rep;
    }
    case LocalityKind::DeltaOnL: {
      const std::uint64_t wide = g * 4 + 4;
      Window wa = eval_window(a, wide), wb = eval_window(b, wide);
      if (!lacunary_check(wa).pass || !lacunary_check(wb).pass)
        fail(Errc::NotLacunary, "both inputs must be lacunary");
      if (!Window::agree_below(wa, wb, g))
        fail(Errc::InvalidArgument, "inputs must agree below G");
      // largest element of A below G bounds the stable prefix
      std::uint64_t em = 0;
      wa.bits.for_each_set([&](std::uint64_t x) {
        if (x < g) em = x;
      });
      const std::uint64_t gp = em + 1;
      Window da = delta(wa), db = delta(wb);
      rep.agreement_bound = gp;
      rep.pass = Window::agree_below(da, db, gp);
      if (!rep.pass) {
        for (std::uint64_t x = 0; x < gp; ++x)
          if (da.contains(x) != db.contains(x)) {
            rep.witness = x;
            break;
          }
        rep.note = "lacunary locality violated";
      }
      return rep;
    }
  }
  fail(Errc::InvalidArgument, "unknown locality kind");
}

}  // namespace prcomb
