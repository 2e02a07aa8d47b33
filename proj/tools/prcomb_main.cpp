// prcomb: partition-regular combinatorics workbench.
//
// Subcommands cover the window operations (fs, delta, pairs, sparse, kojman,
// locality), ideal membership with certificates (ideal-test, tall), the
// Katetov-order tooling (katetov check|matrix), the P-like machinery (plike
// diagonalize|weakpp|notpp|notpm), the convergence simulator (converge
// check|alexandroff|metric|phi|mad) and the finite threshold searches
// (pr-verify schur|vdw).
//
// Exit codes: 0 verified/consistent, 1 refuted/counterexample,
// 2 inconclusive/budget, 3 input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "prcomb/convergence.hpp"
#include "prcomb/errors.hpp"
#include "prcomb/json_io.hpp"
#include "prcomb/katetov.hpp"
#include "prcomb/plike.hpp"
#include "prcomb/pr_verify.hpp"

using namespace prcomb;

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

struct GlobalOpts {
  std::uint64_t cap = 100'000;
  unsigned depth = 6;
  unsigned gen = 3;
  unsigned ap_len = 8;
  unsigned trim = 64;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string format = "json";
  bool recheck = false;

  Budget budget() const {
    Budget b;
    b.cap = cap;
    b.gen = gen;
    b.ap_len = ap_len;
    b.trim = trim;
    return b;
  }
};

Json parse_json_arg(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) fail(Errc::InvalidArgument, "cannot open " + text.substr(1));
    return Json::parse(in);
  }
  return Json::parse(text);
}

void emit(const GlobalOpts& g, const Json& j) {
  if (g.format == "table") {
    // flat key: value lines for quick reading
    std::function<void(const std::string&, const Json&)> walk = [&](const std::string& prefix,
                                                                    const Json& v) {
      if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
          walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
      } else {
        std::cout << prefix << ": " << v.dump() << "\n";
      }
    };
    walk("", j);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

int status_code(CheckStatus s) {
  switch (s) {
    case CheckStatus::Consistent: return kOk;
    case CheckStatus::Refuted: return kRefuted;
    case CheckStatus::Inconclusive: return kInconclusive;
  }
  return kInputError;
}

int status_code(ConvStatus s) {
  switch (s) {
    case ConvStatus::Verified: return kOk;
    case ConvStatus::Refuted: return kRefuted;
    case ConvStatus::Exhausted: return kInconclusive;
  }
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition-regular combinatorics workbench"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOpts g;
  if (const char* env = std::getenv("PRCOMB_WORKERS")) g.workers = std::atoi(env);
  app.add_option("--cap", g.cap, "window bound");
  app.add_option("--depth", g.depth, "chain / neighborhood depth");
  app.add_option("--gen", g.gen, "generator size budget");
  app.add_option("--ap-len", g.ap_len, "progression length budget");
  app.add_option("--trim", g.trim, "trim-set size budget");
  app.add_option("--seed", g.seed, "sampling seed");
  app.add_option("--workers", g.workers, "worker threads for exhaustive searches");
  app.add_option("--format", g.format, "json | table | dot")
      ->check(CLI::IsMember({"json", "table", "dot"}));
  app.add_flag("--recheck", g.recheck, "re-validate emitted certificates, bypassing search");

  int rc = kOk;

  // ---- window operations ---------------------------------------------------
  std::string set_arg, set_arg2;
  std::uint64_t op_cap = 0, op_n = 0, op_count = 0;
  std::string factor_arg = "2";

  auto* fs_cmd = app.add_subcommand("fs", "finite sums of a window");
  fs_cmd->add_option("--set", set_arg, "set expression (json)")->required();
  fs_cmd->add_option("--op-cap", op_cap, "sum cap (default: global cap)");
  fs_cmd->callback([&] {
    auto e = expr_from_json(parse_json_arg(set_arg));
    const std::uint64_t cap = op_cap ? op_cap : g.cap;
    Window d = eval_window(*e, cap + 1);
    Window image = fs(d, cap);
    Json out{{"input", expr_to_json(*e)}, {"cap", cap}, {"result", window_to_json(image)}};
    if (g.recheck) {
      // re-derive a sample of members by decoding
      bool ok = true;
      auto cert = sparse_check(d, cap);
      if (cert.pass) {
        image.bits.for_each_set([&](std::uint64_t s) {
          auto sub = alpha_decode(d, s);
          std::uint64_t total = 0;
          for (auto x : sub) total += x;
          if (total != s) ok = false;
        });
      }
      out["recheck"] = ok;
      if (!ok) rc = kRefuted;
    }
    emit(g, out);
  });

  auto* delta_cmd = app.add_subcommand("delta", "positive differences of a window");
  delta_cmd->add_option("--set", set_arg, "set expression (json)")->required();
  delta_cmd->callback([&] {
    auto e = expr_from_json(parse_json_arg(set_arg));
    Window w = eval_window(*e, g.cap);
    Json out{{"input", expr_to_json(*e)},
             {"cap", g.cap},
             {"result", window_to_json(delta(w))}};
    emit(g, out);
  });

  auto* pairs_cmd = app.add_subcommand("pairs", "packed pairs of a window");
  pairs_cmd->add_option("--set", set_arg, "set expression (json)")->required();
  pairs_cmd->callback([&] {
    auto e = expr_from_json(parse_json_arg(set_arg));
    Window w = eval_window(*e, g.cap);
    Json out{{"input", expr_to_json(*e)},
             {"cap", g.cap},
             {"result", window_to_json(pairs(w))}};
    emit(g, out);
  });

  std::string sparse_kind = "sparse";
  auto* sparse_cmd = app.add_subcommand("sparse", "sparseness certificates");
  sparse_cmd->add_option("--set", set_arg, "set expression (json)")->required();
  sparse_cmd->add_option("--kind", sparse_kind, "sparse | very-sparse | d-sparse | lacunary");
  sparse_cmd->add_option("--op-cap", op_cap, "certificate cap");
  sparse_cmd->callback([&] {
    auto e = expr_from_json(parse_json_arg(set_arg));
    const std::uint64_t cap = op_cap ? op_cap : g.cap;
    Window w = eval_window(*e, cap + 1);
    Json out{{"input", expr_to_json(*e)}, {"cap", cap}};
    bool pass = false;
    if (sparse_kind == "sparse") {
      auto c = sparse_check(w, cap);
      pass = c.pass;
      out["certificate"] = sparse_certificate_to_json(c);
      if (g.recheck && !c.pass) {
        std::uint64_t sa = 0, sb = 0;
        for (auto x : c.witness_a) sa += x;
        for (auto x : c.witness_b) sb += x;
        out["recheck"] = (sa == sb && c.witness_a != c.witness_b);
      }
    } else if (sparse_kind == "very-sparse") {
      auto c = very_sparse_check(w, cap);
      pass = c.pass;
      out["certificate"] = sparse_certificate_to_json(c);
    } else if (sparse_kind == "d-sparse") {
      auto c = d_sparse_check(w, cap);
      pass = c.pass;
      out["certificate"] = sparse_certificate_to_json(c);
    } else {
      auto c = lacunary_check(w);
      pass = c.pass;
      out["certificate"] = Json{{"kind", "lacunary"},
                                {"pass", c.pass},
                                {"violation_index", c.violation_index}};
    }
    rc = pass ? kOk : kRefuted;
    emit(g, out);
  });

  auto* kojman_cmd = app.add_subcommand("kojman", "block-separated selection");
  kojman_cmd->add_option("--set", set_arg, "sparse set expression (json)")->required();
  kojman_cmd->add_option("--count", op_count, "selection length")->required();
  kojman_cmd->callback([&] {
    auto e = expr_from_json(parse_json_arg(set_arg));
    Window d = eval_window(*e, g.cap);
    auto s = kojman_select(d, op_count);
    Json out{{"input", expr_to_json(*e)}, {"selection", s}};
    if (g.recheck) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        auto a = alpha_decode(d, s[i]);
        auto b = alpha_decode(d, s[i + 1]);
        if (a.back() >= b.front()) ok = false;
      }
      out["recheck"] = ok;
      if (!ok) rc = kRefuted;
    }
    emit(g, out);
  });

  std::string locality_kind = "fs";
  auto* loc_cmd = app.add_subcommand("locality", "window locality probes");
  loc_cmd->add_option("--kind", locality_kind, "fs | pairs | delta | delta-on-l")->required();
  loc_cmd->add_option("--a", set_arg, "first set expression")->required();
  loc_cmd->add_option("--b", set_arg2, "second set expression (unused for delta)");
  loc_cmd->add_option("--g", op_cap, "agreement bound G")->required();
  loc_cmd->add_option("--n", op_n, "delta splice point");
  loc_cmd->callback([&] {
    auto a = expr_from_json(parse_json_arg(set_arg));
    auto b = set_arg2.empty() ? a : expr_from_json(parse_json_arg(set_arg2));
    LocalityKind kind = LocalityKind::FS;
    if (locality_kind == "pairs") kind = LocalityKind::Pairs;
    if (locality_kind == "delta") kind = LocalityKind::Delta;
    if (locality_kind == "delta-on-l") kind = LocalityKind::DeltaOnL;
    auto rep = window_locality_probe(kind, *a, *b, op_cap, op_n);
    Json out{{"kind", locality_kind},
             {"pass", rep.pass},
             {"agreement_bound", rep.agreement_bound},
             {"note", rep.note}};
    if (rep.witness) out["witness"] = *rep.witness;
    rc = rep.pass ? kOk : kRefuted;
    emit(g, out);
  });

  // ---- ideals ----------------------------------------------------------------
  std::string ideal_arg;
  auto* it_cmd = app.add_subcommand("ideal-test", "bounded-budget ideal membership");
  it_cmd->add_option("--ideal", ideal_arg, "H | R | D | W | I1n | Fin | Fin2 | ... (json)")
      ->required();
  it_cmd->add_option("--set", set_arg, "set expression (json)")->required();
  it_cmd->callback([&] {
    auto id = ideal_from_json(parse_json_arg(ideal_arg));
    auto e = expr_from_json(parse_json_arg(set_arg));
    Verdict v = membership(id, *e, g.budget());
    Json out{{"ideal", ideal_to_json(id)},
             {"set", expr_to_json(*e)},
             {"verdict", verdict_to_json(v)}};
    if (g.recheck) {
      bool ok = recheck_certificate(id, *e, v);
      out["recheck"] = ok;
      if (!ok) rc = kRefuted;
    }
    if (v.status == VerdictStatus::Unknown) rc = kInconclusive;
    emit(g, out);
  });

  auto* tall_cmd = app.add_subcommand("tall", "tallness witnesses");
  tall_cmd->add_option("--ideal", ideal_arg, "H | R | D | W | I1n")->required();
  tall_cmd->add_option("--set", set_arg, "infinite source expression (json)")->required();
  tall_cmd->add_option("--count", op_count, "witness size")->required();
  tall_cmd->callback([&] {
    auto id = ideal_from_json(parse_json_arg(ideal_arg));
    auto e = expr_from_json(parse_json_arg(set_arg));
    auto tw = tall_witness(id, *e, op_count, g.budget());
    Json out{{"ideal", ideal_to_json(id)},
             {"witness", tw.elements},
             {"certificate", certificate_to_json(tw.cert)}};
    emit(g, out);
  });

  // ---- katetov ----------------------------------------------------------------
  auto* kat = app.add_subcommand("katetov", "Katetov-order tooling");
  kat->require_subcommand(1);
  std::string phi_arg = "identity", from_arg, to_arg, samples_arg;
  auto* kat_check = kat->add_subcommand("check", "witness-map check");
  kat_check->add_option("--phi", phi_arg, "identity | pair-difference");
  kat_check->add_option("--from", from_arg, "upper descriptor (json)")->required();
  kat_check->add_option("--to", to_arg, "lower descriptor (json)")->required();
  kat_check->add_option("--samples", samples_arg, "json array of generator expressions");
  kat_check->callback([&] {
    PRDescriptor rho1 = descriptor_from_json(parse_json_arg(from_arg));
    PRDescriptor rho2 = descriptor_from_json(parse_json_arg(to_arg));
    WitnessMap phi = phi_arg == "pair-difference" ? WitnessMap::pair_difference()
                                                  : WitnessMap::identity(rho1.lambda());
    std::vector<ExprPtr> samples;
    if (!samples_arg.empty())
      for (const auto& s : parse_json_arg(samples_arg)) samples.push_back(expr_from_json(s));
    if (samples.empty()) {
      samples = {SetExpr::geometric(2, 1), SetExpr::arith_prog(1, 3),
                 SetExpr::superincreasing(1, Rational(2))};
      if (!(rho1.omega() == Ground::omega()))
        fail(Errc::InvalidArgument, "supply --samples for non-omega generators");
    }
    auto rep = check_rho_witness(phi, rho2, rho1, samples, g.budget(), 3);
    rc = status_code(rep.status);
    emit(g, witness_report_to_json(rep));
  });

  std::string dot_path;
  auto* kat_matrix = kat->add_subcommand("matrix", "the curated relation matrix");
  kat_matrix->add_option("--dot", dot_path, "write DOT to this file");
  kat_matrix->callback([&] {
    auto m = RelationMatrix::curated();
    if (!dot_path.empty()) {
      std::ofstream out(dot_path);
      out << m.to_dot();
    }
    if (g.format == "dot") {
      std::cout << m.to_dot();
      return;
    }
    Json edges = Json::array();
    for (const auto& e : m.edges) edges.push_back(relation_edge_to_json(e));
    emit(g, Json{{"edges", edges}});
  });

  // ---- plike ----------------------------------------------------------------
  auto* plike_cmd = app.add_subcommand("plike", "P-like property machinery");
  plike_cmd->require_subcommand(1);
  std::string rho_arg = "\"FS\"", chain_arg;
  std::uint64_t parts_arg = 2, m_arg = 4;

  auto* diag = plike_cmd->add_subcommand("diagonalize", "P-minus diagonalization");
  diag->add_option("--rho", rho_arg, "descriptor (json)");
  diag->add_option("--chain", chain_arg, "chain description (json)")->required();
  diag->callback([&] {
    PRDescriptor rho = descriptor_from_json(parse_json_arg(rho_arg));
    ChainDesc chain = chain_from_json(parse_json_arg(chain_arg));
    auto d = pminus_diagonalize(rho, chain, g.depth, g.cap, g.budget());
    Json out{{"ok", d.ok}, {"detail", d.detail}};
    if (d.ok) {
      out["generator"] = d.generator;
      Json trims = Json::array();
      for (const auto& k : d.trims) trims.push_back(k);
      out["trims"] = trims;
      out["verified"] = d.verified;
      rc = d.verified ? kOk : kRefuted;
    } else {
      out["failing_level"] = d.failing_level;
      out["obstruction"] = d.obstruction;
      rc = kRefuted;
    }
    emit(g, out);
  });

  auto* weakpp = plike_cmd->add_subcommand("weakpp", "weak diagonal constructions");
  std::string base_arg;
  std::string weakpp_kind = "r";
  weakpp->add_option("--kind", weakpp_kind, "r | delta");
  weakpp->add_option("--base", base_arg, "base set expression (json)")->required();
  weakpp->add_option("--chain", chain_arg, "json array of chain levels")->required();
  weakpp->callback([&] {
    auto base = expr_from_json(parse_json_arg(base_arg));
    std::vector<ExprPtr> levels;
    for (const auto& l : parse_json_arg(chain_arg)) levels.push_back(expr_from_json(l));
    if (weakpp_kind == "delta") {
      auto r = weak_pplus_delta(base, levels, g.depth, g.cap);
      Json out{{"e_prime", r.e_prime},
               {"pick_indices", r.pick_indices},
               {"depth_used", r.depth_used},
               {"verified", r.verified}};
      rc = r.verified ? kOk : kRefuted;
      emit(g, out);
    } else {
      auto r = weak_pplus_r(base, levels, g.depth, g.cap);
      Json out{{"picks", r.picks}, {"verified", r.verified}};
      rc = r.verified ? kOk : kRefuted;
      emit(g, out);
    }
  });

  auto* notpp = plike_cmd->add_subcommand("notpp", "partition family and probe");
  notpp->add_option("--rho", rho_arg, "FS | Delta | r (json)");
  notpp->add_option("--parts", parts_arg, "number of parts");
  notpp->add_option("--probe", set_arg, "candidate generator expression (json)");
  notpp->callback([&] {
    PRDescriptor rho = descriptor_from_json(parse_json_arg(rho_arg));
    auto fam = not_pplus_family(rho.kind, parts_arg, g.cap);
    Json out{{"parts", Json::array()}, {"disjoint_verified", fam.disjoint_verified}};
    for (const auto& p : fam.parts) out["parts"].push_back(p);
    if (!set_arg.empty()) {
      auto ge = expr_from_json(parse_json_arg(set_arg));
      auto probe = not_pplus_probe(fam, eval_window(*ge, g.cap));
      out["probe"] = Json{{"case", probe.fired_case},
                          {"part", probe.part_index},
                          {"a", probe.a},
                          {"b", probe.b},
                          {"tau", probe.tau},
                          {"detail", probe.detail}};
      rc = probe.fired_case == 0 ? kInconclusive : kOk;
    }
    emit(g, out);
  });

  auto* notpm = plike_cmd->add_subcommand("notpm", "2-adic / star probes");
  notpm->add_option("--ideal", ideal_arg, "H | D | R")->required();
  notpm->add_option("--set", set_arg, "positive set expression (json)")->required();
  notpm->add_option("--m", m_arg, "required intersection count");
  notpm->callback([&] {
    auto id = ideal_from_json(parse_json_arg(ideal_arg));
    auto e = expr_from_json(parse_json_arg(set_arg));
    auto r = not_pminus_probe(id, *e, m_arg, g.cap, g.budget());
    emit(g, Json{{"k", r.k}, {"count", r.count}, {"sample", r.sample}, {"detail", r.detail}});
  });

  // ---- converge ----------------------------------------------------------------
  auto* conv = app.add_subcommand("converge", "convergence simulator");
  conv->require_subcommand(1);
  std::string space_arg, rule_arg, limit_arg, family_arg, samples2_arg;

  auto* cc = conv->add_subcommand("check", "verify rho-convergence");
  cc->add_option("--space", space_arg, "space description (json)")->required();
  cc->add_option("--f", rule_arg, "sequence rule (json)")->required();
  cc->add_option("--rho", rho_arg, "descriptor (json)");
  cc->add_option("--gen", set_arg, "generator expression (json)")->required();
  cc->add_option("--limit", limit_arg, "limit point (json)")->required();
  cc->callback([&] {
    auto space = space_from_json(parse_json_arg(space_arg));
    auto f = rule_from_json(parse_json_arg(rule_arg));
    PRDescriptor rho = descriptor_from_json(parse_json_arg(rho_arg));
    auto gen = expr_from_json(parse_json_arg(set_arg));
    Point limit = point_from_json(parse_json_arg(limit_arg));
    auto v = rho_converge_check(space, *f, rho, *gen, limit, g.depth, g.cap, g.budget());
    rc = status_code(v.status);
    emit(g, convergence_to_json(v));
  });

  auto* ca = conv->add_subcommand("alexandroff", "one-point compactification search");
  ca->add_option("--f", rule_arg, "sequence rule (json)")->required();
  ca->add_option("--rho", rho_arg, "descriptor (json)");
  ca->callback([&] {
    auto f = rule_from_json(parse_json_arg(rule_arg));
    PRDescriptor rho = descriptor_from_json(parse_json_arg(rho_arg));
    auto r = finbw_search_alexandroff(*f, rho, g.depth, g.cap, g.budget());
    Json out{{"found", r.found}, {"note", r.note}};
    if (r.found) {
      out["limit"] = point_to_json(r.limit);
      out["generator"] = expr_to_json(*r.generator);
      out["verdict"] = convergence_to_json(r.verdict);
      rc = status_code(r.verdict.status);
    } else {
      rc = r.inconclusive ? kInconclusive : kRefuted;
    }
    emit(g, out);
  });

  auto* cm = conv->add_subcommand("metric", "unit-interval ball refinement");
  cm->add_option("--f", rule_arg, "sequence rule (json)")->required();
  cm->add_option("--rho", rho_arg, "descriptor (json)");
  cm->callback([&] {
    auto f = rule_from_json(parse_json_arg(rule_arg));
    PRDescriptor rho = descriptor_from_json(parse_json_arg(rho_arg));
    auto r = metric_limit_search(*f, rho, g.depth, g.cap, g.budget());
    Json out{{"found", r.found}, {"note", r.note}};
    if (r.found) {
      out["limit"] = r.limit.get_str();
      Json stages = Json::array();
      for (const auto& s : r.stages)
        stages.push_back(Json{{"center", s.center.get_str()},
                              {"radius", s.radius.get_str()}});
      out["stages"] = stages;
      out["verdict"] = convergence_to_json(r.verdict);
      rc = status_code(r.verdict.status);
    } else {
      rc = r.inconclusive ? kInconclusive : kRefuted;
    }
    emit(g, out);
  });

  auto* cp = conv->add_subcommand("phi", "almost-disjoint-family classification");
  cp->add_option("--space", space_arg, "phi space description (json)")->required();
  cp->add_option("--f", rule_arg, "sequence rule (json)")->required();
  cp->add_option("--rho", rho_arg, "descriptor (json)");
  cp->callback([&] {
    auto space = space_from_json(parse_json_arg(space_arg));
    auto f = rule_from_json(parse_json_arg(rule_arg));
    PRDescriptor rho = descriptor_from_json(parse_json_arg(rho_arg));
    auto r = finbw_classify_phi(space, *f, rho, g.depth, g.cap, g.budget());
    Json out{{"case", r.case_id},
             {"resolved", r.resolved},
             {"fallback_used", r.fallback_used},
             {"note", r.note}};
    if (r.resolved) {
      out["limit"] = point_to_json(r.limit);
      out["generator"] = expr_to_json(*r.generator);
      out["verdict"] = convergence_to_json(r.verdict);
      rc = status_code(r.verdict.status);
    } else {
      rc = r.inconclusive ? kInconclusive : kRefuted;
    }
    emit(g, out);
  });

  auto* cmad = conv->add_subcommand("mad", "obstruction sampling");
  cmad->add_option("--family", family_arg, "json array of family expressions")->required();
  cmad->add_option("--rho", rho_arg, "descriptor (json)");
  cmad->add_option("--samples", samples2_arg, "json array of generator expressions")
      ->required();
  cmad->callback([&] {
    std::vector<ExprPtr> family, samples;
    for (const auto& a : parse_json_arg(family_arg)) family.push_back(expr_from_json(a));
    for (const auto& s : parse_json_arg(samples2_arg)) samples.push_back(expr_from_json(s));
    PRDescriptor rho = descriptor_from_json(parse_json_arg(rho_arg));
    auto r = mad_obstruction_check(family, rho, samples, g.trim > 8 ? 8 : g.trim, g.cap);
    Json out{{"holds", r.holds}};
    Json ws = Json::array();
    for (const auto& [s, i] : r.witnesses)
      ws.push_back(Json{{"sample", s}, {"family_index", i}});
    out["witnesses"] = ws;
    if (!r.holds) {
      out["counterexample"] = r.counterexample;
      rc = kRefuted;
    }
    emit(g, out);
  });

  // ---- pr-verify ----------------------------------------------------------------
  auto* pv = app.add_subcommand("pr-verify", "finite threshold searches");
  pv->require_subcommand(1);
  unsigned pv_k = 3, pv_colors = 2;
  std::uint64_t pv_nmax = 64;
  bool pv_distinct = false;

  auto* pvv = pv->add_subcommand("vdw", "van der Waerden threshold");
  pvv->add_option("--k", pv_k, "progression length");
  pvv->add_option("--colors", pv_colors, "number of colors");
  pvv->add_option("--n-max", pv_nmax, "search cap");
  pvv->callback([&] {
    auto r = vdw_threshold(pv_k, pv_colors, pv_nmax, g.workers);
    Json out{{"k", pv_k},
             {"colors", pv_colors},
             {"threshold", r.threshold},
             {"avoiding_coloring", r.extremal_coloring}};
    if (g.recheck) {
      // the emitted coloring really avoids monochromatic progressions
      bool ok = true;
      const auto& col = r.extremal_coloring;
      for (std::uint64_t a = 1; a + (pv_k - 1) <= col.size(); ++a)
        for (std::uint64_t d = 1; a + (pv_k - 1) * d <= col.size(); ++d) {
          bool mono = true;
          for (unsigned i = 1; i < pv_k; ++i)
            if (col[a + i * d - 1] != col[a - 1]) mono = false;
          if (mono) ok = false;
        }
      out["recheck"] = ok;
      if (!ok) rc = kRefuted;
    }
    emit(g, out);
  });

  auto* pvs = pv->add_subcommand("schur", "Schur threshold");
  pvs->add_option("--colors", pv_colors, "number of colors");
  pvs->add_flag("--distinct", pv_distinct, "require x != y");
  pvs->add_option("--n-max", pv_nmax, "search cap");
  pvs->callback([&] {
    auto r = schur_threshold(pv_colors, pv_distinct, pv_nmax, g.workers);
    Json out{{"colors", pv_colors},
             {"distinct", pv_distinct},
             {"threshold", r.threshold},
             {"avoiding_coloring", r.extremal_coloring}};
    if (g.recheck) {
      bool ok = true;
      const auto& col = r.extremal_coloring;
      for (std::uint64_t x = 1; x <= col.size(); ++x)
        for (std::uint64_t y = x; x + y <= col.size(); ++y) {
          if (pv_distinct && x == y) continue;
          if (col[x - 1] == col[y - 1] && col[y - 1] == col[x + y - 1]) ok = false;
        }
      out["recheck"] = ok;
      if (!ok) rc = kRefuted;
    }
    emit(g, out);
  });

  // global flags may appear after any subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough(true);
    for (auto* sub : a->get_subcommands({})) enable_fallthrough(sub);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::Exhausted:
      case Errc::ThresholdAboveCap:
      case Errc::SearchExhausted:
        return kInconclusive;
      default:
        return kInputError;
    }
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return rc;
}
