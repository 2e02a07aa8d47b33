#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prcomb/ideal_id.hpp"
#include "prcomb/pr_ops.hpp"
#include "prcomb/rational.hpp"

namespace prcomb {

struct Budget {
  std::uint64_t cap = 100'000;  // window bound N
  unsigned gen = 3;             // generator size d
  unsigned ap_len = 8;          // AP length k
  std::uint64_t nodes = 5'000'000;
  unsigned trim = 64;           // trim-set size allowance
};

enum class VerdictStatus : std::uint8_t { In, NotIn, Unknown };

/// Structure-bearing certificate. Every NOT_IN certificate re-checks inside
/// the window independently of the search that produced it; IN certificates
/// name the closed-form argument.
struct Certificate {
  std::string kind;  // finite | ap | fs_witness | delta_witness | clique |
                     // two_adic | sum_free | ap_free | matching | growth |
                     // slices | none
  std::vector<std::uint64_t> elements;
  std::uint64_t ap_start = 0, ap_step = 0, ap_len = 0;
  std::uint64_t param = 0;
  std::optional<Rational> partial_sum;
  std::string note;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::Unknown;
  Budget used;
  Certificate cert;
  bool complete = true;  // false when a node budget truncated a search
};

/// Graded bounded-budget membership. NOT_IN needs a found witness structure;
/// IN needs a closed-form certificate; everything else is UNKNOWN with the
/// consumed budget attached.
Verdict membership(const IdealId& ideal, const SetExpr& a, const Budget& budget);

/// The fixed library of IN certificates (2-adic class, sum-free growth,
/// progression-free growth, matching, summable growth, finiteness). Empty
/// when the expression is outside the recognized closed class. Hereditary:
/// a certificate for A covers every subset of A.
std::optional<Certificate> closed_form_in(const IdealId& ideal, const SetExpr& a);

/// Re-validates a verdict's certificate against the window, bypassing search.
bool recheck_certificate(const IdealId& ideal, const SetExpr& a, const Verdict& v);

/// Column-slice analysis for the omega^2 ideal; exact on the closed class.
Verdict fin2_membership(const SetExpr& grid, const Budget& budget);

struct TallWitness {
  ExprPtr b;
  std::vector<std::uint64_t> elements;
  Certificate cert;
};

/// Infinite B inside A with B in the ideal, at window scale: a factor-2
/// superincreasing subset for the omega ideals, a greedy matching for R.
TallWitness tall_witness(const IdealId& ideal, const SetExpr& a, std::uint64_t count,
                         const Budget& budget);

const char* to_string(VerdictStatus s);

}  // namespace prcomb
