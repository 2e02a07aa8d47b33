#pragma once

#include <memory>
#include <string>

#include "prcomb/set_expr.hpp"

namespace prcomb {

enum class IdealTag : std::uint8_t {
  Hindman,        // H, on omega
  Ramsey,         // R, on pairs
  Diff,           // D, on omega
  Vdw,            // W, on omega
  Summable,       // I_{1/n}, on omega
  Fin,            // on omega
  Fin2,           // on omega^2
  FinOplusFin2,   // on omega |_| omega^2
  BI,             // on omega^3
  Restrict,       // base restricted to a positive set B
  Oplus,          // left (+) right
};

struct IdealId {
  IdealTag tag = IdealTag::Fin;
  std::shared_ptr<const IdealId> left, right;  // Oplus / Restrict base in `left`
  ExprPtr restrict_to;                         // Restrict

  static IdealId hindman() { return {IdealTag::Hindman, nullptr, nullptr, nullptr}; }
  static IdealId ramsey() { return {IdealTag::Ramsey, nullptr, nullptr, nullptr}; }
  static IdealId diff() { return {IdealTag::Diff, nullptr, nullptr, nullptr}; }
  static IdealId vdw() { return {IdealTag::Vdw, nullptr, nullptr, nullptr}; }
  static IdealId summable() { return {IdealTag::Summable, nullptr, nullptr, nullptr}; }
  static IdealId fin() { return {IdealTag::Fin, nullptr, nullptr, nullptr}; }
  static IdealId fin2() { return {IdealTag::Fin2, nullptr, nullptr, nullptr}; }
  static IdealId fin_oplus_fin2() { return {IdealTag::FinOplusFin2, nullptr, nullptr, nullptr}; }
  static IdealId bi() { return {IdealTag::BI, nullptr, nullptr, nullptr}; }
  static IdealId restrict(IdealId base, ExprPtr b) {
    return {IdealTag::Restrict, std::make_shared<IdealId>(std::move(base)), nullptr,
            std::move(b)};
  }
  static IdealId oplus(IdealId l, IdealId r) {
    return {IdealTag::Oplus, std::make_shared<IdealId>(std::move(l)),
            std::make_shared<IdealId>(std::move(r)), nullptr};
  }

  Ground ground() const;
  std::string name() const;
};

}  // namespace prcomb
