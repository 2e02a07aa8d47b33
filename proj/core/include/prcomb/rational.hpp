#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace prcomb {

using Rational = mpq_class;

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace prcomb
