#pragma once

#include <stdexcept>
#include <string>

namespace prcomb {

enum class Errc {
  DepthLimit,
  Exhausted,
  ZeroElement,
  TooFewElements,
  NotSparse,
  NotRepresentable,
  NotLacunary,
  NotSuperincreasing,
  DecodingFailed,
  CertificateMissing,
  DomainViolation,
  GroundSetMismatch,
  SearchExhausted,
  ThresholdAboveCap,
  RuleUnsupported,
  VerificationFailed,
  InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace prcomb
