#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dnq {

// Every failure the library reports carries one of these codes. The CLI maps
// them onto exit codes and the "code" field of error records.
enum class Errc {
  InvalidArgument,
  NonPositiveRadicand,
  NotSquareFree,
  WrongResidue,
  RadicandTooLarge,
  PerfectSquare,
  ContextMismatch,
  NotDivisible,
  DivisionByZeroNorm,
  ZeroElement,
  OutOfScopeNorm,
  FormViolation,
  BoundOverflowPolicy,
  Unsolvable,
  TheoremViolation,
  PreconditionFailed,
  SClassNoQuadruple,
  UncoveredClass,
  MissingAux,
  WrongSeedNorm,
  ParityFailure,
  Degenerate,
  VerificationFailure,
  NonIntegralFormula,
  RetriesExhausted,
  ZeroScalar,
  NotAWitness,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dnq
