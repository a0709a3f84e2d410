#pragma once

#include <stdexcept>
#include <string>

namespace minrep {

enum class errc {
  NotCoprime,
  OutOfRange,
  BothEven,
  NoOddRepresentative,
  NonCanonicalLabel,
  NotPrimeCase,
  OutOfScopeDimension,
  IrreducibilityUnknown,
  SubsetBlowup,
  NotPrime,
  HypothesisNotMet,
  DimensionTooLarge,
  InvalidCase,
  NotLowDimCase,
  OddIndex,
  OddWeight,
  IncompatibleExponents,
  InhomogeneousOperator,
  WeightMismatch,
  ParseError,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

}  // namespace minrep
