#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace septool {

/// Failure categories raised by the toolkit. The CLI maps these onto exit codes.
enum class Errc {
  VariableMismatch,
  DivisionByZero,
  NotAUnit,
  NotDivisible,
  CompositionUndefined,
  TruncationTooSmall,
  NotSingular,
  IdenticallyZeroCone,
  ResonanceError,
  NotPrepared,
  DegenerateCurve,
  ZeroOnCircle,
  TruncationTooCoarse,
  NoStabilization,
  ParityError,
  InsufficientData,
  HypothesisViolated,
  ParseError,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  /// what() without the leading "Name: ".
  std::string message() const;

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace septool
