#include "septool/error.hpp"

namespace septool {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::VariableMismatch: return "VariableMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::CompositionUndefined: return "CompositionUndefined";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::NotSingular: return "NotSingular";
    case Errc::IdenticallyZeroCone: return "IdenticallyZeroCone";
    case Errc::ResonanceError: return "ResonanceError";
    case Errc::NotPrepared: return "NotPrepared";
    case Errc::DegenerateCurve: return "DegenerateCurve";
    case Errc::ZeroOnCircle: return "ZeroOnCircle";
    case Errc::TruncationTooCoarse: return "TruncationTooCoarse";
    case Errc::NoStabilization: return "NoStabilization";
    case Errc::ParityError: return "ParityError";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

std::string Error::message() const {
  std::string_view w = what();
  const std::size_t skip = errc_name(code_).size() + 2;
  return std::string(w.size() >= skip ? w.substr(skip) : w);
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace septool
