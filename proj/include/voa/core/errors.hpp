#pragma once

#include <stdexcept>
#include <string>

namespace voa {

/// Base of every domain error raised by the library. `code()` is the
/// machine-readable tag the CLI puts into its error object.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define VOA_DEFINE_ERROR(Name, tag)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(tag, what) {}      \
  }

VOA_DEFINE_ERROR(ShapeError, "shape");
VOA_DEFINE_ERROR(PrecisionError, "insufficient_precision");
VOA_DEFINE_ERROR(DegenerateInputError, "degenerate_input");
VOA_DEFINE_ERROR(DomainError, "domain");
VOA_DEFINE_ERROR(CentralityError, "not_central");
VOA_DEFINE_ERROR(CriticalLevelError, "critical_level");
VOA_DEFINE_ERROR(TruncationTooSmallError, "truncation_too_small");
VOA_DEFINE_ERROR(UnsupportedStateError, "unsupported_state");
VOA_DEFINE_ERROR(GaugeError, "gauge");
VOA_DEFINE_ERROR(OperShapeError, "oper_shape");
VOA_DEFINE_ERROR(BranchError, "branch");
VOA_DEFINE_ERROR(UnsupportedSpectrumError, "unsupported_spectrum");
VOA_DEFINE_ERROR(LogCapError, "log_cap");
VOA_DEFINE_ERROR(NilpotencyError, "not_nilpotent");
VOA_DEFINE_ERROR(InvarianceError, "not_invariant");
VOA_DEFINE_ERROR(ParseError, "parse");

#undef VOA_DEFINE_ERROR

}  // namespace voa
