#pragma once

#include <stdexcept>
#include <string>

namespace mvz {

/// Category decides the CLI exit code.
enum class ErrorKind {
  InvalidInput,  ///< exit 1
  Bound,         ///< exit 2: a configured bound was exhausted
  Internal,      ///< invariant violation; exit 1
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Stable machine-readable identifier, e.g. "dimension_mismatch".
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& message, std::string code = "invalid_input")
      : Error(ErrorKind::InvalidInput, std::move(code), message) {}
};

struct DimensionMismatch : InvalidInput {
  explicit DimensionMismatch(const std::string& message)
      : InvalidInput(message, "dimension_mismatch") {}
};

struct ConstantTermNotOne : InvalidInput {
  ConstantTermNotOne() : InvalidInput("constant term must equal 1", "constant_term_not_one") {}
};

struct NotInDual : InvalidInput {
  explicit NotInDual(const std::string& message) : InvalidInput(message, "not_in_dual") {}
};

struct ZeroH : InvalidInput {
  ZeroH() : InvalidInput("h - 1 is identically zero", "zero_h") {}
};

struct CutoffExceeded : Error {
  explicit CutoffExceeded(const std::string& message)
      : Error(ErrorKind::Bound, "cutoff_exceeded", message) {}
};

struct InconclusiveBound : Error {
  explicit InconclusiveBound(const std::string& message)
      : Error(ErrorKind::Bound, "inconclusive_bound", message) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& message)
      : Error(ErrorKind::Bound, "budget_exceeded", message) {}
};

struct NonIntegralExponent : Error {
  explicit NonIntegralExponent(const std::string& message)
      : Error(ErrorKind::Internal, "non_integral_exponent", message) {}
};

struct CprimeViolation : Error {
  explicit CprimeViolation(const std::string& message)
      : Error(ErrorKind::Internal, "cprime_violation", message) {}
};

struct NonPositiveFactor : Error {
  explicit NonPositiveFactor(const std::string& message)
      : Error(ErrorKind::Internal, "non_positive_factor", message) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& message)
      : Error(ErrorKind::Internal, "internal_error", message) {}
};

}  // namespace mvz
