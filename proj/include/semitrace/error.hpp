#ifndef SEMITRACE_ERROR_HPP_
#define SEMITRACE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace semitrace {

  enum class ErrorCode {
    EmptyInput,
    InvalidGenerator,
    NonPrimitive,
    NotAnElement,
    TrivialSemigroup,
    BaseMismatch,
    InternalInconsistency,
    NotMinimal,
    SymmetricInput,
    LabelMismatch,
    BadParams,
    GcdFail,
    Degenerate,
    ThresholdViolation,
    BadRange,
    Overflow,
    ResourceLimit
  };

  constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::EmptyInput: return "EmptyInput";
      case ErrorCode::InvalidGenerator: return "InvalidGenerator";
      case ErrorCode::NonPrimitive: return "NonPrimitive";
      case ErrorCode::NotAnElement: return "NotAnElement";
      case ErrorCode::TrivialSemigroup: return "TrivialSemigroup";
      case ErrorCode::BaseMismatch: return "BaseMismatch";
      case ErrorCode::InternalInconsistency: return "InternalInconsistency";
      case ErrorCode::NotMinimal: return "NotMinimal";
      case ErrorCode::SymmetricInput: return "SymmetricInput";
      case ErrorCode::LabelMismatch: return "LabelMismatch";
      case ErrorCode::BadParams: return "BadParams";
      case ErrorCode::GcdFail: return "GcdFail";
      case ErrorCode::Degenerate: return "Degenerate";
      case ErrorCode::ThresholdViolation: return "ThresholdViolation";
      case ErrorCode::BadRange: return "BadRange";
      case ErrorCode::Overflow: return "Overflow";
      case ErrorCode::ResourceLimit: return "ResourceLimit";
    }
    return "Unknown";
  }

  //! Every failure raised by the library carries one of the codes above so
  //! that callers (the CLI in particular) can map it onto an exit status.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  namespace detail {
    [[noreturn]] inline void fail(ErrorCode code, std::string const& what) {
      throw Error(code, what);
    }

    inline void ensure(bool cond, std::string const& what) {
      if (!cond) {
        fail(ErrorCode::InternalInconsistency, what);
      }
    }
  }  // namespace detail

}  // namespace semitrace

#endif  // SEMITRACE_ERROR_HPP_
