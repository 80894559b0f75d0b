#pragma once

#include <stdexcept>
#include <string>

namespace catcolim {

enum class ErrorCode {
  ParseError,
  UnresolvedReference,
  NonParallelRelation,
  DuplicateName,
  NotComposable,
  NotParallel,
  NotSaturated,
  IncoherentDiagram,
  NoncommutativeObjectTable,
  IncoherentSymmetry,
  IllDefinedProduct,
  ConditionsNotSatisfied,
  UnknownEquality,
  BoundExceeded,
  Unsupported,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace catcolim
