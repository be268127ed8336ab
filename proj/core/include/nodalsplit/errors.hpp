#pragma once

#include <stdexcept>
#include <string>

namespace nodalsplit {

enum class ErrorCode {
  kSyntaxError,
  kNotHomogeneous,
  kDegreeTooLarge,
  kReducibleMinimalPolynomial,
  kFieldMismatch,
  kInhomogeneousImage,
  kDegreeMismatch,
  kPointNotOnConic,
  kConicNotSmooth,
  kCommonComponent,
  kShearExhausted,
  kTooManyNodes,
  kNotTangentLine,
  kSearchBudgetExceeded,
  kWrongNodeCount,
  kNodeDegenerate,
  kLineThroughNode,
  kHyperplaneThroughNode,
  kQuadricSingularAtNode,
  kUnknownExample,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kSyntaxError,
              "syntax error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nodalsplit
