#pragma once

#include <stdexcept>
#include <string>

namespace pdfrel {

// Numeric values are mirrored by the pdfrel_status codes of the C API.
enum class ErrorCode : int {
  kUnknownFamily = 1,
  kParamOutOfRange = 2,
  kMalformedSpec = 3,
  kPOutOfRange = 4,
  kYNotAttained = 5,
  kNotUnimodal = 6,
  kDegenerateLaw = 7,
  kYOutOfRange = 8,
  kNotSymmetricUnimodal = 9,
  kNotMonotone = 10,
  kTOutOfSupport = 11,
  kCaseUnsupported = 12,
  kAtBranchBoundary = 13,
  kFlatZone = 14,
  kPreconditionViolated = 15,
  kUnknownTheorem = 16,
  kIntegralDiverged = 17,
  kXOutOfSupport = 18,
  kBadUVOrder = 19,
  kInvalidArgument = 20,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace pdfrel
