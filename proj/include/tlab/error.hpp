#pragma once

#include <stdexcept>
#include <string>

namespace tlab {

enum class ErrorCode {
  BadInput,
  BadOrder,
  Degenerate,
  NotStrict2,
  TangentPair,
  PreViolated,
  ProjParallel,
  BudgetExceeded,
  GenFailed,
  NoSections,
  NotPairwise,
  NotGood,
  UnknownSuite,
  VerifyFailed,
};

const char* error_code_name(ErrorCode c);

// Thrown on violated preconditions and unusable inputs. Expected in-band
// outcomes (EMPTY, NONE, failure reports) are modeled as return values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tlab
