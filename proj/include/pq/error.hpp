#pragma once

#include <stdexcept>
#include <string>

namespace pq {

// Root of everything the library throws on a contract violation.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "error"; }
};

class VarSpecMismatch : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "varspec_mismatch"; }
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "unknown_variable"; }
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_argument"; }
};

class InvalidParams : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_params"; }
};

class StepBudgetExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "step_budget_exceeded"; }
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "verification_failure"; }
};

}  // namespace pq
