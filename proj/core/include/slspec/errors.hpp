#ifndef SLSPEC_ERRORS_HPP
#define SLSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sl {

// Process-level failure classes.  Exit codes are part of the tool contract:
// 0 success, 2 io, 3 validation, 4 solvability, 5 numerical.
class Error : public std::runtime_error {
public:
  Error(std::string kind, std::string code, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)), code_(std::move(code)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

  int exit_code() const noexcept {
    if (kind_ == "io") return 2;
    if (kind_ == "validation") return 3;
    if (kind_ == "solvability") return 4;
    return 5;  // numerical
  }

private:
  std::string kind_;
  std::string code_;
};

class IoError : public Error {
public:
  IoError(std::string code, const std::string& msg) : Error("io", std::move(code), msg) {}
};

// Malformed or inconsistent inputs: grid shape, zero weights, data collisions,
// failed spectral-data admissibility checks.
class ValidationError : public Error {
public:
  ValidationError(std::string code, const std::string& msg)
      : Error("validation", std::move(code), msg) {}
};

// Singular or unusable linear systems.
class SolvabilityError : public Error {
public:
  SolvabilityError(std::string code, const std::string& msg)
      : Error("solvability", std::move(code), msg) {}
};

// Runtime numerical failures: overflow ranges, failed searches, budget
// exhaustion, cross-checks that disagree.
class NumericalError : public Error {
public:
  NumericalError(std::string code, const std::string& msg)
      : Error("numerical", std::move(code), msg) {}
};

}  // namespace sl

#endif
