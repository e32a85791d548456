#pragma once

#include <stdexcept>
#include <string>

namespace mvalg {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A constructor or operation received an argument outside its contract
/// (n < 2 for a chain, an empty product list, a malformed table, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// Axiom validation failed; carries the name of the first violated axiom
/// and the witness elements, as rendered into the message.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& axiom, const std::string& detail)
      : Error("axiom '" + axiom + "' violated: " + detail), axiom_(axiom) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

/// x + y requested with x > ¬y, or an n-fold sum hit an undefined step.
class UndefinedPartialSumError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (non-regular algebra fed to the
/// center-preservation check, non-Boolean input to the powerset map, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size guard tripped (carrier or ideal-count limit).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. These guard theorems that must hold for
/// every validated input; their firing is a bug, not a user error.
class InternalCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvalg
