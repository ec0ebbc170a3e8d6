#pragma once

#include <stdexcept>
#include <string>

namespace periodmap {

// Malformed input: bad JSON, unparsable rationals, dimension mismatches.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematically well-formed request outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Float-path failures such as p.q < 1 between hyperboloid points.
class NumericalDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InconsistentDataError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateSimplexError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ResourceError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ResolutionError : public DomainError {
 public:
  ResolutionError(const std::string& what, double achieved)
      : DomainError(what), achieved_(achieved) {}

  double achieved_distance() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace periodmap
