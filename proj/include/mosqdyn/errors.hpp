#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mosqdyn {

/// Raised when a parameter vector lies outside its admissible domain.
/// Every violated constraint is listed, not just the first one.
class DomainError : public std::invalid_argument {
 public:
  struct Violation {
    std::string field;
    std::string message;
  };

  explicit DomainError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }
  /// True if `field` (e.g. "alpha") is among the violated constraints.
  bool violates(const std::string& field) const noexcept;

 private:
  std::vector<Violation> violations_;
};

class NotAFixedPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OutsideTheta : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotQuadrantPreserving : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OutsideInvariantRegion : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateAllZero : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mosqdyn
