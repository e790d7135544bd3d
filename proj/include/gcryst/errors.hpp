#pragma once

#include <stdexcept>
#include <string>

namespace gcryst {

struct ZeroDenominator : std::domain_error {
  ZeroDenominator() : std::domain_error("rational with zero denominator") {}
};

struct NonInvertible : std::domain_error {
  NonInvertible() : std::domain_error("inverse of additive zero") {}
};

// Raised when an operation needs subtraction and the carrier has none
// (determinants and flag minors in tropical mode).
struct CapabilityError : std::domain_error {
  explicit CapabilityError(const std::string& what) : std::domain_error(what) {}
};

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("matrix is singular") {}
};

struct VanishingMinor : std::domain_error {
  VanishingMinor() : std::domain_error("required flag minor vanishes") {}
};

struct ForbiddenToggle : std::domain_error {
  ForbiddenToggle() : std::domain_error("toggle T at the (m,n) corner is not defined") {}
};

struct NotDominant : std::domain_error {
  NotDominant() : std::domain_error("exponent matrix is not dominant") {}
};

struct NotSemistandard : std::domain_error {
  NotSemistandard() : std::domain_error("filling is not semistandard") {}
};

}  // namespace gcryst
