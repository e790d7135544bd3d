#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "gcryst/errors.hpp"

namespace gcryst {

// Element of the tropical semifield (Z, min, +, -), plus an explicit
// "absent" marker that serves as the additive identity.  Absent entries
// stand for the structural zeros of matrices (min has no absorbing
// identity in Z); they never arise from arithmetic on present values.
//
// Semiring operators are spelled like ordinary arithmetic so that code
// generic over the semifield reads identically in both modes:
//   a + b = min(a, b),   a * b = a + b,   inv(a) = -a,   one = 0.
class Trop {
 public:
  static constexpr bool has_subtraction = false;

  Trop() : absent_(true) {}
  Trop(long v) : absent_(false), v_(v) {}  // NOLINT: implicit by design
  Trop(long long v) : absent_(false), v_(static_cast<long>(v)) {}
  Trop(int v) : absent_(false), v_(v) {}
  explicit Trop(const mpz_class& v) : absent_(false), v_(v) {}

  static Trop zero() { return Trop(); }
  static Trop one() { return Trop(0); }

  bool is_zero() const { return absent_; }
  bool is_absent() const { return absent_; }
  const mpz_class& value() const {
    if (absent_) throw NonInvertible();
    return v_;
  }

  Trop inv() const {
    if (absent_) throw NonInvertible();
    return Trop(mpz_class(-v_));
  }

  friend Trop operator+(const Trop& a, const Trop& b) {
    if (a.absent_) return b;
    if (b.absent_) return a;
    return Trop(a.v_ <= b.v_ ? a.v_ : b.v_);
  }
  friend Trop operator*(const Trop& a, const Trop& b) {
    if (a.absent_ || b.absent_) return Trop();
    return Trop(mpz_class(a.v_ + b.v_));
  }
  friend Trop operator/(const Trop& a, const Trop& b) { return a * b.inv(); }

  Trop& operator+=(const Trop& b) { *this = *this + b; return *this; }
  Trop& operator*=(const Trop& b) { *this = *this * b; return *this; }

  friend bool operator==(const Trop& a, const Trop& b) {
    if (a.absent_ != b.absent_) return false;
    return a.absent_ || a.v_ == b.v_;
  }
  friend bool operator!=(const Trop& a, const Trop& b) { return !(a == b); }

  std::string to_string() const { return absent_ ? "absent" : v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Trop& t) {
    return os << t.to_string();
  }

 private:
  bool absent_;
  mpz_class v_;
};

}  // namespace gcryst
