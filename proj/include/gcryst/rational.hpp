#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "gcryst/errors.hpp"

namespace gcryst {

// Exact rational number, always normalized: den > 0, gcd(|num|, den) = 1,
// zero stored as 0/1.  This is the carrier of the geometric (rational)
// semifield; division by zero throws instead of being left undefined.
class Rat {
 public:
  static constexpr bool has_subtraction = true;

  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rat(int n) : v_(n) {}
  explicit Rat(const mpz_class& n) : v_(n) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroDenominator();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }

  // Parses "p/q" or "p"; used by all JSON payloads.
  static Rat from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(mpz_class(s), mpz_class(1));
    return Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  }

  bool is_zero() const { return v_ == 0; }
  bool is_positive() const { return v_ > 0; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  Rat inv() const {
    if (is_zero()) throw NonInvertible();
    return Rat(v_.get_den(), v_.get_num());
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw NonInvertible();
    return Rat(mpq_class(a.v_ / b.v_));
  }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  Rat& operator+=(const Rat& b) { v_ += b.v_; return *this; }
  Rat& operator-=(const Rat& b) { v_ -= b.v_; return *this; }
  Rat& operator*=(const Rat& b) { v_ *= b.v_; return *this; }
  Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

inline Rat rat_make(long num, long den) { return Rat(num, den); }

}  // namespace gcryst
