#pragma once

#include <concepts>
#include <span>
#include <vector>

#include "gcryst/errors.hpp"
#include "gcryst/rational.hpp"
#include "gcryst/tropical.hpp"

namespace gcryst {

// Commutative semiring with named additive/multiplicative identities.
// Rat, Trop and LoopPoly model this; everything subtraction-free in the
// library is written against it.
template <class T>
concept Semiring = requires(const T& a, const T& b) {
  { T::zero() } -> std::convertible_to<T>;
  { T::one() } -> std::convertible_to<T>;
  { a + b } -> std::convertible_to<T>;
  { a* b } -> std::convertible_to<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

// Semifield: multiplicative inverses of nonzero elements.  Rat and Trop
// model this; the capability flag has_subtraction distinguishes them.
template <class T>
concept Semifield = Semiring<T> && requires(const T& a, const T& b) {
  { a.inv() } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
};

template <class T>
inline constexpr bool has_subtraction_v = T::has_subtraction;

// gMax(f_1, ..., f_k) = 1 / (f_1^{-1} + ... + f_k^{-1}), with gMax() = 1.
// Tropicalizes to max; in the rational field gMax(a, a, ..., a) = a/k.
template <Semifield T>
T gmax(std::span<const T> values) {
  if (values.empty()) return T::one();
  T acc = values[0].inv();
  for (std::size_t i = 1; i < values.size(); ++i) acc = acc + values[i].inv();
  return acc.inv();
}

template <Semifield T>
T gmax(const T& a, const T& b) {
  return (a.inv() + b.inv()).inv();
}

template <Semifield T>
T gmax(std::initializer_list<T> values) {
  std::vector<T> v(values);
  return gmax(std::span<const T>(v));
}

}  // namespace gcryst
