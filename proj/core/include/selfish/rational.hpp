#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "selfish/errors.hpp"

namespace selfish {

// All game logic runs on exact rationals. Equilibrium conditions are strict
// inequalities that can be separated by quantities as small as (4n)^-3s, so
// floating point is banned from everything except report rendering.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". The denominator must be nonzero.
Rational parse_rational(const std::string& text);

/// Canonical rendering: "p" for integers, "p/q" otherwise, q > 0, gcd = 1.
std::string rat_str(const Rational& r);

double rat_double(const Rational& r);

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

/// Smallest integer >= r.
BigInt rat_ceil(const Rational& r);

/// Largest integer <= r.
BigInt rat_floor(const Rational& r);

/// A rational extended with a single +infinity, used for costs of invalid
/// packings, undefined envy ratios and unbounded anarchy ratios.
class ExtRational {
 public:
  ExtRational() : finite_(true), value_(0) {}
  ExtRational(Rational v) : finite_(true), value_(std::move(v)) {}  // NOLINT: implicit by design
  ExtRational(int v) : finite_(true), value_(v) {}                  // NOLINT

  static ExtRational infinity() {
    ExtRational e;
    e.finite_ = false;
    return e;
  }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }

  const Rational& value() const {
    if (!finite_) throw DomainError("ExtRational: value() on infinity");
    return value_;
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::greater;
    if (!b.finite_) return std::strong_ordering::less;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  std::string str() const { return finite_ ? rat_str(value_) : "inf"; }

 private:
  bool finite_;
  Rational value_;
};

/// num/den with the maximization-game conventions: den = 0 and num > 0 gives
/// infinity, 0/0 gives 1.
ExtRational ratio_with_zero_convention(const Rational& num, const Rational& den);

}  // namespace selfish
