#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "strongq/errors.hpp"

namespace strongq {

using Rational = mpq_class;

// Element a + b*sqrt(d) of Q(sqrt(d)), with a, b rational and d a square-free
// nonnegative integer.  d == 0 encodes a plain rational (then b == 0).
// Values are normalized on construction: square factors are pulled out of d,
// sqrt(1) folds into the rational part, and b == 0 forces d = 0, so equality
// and zero tests are plain component comparisons.
class ExactScalar {
 public:
  ExactScalar() : a_(0), b_(0), d_(0) {}
  ExactScalar(int v) : a_(v), b_(0), d_(0) {}          // NOLINT(runtime/explicit)
  ExactScalar(long v) : a_(v), b_(0), d_(0) {}         // NOLINT(runtime/explicit)
  ExactScalar(const Rational& a) : a_(a), b_(0), d_(0) {}  // NOLINT
  ExactScalar(Rational a, Rational b, std::uint64_t d);

  // sqrt(d) itself, normalized (sqrt(12) -> 2*sqrt(3)).
  static ExactScalar sqrt_of(std::uint64_t d);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  std::uint64_t radicand() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return d_ == 0; }

  // -1, 0, +1.  Exact: never consults floating point.
  int sign() const;
  ExactScalar abs() const { return sign() < 0 ? -*this : *this; }

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }
  friend bool operator<(const ExactScalar& x, const ExactScalar& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const ExactScalar& x, const ExactScalar& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const ExactScalar& x, const ExactScalar& y) { return y < x; }
  friend bool operator>=(const ExactScalar& x, const ExactScalar& y) { return y <= x; }

  double to_double() const;

  // "p/q" or "p/q+r/s*sqrt(d)" (minus sign folded in front of the surd term).
  std::string to_string() const;
  // Whitespace-insensitive inverse of to_string; also accepts "sqrt(d)",
  // "-sqrt(d)" and "b*sqrt(d)" without the rational part.
  static ExactScalar parse(std::string_view text);

  // Common field of two radicands; 0 joins with anything.
  // Throws InvalidFieldError when both are nonzero and differ.
  static std::uint64_t join_radicand(std::uint64_t d1, std::uint64_t d2);

 private:
  Rational a_, b_;
  std::uint64_t d_;

  void normalize();
  // Coerces both operands into one field, throwing on a mismatch.
  static std::uint64_t align(ExactScalar& x, ExactScalar& y);
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

}  // namespace strongq
