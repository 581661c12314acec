#pragma once

// Exact Gaussian-rational scalars. Every coefficient in the engine lives here;
// there is no floating-point path anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace rcq {

using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when an operation leaves its mathematical domain
/// (non-invertible germ, division by zero, negative order, ...).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised on malformed external input (JSON, CLI arguments).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// a + b i with a, b exact rationals.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar ratio(long num, long den) { return Scalar(make_rational(num, den)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar pow(int e) const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// n! as an exact rational.
Rational factorial(int n);
/// Binomial coefficient C(n, k) for integer n (possibly negative) and k >= 0.
Rational binomial(long n, long k);
/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
Scalar pochhammer(const Scalar& a, int k);

}  // namespace rcq
