#include "rcq/scalar.hpp"

#include <sstream>

namespace rcq {

Rational make_rational(long num, long den) {
  if (den == 0) throw MathError("rational with zero denominator");
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw MathError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Scalar Scalar::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw MathError("division by zero scalar");
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // real-by-real is the hot path
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw MathError("division by zero scalar");
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (sgn(im_) == 0) {
    os << re_;
  } else if (sgn(re_) == 0) {
    if (im_ == 1) {
      os << "i";
    } else if (im_ == -1) {
      os << "-i";
    } else {
      os << im_ << "*i";
    }
  } else {
    os << "(" << re_ << (sgn(im_) > 0 ? "+" : "-");
    Rational a = abs(im_);
    if (a != 1) os << a << "*";
    os << "i)";
  }
  return os.str();
}

Rational factorial(int n) {
  if (n < 0) throw MathError("factorial of negative integer");
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return Rational(r);
}

Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  Rational r = 1;
  for (long j = 0; j < k; ++j) {
    r *= Rational(n - j);
    r /= Rational(j + 1);
  }
  return r;
}

Scalar pochhammer(const Scalar& a, int k) {
  if (k < 0) throw MathError("negative Pochhammer length");
  Scalar r(1);
  for (int j = 0; j < k; ++j) r *= a + Scalar(j);
  return r;
}

}  // namespace rcq
