#pragma once

// Power series in q known modulo q^(prec+1), with exact rational coefficients.

#include <string>
#include <vector>

#include "rcq/scalar.hpp"

namespace rcq {

inline constexpr int kDefaultQPrecision = 20;

class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(int prec) : coeffs_(prec + 1) {
    if (prec < 0) throw MathError("negative q-precision");
  }
  QSeries(int prec, std::vector<Rational> coeffs);
  static QSeries constant(const Rational& c, int prec);

  int precision() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_.at(n); }
  Rational& operator[](int n) { return coeffs_.at(n); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  QSeries truncated(int prec) const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& c);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
  friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator-() const;

  /// q d/dq.
  QSeries derivative() const;
  QSeries pow(int n) const;

  /// Compare on the common precision.
  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  std::string to_string(int max_terms = 8) const;

 private:
  std::vector<Rational> coeffs_ = std::vector<Rational>(1);
};

}  // namespace rcq
