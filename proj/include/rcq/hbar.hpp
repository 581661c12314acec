#pragma once

// Truncated formal power series in hbar over an arbitrary coefficient ring.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "rcq/scalar.hpp"

namespace rcq {

template <class T>
class HbarSeries {
 public:
  HbarSeries() = default;
  explicit HbarSeries(int order) : order_(order), coeffs_(order + 1) {
    if (order < 0) throw MathError("negative hbar order");
  }
  HbarSeries(int order, T constant) : HbarSeries(order) { coeffs_[0] = std::move(constant); }

  int order() const { return order_; }
  const T& operator[](int k) const { return coeffs_.at(k); }
  T& operator[](int k) { return coeffs_.at(k); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  HbarSeries& operator+=(const HbarSeries& o) {
    check(o);
    for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  HbarSeries& operator-=(const HbarSeries& o) {
    check(o);
    for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  HbarSeries& operator*=(const Scalar& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }
  friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) { return a += b; }
  friend HbarSeries operator-(HbarSeries a, const HbarSeries& b) { return a -= b; }
  friend HbarSeries operator*(HbarSeries a, const Scalar& c) { return a *= c; }

  /// Cauchy product with a caller-supplied coefficient product.
  template <class Mul>
  HbarSeries product(const HbarSeries& o, Mul&& mul) const {
    check(o);
    HbarSeries r(order_);
    for (int i = 0; i <= order_; ++i)
      for (int j = 0; i + j <= order_; ++j) r.coeffs_[i + j] += mul(coeffs_[i], o.coeffs_[j]);
    return r;
  }
  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
    return a.product(b, [](const T& x, const T& y) { return x * y; });
  }

  friend bool operator==(const HbarSeries& a, const HbarSeries& b) {
    return a.order_ == b.order_ && std::equal(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin());
  }
  friend bool operator!=(const HbarSeries& a, const HbarSeries& b) { return !(a == b); }

  /// Drop to a lower order.
  HbarSeries truncated(int order) const {
    HbarSeries r(std::min(order, order_));
    std::copy_n(coeffs_.begin(), r.order_ + 1, r.coeffs_.begin());
    return r;
  }

 private:
  void check(const HbarSeries& o) const {
    if (o.order_ != order_) throw InputError("hbar series truncation mismatch");
  }

  int order_ = 0;
  std::vector<T> coeffs_ = std::vector<T>(1);
};

}  // namespace rcq
