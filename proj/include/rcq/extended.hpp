#pragma once

// The extended algebra P x| H1 |x P over the free commutative algebra
// P = Q[Z0, Z1, ...], with X(Z_j) = Z_{j+1}, Y(Z_j) = (j + 2) Z_j and
// delta_k(Z_j) = 0, and its evaluation chi on a crossed-product algebra.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcq/crossed.hpp"
#include "rcq/h1.hpp"

namespace rcq {

class PPoly {
 public:
  /// Exponent vectors without trailing zeros.
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Scalar>;

  PPoly() = default;
  PPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  static PPoly z(int j);
  static PPoly monomial(Exponents e, Scalar c = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PPoly& operator+=(const PPoly& o);
  PPoly& operator*=(const Scalar& c);
  friend PPoly operator+(PPoly a, const PPoly& b) { return a += b; }
  friend PPoly operator*(const PPoly& a, const PPoly& b);
  friend bool operator==(const PPoly& a, const PPoly& b) { return a.terms_ == b.terms_; }

  /// h acting on P through the module-algebra structure.
  PPoly acted(const PbwMonomial& h) const;
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Scalar& c);
  Terms terms_;
};

class ExtendedElement {
 public:
  struct Key {
    PPoly::Exponents p;
    PbwMonomial h;
    PPoly::Exponents q;
    auto operator<=>(const Key&) const = default;
  };
  using Terms = std::map<Key, Scalar>;

  ExtendedElement() = default;
  ExtendedElement(Scalar c);  // NOLINT(google-explicit-constructor)
  ExtendedElement(const H1Element& h);  // NOLINT(google-explicit-constructor)
  /// p x| 1 |x 1
  static ExtendedElement alpha(const PPoly& p);
  /// 1 x| 1 |x q
  static ExtendedElement beta(const PPoly& q);
  static ExtendedElement make(const PPoly& p, const H1Element& h, const PPoly& q);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ExtendedElement& operator+=(const ExtendedElement& o);
  ExtendedElement& operator-=(const ExtendedElement& o);
  ExtendedElement& operator*=(const Scalar& c);
  friend ExtendedElement operator+(ExtendedElement a, const ExtendedElement& b) { return a += b; }
  friend ExtendedElement operator-(ExtendedElement a, const ExtendedElement& b) { return a -= b; }
  friend ExtendedElement operator*(ExtendedElement a, const Scalar& c) { return a *= c; }
  friend ExtendedElement operator*(const ExtendedElement& a, const ExtendedElement& b);
  friend bool operator==(const ExtendedElement& a, const ExtendedElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Key& k, const Scalar& c);
  Terms terms_;
};

ExtendedElement extended_mul(const ExtendedElement& a, const ExtendedElement& b);

/// delta_2 - 1/2 delta_1^2 - alpha(Z0) + beta(Z0), which acts by zero on a
/// projective action (with Omega implementing delta_2' as [Omega, .]).
ExtendedElement delta2_prime_tilde();

/// Evaluates extended elements on one argument of an H1-module algebra A,
/// with rho(Z_k) = X^k(Omega) and chi(p x| h |x q)(a) = rho(p) h(a) rho(q).
template <class A, class Ops>
class BasicChiEvaluator {
 public:
  BasicChiEvaluator(const A& a, A omega, Ops ops = Ops{})
      : ops_(std::move(ops)), actor_(ops_, a), xs_{std::move(omega)} {}

  A operator()(const ExtendedElement& e) {
    A r = actor_.apply(H1Element());
    for (const auto& [k, c] : e.terms()) {
      A v = actor_.apply(k.h);
      if (!k.p.empty()) v = rho_of(k.p) * v;
      if (!k.q.empty()) v = v * rho_of(k.q);
      v *= c;
      r += v;
    }
    return r;
  }

  const A& rho_of(const PPoly::Exponents& e) {
    auto it = rho_.find(e);
    if (it != rho_.end()) return it->second;
    std::optional<A> v;
    for (size_t j = 0; j < e.size(); ++j) {
      while (xs_.size() <= j) xs_.push_back(ops_.X(xs_.back()));
      for (int t = 0; t < e[j]; ++t) v = v ? *v * xs_[j] : xs_[j];
    }
    return rho_.emplace(e, *v).first->second;
  }

 private:
  Ops ops_;
  Actor<A, Ops> actor_;
  std::vector<A> xs_;
  std::map<PPoly::Exponents, A> rho_;
};

using ChiEvaluator = BasicChiEvaluator<CrossedElement, CrossedOps>;

/// rho(Z_k) = X^k(Omega) on the unit space.
CrossedElement rho(const PPoly& p, const LaurentPoly2& omega);

/// chi(p x| h |x q)(a) = rho(p) h(a) rho(q).
CrossedElement chi_eval(const ExtendedElement& e, const CrossedElement& a, const LaurentPoly2& omega);

}  // namespace rcq
