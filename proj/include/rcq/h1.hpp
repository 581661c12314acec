#pragma once

// The Connes-Moscovici Hopf algebra H1 in the PBW basis delta^alpha Y^a X^b.

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rcq/scalar.hpp"

namespace rcq {

struct PbwMonomial {
  std::vector<int> delta;  // nondecreasing indices n >= 1
  int y = 0;
  int x = 0;

  bool is_unit() const { return delta.empty() && y == 0 && x == 0; }
  int degree() const { return static_cast<int>(delta.size()) + y + x; }
  /// X counts 1, delta_n counts n, Y counts 0.
  int weight() const;
  std::string to_string() const;
  auto operator<=>(const PbwMonomial&) const = default;
};

struct Generator {
  enum class Kind { X, Y, Delta } kind;
  int n = 0;  // delta index

  static Generator X() { return {Kind::X, 0}; }
  static Generator Y() { return {Kind::Y, 0}; }
  static Generator delta(int n) { return {Kind::Delta, n}; }
};

class H1Tensor;

class H1Element {
 public:
  using Terms = std::map<PbwMonomial, Scalar>;

  H1Element() = default;
  H1Element(Scalar c);  // NOLINT(google-explicit-constructor)
  H1Element(int c) : H1Element(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit H1Element(PbwMonomial m, Scalar c = Scalar(1));

  static H1Element X();
  static H1Element Y();
  static H1Element delta(int n);
  /// delta_2' = delta_2 - 1/2 delta_1^2.
  static H1Element delta2_prime();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const PbwMonomial& m) const;
  int max_delta() const;

  H1Element& operator+=(const H1Element& o);
  H1Element& operator-=(const H1Element& o);
  H1Element& operator*=(const Scalar& c);
  friend H1Element operator+(H1Element a, const H1Element& b) { return a += b; }
  friend H1Element operator-(H1Element a, const H1Element& b) { return a -= b; }
  friend H1Element operator*(H1Element a, const Scalar& c) { return a *= c; }
  friend H1Element operator*(const Scalar& c, H1Element a) { return a *= c; }
  friend H1Element operator*(const H1Element& a, const H1Element& b);
  H1Element operator-() const { return *this * Scalar(-1); }
  H1Element pow(int n) const;

  friend bool operator==(const H1Element& a, const H1Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const H1Element& a, const H1Element& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void add_term(const PbwMonomial& m, const Scalar& c);
  Terms terms_;
};

/// Product of two PBW monomials, in normal form.
H1Element multiply(const PbwMonomial& a, const PbwMonomial& b);
/// Normal form of a word in the generators.
H1Element pbw_normalize(const std::vector<Generator>& word);
H1Element commutator(const H1Element& a, const H1Element& b);

/// Sums of rank-n tensors of PBW monomials.
class H1Tensor {
 public:
  using Key = std::vector<PbwMonomial>;
  using Terms = std::map<Key, Scalar>;

  explicit H1Tensor(int rank = 2) : rank_(rank) {}
  static H1Tensor pure(const std::vector<H1Element>& legs);
  static H1Tensor unit(int rank);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const Scalar& c);

  H1Tensor& operator+=(const H1Tensor& o);
  H1Tensor& operator-=(const H1Tensor& o);
  H1Tensor& operator*=(const Scalar& c);
  friend H1Tensor operator+(H1Tensor a, const H1Tensor& b) { return a += b; }
  friend H1Tensor operator-(H1Tensor a, const H1Tensor& b) { return a -= b; }
  friend H1Tensor operator*(H1Tensor a, const Scalar& c) { return a *= c; }
  friend H1Tensor operator*(const Scalar& c, H1Tensor a) { return a *= c; }
  /// Leg-wise product.
  friend H1Tensor operator*(const H1Tensor& a, const H1Tensor& b);

  /// Replace leg i by f(leg), which may have any rank r, giving rank + r - 1.
  H1Tensor map_leg(int leg, const std::function<H1Tensor(const PbwMonomial&)>& f) const;
  /// Multiply legs i and i+1 together.
  H1Tensor multiply_legs(int leg) const;
  /// Reverse the order of legs, i.e. apply a flip / reversal permutation.
  H1Tensor reversed() const;

  friend bool operator==(const H1Tensor& a, const H1Tensor& b) { return a.rank_ == b.rank_ && a.terms_ == b.terms_; }
  friend bool operator!=(const H1Tensor& a, const H1Tensor& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int rank_;
  Terms terms_;
};

H1Tensor coproduct(const PbwMonomial& m);
H1Tensor coproduct(const H1Element& h);
H1Element antipode(const PbwMonomial& m);
H1Element antipode(const H1Element& h);
Scalar counit(const H1Element& h);
H1Element as_element(const H1Tensor& rank1);

/// Apply an H1 element to a module element. Ops must provide
///   A X(const A&), A Y(const A&), A delta(int n, const A&)
/// and A must support +=, scalar *.
template <class A, class Ops>
class Actor {
 public:
  Actor(const Ops& ops, A a) : ops_(ops), a_(std::move(a)) {}

  const A& apply(const PbwMonomial& m) {
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
    A r;
    if (m.is_unit()) {
      r = a_;
    } else if (!m.delta.empty()) {
      PbwMonomial rest = m;
      int n = rest.delta.back();
      rest.delta.pop_back();
      r = ops_.delta(n, apply(rest));
    } else if (m.y > 0) {
      PbwMonomial rest = m;
      --rest.y;
      r = ops_.Y(apply(rest));
    } else {
      PbwMonomial rest = m;
      --rest.x;
      r = ops_.X(apply(rest));
    }
    return memo_.emplace(m, std::move(r)).first->second;
  }

  A apply(const H1Element& h) {
    A r = zero_like();
    for (const auto& [m, c] : h.terms()) {
      A t = apply(m);
      t *= c;
      r += t;
    }
    return r;
  }

 private:
  A zero_like() {
    A z = a_;
    z *= Scalar(0);
    return z;
  }

  const Ops& ops_;
  A a_;
  std::map<PbwMonomial, A> memo_;
};

template <class A, class Ops>
A act(const H1Element& h, const A& a, const Ops& ops) {
  Actor<A, Ops> actor(ops, a);
  return actor.apply(h);
}

/// Evaluate a rank-2 tensor as a bilinear map: sum c h1(a) h2(b).
template <class A, class Ops, class Mul>
A evaluate(const H1Tensor& t, const A& a, const A& b, const Ops& ops, Mul&& mul) {
  if (t.rank() != 2) throw InputError("bilinear evaluation needs a rank-2 tensor");
  Actor<A, Ops> left(ops, a);
  Actor<A, Ops> right(ops, b);
  A r = mul(a, b);
  r *= Scalar(0);
  for (const auto& [k, c] : t.terms()) {
    A v = mul(left.apply(k[0]), right.apply(k[1]));
    v *= c;
    r += v;
  }
  return r;
}

}  // namespace rcq
