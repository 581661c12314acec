#pragma once

// Sections of the Weyl bundle over R x R+ with fiber variables u1, u2,
// and the Moyal product on functions of two variables.
//
// Convention: omega^{12} = +1, so u1 o u2 - u2 o u1 = -i hbar.

#include <compare>
#include <map>
#include <string>

#include "rcq/h1.hpp"
#include "rcq/hbar.hpp"
#include "rcq/laurent.hpp"

namespace rcq {

/// Differential form degree on the base is tracked as a bitmask:
/// bit 0 = dx1, bit 1 = dx2.
enum FormMask : int { kForm0 = 0, kDx1 = 1, kDx2 = 2, kDx12 = 3 };

struct WeylKey {
  int k = 0;  // power of hbar
  int m = 0;  // power of u1
  int n = 0;  // power of u2
  int form = kForm0;

  int degree() const { return 2 * k + m + n; }
  auto operator<=>(const WeylKey&) const = default;
};

class WeylSection {
 public:
  using Terms = std::map<WeylKey, LaurentPoly2>;

  explicit WeylSection(int bound = 6) : bound_(bound) {}
  static WeylSection monomial(int k, int m, int n, int form, const LaurentPoly2& f, int bound);

  int bound() const { return bound_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const;
  LaurentPoly2 coeff(const WeylKey& key) const;
  /// Highest form degree present, -1 for zero.
  int form_degree() const;

  WeylSection& add(const WeylKey& key, const LaurentPoly2& f);
  WeylSection& operator+=(const WeylSection& o);
  WeylSection& operator-=(const WeylSection& o);
  WeylSection& operator*=(const Scalar& c);
  friend WeylSection operator+(WeylSection a, const WeylSection& b) { return a += b; }
  friend WeylSection operator-(WeylSection a, const WeylSection& b) { return a -= b; }
  friend WeylSection operator*(WeylSection a, const Scalar& c) { return a *= c; }

  /// Same terms with a different truncation bound.
  WeylSection with_bound(int bound) const;
  /// Parts with total degree <= d.
  WeylSection truncated(int d) const;

  /// Projection to the center: u = 0, form degree 0.
  HbarSeries<LaurentPoly2> sigma(int order) const;

  friend bool operator==(const WeylSection& a, const WeylSection& b);
  friend bool operator!=(const WeylSection& a, const WeylSection& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int bound_;
  Terms terms_;
};

/// Sign of dx^A ^ dx^B as a multiple of dx^(A|B); 0 if they overlap.
int wedge_sign(int a, int b);

/// Fiberwise Moyal-Weyl product; form parts are wedged.
WeylSection weyl_mul(const WeylSection& a, const WeylSection& b);
/// Same, truncated at an explicit bound (for intermediate computations).
WeylSection weyl_mul(const WeylSection& a, const WeylSection& b, int bound);
/// Graded commutator a b - (-1)^{|a||b|} b a, for homogeneous form degree.
WeylSection weyl_commutator(const WeylSection& a, const WeylSection& b, int bound);

/// delta a = dx^k ^ d a / d u^k.
WeylSection weyl_delta(const WeylSection& a);
/// delta* a = u^k i(d/dx^k) a.
WeylSection weyl_delta_star(const WeylSection& a);
/// Exterior derivative along the base.
WeylSection weyl_d(const WeylSection& a);

/// Moyal product of two functions with omega = dx1 ^ dx2, to hbar^order.
HbarSeries<LaurentPoly2> moyal_star(const LaurentPoly2& f, const LaurentPoly2& g, int order);

/// Poisson bracket d1 f d2 g - d2 f d1 g.
LaurentPoly2 poisson_bracket(const LaurentPoly2& f, const LaurentPoly2& g);

/// Rising factorial (Y + s)(Y + s + 1)...(Y + s + r - 1) in U(h1).
H1Element rising_y(const Scalar& s, int r, const Scalar& y_scale = Scalar(1));

/// F_n = sum_r (-1)^r C(n,r) X^{n-r} Y_(r) (x) X^r Y_(n-r).
H1Tensor gz_element(int n);

}  // namespace rcq
