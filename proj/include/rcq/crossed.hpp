#pragma once

// Crossed-product algebra: finite sums f U_phi with f a function on R x R+ in
// the coordinates (x1, x2) and phi a germ, with
//   (f U_phi)(g U_psi) = f (g o L_phi^{-1}) U_{phi psi},
//   L_phi(x1, x2) = (phi(x1), x2 / phi'(x1)).

#include <string>
#include <vector>

#include "rcq/germ.hpp"
#include "rcq/h1.hpp"

namespace rcq {

class CrossedElement {
 public:
  struct Term {
    DiffeoGerm germ;
    LaurentPoly2 f;
  };

  CrossedElement() = default;
  CrossedElement(LaurentPoly2 f);  // NOLINT(google-explicit-constructor)
  CrossedElement(LaurentPoly2 f, DiffeoGerm g);
  static CrossedElement unitary(const DiffeoGerm& g) { return CrossedElement(LaurentPoly2(1), g); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const;
  /// Coefficient of U_g (zero if absent).
  LaurentPoly2 coefficient(const DiffeoGerm& g) const;
  /// Minimum x1 precision over all coefficients.
  int precision() const;

  CrossedElement& add(const LaurentPoly2& f, const DiffeoGerm& g);
  CrossedElement& operator+=(const CrossedElement& o);
  CrossedElement& operator-=(const CrossedElement& o);
  CrossedElement& operator*=(const Scalar& c);
  friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) { return a += b; }
  friend CrossedElement operator-(CrossedElement a, const CrossedElement& b) { return a -= b; }
  friend CrossedElement operator*(CrossedElement a, const Scalar& c) { return a *= c; }
  friend CrossedElement operator*(const CrossedElement& a, const CrossedElement& b);

  /// Apply a map to every coefficient.
  template <class F>
  CrossedElement map_coefficients(F&& fn) const {
    CrossedElement r;
    for (const auto& t : terms_) r.add(fn(t.f), t.germ);
    return r;
  }

  /// Equality on determined coefficients.
  friend bool operator==(const CrossedElement& a, const CrossedElement& b);
  friend bool operator!=(const CrossedElement& a, const CrossedElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// X = x2^{-1} d/dx1 and Y = -x2 d/dx2 on a function of (x1, x2).
LaurentPoly2 apply_x(const LaurentPoly2& f);
LaurentPoly2 apply_y(const LaurentPoly2& f);

/// x2^{-n} (d/dx1)^{n-1} (psi''/psi') with psi = phi^{-1}: the function by
/// which delta_n multiplies f U_phi.
LaurentPoly2 delta_multiplier(int n, const DiffeoGerm& phi);

/// The defining H1 action on the crossed product.
struct CrossedOps {
  CrossedElement X(const CrossedElement& a) const;
  CrossedElement Y(const CrossedElement& a) const;
  CrossedElement delta(int n, const CrossedElement& a) const;
};

/// Functions of (x1, x2) with the h1 action (deltas act by zero).
struct FunctionOps {
  LaurentPoly2 X(const LaurentPoly2& f) const { return apply_x(f); }
  LaurentPoly2 Y(const LaurentPoly2& f) const { return apply_y(f); }
  LaurentPoly2 delta(int, const LaurentPoly2& f) const { return f * Scalar(0); }
};

CrossedElement h1_act(const H1Element& h, const CrossedElement& a);
/// sum c h1(a) h2(b) for a rank-2 tensor.
CrossedElement evaluate(const H1Tensor& t, const CrossedElement& a, const CrossedElement& b);

}  // namespace rcq
