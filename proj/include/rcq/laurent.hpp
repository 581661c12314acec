#pragma once

// Laurent polynomials in two variables with an optional truncation in the
// first variable.
//
// A value is either exact, or known only modulo x1^(precision+1): the latter
// arises from pulling functions back along diffeomorphism germs, which are
// themselves truncated power series in x1. Every operation propagates the
// precision so that comparisons only ever look at coefficients that are
// actually determined.

#include <array>
#include <climits>
#include <map>
#include <string>
#include <utility>

#include "rcq/scalar.hpp"

namespace rcq {

class LaurentPoly2 {
 public:
  using Exponent = std::pair<int, int>;
  using Terms = std::map<Exponent, Scalar>;
  using VarNames = std::array<std::string, 2>;

  static constexpr int kExact = INT_MAX;

  LaurentPoly2() = default;
  LaurentPoly2(Scalar c);  // NOLINT(google-explicit-constructor)
  LaurentPoly2(int c) : LaurentPoly2(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static LaurentPoly2 monomial(int e1, int e2, Scalar c = Scalar(1));
  static LaurentPoly2 x1() { return monomial(1, 0); }
  static LaurentPoly2 x2() { return monomial(0, 1); }
  /// The zero function known modulo x1^(prec+1), i.e. O(x1^(prec+1)).
  static LaurentPoly2 big_o(int prec);
  static LaurentPoly2 from_terms(Terms terms, int prec = kExact);

  const Terms& terms() const { return terms_; }
  int precision() const { return prec_; }
  bool exact() const { return prec_ == kExact; }
  /// Lowest x1 exponent that may carry a nonzero coefficient.
  int x1_valuation() const;
  int x1_degree() const;  // highest stored x1 exponent; INT_MIN for zero
  bool x2_free() const;

  Scalar coeff(int e1, int e2) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Forget everything above x1^prec.
  LaurentPoly2 truncated(int prec) const;

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const Scalar& c);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(LaurentPoly2 a, const Scalar& c) { return a *= c; }
  friend LaurentPoly2 operator*(const Scalar& c, LaurentPoly2 a) { return a *= c; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  LaurentPoly2 operator-() const;

  /// Multiply by c x1^e1 x2^e2 (precision shifts with e1).
  LaurentPoly2 shifted(int e1, int e2, const Scalar& c = Scalar(1)) const;

  LaurentPoly2 partial(int var) const;  // var in {0, 1}
  LaurentPoly2 partial_x1() const { return partial(0); }
  LaurentPoly2 partial_x2() const { return partial(1); }
  LaurentPoly2 pow(int n) const;  // n >= 0

  /// Equality on the coefficients determined by both operands.
  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return !(a == b); }
  /// Structural identity: same terms and same precision.
  bool identical(const LaurentPoly2& o) const { return prec_ == o.prec_ && terms_ == o.terms_; }

  /// Substitute x1 -> c x1 (exact).
  LaurentPoly2 scale_x1(const Scalar& c) const;
  /// Swap roles of the two variables (requires exactness).
  LaurentPoly2 swapped() const;

  std::string to_string(const VarNames& vars = {"x1", "x2"}) const;

 private:
  void drop_beyond_precision();

  Terms terms_;
  int prec_ = kExact;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p);

// --- univariate series helpers (functions of x1 only) ----------------------

/// 1/u for an x1-only u; exact when u is a monomial, otherwise truncated at
/// order `trunc` (or earlier if u itself is truncated).
LaurentPoly2 reciprocal(const LaurentPoly2& u, int trunc);
/// u^n for any integer n; negative powers go through reciprocal().
LaurentPoly2 power(const LaurentPoly2& u, int n, int trunc);
/// f(g(x1), x2): substitute the x1-series g into the first variable of f.
/// Requires g(0) = 0 unless f is polynomial in x1; negative x1 powers of f use
/// reciprocal(g).
LaurentPoly2 compose_x1(const LaurentPoly2& f, const LaurentPoly2& g, int trunc);

}  // namespace rcq
