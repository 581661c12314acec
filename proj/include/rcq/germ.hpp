#pragma once

// Diffeomorphism germs of the line, the elements of the pseudogroups acting on
// R x R+.

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rcq/laurent.hpp"

namespace rcq {

inline constexpr int kDefaultGermOrder = 10;

class DiffeoGerm {
 public:
  enum class Kind { Series, Affine, Mobius };

  /// The identity map (exact, affine).
  DiffeoGerm() : DiffeoGerm(affine(1, 0)) {}

  static DiffeoGerm identity() { return affine(1, 0); }
  /// x -> a x + b.
  static DiffeoGerm affine(const Scalar& a, const Scalar& b, int trunc = kDefaultGermOrder);
  /// x -> (a x + b) / (c x + d).
  static DiffeoGerm mobius(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                           int trunc = kDefaultGermOrder);
  /// x -> c[1] x + c[2] x^2 + ... + c[T] x^T (c[0] must vanish).
  static DiffeoGerm series(std::vector<Scalar> coeffs, int trunc = kDefaultGermOrder);
  /// From an x1-only Laurent polynomial without constant term.
  static DiffeoGerm series(const LaurentPoly2& s, int trunc = kDefaultGermOrder);

  Kind kind() const { return kind_; }
  int trunc() const { return trunc_; }
  bool exact_form() const { return kind_ != Kind::Series; }
  bool fixes_origin() const;
  bool is_identity() const;
  /// Mobius / affine matrix (a, b, c, d); throws for series germs.
  const std::array<Scalar, 4>& matrix() const;

  /// phi as a function of x1; exact for affine maps, otherwise truncated at x1^T.
  const LaurentPoly2& function() const;
  /// phi^{-1} as a function of x1.
  const LaurentPoly2& inverse_function() const;
  /// k-th derivative of phi as a function of x1.
  LaurentPoly2 derivative(int k) const;
  /// Coefficient of x^k in the expansion at 0.
  Scalar coeff(int k) const { return function().coeff(k, 0); }

  DiffeoGerm inverse() const;
  /// this o g.
  DiffeoGerm compose(const DiffeoGerm& g) const;

  friend bool operator==(const DiffeoGerm& a, const DiffeoGerm& b);
  friend bool operator!=(const DiffeoGerm& a, const DiffeoGerm& b) { return !(a == b); }

  std::string to_string() const;

 private:
  DiffeoGerm(Kind kind, int trunc) : kind_(kind), trunc_(trunc) {}
  void init_exact();
  static LaurentPoly2 invert_series(const LaurentPoly2& f, int trunc);

  friend LaurentPoly2 lift_pullback(const LaurentPoly2& g, const DiffeoGerm& psi);

  // powers of phi and phi' reused by lift_pullback; shared between copies
  struct PowerCache {
    std::map<int, LaurentPoly2> fp, dp;
  };
  PowerCache& powers() const;

  Kind kind_ = Kind::Affine;
  int trunc_ = kDefaultGermOrder;
  std::array<Scalar, 4> m_{Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
  LaurentPoly2 fwd_ = LaurentPoly2::x1();
  LaurentPoly2 inv_ = LaurentPoly2::x1();
  mutable std::shared_ptr<PowerCache> powers_;
  mutable std::shared_ptr<const DiffeoGerm> inverse_;
};

/// g(psi(x1), x2 / psi'(x1)): pull a function back along the lift of psi to
/// R x R+.
LaurentPoly2 lift_pullback(const LaurentPoly2& g, const DiffeoGerm& psi);

/// (phi''' phi' - 3/2 phi''^2) / phi'^2 as a function of x1.
LaurentPoly2 schwarzian(const DiffeoGerm& phi);

}  // namespace rcq
