#pragma once

// Fedosov quantization of R x R+ with the connection family
//   Gamma^2_11 = mu, Gamma^1_12 = Gamma^1_21 = 1/(2 x2), Gamma^2_22 = -1/(2 x2).

#include <map>
#include <utility>

#include "rcq/crossed.hpp"
#include "rcq/extended.hpp"
#include "rcq/hbar.hpp"
#include "rcq/weyl.hpp"

namespace rcq {

/// Gamma = Gamma_1 dx1 + Gamma_2 dx2 as a Weyl-valued 1-form:
///   Gamma_1 = -mu u1^2 / 2 + u2^2 / (4 x2),  Gamma_2 = u1 u2 / (2 x2).
WeylSection gamma_form(const LaurentPoly2& mu, int bound);

/// (i/hbar)[Gamma, a]; the leading hbar of the commutator is cancelled exactly.
WeylSection gamma_bracket(const WeylSection& a, const LaurentPoly2& mu);

/// D a = -delta a + d a + (i/hbar)[Gamma, a].
WeylSection fedosov_D(const WeylSection& a, const LaurentPoly2& mu);

/// Flat section sum a_{m,n} u1^m u2^n of D with a_{0,0} = f.
class FlatSection {
 public:
  FlatSection(LaurentPoly2 f, LaurentPoly2 mu, int degree);

  int degree() const { return degree_; }
  const LaurentPoly2& mu() const { return mu_; }
  const LaurentPoly2& a(int m, int n) const;
  const std::map<std::pair<int, int>, LaurentPoly2>& table() const { return a_; }

  /// As a Weyl section (hbar-free) with the given total-degree bound.
  WeylSection to_weyl(int bound) const;
  /// Both recursions hold for every stored coefficient.
  bool satisfies_recursions() const;
  /// a_{m,n} = (1/n!) prod_{j=0}^{n-1} (d/dx2 + (j-m)/(2 x2)) a_{m,0}.
  bool satisfies_closed_form() const;

 private:
  LaurentPoly2 mu_;
  int degree_;
  std::map<std::pair<int, int>, LaurentPoly2> a_;
};

FlatSection flat_section(const LaurentPoly2& f, const LaurentPoly2& mu, int degree);

/// sigma(sigma^{-1}(f) o sigma^{-1}(g)) to hbar^order.
HbarSeries<LaurentPoly2> fedosov_star(const LaurentPoly2& f, const LaurentPoly2& g, const LaurentPoly2& mu,
                                      int order);
/// Same product evaluated through full Weyl-bundle multiplication (slower).
HbarSeries<LaurentPoly2> fedosov_star_via_weyl(const LaurentPoly2& f, const LaurentPoly2& g,
                                               const LaurentPoly2& mu, int order);

/// Crossed product of the star with the pseudogroup:
///   (f U_a) * (g U_b) = (f star (g o L_a^{-1})) U_{ab}.
HbarSeries<CrossedElement> crossed_star(const CrossedElement& a, const CrossedElement& b, const LaurentPoly2& mu,
                                        int order);

/// Which Pochhammer shift the rc element uses on each leg:
/// Plus gives (2Y+k)_{n-k} and (2Y+n-k)_k, Minus gives (2Y-k)_{n-k} and (2Y-n+k)_k.
enum class PochhammerShift { Plus, Minus };

struct RcOptions {
  PochhammerShift shift = PochhammerShift::Plus;
  /// Use the antipode S(X) = -X + delta_1 Y in the A recursion; otherwise -X.
  bool antipode = true;
};

/// RC = sum_n hbar^n RC_n with RC_n = sum_k (A_k/k!)(2Y+k)_{n-k} (x) (B_{n-k}/(n-k)!)(2Y+n-k)_k,
///   A_{m+1} = S(X) A_m - m beta(Z0) (Y - (m-1)/2) A_{m-1},
///   B_{m+1} = X B_m - m alpha(Z0) (Y - (m-1)/2) B_{m-1}.
class RCElement {
 public:
  using Leg = std::pair<ExtendedElement, ExtendedElement>;

  RCElement(int order, RcOptions opts);
  int order() const { return static_cast<int>(terms_.size()) - 1; }
  const std::vector<Leg>& terms(int n) const { return terms_.at(n); }
  const ExtendedElement& A(int m) const { return a_.at(m); }
  const ExtendedElement& B(int m) const { return b_.at(m); }

 private:
  std::vector<std::vector<Leg>> terms_;
  std::vector<ExtendedElement> a_, b_;
};

RCElement rc_element(int order, RcOptions opts = {});

/// chi(RC_n)(a, b) for n = 0..order.
HbarSeries<CrossedElement> rc_evaluate(const RCElement& rc, const CrossedElement& a, const CrossedElement& b,
                                       const LaurentPoly2& omega);

/// chi(RC_n)(a, b) on any H1-module algebra A with a commutative ring of Z's.
template <class A, class Ops>
std::vector<A> rc_evaluate_on(const RCElement& rc, const A& a, const A& b, const A& omega, Ops ops = Ops{}) {
  BasicChiEvaluator<A, Ops> left(a, omega, ops), right(b, omega, ops);
  std::vector<A> r;
  for (int n = 0; n <= rc.order(); ++n) {
    std::optional<A> acc;
    for (const auto& [l, rr] : rc.terms(n)) {
      A v = left(l) * right(rr);
      if (acc)
        *acc += v;
      else
        acc = std::move(v);
    }
    r.push_back(std::move(*acc));
  }
  return r;
}

/// The h1 specialization (deltas and Omega set to zero):
///   RC_n = sum_k (-1)^k/k! X^k (2Y+k)_{n-k} (x) 1/(n-k)! X^{n-k} (2Y+n-k)_k.
H1Tensor rc_h1(int n);

/// Scale relating the two products: the hbar^n term of crossed_star equals
/// rc_hbar_scale()^n chi(RC_n).
Scalar rc_hbar_scale();

}  // namespace rcq
