#include "rcq/fedosov.hpp"

#include "rcq/geometry.hpp"

namespace rcq {

WeylSection gamma_form(const LaurentPoly2& mu, int bound) {
  WeylSection g(bound);
  g.add({0, 2, 0, kDx1}, mu * Scalar::ratio(-1, 2));
  g.add({0, 0, 2, kDx1}, LaurentPoly2::monomial(0, -1, Scalar::ratio(1, 4)));
  g.add({0, 1, 1, kDx2}, LaurentPoly2::monomial(0, -1, Scalar::ratio(1, 2)));
  return g;
}

WeylSection gamma_bracket(const WeylSection& a, const LaurentPoly2& mu) {
  int wide = a.bound() + 2;
  WeylSection c = weyl_commutator(gamma_form(mu, wide), a.with_bound(wide), wide);
  WeylSection r(a.bound());
  for (const auto& [k, f] : c.terms()) {
    if (k.k == 0) {
      if (!f.is_zero()) throw MathError("commutator with Gamma has a nonzero hbar^0 part");
      continue;
    }
    r.add({k.k - 1, k.m, k.n, k.form}, f * Scalar::i());
  }
  return r;
}

WeylSection fedosov_D(const WeylSection& a, const LaurentPoly2& mu) {
  return weyl_d(a) - weyl_delta(a) + gamma_bracket(a, mu);
}

FlatSection::FlatSection(LaurentPoly2 f, LaurentPoly2 mu, int degree) : mu_(std::move(mu)), degree_(degree) {
  if (degree < 0) throw InputError("negative degree bound");
  a_[{0, 0}] = std::move(f);
  for (int d = 1; d <= degree; ++d) {
    LaurentPoly2 v = a(d - 1, 0).partial_x1();
    if (d >= 2) v -= mu_ * a(d - 2, 1);
    a_[{d, 0}] = v * Scalar(make_rational(1, d));
    for (int n = 0; n < d; ++n) {
      int m = d - 1 - n;
      const LaurentPoly2& prev = a(m, n);
      LaurentPoly2 next = prev.partial_x2() + prev.shifted(0, -1, Scalar(make_rational(n - m, 2)));
      a_[{m, n + 1}] = next * Scalar(make_rational(1, n + 1));
    }
  }
}

const LaurentPoly2& FlatSection::a(int m, int n) const {
  auto it = a_.find({m, n});
  if (it == a_.end()) throw InputError("flat section coefficient beyond degree bound");
  return it->second;
}

WeylSection FlatSection::to_weyl(int bound) const {
  WeylSection s(bound);
  for (const auto& [mn, f] : a_) s.add({0, mn.first, mn.second, kForm0}, f);
  return s;
}

bool FlatSection::satisfies_recursions() const {
  for (const auto& [mn, f] : a_) {
    auto [m, n] = mn;
    if (m + n == 0) continue;
    LaurentPoly2 expect;
    if (n == 0) {
      expect = a(m - 1, 0).partial_x1();
      if (m >= 2) {
        const LaurentPoly2& b = a(m - 2, 0);
        expect -= mu_ * (b.partial_x2() - b.shifted(0, -1, Scalar(make_rational(m - 2, 2))));
      }
      expect *= Scalar(make_rational(1, m));
    } else {
      const LaurentPoly2& b = a(m, n - 1);
      expect = (b.partial_x2() + b.shifted(0, -1, Scalar(make_rational(n - 1 - m, 2)))) * Scalar(make_rational(1, n));
    }
    if (expect != f) return false;
  }
  return true;
}

bool FlatSection::satisfies_closed_form() const {
  for (const auto& [mn, f] : a_) {
    auto [m, n] = mn;
    LaurentPoly2 v = a(m, 0);
    for (int j = 0; j < n; ++j) v = v.partial_x2() + v.shifted(0, -1, Scalar(make_rational(j - m, 2)));
    if (v * Scalar(Rational(1) / factorial(n)) != f) return false;
  }
  return true;
}

FlatSection flat_section(const LaurentPoly2& f, const LaurentPoly2& mu, int degree) {
  return FlatSection(f, mu, degree);
}

HbarSeries<LaurentPoly2> fedosov_star(const LaurentPoly2& f, const LaurentPoly2& g, const LaurentPoly2& mu,
                                      int order) {
  FlatSection a(f, mu, order), b(g, mu, order);
  HbarSeries<LaurentPoly2> r(order);
  Scalar pref(1);
  const Scalar half_ih = Scalar(Rational(0), make_rational(-1, 2));
  for (int k = 0; k <= order; ++k) {
    if (k > 0) pref *= half_ih;
    LaurentPoly2 acc;
    for (int s = 0; s <= k; ++s) {
      // (-i/2)^k (-1)^s (k-s)! s! a_{k-s,s} b_{s,k-s}
      Scalar c = pref * Scalar(factorial(k - s) * factorial(s));
      if (s % 2) c = -c;
      acc += a.a(k - s, s) * b.a(s, k - s) * c;
    }
    r[k] = acc;
  }
  return r;
}

HbarSeries<LaurentPoly2> fedosov_star_via_weyl(const LaurentPoly2& f, const LaurentPoly2& g,
                                               const LaurentPoly2& mu, int order) {
  int bound = 2 * order;
  WeylSection a = flat_section(f, mu, bound).to_weyl(bound);
  WeylSection b = flat_section(g, mu, bound).to_weyl(bound);
  return weyl_mul(a, b).sigma(order);
}

HbarSeries<CrossedElement> crossed_star(const CrossedElement& a, const CrossedElement& b, const LaurentPoly2& mu,
                                        int order) {
  for (const auto* e : {&a, &b})
    for (const auto& t : e->terms())
      if (!connection_preserved(mu, t.germ))
        throw MathError("crossed star needs germs preserving the connection; " + t.germ.to_string() +
                        " does not");
  HbarSeries<CrossedElement> r(order);
  for (const auto& ta : a.terms()) {
    DiffeoGerm inv = ta.germ.inverse();
    for (const auto& tb : b.terms()) {
      DiffeoGerm prod = ta.germ.compose(tb.germ);
      HbarSeries<LaurentPoly2> s = fedosov_star(ta.f, lift_pullback(tb.f, inv), mu, order);
      for (int k = 0; k <= order; ++k) r[k].add(s[k], prod);
    }
  }
  return r;
}

RCElement::RCElement(int order, RcOptions opts) {
  if (order < 0) throw InputError("negative order for the rc element");
  ExtendedElement sx = opts.antipode ? ExtendedElement(antipode(H1Element::X())) : ExtendedElement(-H1Element::X());
  ExtendedElement x(H1Element::X());
  ExtendedElement om0 = ExtendedElement::beta(PPoly::z(0));
  ExtendedElement om = ExtendedElement::alpha(PPoly::z(0));
  a_.push_back(ExtendedElement(Scalar(1)));
  b_.push_back(ExtendedElement(Scalar(1)));
  for (int m = 0; m < order; ++m) {
    ExtendedElement na = sx * a_[m], nb = x * b_[m];
    if (m >= 1) {
      ExtendedElement y(H1Element::Y() - H1Element(Scalar(make_rational(m - 1, 2))));
      na -= om0 * (y * a_[m - 1]) * Scalar(m);
      nb -= om * (y * b_[m - 1]) * Scalar(m);
    }
    a_.push_back(std::move(na));
    b_.push_back(std::move(nb));
  }
  int sg = opts.shift == PochhammerShift::Plus ? 1 : -1;
  for (int n = 0; n <= order; ++n) {
    std::vector<Leg> legs;
    for (int k = 0; k <= n; ++k) {
      ExtendedElement l = a_[k] * ExtendedElement(rising_y(Scalar(sg * k), n - k, 2)) *
                          Scalar(Rational(1) / factorial(k));
      ExtendedElement r = b_[n - k] * ExtendedElement(rising_y(Scalar(sg * (n - k)), k, 2)) *
                          Scalar(Rational(1) / factorial(n - k));
      legs.emplace_back(std::move(l), std::move(r));
    }
    terms_.push_back(std::move(legs));
  }
}

RCElement rc_element(int order, RcOptions opts) { return RCElement(order, opts); }

HbarSeries<CrossedElement> rc_evaluate(const RCElement& rc, const CrossedElement& a, const CrossedElement& b,
                                       const LaurentPoly2& omega) {
  ChiEvaluator left(a, CrossedElement(omega)), right(b, CrossedElement(omega));
  HbarSeries<CrossedElement> r(rc.order());
  for (int n = 0; n <= rc.order(); ++n)
    for (const auto& [l, rr] : rc.terms(n)) r[n] += left(l) * right(rr);
  return r;
}

H1Tensor rc_h1(int n) {
  if (n < 0) throw MathError("negative Rankin-Cohen index");
  H1Tensor r(2);
  for (int k = 0; k <= n; ++k) {
    H1Element left = H1Element::X().pow(k) * rising_y(Scalar(k), n - k, 2);
    H1Element right = H1Element::X().pow(n - k) * rising_y(Scalar(n - k), k, 2);
    Scalar c(Rational(1) / (factorial(k) * factorial(n - k)));
    if (k % 2) c = -c;
    r += H1Tensor::pure({left, right}) * c;
  }
  return r;
}

Scalar rc_hbar_scale() { return Scalar(Rational(0), make_rational(-1, 4)); }

}  // namespace rcq
