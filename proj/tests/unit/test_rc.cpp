#include "doctest.h"
#include "rcq/extended.hpp"
#include "rcq/fedosov.hpp"
#include "rcq/geometry.hpp"

using namespace rcq;

namespace {
LaurentPoly2 mono(int a, int b, Scalar c = 1) { return LaurentPoly2::monomial(a, b, c); }
}  // namespace

TEST_CASE("extended algebra normal form") {
  ExtendedElement x(H1Element::X());
  ExtendedElement az0 = ExtendedElement::alpha(PPoly::z(0));
  CHECK(x * az0 == az0 * x + ExtendedElement::alpha(PPoly::z(1)));
  ExtendedElement y(H1Element::Y());
  CHECK(y * az0 == az0 * y + az0 * Scalar(2));
  ExtendedElement bz0 = ExtendedElement::beta(PPoly::z(0));
  // X(a Omega) = X(a) Omega + a X(Omega) + delta_1(a) Y(Omega)
  CHECK(x * bz0 == bz0 * x + ExtendedElement::beta(PPoly::z(1)) +
                       ExtendedElement::make(PPoly(1), H1Element::delta(1), PPoly::z(0)) * Scalar(2));
  CHECK(ExtendedElement(H1Element::delta(1)) * az0 == az0 * ExtendedElement(H1Element::delta(1)));
}

TEST_CASE("chi is an algebra map") {
  auto phi = DiffeoGerm::series({0, Scalar::ratio(1, 2), Scalar::ratio(-1, 8), 0, Scalar::ratio(1, 192), 0,
                                 Scalar::ratio(-1, 2880), 0, Scalar::ratio(17, 645120), 0,
                                 Scalar::ratio(-31, 14515200)});
  LaurentPoly2 omega = mono(0, -2, 3);
  CrossedElement a = CrossedElement(mono(1, 1) + mono(0, 2), phi) + CrossedElement(mono(2, -1));
  std::vector<ExtendedElement> es = {
      ExtendedElement(H1Element::X()), ExtendedElement(H1Element::Y()), ExtendedElement(H1Element::delta(1)),
      ExtendedElement::alpha(PPoly::z(0)), ExtendedElement::beta(PPoly::z(1)),
      ExtendedElement::make(PPoly::z(0), H1Element::X() * H1Element::Y(), PPoly::z(0))};
  for (const auto& e1 : es)
    for (const auto& e2 : es) {
      CrossedElement lhs = chi_eval(e1 * e2, a, omega);
      CrossedElement rhs = chi_eval(e1, chi_eval(e2, a, omega), omega);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("rc element reduces to the h1 brackets") {
  RCElement rc = rc_element(4, {PochhammerShift::Plus, false});
  auto f = mono(2, 1) + mono(1, -1), g = mono(-1, 2) + mono(3, 0, 5);
  auto via = rc_evaluate(rc, CrossedElement(f), CrossedElement(g), LaurentPoly2());
  for (int n = 0; n <= 4; ++n) {
    auto direct = evaluate(rc_h1(n), f, g, FunctionOps{},
                           [](const LaurentPoly2& a, const LaurentPoly2& b) { return a * b; });
    CHECK(via[n] == CrossedElement(direct));
  }
  auto rc1 = evaluate(rc_h1(1), f, g, FunctionOps{},
                      [](const LaurentPoly2& a, const LaurentPoly2& b) { return a * b; });
  CHECK(rc1 == poisson_bracket(f, g) * Scalar(2));
}

TEST_CASE("fedosov star through the rc element") {
  auto f = mono(2, 1) + mono(1, -1), g = mono(-1, 2) + mono(3, 0, 5);
  LaurentPoly2 mu = mono(1, 1) + mono(0, 1);
  auto s = fedosov_star(f, g, mu, 3);
  auto v = rc_evaluate(rc_element(3), CrossedElement(f), CrossedElement(g), omega_from_mu(mu));
  Scalar t(1);
  for (int n = 0; n <= 3; ++n) {
    CHECK(v[n] * t == CrossedElement(s[n]));
    t *= rc_hbar_scale();
  }
  auto minus = rc_evaluate(rc_element(2, {PochhammerShift::Minus, true}), CrossedElement(f), CrossedElement(g),
                           omega_from_mu(mu));
  CHECK_FALSE(minus[2] * rc_hbar_scale().pow(2) == CrossedElement(s[2]));
}

TEST_CASE("crossed star through the rc element") {
  auto check = [](const LaurentPoly2& mu, const std::vector<DiffeoGerm>& gs, int order) {
    CrossedElement a = CrossedElement(mono(1, 1) + mono(0, 2), gs[0]) + CrossedElement(mono(2, -1), gs[1]);
    CrossedElement b = CrossedElement(mono(0, 1, 3), gs[1]) + CrossedElement(mono(1, 0) + mono(3, 1));
    auto s = crossed_star(a, b, mu, order);
    auto v = rc_evaluate(rc_element(order), a, b, omega_from_mu(mu));
    Scalar t(1);
    for (int n = 0; n <= order; ++n) {
      CHECK(v[n] * t == s[n]);
      CHECK(std::min(v[n].precision(), s[n].precision()) >= 4);
      t *= rc_hbar_scale();
    }
  };
  check(mono(0, 1), {DiffeoGerm::affine(1, 1), DiffeoGerm::affine(1, Scalar::ratio(1, 2))}, 3);
  check(LaurentPoly2(), {DiffeoGerm::mobius(1, 0, 1, 1), DiffeoGerm::affine(2, 0)}, 2);
  auto phi = DiffeoGerm::series({0, Scalar::ratio(1, 2), Scalar::ratio(-1, 8), 0, Scalar::ratio(1, 192), 0,
                                 Scalar::ratio(-1, 2880), 0, Scalar::ratio(17, 645120), 0,
                                 Scalar::ratio(-31, 14515200)});
  check(mono(0, 1, Scalar::ratio(1, 2)), {phi, phi.inverse()}, 2);
}

TEST_CASE("the antipode matters on non-affine germs") {
  auto phi = DiffeoGerm::series({0, Scalar::ratio(1, 2), Scalar::ratio(-1, 8), 0, Scalar::ratio(1, 192), 0,
                                 Scalar::ratio(-1, 2880), 0, Scalar::ratio(17, 645120), 0,
                                 Scalar::ratio(-31, 14515200)});
  LaurentPoly2 mu = mono(0, 1, Scalar::ratio(1, 2));
  CrossedElement a = CrossedElement(mono(1, 1), phi), b = CrossedElement(mono(0, 1, 3), phi);
  auto s = crossed_star(a, b, mu, 1);
  auto v = rc_evaluate(rc_element(1, {PochhammerShift::Plus, false}), a, b, omega_from_mu(mu));
  CHECK_FALSE(v[1] * rc_hbar_scale() == s[1]);
}
