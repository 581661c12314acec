#include "doctest.h"
#include "rcq/crossed.hpp"
#include "rcq/geometry.hpp"

using namespace rcq;

namespace {
LaurentPoly2 mono(int a, int b, Scalar c = 1) { return LaurentPoly2::monomial(a, b, c); }

// x - log((1 + e^x)/2), preserving the connection with mu = x2/2
DiffeoGerm logistic_germ() {
  return DiffeoGerm::series({0, Scalar::ratio(1, 2), Scalar::ratio(-1, 8), 0, Scalar::ratio(1, 192), 0,
                             Scalar::ratio(-1, 2880), 0, Scalar::ratio(17, 645120), 0,
                             Scalar::ratio(-31, 14515200)});
}
}  // namespace

TEST_CASE("curvature of the family") {
  for (const auto& mu : {LaurentPoly2(), mono(0, 1), mono(0, 2), mono(1, 1), mono(3, 3), mono(2, -1)}) {
    Curvature r = curvature(Connection2D::family(mu));
    CHECK(r.components[0][1] == curvature_formula(mu));
    CHECK(r.components[0][0].is_zero());
    CHECK(r.components[1][1].is_zero());
  }
  CHECK(curvature(Connection2D::family(mono(2, 1))).is_zero());
  CHECK_FALSE(curvature(Connection2D::family(mono(0, 2))).is_zero());
}

TEST_CASE("invariance and the delta2 discrepancy") {
  auto phi = logistic_germ();
  auto mu = mono(0, 1, Scalar::ratio(1, 2));
  CHECK(connection_preserved(mu, phi));
  CHECK(delta2_discrepancy(mu, phi).is_zero());
  auto q = DiffeoGerm::series({0, 1, 1});
  CHECK_FALSE(connection_preserved(LaurentPoly2(), q));
  CHECK_FALSE(delta2_discrepancy(LaurentPoly2(), q).is_zero());
  auto m = DiffeoGerm::mobius(2, 1, 1, 3);
  CHECK(connection_preserved(LaurentPoly2(), m));
  CHECK(delta2_discrepancy(LaurentPoly2(), m).is_zero());
}

TEST_CASE("delta2' is inner on invariant germs") {
  auto phi = logistic_germ();
  auto mu = mono(0, 1, Scalar::ratio(1, 2));
  LaurentPoly2 omega = omega_from_mu(mu);
  CrossedElement u = CrossedElement::unitary(phi);
  CrossedElement lhs = h1_act(H1Element::delta2_prime(), u);
  CrossedElement expect = CrossedElement(omega - push_omega(omega, phi), phi);
  CHECK(lhs == expect);
  CrossedElement w(omega);
  CHECK(lhs == w * CrossedElement::unitary(phi) - CrossedElement::unitary(phi) * w);
  CHECK(lhs == CrossedElement(schwarzian(phi.inverse()).shifted(0, -2), phi));
  // the opposite sign fails
  CHECK_FALSE(lhs == CrossedElement(push_omega(omega, phi) - omega, phi));
}
