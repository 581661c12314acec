#include <random>

#include "doctest.h"
#include "rcq/crossed.hpp"

using namespace rcq;

namespace {

LaurentPoly2 mono(int a, int b, Scalar c = 1) { return LaurentPoly2::monomial(a, b, c); }

DiffeoGerm quad() { return DiffeoGerm::series({0, 1, 1}); }

}  // namespace

TEST_CASE("crossed product is associative with unit") {
  auto q = quad();
  auto s = DiffeoGerm::affine(2, 0);
  CrossedElement a(mono(1, 2) + mono(0, -1, 3), q);
  CrossedElement b(mono(2, 1), s);
  CrossedElement c = CrossedElement(mono(0, 1)) + CrossedElement(mono(1, 0), q.inverse());
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * CrossedElement(1) == a);
  CHECK(CrossedElement(1) * a == a);
  CrossedElement u = CrossedElement::unitary(q) * CrossedElement::unitary(q.inverse());
  CHECK(u == CrossedElement(1));
}

TEST_CASE("defining action basics") {
  auto aff = DiffeoGerm::affine(3, 1);
  CHECK(h1_act(H1Element::delta(1), CrossedElement(mono(1, 1), aff)).is_zero());
  // Y(y^2) = 2 y^2 with y = 1/x2
  CHECK(h1_act(H1Element::Y(), CrossedElement(mono(0, -2))) == CrossedElement(mono(0, -2, 2)));
  auto q = quad();
  CrossedElement u = CrossedElement::unitary(q);
  auto lhs = h1_act(H1Element::X() * H1Element::delta(1) - H1Element::delta(1) * H1Element::X(), u);
  CHECK(lhs == h1_act(H1Element::delta(2), u));
}

TEST_CASE("module algebra law on generators") {
  auto q = quad();
  CrossedElement a = CrossedElement(mono(1, 2) + mono(2, -1), q) + CrossedElement(mono(0, 1));
  CrossedElement b = CrossedElement(mono(3, 0) + mono(0, -2), q.inverse()) + CrossedElement(mono(1, 1), q);
  for (const auto& h : {H1Element::X(), H1Element::Y(), H1Element::delta(1), H1Element::delta(2),
                        H1Element::X() * H1Element::Y() + H1Element::delta(1) * H1Element::X()}) {
    CrossedElement lhs = h1_act(h, a * b);
    CrossedElement rhs = evaluate(coproduct(h), a, b);
    CHECK(lhs == rhs);
    CHECK(lhs.precision() >= 3);
  }
}
