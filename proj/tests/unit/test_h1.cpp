#include "doctest.h"
#include "rcq/h1.hpp"

using namespace rcq;

namespace {
const H1Element X = H1Element::X();
const H1Element Y = H1Element::Y();
H1Element d(int n) { return H1Element::delta(n); }
H1Tensor t2(const H1Element& a, const H1Element& b) { return H1Tensor::pure({a, b}); }
}  // namespace

TEST_CASE("commutation relations") {
  CHECK(X * Y == Y * X - X);
  CHECK(X * d(1) == d(1) * X + d(2));
  CHECK(Y * d(3) == d(3) * Y + d(3) * Scalar(3));
  CHECK(pbw_normalize({Generator::Y(), Generator::delta(3), Generator::Y()}) ==
        d(3) * Y * Y + d(3) * Y * Scalar(3));
  CHECK(commutator(d(2), d(5)).is_zero());
  // associativity of the normal-form product
  H1Element a = X * X + d(1) * Y;
  H1Element b = Y * X - d(2);
  H1Element c = X * d(1) * Y + Scalar(3);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("coproduct on generators") {
  CHECK(coproduct(Y) == t2(Y, 1) + t2(1, Y));
  CHECK(coproduct(d(2)) == t2(d(2), 1) + t2(1, d(2)) + t2(d(1), d(1)));
  CHECK(coproduct(H1Element(1)) == t2(1, 1));
  CHECK(coproduct(X) == t2(X, 1) + t2(1, X) + t2(d(1), Y));
}

TEST_CASE("antipode and counit") {
  H1Element sx = antipode(X);
  CHECK(sx == -X + d(1) * Y);
  CHECK(antipode(Y * Y) == Y * Y);
  CHECK(counit(d(1) * X) == Scalar(0));
  CHECK(counit(H1Element(5)) == Scalar(5));
  // m(S (x) id) Delta (X) = 0
  H1Tensor dx = coproduct(X);
  H1Tensor s = dx.map_leg(0, [](const PbwMonomial& m) { return H1Tensor::pure({antipode(m)}); });
  CHECK(s.multiply_legs(0).is_zero());
  // S is an antihomomorphism
  H1Element a = X * d(1), b = Y * X;
  CHECK(antipode(a * b) == antipode(b) * antipode(a));
}
