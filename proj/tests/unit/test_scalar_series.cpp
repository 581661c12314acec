#include "doctest.h"
#include "rcq/germ.hpp"
#include "rcq/hbar.hpp"
#include "rcq/qseries.hpp"

using namespace rcq;

namespace {
LaurentPoly2 mono(int a, int b, Scalar c = 1) { return LaurentPoly2::monomial(a, b, c); }
}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Scalar a = Scalar::ratio(1, 3);
  Scalar b = Scalar::ratio(-2, 6);
  CHECK(a + b == Scalar(0));
  CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
  CHECK(Scalar::ratio(3, -6).re() == make_rational(-1, 2));
  CHECK(Scalar(Rational(1), Rational(1)).inverse() == Scalar(make_rational(1, 2), make_rational(-1, 2)));
  CHECK_THROWS_AS(Scalar(0).inverse(), MathError);
  CHECK(pochhammer(Scalar(2), 3) == Scalar(24));
  CHECK(binomial(-2, 3) == Rational(-4));
}

TEST_CASE("laurent polynomial ring operations") {
  CHECK(mono(0, -1).partial_x2() == mono(0, -2, -1));
  CHECK(mono(1, 1) * mono(0, -1) == LaurentPoly2::x1());
  CHECK((mono(2, -1) + LaurentPoly2(3)).partial_x1() == mono(1, -1, 2));
  LaurentPoly2 f = mono(2, -3, Scalar::ratio(1, 2)) + mono(-1, 2, 5);
  CHECK(f.partial_x1().partial_x2() == f.partial_x2().partial_x1());
}

TEST_CASE("truncated series track their precision") {
  LaurentPoly2 a = LaurentPoly2::x1() + LaurentPoly2::big_o(3);
  CHECK(a.precision() == 3);
  LaurentPoly2 b = a * a;
  CHECK(b.precision() == 4);
  CHECK(b.coeff(2, 0) == Scalar(1));
  LaurentPoly2 r = reciprocal(LaurentPoly2(1) - LaurentPoly2::x1(), 5);
  CHECK(r.precision() == 5);
  for (int k = 0; k <= 5; ++k) CHECK(r.coeff(k, 0) == Scalar(1));
  CHECK((r * (LaurentPoly2(1) - LaurentPoly2::x1())) == LaurentPoly2(1));
}

TEST_CASE("germ composition and inversion") {
  auto f = DiffeoGerm::affine(2, 3);
  auto g = DiffeoGerm::affine(5, 7);
  CHECK(f.compose(g) == DiffeoGerm::affine(10, 17));
  CHECK(f.inverse() == DiffeoGerm::affine(Scalar::ratio(1, 2), Scalar::ratio(-3, 2)));
  auto q = DiffeoGerm::series({0, 1, 1});
  auto qi = q.inverse();
  CHECK(qi.coeff(2) == Scalar(-1));
  CHECK(qi.coeff(3) == Scalar(2));
  CHECK(qi.coeff(4) == Scalar(-5));
  CHECK(q.compose(qi) == DiffeoGerm::series({0, 1}));
  CHECK(qi.inverse() == q);
  auto c = DiffeoGerm::series({0, 1, 0, 1});
  auto qc = q.compose(c);
  // x + x^3 + (x + x^3)^2
  CHECK(qc.function() == (mono(1, 0) + mono(2, 0) + mono(3, 0) + mono(4, 0, 2) + mono(6, 0)));
  CHECK_THROWS_AS(q.compose(DiffeoGerm::affine(1, 1)), MathError);
  CHECK_THROWS_AS(DiffeoGerm::series({0, 0, 1}), MathError);
}

TEST_CASE("schwarzian of the quadratic germ") {
  auto q = DiffeoGerm::series({0, 1, 1});
  LaurentPoly2 s = schwarzian(q);
  CHECK(s.coeff(0, 0) == Scalar(-6));
  CHECK(s.coeff(1, 0) == Scalar(24));
  CHECK(s.coeff(2, 0) == Scalar(-72));
  auto m = DiffeoGerm::mobius(1, 0, 1, 1);
  CHECK(schwarzian(m).is_zero());
  // series expansion of a Mobius map has vanishing Schwarzian too
  auto ms = DiffeoGerm::series(m.function());
  CHECK(schwarzian(ms).is_zero());
}

TEST_CASE("hbar series product is associative") {
  HbarSeries<LaurentPoly2> a(3), b(3), c(3);
  for (int k = 0; k <= 3; ++k) {
    a[k] = mono(k, 1, k + 1);
    b[k] = mono(1, -k, 2) + LaurentPoly2(k);
    c[k] = mono(-1, k, Scalar::ratio(1, k + 1));
  }
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("q-series arithmetic") {
  QSeries s(4, {1, 1});
  QSeries t = s.pow(3);
  CHECK(t[2] == 3);
  CHECK(t.derivative()[3] == 3);
}
