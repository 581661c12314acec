#include "doctest.h"
#include "rcq/fedosov.hpp"
#include "rcq/geometry.hpp"

using namespace rcq;

namespace {
LaurentPoly2 mono(int a, int b, Scalar c = 1) { return LaurentPoly2::monomial(a, b, c); }
}  // namespace

TEST_CASE("weyl product conventions") {
  int B = 6;
  auto u1 = WeylSection::monomial(0, 1, 0, kForm0, 1, B);
  auto u2 = WeylSection::monomial(0, 0, 1, kForm0, 1, B);
  auto c = weyl_mul(u1, u2) - weyl_mul(u2, u1);
  CHECK(c == WeylSection::monomial(1, 0, 0, kForm0, LaurentPoly2(-Scalar::i()), B));
  auto s = moyal_star(LaurentPoly2::x1(), LaurentPoly2::x2(), 2);
  CHECK(s[0] == mono(1, 1));
  CHECK(s[1] == LaurentPoly2(Scalar(Rational(0), make_rational(-1, 2))));
  CHECK(s[2].is_zero());
}

TEST_CASE("D squares to zero on the flat family") {
  int B = 5;
  for (const auto& mu : {LaurentPoly2(), mono(0, 1), mono(1, 1), mono(2, 1)}) {
    WeylSection a(B);
    a.add({0, 1, 0, kForm0}, mono(2, -1));
    a.add({0, 0, 2, kForm0}, mono(1, 2));
    a.add({1, 1, 1, kForm0}, mono(-1, 1, 3));
    a.add({0, 2, 1, kForm0}, mono(3, 0));
    WeylSection d2 = fedosov_D(fedosov_D(a, mu), mu);
    // only degrees below B - 2 are fully determined
    CHECK(d2.truncated(B - 2).is_zero());
  }
}

TEST_CASE("flat sections") {
  LaurentPoly2 mu = mono(1, 1);
  auto fs = flat_section(mono(2, -1) + mono(1, 3), mu, 6);
  CHECK(fs.satisfies_recursions());
  CHECK(fs.satisfies_closed_form());
  WeylSection a = fs.to_weyl(6);
  CHECK(fedosov_D(a, mu).truncated(5).is_zero());
  auto lin = flat_section(LaurentPoly2::x1(), LaurentPoly2(), 3);
  CHECK(lin.a(1, 0) == LaurentPoly2(1));
  CHECK(lin.a(0, 1).is_zero());
  CHECK(lin.a(1, 1) == mono(0, -1, Scalar::ratio(-1, 2)));
}

TEST_CASE("fedosov star") {
  LaurentPoly2 mu = mono(1, 1);
  auto x1 = LaurentPoly2::x1(), x2 = LaurentPoly2::x2(), xi = mono(0, -1);
  CHECK(fedosov_star(x1, x2, mu, 3) == fedosov_star_via_weyl(x1, x2, mu, 3));
  auto f = mono(2, -1) + mono(1, 2), g = mono(-1, 3);
  CHECK(fedosov_star(f, g, mu, 3) == fedosov_star_via_weyl(f, g, mu, 3));
  auto c = fedosov_star(x1, x2, LaurentPoly2(), 2) - fedosov_star(x2, x1, LaurentPoly2(), 2);
  CHECK(c[1] == LaurentPoly2(-Scalar::i()));
  CHECK(c[0].is_zero());
}

TEST_CASE("connection invariance") {
  auto q = DiffeoGerm::series({0, 1, 1});
  CHECK_FALSE(connection_preserved(LaurentPoly2(), q));
  CHECK(connection_preserved(LaurentPoly2(), DiffeoGerm::mobius(1, 0, 1, 1)));
  CHECK(connection_preserved(mono(0, 1), DiffeoGerm::affine(1, 3)));
  CHECK(connection_preserved(mono(0, 1), DiffeoGerm::affine(-1, 3)));
  CHECK_FALSE(connection_preserved(mono(0, 1), DiffeoGerm::affine(2, 0)));
  auto c = pushforward_connection(Connection2D::family(LaurentPoly2()), q);
  CHECK(c.gamma(2, 1, 1) == -schwarzian(q).shifted(0, 1));
  CHECK(curvature(Connection2D::family(mono(0, 2))).components[0][1] == curvature_formula(mono(0, 2)));
}

TEST_CASE("flat connection matches Moyal in the orbit chart") {
  auto f = mono(2, 1) + mono(1, -1), g = mono(-1, 2) + mono(3, 0, 5);
  auto s = fedosov_star(f, g, LaurentPoly2(), 4);
  auto m = moyal_star(MomentSystem::to_orbit_chart(f), MomentSystem::to_orbit_chart(g), 4);
  for (int k = 0; k <= 4; ++k) CHECK(MomentSystem::to_orbit_chart(s[k]) == m[k]);
}

TEST_CASE("fedosov star is associative") {
  LaurentPoly2 mu = mono(1, 1) + mono(0, 1);
  auto f = mono(1, 1), g = mono(2, -1), h = mono(0, 3) + mono(1, 0);
  int N = 3;
  auto star = [&](const HbarSeries<LaurentPoly2>& a, const HbarSeries<LaurentPoly2>& b) {
    HbarSeries<LaurentPoly2> r(N);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j) {
        auto p = fedosov_star(a[i], b[j], mu, N - i - j);
        for (int k = 0; i + j + k <= N; ++k) r[i + j + k] += p[k];
      }
    return r;
  };
  auto lift = [&](const LaurentPoly2& u) {
    HbarSeries<LaurentPoly2> r(N);
    r[0] = u;
    return r;
  };
  CHECK(star(star(lift(f), lift(g)), lift(h)) == star(lift(f), star(lift(g), lift(h))));
}
