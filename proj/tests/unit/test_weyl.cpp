#include "doctest.h"
#include "rcq/crossed.hpp"
#include "rcq/weyl.hpp"

using namespace rcq;

namespace {
LaurentPoly2 mono(int a, int b, Scalar c = 1) { return LaurentPoly2::monomial(a, b, c); }
}  // namespace

TEST_CASE("weyl algebra is associative") {
  int B = 6;
  WeylSection a(B), b(B), c(B);
  a.add({0, 1, 2, kForm0}, mono(1, 0)).add({1, 0, 1, kDx1}, mono(0, 1));
  b.add({0, 2, 0, kForm0}, mono(0, -1)).add({0, 1, 1, kDx2}, LaurentPoly2(3));
  c.add({0, 0, 3, kForm0}, mono(2, 2)).add({0, 1, 0, kForm0}, LaurentPoly2(1));
  CHECK(weyl_mul(weyl_mul(a, b), c) == weyl_mul(a, weyl_mul(b, c)));
}

TEST_CASE("koszul identity") {
  int B = 6;
  WeylSection a(B);
  a.add({0, 2, 1, kForm0}, mono(1, 0));
  a.add({0, 1, 1, kDx1}, mono(0, 1));
  a.add({0, 0, 2, kDx12}, LaurentPoly2(2));
  WeylSection lhs = weyl_delta(weyl_delta_star(a)) + weyl_delta_star(weyl_delta(a));
  WeylSection rhs(B);
  rhs.add({0, 2, 1, kForm0}, mono(1, 0, 3));
  rhs.add({0, 1, 1, kDx1}, mono(0, 1, 3));
  rhs.add({0, 0, 2, kDx12}, LaurentPoly2(8));
  CHECK(lhs == rhs);
}

TEST_CASE("moyal and the Giaquinto-Zhang element") {
  std::vector<LaurentPoly2> corpus = {mono(1, 1), mono(2, -1), mono(0, 3) + mono(1, 0), mono(3, 2),
                                      mono(-1, 1, Scalar::ratio(1, 3))};
  for (const auto& f : corpus)
    for (const auto& g : corpus) {
      auto m = moyal_star(f, g, 4);
      CHECK(m[1] == poisson_bracket(f, g) * Scalar(Rational(0), make_rational(-1, 2)));
      Scalar t(1);
      for (int n = 0; n <= 4; ++n) {
        auto gz = evaluate(gz_element(n), f, g, FunctionOps{},
                           [](const LaurentPoly2& a, const LaurentPoly2& b) { return a * b; });
        CHECK(m[n] * Scalar(factorial(n)) == gz * t);
        t *= Scalar(Rational(0), make_rational(1, 2));
      }
    }
}
