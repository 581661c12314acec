#include <array>

#include "doctest.h"
#include "rcq/fedosov.hpp"
#include "rcq/modular.hpp"

using namespace rcq;

TEST_CASE("eisenstein and delta") {
  auto e4 = eisenstein(4, 5);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  auto e2 = eisenstein(2, 5);
  CHECK(e2[1] == -24);
  CHECK(e2[2] == -72);
  auto d = delta_form(10);
  CHECK(d.q[1] == 1);
  CHECK(d.q[2] == -24);
  CHECK(d.q[3] == 252);
  CHECK(d.q.derivative() == eisenstein(2, 10) * d.q);
}

TEST_CASE("X and Y") {
  int Q = 20;
  auto e4 = eisenstein_form(4, Q), e6 = eisenstein_form(6, Q), d = delta_form(Q);
  CHECK(x_op(e4).q == e6.q * make_rational(-1, 3));
  CHECK(x_op(d).q.is_zero());
  for (const auto& f : {e4, e6, d, e4 * e4, e4 * e6}) {
    CHECK(modular_coordinates(x_op(f).q, f.weight + 2).has_value());
    CHECK(y_op(x_op(f)) - x_op(y_op(f)) == x_op(f));
  }
  CHECK_FALSE(modular_coordinates(eisenstein(2, Q), 2).has_value());
}

TEST_CASE("rankin-cohen brackets") {
  int Q = 20;
  auto e4 = eisenstein_form(4, Q), e6 = eisenstein_form(6, Q), d = delta_form(Q);
  CHECK(rc_modular(0, e4, e6) == e4 * e6);
  CHECK(rc_modular(1, e4, e4).q.is_zero());
  auto rc1 = rc_modular(1, e4, e6);
  CHECK(rc1.q == d.q * Rational(-3456));
  for (int n = 0; n <= 4; ++n) {
    auto a = rc_modular(n, e4, d), b = rc_modular(n, d, e4);
    CHECK(a.q == b.q * Rational(n % 2 ? -1 : 1));
  }
  for (int n = 0; n <= 3; ++n)
    for (const auto& f : {e4, e6, d})
      for (const auto& g : {e4, e6, d}) {
        auto r = rc_modular(n, f, g);
        CHECK(modular_coordinates(r.q, r.weight).has_value());
      }
}

TEST_CASE("quasimodular derivative") {
  int Q = 15;
  QuasiForm f = QuasiForm::e2(Q) * QuasiForm::from_modular(eisenstein_form(4, Q)) +
                QuasiForm::from_modular(eisenstein_form(6, Q));
  CHECK(f.derivative().to_qseries() == f.to_qseries().derivative());
  CHECK(QuasiForm::from_modular(x_op(eisenstein_form(4, Q))).depth() == 0);
}

TEST_CASE("zagier associativity") {
  int Q = 30;
  auto e4 = eisenstein_form(4, Q), e6 = eisenstein_form(6, Q), d = delta_form(Q);
  ModularForm one(QSeries::constant(1, Q), 0);
  for (const auto& t : std::vector<std::array<ModularForm, 3>>{{e4, e4, e6}, {e4, e6, d}, {one, e4, e6}}) {
    for (const auto& r : zagier_assoc_check(t[0], t[1], t[2], 4)) CHECK(r.equal);
  }
}

TEST_CASE("h1 rc element realizes the brackets") {
  int Q = 20;
  auto e4 = eisenstein_form(4, Q), e6 = eisenstein_form(6, Q), d = delta_form(Q);
  RCElement rc = rc_element(3);
  ModularForm omega = e4 * Scalar(make_rational(1, 72));
  for (const auto& f : {e4, e6, d})
    for (const auto& g : {e4, e6, d}) {
      auto v = rc_evaluate_on<ModularForm, ModularOps>(rc, f, g, omega);
      for (int n = 0; n <= 3; ++n) CHECK(v[n] == rc_modular(n, f, g));
    }
  auto flat = rc_evaluate_on<ModularForm, ModularOps>(rc, e4, e6, e4 * Scalar(0));
  CHECK(flat[1] == rc_modular(1, e4, e6));
  CHECK_FALSE(flat[2] == rc_modular(2, e4, e6));
}
