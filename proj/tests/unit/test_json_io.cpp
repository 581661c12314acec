#include "doctest.h"
#include "rcq/fedosov.hpp"
#include "rcq/json_io.hpp"
#include "rcq/modular.hpp"
#include "rcq/report.hpp"

using namespace rcq;

namespace {
LaurentPoly2 mono(int a, int b, Scalar c = 1) { return LaurentPoly2::monomial(a, b, c); }

// serialize, print, parse, deserialize
Json through_text(const Json& j) { return parse_json(j.dump()); }
}  // namespace

TEST_CASE("numbers survive a round trip, including big ones") {
  Integer big("123456789012345678901234567890");
  CHECK(integer_from_json(through_text(integer_to_json(big))) == big);
  CHECK(integer_to_json(Integer(-5)) == Json(-5));
  Rational q = make_rational(-7, 12);
  CHECK(rational_from_json(through_text(rational_to_json(q))) == q);
  Scalar s(make_rational(3, 5), make_rational(-1, 7));
  CHECK(scalar_from_json(through_text(to_json(s))) == s);
}

TEST_CASE("laurent polynomials keep their precision") {
  LaurentPoly2 f = mono(2, -1, Scalar::ratio(1, 3)) + mono(0, 2, Scalar::i()) + 4;
  LaurentPoly2 g = laurent_from_json(through_text(to_json(f)));
  CHECK(g == f);
  CHECK(g.exact());
  LaurentPoly2 t = f + LaurentPoly2::big_o(3);
  LaurentPoly2 u = laurent_from_json(through_text(to_json(t)));
  CHECK(u.precision() == 3);
  CHECK(u.terms() == t.terms());
}

TEST_CASE("germs, crossed elements and connections") {
  for (const auto& g : {DiffeoGerm::affine(2, 1), DiffeoGerm::mobius(1, 0, 1, 1), DiffeoGerm::series({0, 1, 1})}) {
    DiffeoGerm h = germ_from_json(through_text(to_json(g)));
    CHECK(h == g);
    CHECK(h.trunc() == g.trunc());
  }
  CrossedElement a(mono(1, 2), DiffeoGerm::series({0, 1, 1}));
  a += CrossedElement(mono(0, -1, 3));
  CHECK(crossed_from_json(through_text(to_json(a))) == a);
  LaurentPoly2 mu = mono(0, 1, Scalar::ratio(1, 2));
  CHECK(connection_mu_from_json(through_text(connection_to_json(mu))) == mu);
  // a bare laurent object is accepted as mu
  CHECK(connection_mu_from_json(to_json(mu)) == mu);
}

TEST_CASE("modular forms and hopf elements") {
  ModularForm d = delta_form(12);
  ModularForm e = modular_from_json(through_text(to_json(d)));
  CHECK(e == d);
  CHECK(e.weight == 12);
  H1Element h = H1Element::X() * H1Element::Y() + H1Element::delta(2) * Scalar(3);
  CHECK(h1_from_json(through_text(to_json(h))) == h);
  H1Tensor t = rc_h1(3);
  CHECK(h1tensor_from_json(through_text(to_json(t))) == t);
}

TEST_CASE("malformed input is rejected as input error") {
  CHECK_THROWS_AS(parse_json("{\"type\": "), InputError);
  CHECK_THROWS_AS(laurent_from_json(parse_json("{\"type\":\"laurent\",\"terms\":[[1]]}")), InputError);
  CHECK_THROWS_AS(rational_from_json(parse_json("[1, 0]")), InputError);
  CHECK_THROWS_AS(germ_from_json(parse_json("{\"type\":\"germ\",\"kind\":\"spline\"}")), InputError);
}

TEST_CASE("digest is fnv-1a") {
  CHECK(fnv1a_digest("") == "cbf29ce484222325");
  CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("reports are deterministic apart from timing") {
  VerificationReport r;
  r.suite = "demo";
  r.config = {{"seed", 7}};
  CaseRecord c;
  c.id = "one";
  c.claim = "1 = 1";
  c.inputs = Json::array({1});
  c.digest = fnv1a_digest(c.inputs.dump());
  c.pass = true;
  c.seconds = 0.5;
  r.cases.push_back(c);
  c.id = "two";
  c.pass = false;
  c.witness = {{"lhs", 1}, {"rhs", 2}};
  c.seconds = 0.25;
  r.cases.push_back(c);
  r.seconds = 1;
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == 1);
  Json a = r.to_json(false);
  r.cases[0].seconds = 9;
  r.seconds = 11;
  CHECK(a == r.to_json(false));
  CHECK(a != r.to_json(true));
  CHECK(a["summary"]["status"] == "FAIL");
  CHECK(r.to_text().find("two") != std::string::npos);
}
