#include "rcq/json_io.hpp"

#include <limits>

namespace rcq {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

void expect_type(const Json& j, const char* type) {
  if (!j.is_object()) throw InputError(std::string("expected a ") + type + " object");
  if (j.contains("type") && j.at("type") != type)
    throw InputError(std::string("expected type '") + type + "', got " + j.at("type").dump());
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError("malformed integer " + j.dump());
    return z;
  }
  throw InputError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return Rational(integer_from_json(j));
  if (!j.is_array() || j.size() != 2) throw InputError("expected [num, den], got " + j.dump());
  Integer den = integer_from_json(j[1]);
  if (den == 0) throw InputError("zero denominator");
  return make_rational(integer_from_json(j[0]), den);
}

Json to_json(const Scalar& s) {
  return Json::array({integer_to_json(s.re().get_num()), integer_to_json(s.re().get_den()),
                      integer_to_json(s.im().get_num()), integer_to_json(s.im().get_den())});
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return Scalar(Rational(integer_from_json(j)));
  if (!j.is_array() || (j.size() != 2 && j.size() != 4))
    throw InputError("expected [num_re, den_re, num_im, den_im], got " + j.dump());
  Rational re = rational_from_json(Json::array({j[0], j[1]}));
  if (j.size() == 2) return Scalar(re);
  return Scalar(re, rational_from_json(Json::array({j[2], j[3]})));
}

Json to_json(const LaurentPoly2& f) {
  Json out = Json::object();
  out["type"] = "laurent";
  out["vars"] = Json::array({"x1", "x2"});
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({e.first, e.second, to_json(c)}));
  out["terms"] = std::move(terms);
  if (!f.exact()) out["prec"] = f.precision();
  return out;
}

LaurentPoly2 laurent_from_json(const Json& j) {
  expect_type(j, "laurent");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw InputError("laurent terms must be an array");
  LaurentPoly2 r;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
      throw InputError("laurent term must be [e1, e2, scalar], got " + t.dump());
    r += LaurentPoly2::monomial(t[0].get<int>(), t[1].get<int>(), scalar_from_json(t[2]));
  }
  if (j.contains("prec")) r += LaurentPoly2::big_o(int_field(j, "prec"));
  return r;
}

Json to_json(const DiffeoGerm& g) {
  Json out = Json::object();
  out["type"] = "germ";
  if (g.kind() == DiffeoGerm::Kind::Series) {
    out["kind"] = "series";
    Json cs = Json::array();
    for (int k = 0; k <= g.trunc(); ++k) cs.push_back(to_json(g.coeff(k)));
    out["coeffs"] = std::move(cs);
  } else {
    out["kind"] = g.kind() == DiffeoGerm::Kind::Affine ? "affine" : "mobius";
    Json m = Json::array();
    for (const auto& s : g.matrix()) m.push_back(to_json(s));
    out["matrix"] = std::move(m);
  }
  out["trunc"] = g.trunc();
  return out;
}

DiffeoGerm germ_from_json(const Json& j) {
  expect_type(j, "germ");
  int t = j.contains("trunc") ? int_field(j, "trunc") : kDefaultGermOrder;
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "series") {
    std::vector<Scalar> cs;
    for (const auto& c : field(j, "coeffs")) cs.push_back(scalar_from_json(c));
    return DiffeoGerm::series(std::move(cs), t);
  }
  const Json& m = field(j, "matrix");
  if (!m.is_array() || m.size() != 4) throw InputError("germ matrix must have four entries");
  Scalar a = scalar_from_json(m[0]), b = scalar_from_json(m[1]), c = scalar_from_json(m[2]),
         d = scalar_from_json(m[3]);
  if (kind == "affine") {
    if (!c.is_zero() || !d.is_one()) throw InputError("affine germ needs c = 0, d = 1");
    return DiffeoGerm::affine(a, b, t);
  }
  if (kind == "mobius") return DiffeoGerm::mobius(a, b, c, d, t);
  throw InputError("unknown germ kind '" + kind + "'");
}

Json to_json(const CrossedElement& a) {
  Json out = Json::object();
  out["type"] = "crossed";
  Json terms = Json::array();
  for (const auto& t : a.terms()) {
    if (t.f.is_zero() && t.f.exact()) continue;
    Json e = Json::object();
    e["f"] = to_json(t.f);
    e["germ"] = to_json(t.germ);
    terms.push_back(std::move(e));
  }
  out["terms"] = std::move(terms);
  return out;
}

CrossedElement crossed_from_json(const Json& j) {
  if (j.is_object() && j.value("type", "") == "laurent") return CrossedElement(laurent_from_json(j));
  expect_type(j, "crossed");
  CrossedElement r;
  for (const auto& t : field(j, "terms")) {
    DiffeoGerm g = t.contains("germ") ? germ_from_json(t.at("germ")) : DiffeoGerm::identity();
    r.add(laurent_from_json(field(t, "f")), g);
  }
  return r;
}

Json to_json(const QSeries& s) {
  Json out = Json::object();
  out["type"] = "qseries";
  out["prec"] = s.precision();
  Json cs = Json::array();
  for (const auto& c : s.coeffs()) cs.push_back(rational_to_json(c));
  out["coeffs"] = std::move(cs);
  return out;
}

QSeries qseries_from_json(const Json& j) {
  expect_type(j, "qseries");
  std::vector<Rational> cs;
  for (const auto& c : field(j, "coeffs")) cs.push_back(rational_from_json(c));
  int p = j.contains("prec") ? int_field(j, "prec") : static_cast<int>(cs.size()) - 1;
  if (p < 0) throw InputError("q-series needs a nonnegative precision");
  if (static_cast<int>(cs.size()) > p + 1) throw InputError("q-series has coefficients beyond its precision");
  cs.resize(p + 1);
  return QSeries(p, std::move(cs));
}

Json to_json(const ModularForm& f) {
  Json out = Json::object();
  out["type"] = "modular";
  out["weight"] = f.weight;
  out["q"] = to_json(f.q);
  return out;
}

ModularForm modular_from_json(const Json& j) {
  expect_type(j, "modular");
  return ModularForm(qseries_from_json(field(j, "q")), int_field(j, "weight"));
}

Json to_json(const PbwMonomial& m) {
  Json out = Json::object();
  out["delta"] = m.delta;
  out["y"] = m.y;
  out["x"] = m.x;
  return out;
}

PbwMonomial pbw_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("expected a PBW monomial object");
  PbwMonomial m;
  if (j.contains("delta")) {
    for (const auto& d : j.at("delta")) {
      if (!d.is_number_integer() || d.get<int>() < 1) throw InputError("delta indices must be positive integers");
      m.delta.push_back(d.get<int>());
    }
    std::sort(m.delta.begin(), m.delta.end());
  }
  m.y = j.contains("y") ? int_field(j, "y") : 0;
  m.x = j.contains("x") ? int_field(j, "x") : 0;
  if (m.y < 0 || m.x < 0) throw InputError("negative PBW exponent");
  return m;
}

Json to_json(const H1Element& h) {
  Json terms = Json::array();
  for (const auto& [m, c] : h.terms()) {
    Json t = to_json(m);
    t["c"] = to_json(c);
    terms.push_back(std::move(t));
  }
  Json out = Json::object();
  out["terms"] = std::move(terms);
  return out;
}

H1Element h1_from_json(const Json& j) {
  H1Element r;
  for (const auto& t : field(j, "terms")) {
    Scalar c = t.contains("c") ? scalar_from_json(t.at("c")) : Scalar(1);
    r += H1Element(pbw_from_json(t), c);
  }
  return r;
}

Json to_json(const H1Tensor& t) {
  Json out = Json::object();
  out["type"] = "h1tensor";
  out["rank"] = t.rank();
  Json terms = Json::array();
  for (const auto& [k, c] : t.terms()) {
    Json legs = Json::array();
    for (const auto& m : k) legs.push_back(to_json(m));
    Json e = Json::object();
    e["legs"] = std::move(legs);
    e["c"] = to_json(c);
    terms.push_back(std::move(e));
  }
  out["terms"] = std::move(terms);
  return out;
}

H1Tensor h1tensor_from_json(const Json& j) {
  expect_type(j, "h1tensor");
  int rank = int_field(j, "rank");
  if (rank < 1) throw InputError("tensor rank must be positive");
  H1Tensor r(rank);
  for (const auto& t : field(j, "terms")) {
    H1Tensor::Key k;
    for (const auto& m : field(t, "legs")) k.push_back(pbw_from_json(m));
    if (static_cast<int>(k.size()) != rank) throw InputError("tensor term has the wrong number of legs");
    r.add_term(k, t.contains("c") ? scalar_from_json(t.at("c")) : Scalar(1));
  }
  return r;
}

Json connection_to_json(const LaurentPoly2& mu) {
  Json out = Json::object();
  out["mu"] = to_json(mu);
  out["family"] = "conn-gen";
  return out;
}

LaurentPoly2 connection_mu_from_json(const Json& j) {
  if (j.is_object() && j.contains("mu")) {
    if (j.contains("family") && j.at("family") != "conn-gen" && j.at("family") != "conn-flat")
      throw InputError("unknown connection family " + j.at("family").dump());
    return laurent_from_json(j.at("mu"));
  }
  return laurent_from_json(j);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace rcq
