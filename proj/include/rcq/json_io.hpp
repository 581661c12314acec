#pragma once

// JSON exchange format for every expression type. Numbers are exact: a
// scalar is [num_re, den_re, num_im, den_im], each entry an integer or, when
// it does not fit in 64 bits, a decimal string.

#include <string>

#include "json.hpp"
#include "rcq/crossed.hpp"
#include "rcq/hbar.hpp"
#include "rcq/modular.hpp"

namespace rcq {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json rational_to_json(const Rational& q);  // [num, den]
Rational rational_from_json(const Json& j);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"type": "laurent", "vars": ["x1","x2"], "terms": [[e1, e2, scalar], ...]}
/// plus "prec" when the value is known only modulo x1^(prec+1).
Json to_json(const LaurentPoly2& f);
LaurentPoly2 laurent_from_json(const Json& j);

/// {"type": "germ", "kind": "affine"|"mobius", "matrix": [a,b,c,d], "trunc": T}
/// or {"type": "germ", "kind": "series", "coeffs": [c0, c1, ...], "trunc": T}.
Json to_json(const DiffeoGerm& g);
DiffeoGerm germ_from_json(const Json& j);

/// {"type": "crossed", "terms": [{"f": laurent, "germ": germ}, ...]}; a bare
/// laurent is accepted as a function times the identity.
Json to_json(const CrossedElement& a);
CrossedElement crossed_from_json(const Json& j);

/// {"type": "qseries", "prec": P, "coeffs": [[num, den], ...]}
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// {"type": "modular", "weight": k, "q": qseries}
Json to_json(const ModularForm& f);
ModularForm modular_from_json(const Json& j);

/// {"terms": [{"delta": [1,1,2], "y": a, "x": b, "c": scalar}, ...]}
Json to_json(const PbwMonomial& m);
PbwMonomial pbw_from_json(const Json& j);
Json to_json(const H1Element& h);
H1Element h1_from_json(const Json& j);

/// {"type": "h1tensor", "rank": r, "terms": [{"legs": [pbw, ...], "c": scalar}, ...]}
Json to_json(const H1Tensor& t);
H1Tensor h1tensor_from_json(const Json& j);

/// {"mu": laurent, "family": "conn-gen"}
Json connection_to_json(const LaurentPoly2& mu);
LaurentPoly2 connection_mu_from_json(const Json& j);

template <class T>
Json to_json(const HbarSeries<T>& s) {
  Json out = Json::object();
  out["type"] = "hbar";
  out["order"] = s.order();
  Json cs = Json::array();
  for (const auto& c : s.coeffs()) cs.push_back(to_json(c));
  out["coeffs"] = std::move(cs);
  return out;
}

/// Parse text, raising InputError on malformed JSON.
Json parse_json(const std::string& text);

}  // namespace rcq
