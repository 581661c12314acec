#include "rcq/crossed.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace rcq {

CrossedElement::CrossedElement(LaurentPoly2 f) { add(f, DiffeoGerm::identity()); }

CrossedElement::CrossedElement(LaurentPoly2 f, DiffeoGerm g) { add(f, g); }

bool CrossedElement::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.f.is_zero(); });
}

LaurentPoly2 CrossedElement::coefficient(const DiffeoGerm& g) const {
  for (const auto& t : terms_)
    if (t.germ == g) return t.f;
  return LaurentPoly2();
}

int CrossedElement::precision() const {
  int p = LaurentPoly2::kExact;
  for (const auto& t : terms_) p = std::min(p, t.f.precision());
  return p;
}

CrossedElement& CrossedElement::add(const LaurentPoly2& f, const DiffeoGerm& g) {
  for (auto& t : terms_) {
    if (t.germ == g) {
      t.f += f;
      return *this;
    }
  }
  if (f.is_zero() && f.exact()) return *this;
  terms_.push_back({g, f});
  return *this;
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& o) {
  for (const auto& t : o.terms_) add(t.f, t.germ);
  return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& o) {
  for (const auto& t : o.terms_) add(-t.f, t.germ);
  return *this;
}

CrossedElement& CrossedElement::operator*=(const Scalar& c) {
  for (auto& t : terms_) t.f *= c;
  return *this;
}

CrossedElement operator*(const CrossedElement& a, const CrossedElement& b) {
  CrossedElement r;
  for (const auto& ta : a.terms_) {
    DiffeoGerm inv = ta.germ.inverse();
    for (const auto& tb : b.terms_) r.add(ta.f * lift_pullback(tb.f, inv), ta.germ.compose(tb.germ));
  }
  return r;
}

bool operator==(const CrossedElement& a, const CrossedElement& b) {
  for (const auto& t : a.terms_)
    if (t.f != b.coefficient(t.germ)) return false;
  for (const auto& t : b.terms_)
    if (t.f != a.coefficient(t.germ)) return false;
  return true;
}

std::string CrossedElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (t.f.is_zero() && t.f.exact()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << t.f << ")";
    if (!t.germ.is_identity()) os << "*U[" << t.germ.to_string() << "]";
  }
  if (first) os << "0";
  return os.str();
}

LaurentPoly2 apply_x(const LaurentPoly2& f) { return f.partial_x1().shifted(0, -1); }

LaurentPoly2 apply_y(const LaurentPoly2& f) { return f.partial_x2().shifted(0, 1, Scalar(-1)); }

LaurentPoly2 delta_multiplier(int n, const DiffeoGerm& phi) {
  if (n < 1) throw InputError("delta index must be positive");
  if (phi.kind() == DiffeoGerm::Kind::Affine) return LaurentPoly2();
  const LaurentPoly2& psi = phi.inverse_function();
  LaurentPoly2 d1 = psi.partial_x1();
  LaurentPoly2 m = d1.partial_x1() * reciprocal(d1, phi.trunc());
  for (int k = 1; k < n; ++k) m = m.partial_x1();
  return m.shifted(0, -n);
}

CrossedElement CrossedOps::X(const CrossedElement& a) const { return a.map_coefficients(apply_x); }

CrossedElement CrossedOps::Y(const CrossedElement& a) const { return a.map_coefficients(apply_y); }

CrossedElement CrossedOps::delta(int n, const CrossedElement& a) const {
  CrossedElement r;
  for (const auto& t : a.terms()) r.add(delta_multiplier(n, t.germ) * t.f, t.germ);
  return r;
}

CrossedElement h1_act(const H1Element& h, const CrossedElement& a) { return act(h, a, CrossedOps{}); }

CrossedElement evaluate(const H1Tensor& t, const CrossedElement& a, const CrossedElement& b) {
  return evaluate(t, a, b, CrossedOps{}, [](const CrossedElement& u, const CrossedElement& v) { return u * v; });
}

}  // namespace rcq
