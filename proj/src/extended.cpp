#include "rcq/extended.hpp"

#include <mutex>
#include <sstream>

namespace rcq {

namespace {

void trim(PPoly::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

PPoly::Exponents mul_exp(const PPoly::Exponents& a, const PPoly::Exponents& b) {
  PPoly::Exponents r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

PPoly apply_x(const PPoly& p) {
  PPoly r;
  for (const auto& [e, c] : p.terms())
    for (size_t j = 0; j < e.size(); ++j) {
      if (!e[j]) continue;
      PPoly::Exponents f = e;
      --f[j];
      if (f.size() <= j + 1) f.resize(j + 2, 0);
      ++f[j + 1];
      trim(f);
      r += PPoly::monomial(f, c * Scalar(e[j]));
    }
  return r;
}

PPoly apply_y(const PPoly& p) {
  PPoly r;
  for (const auto& [e, c] : p.terms()) {
    int w = 0;
    for (size_t j = 0; j < e.size(); ++j) w += e[j] * static_cast<int>(j + 2);
    r += PPoly::monomial(e, c * Scalar(w));
  }
  return r;
}

// (Delta x id) Delta, cached per monomial
const H1Tensor& triple_coproduct(const PbwMonomial& m) {
  static std::map<PbwMonomial, H1Tensor> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  H1Tensor t = coproduct(m).map_leg(0, [](const PbwMonomial& k) { return coproduct(k); });
  return cache.emplace(m, std::move(t)).first->second;
}

}  // namespace

PPoly::PPoly(Scalar c) {
  if (!c.is_zero()) terms_[{}] = std::move(c);
}

PPoly PPoly::z(int j) {
  Exponents e(j + 1, 0);
  e[j] = 1;
  return monomial(e);
}

PPoly PPoly::monomial(Exponents e, Scalar c) {
  trim(e);
  PPoly r;
  r.add_term(e, c);
  return r;
}

void PPoly::add_term(const Exponents& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(e, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PPoly& PPoly::operator+=(const PPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

PPoly& PPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

PPoly operator*(const PPoly& a, const PPoly& b) {
  PPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(mul_exp(ea, eb), ca * cb);
  return r;
}

PPoly PPoly::acted(const PbwMonomial& h) const {
  if (!h.delta.empty()) return PPoly();
  PPoly r = *this;
  for (int i = 0; i < h.x; ++i) r = apply_x(r);
  for (int i = 0; i < h.y; ++i) r = apply_y(r);
  return r;
}

std::string PPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (size_t j = 0; j < e.size(); ++j)
      if (e[j]) os << "*Z" << j << (e[j] > 1 ? "^" + std::to_string(e[j]) : "");
  }
  if (first) os << "0";
  return os.str();
}

ExtendedElement::ExtendedElement(Scalar c) {
  if (!c.is_zero()) terms_[Key{}] = std::move(c);
}

ExtendedElement::ExtendedElement(const H1Element& h) {
  for (const auto& [m, c] : h.terms()) add_term({{}, m, {}}, c);
}

ExtendedElement ExtendedElement::make(const PPoly& p, const H1Element& h, const PPoly& q) {
  ExtendedElement r;
  for (const auto& [ep, cp] : p.terms())
    for (const auto& [m, ch] : h.terms())
      for (const auto& [eq, cq] : q.terms()) r.add_term({ep, m, eq}, cp * ch * cq);
  return r;
}

ExtendedElement ExtendedElement::alpha(const PPoly& p) { return make(p, H1Element(1), PPoly(1)); }

ExtendedElement ExtendedElement::beta(const PPoly& q) { return make(PPoly(1), H1Element(1), q); }

void ExtendedElement::add_term(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExtendedElement& ExtendedElement::operator+=(const ExtendedElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ExtendedElement& ExtendedElement::operator-=(const ExtendedElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ExtendedElement& ExtendedElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

ExtendedElement operator*(const ExtendedElement& a, const ExtendedElement& b) {
  // (p1 h1 q1)(p2 h2 q2) = p1 (h1' p2) h1'' h2 (h1''' q2) q1
  ExtendedElement r;
  for (const auto& [ka, ca] : a.terms_) {
    const H1Tensor& t = triple_coproduct(ka.h);
    for (const auto& [kb, cb] : b.terms_) {
      PPoly p2 = PPoly::monomial(kb.p), q2 = PPoly::monomial(kb.q);
      PPoly p1 = PPoly::monomial(ka.p), q1 = PPoly::monomial(ka.q);
      for (const auto& [legs, c] : t.terms()) {
        PPoly left = p2.acted(legs[0]);
        if (left.is_zero()) continue;
        PPoly right = q2.acted(legs[2]);
        if (right.is_zero()) continue;
        H1Element mid = multiply(legs[1], kb.h);
        r += ExtendedElement::make(p1 * left, mid, right * q1) * (c * ca * cb);
      }
    }
  }
  return r;
}

ExtendedElement extended_mul(const ExtendedElement& a, const ExtendedElement& b) { return a * b; }

std::string ExtendedElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*[" << PPoly::monomial(k.p).to_string() << " | " << k.h.to_string() << " | "
       << PPoly::monomial(k.q).to_string() << "]";
  }
  if (first) os << "0";
  return os.str();
}

ExtendedElement delta2_prime_tilde() {
  return ExtendedElement(H1Element::delta2_prime()) - ExtendedElement::alpha(PPoly::z(0)) +
         ExtendedElement::beta(PPoly::z(0));
}

CrossedElement rho(const PPoly& p, const LaurentPoly2& omega) {
  ChiEvaluator ev(CrossedElement(LaurentPoly2(1)), CrossedElement(omega));
  CrossedElement r;
  for (const auto& [e, c] : p.terms()) {
    CrossedElement v = e.empty() ? CrossedElement(LaurentPoly2(1)) : ev.rho_of(e);
    r += v * c;
  }
  return r;
}

CrossedElement chi_eval(const ExtendedElement& e, const CrossedElement& a, const LaurentPoly2& omega) {
  ChiEvaluator ev(a, CrossedElement(omega));
  return ev(e);
}

}  // namespace rcq
