#include "rcq/germ.hpp"

#include <map>
#include <sstream>

namespace rcq {

namespace {

LaurentPoly2 linear(const Scalar& a, const Scalar& b) {
  return LaurentPoly2::monomial(1, 0, a) + LaurentPoly2(b);
}

// (a x + b) / (c x + d) expanded at 0; empty optional-like flag via prec 0 zero
bool mobius_series(const std::array<Scalar, 4>& m, int trunc, LaurentPoly2& out) {
  const auto& [a, b, c, d] = m;
  if (d.is_zero()) return false;
  if (c.is_zero()) {
    out = linear(a / d, b / d);
    return true;
  }
  out = (linear(a, b) * reciprocal(linear(c, d), trunc)).truncated(trunc);
  return true;
}

}  // namespace

DiffeoGerm DiffeoGerm::affine(const Scalar& a, const Scalar& b, int trunc) {
  if (a.is_zero()) throw MathError("affine germ with zero slope");
  DiffeoGerm g(Kind::Affine, trunc);
  g.m_ = {a, b, Scalar(0), Scalar(1)};
  g.init_exact();
  return g;
}

DiffeoGerm DiffeoGerm::mobius(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d, int trunc) {
  if ((a * d - b * c).is_zero()) throw MathError("degenerate Mobius map (ad - bc = 0)");
  DiffeoGerm g(Kind::Mobius, trunc);
  g.m_ = {a, b, c, d};
  g.init_exact();
  return g;
}

void DiffeoGerm::init_exact() {
  auto& [a, b, c, d] = m_;
  if (c.is_zero()) {
    Scalar di = d.inverse();
    a *= di;
    b *= di;
    d = 1;
    kind_ = Kind::Affine;
    fwd_ = linear(a, b);
    inv_ = linear(a.inverse(), -b / a);
    return;
  }
  kind_ = Kind::Mobius;
  Scalar n = d.is_zero() ? c.inverse() : d.inverse();
  for (auto& v : m_) v *= n;
  if (!mobius_series(m_, trunc_, fwd_)) fwd_ = LaurentPoly2::big_o(-1);
  std::array<Scalar, 4> mi{d, -b, -c, a};
  if (!mobius_series(mi, trunc_, inv_)) inv_ = LaurentPoly2::big_o(-1);
}

DiffeoGerm DiffeoGerm::series(std::vector<Scalar> coeffs, int trunc) {
  LaurentPoly2::Terms t;
  for (int k = 0; k < static_cast<int>(coeffs.size()) && k <= trunc; ++k)
    if (!coeffs[k].is_zero()) t.emplace(LaurentPoly2::Exponent{k, 0}, coeffs[k]);
  return series(LaurentPoly2::from_terms(std::move(t)), trunc);
}

DiffeoGerm DiffeoGerm::series(const LaurentPoly2& s, int trunc) {
  if (trunc < 1) throw InputError("germ truncation order must be at least 1");
  if (!s.x2_free()) throw InputError("germ series must depend on x1 only");
  for (const auto& [e, c] : s.terms())
    if (e.first < 0) throw InputError("germ series has negative powers");
  if (!s.coeff(0, 0).is_zero()) throw MathError("series germ must fix the origin");
  if (s.coeff(1, 0).is_zero()) throw MathError("germ with zero linear coefficient is not invertible");
  if (s.precision() < trunc) throw InputError("germ series known to lower order than its truncation");
  LaurentPoly2 t = s.truncated(trunc);
  if (t.terms().size() == 1) return affine(t.coeff(1, 0), 0, trunc);
  DiffeoGerm g(Kind::Series, trunc);
  g.fwd_ = std::move(t);
  g.inv_ = invert_series(g.fwd_, trunc);
  return g;
}

LaurentPoly2 DiffeoGerm::invert_series(const LaurentPoly2& f, int trunc) {
  Scalar c1 = f.coeff(1, 0);
  Scalar ic1 = c1.inverse();
  LaurentPoly2 g = LaurentPoly2::from_terms({{{1, 0}, ic1}}, trunc);
  for (int k = 2; k <= trunc; ++k) {
    LaurentPoly2 r = compose_x1(f, g, trunc);
    Scalar e = r.coeff(k, 0);
    if (!e.is_zero()) g -= LaurentPoly2::monomial(k, 0, e * ic1);
  }
  return g;
}

bool DiffeoGerm::fixes_origin() const {
  if (kind_ == Kind::Series) return true;
  return m_[1].is_zero();
}

bool DiffeoGerm::is_identity() const {
  return kind_ == Kind::Affine && m_[0].is_one() && m_[1].is_zero();
}

const std::array<Scalar, 4>& DiffeoGerm::matrix() const {
  if (kind_ == Kind::Series) throw MathError("series germ has no Mobius matrix");
  return m_;
}

const LaurentPoly2& DiffeoGerm::function() const {
  if (fwd_.precision() < 0) throw MathError("Mobius map has a pole at the origin");
  return fwd_;
}

const LaurentPoly2& DiffeoGerm::inverse_function() const {
  if (inv_.precision() < 0) throw MathError("inverse Mobius map has a pole at the origin");
  return inv_;
}

LaurentPoly2 DiffeoGerm::derivative(int k) const {
  LaurentPoly2 r = function();
  for (int j = 0; j < k; ++j) r = r.partial_x1();
  return r;
}

DiffeoGerm DiffeoGerm::inverse() const {
  if (inverse_) return *inverse_;
  DiffeoGerm g = *this;
  g.inverse_.reset();
  if (kind_ != Kind::Series) {
    const auto& [a, b, c, d] = m_;
    g.m_ = {d, -b, -c, a};
  }
  std::swap(g.fwd_, g.inv_);
  g.powers_.reset();
  if (kind_ != Kind::Series) g.init_exact();
  inverse_ = std::make_shared<const DiffeoGerm>(g);
  return g;
}

DiffeoGerm DiffeoGerm::compose(const DiffeoGerm& g) const {
  if (exact_form() && g.exact_form()) {
    const auto& [a, b, c, d] = m_;
    const auto& [p, q, r, s] = g.m_;
    int t = std::max(trunc_, g.trunc_);
    return mobius(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s, t);
  }
  if (kind_ == Kind::Series && g.kind_ == Kind::Series && trunc_ != g.trunc_)
    throw InputError("germ composition with incompatible truncation orders");
  int t = kind_ == Kind::Series ? trunc_ : g.trunc_;
  if (!g.fixes_origin() || !fixes_origin())
    throw MathError("composition of a series germ with a map moving the origin");
  if (is_identity()) return g;
  if (g.is_identity()) return *this;
  // series inversion dominates; products of the same germs recur constantly
  static std::map<std::pair<std::string, std::string>, DiffeoGerm> memo;
  auto key = std::make_pair(to_string() + "@" + std::to_string(trunc_), g.to_string() + "@" + std::to_string(g.trunc_));
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  if (memo.size() > 4096) memo.clear();
  return memo.emplace(key, series(compose_x1(function(), g.function(), t).truncated(t), t)).first->second;
}

DiffeoGerm::PowerCache& DiffeoGerm::powers() const {
  if (!powers_) powers_ = std::make_shared<PowerCache>();
  return *powers_;
}

bool operator==(const DiffeoGerm& a, const DiffeoGerm& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != DiffeoGerm::Kind::Series) return a.m_ == b.m_;
  return a.trunc_ == b.trunc_ && a.fwd_ == b.fwd_;
}

std::string DiffeoGerm::to_string() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Affine:
      os << "affine(" << m_[0] << ", " << m_[1] << ")";
      break;
    case Kind::Mobius:
      os << "mobius(" << m_[0] << ", " << m_[1] << ", " << m_[2] << ", " << m_[3] << ")";
      break;
    case Kind::Series:
      os << "series(" << fwd_.to_string({"x", "y"}) << ")";
      break;
  }
  return os.str();
}

LaurentPoly2 lift_pullback(const LaurentPoly2& g, const DiffeoGerm& psi) {
  if (psi.is_identity()) return g;
  const LaurentPoly2& f = psi.function();
  LaurentPoly2 d = f.partial_x1();
  int t = psi.trunc();
  auto& fp = psi.powers().fp;
  auto& dp = psi.powers().dp;
  auto cached = [t](std::map<int, LaurentPoly2>& cache, const LaurentPoly2& u, int n) -> const LaurentPoly2& {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, power(u, n, t)).first->second;
  };
  LaurentPoly2 r;
  if (!g.exact()) {
    if (!psi.fixes_origin()) throw MathError("pullback of a truncated function along a map moving the origin");
    r = LaurentPoly2::big_o(g.precision());
  }
  for (const auto& [e, c] : g.terms()) r += (cached(fp, f, e.first) * cached(dp, d, -e.second)).shifted(0, e.second, c);
  return r;
}

LaurentPoly2 schwarzian(const DiffeoGerm& phi) {
  if (phi.exact_form()) return LaurentPoly2();
  LaurentPoly2 d1 = phi.derivative(1);
  LaurentPoly2 d2 = d1.partial_x1();
  LaurentPoly2 d3 = d2.partial_x1();
  LaurentPoly2 num = d3 * d1 - d2 * d2 * Scalar::ratio(3, 2);
  return num * reciprocal(d1 * d1, phi.trunc());
}

}  // namespace rcq
