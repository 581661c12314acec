#include "rcq/weyl.hpp"

#include <sstream>

namespace rcq {

namespace {

// d^p/du^p u^m = m!/(m-p)! u^(m-p)
Scalar falling(int m, int p) {
  Scalar r(1);
  for (int j = 0; j < p; ++j) r *= Scalar(m - j);
  return r;
}

int popcount(int f) { return (f & 1) + ((f >> 1) & 1); }

// i(d/dx^k) applied to dx^form: returns (sign, new form), sign 0 if absent
std::pair<int, int> contract(int k, int form) {
  int bit = k == 1 ? kDx1 : kDx2;
  if (!(form & bit)) return {0, 0};
  if (form == bit) return {1, kForm0};
  // form = dx1 ^ dx2
  return k == 1 ? std::pair{1, kDx2} : std::pair{-1, kDx1};
}

}  // namespace

int wedge_sign(int a, int b) {
  if (a & b) return 0;
  if (a == kDx2 && b == kDx1) return -1;
  return 1;
}

WeylSection WeylSection::monomial(int k, int m, int n, int form, const LaurentPoly2& f, int bound) {
  WeylSection s(bound);
  s.add({k, m, n, form}, f);
  return s;
}

bool WeylSection::is_zero() const {
  for (const auto& [key, f] : terms_)
    if (!f.is_zero()) return false;
  return true;
}

LaurentPoly2 WeylSection::coeff(const WeylKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? LaurentPoly2() : it->second;
}

int WeylSection::form_degree() const {
  int d = -1;
  for (const auto& [key, f] : terms_)
    if (!f.is_zero()) d = std::max(d, popcount(key.form));
  return d;
}

WeylSection& WeylSection::add(const WeylKey& key, const LaurentPoly2& f) {
  if (key.degree() > bound_) return *this;
  if (f.is_zero() && f.exact()) return *this;
  auto [it, ins] = terms_.try_emplace(key, f);
  if (!ins) {
    it->second += f;
    if (it->second.is_zero() && it->second.exact()) terms_.erase(it);
  }
  return *this;
}

WeylSection& WeylSection::operator+=(const WeylSection& o) {
  if (o.bound_ != bound_) throw InputError("Weyl section truncation mismatch");
  for (const auto& [k, f] : o.terms_) add(k, f);
  return *this;
}

WeylSection& WeylSection::operator-=(const WeylSection& o) {
  if (o.bound_ != bound_) throw InputError("Weyl section truncation mismatch");
  for (const auto& [k, f] : o.terms_) add(k, -f);
  return *this;
}

WeylSection& WeylSection::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

WeylSection WeylSection::with_bound(int bound) const {
  WeylSection r(bound);
  for (const auto& [k, f] : terms_) r.add(k, f);
  return r;
}

WeylSection WeylSection::truncated(int d) const {
  WeylSection r(bound_);
  for (const auto& [k, f] : terms_)
    if (k.degree() <= d) r.add(k, f);
  return r;
}

HbarSeries<LaurentPoly2> WeylSection::sigma(int order) const {
  HbarSeries<LaurentPoly2> r(order);
  for (const auto& [k, f] : terms_)
    if (k.m == 0 && k.n == 0 && k.form == kForm0 && k.k <= order) r[k.k] += f;
  return r;
}

bool operator==(const WeylSection& a, const WeylSection& b) {
  for (const auto& [k, f] : a.terms_)
    if (f != b.coeff(k)) return false;
  for (const auto& [k, f] : b.terms_)
    if (f != a.coeff(k)) return false;
  return true;
}

std::string WeylSection::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << f << ")";
    if (k.k) os << "*h^" << k.k;
    if (k.m) os << "*u1^" << k.m;
    if (k.n) os << "*u2^" << k.n;
    if (k.form == kDx1) os << "*dx1";
    if (k.form == kDx2) os << "*dx2";
    if (k.form == kDx12) os << "*dx1^dx2";
  }
  if (first) os << "0";
  return os.str();
}

WeylSection weyl_mul(const WeylSection& a, const WeylSection& b) {
  if (a.bound() != b.bound()) throw InputError("Weyl product of sections with different truncation");
  return weyl_mul(a, b, a.bound());
}

WeylSection weyl_mul(const WeylSection& a, const WeylSection& b, int bound) {
  WeylSection r(bound);
  const Scalar half_ih = Scalar(Rational(0), make_rational(-1, 2));  // -i/2
  for (const auto& [ka, fa] : a.terms()) {
    for (const auto& [kb, fb] : b.terms()) {
      if (ka.degree() + kb.degree() > bound) continue;
      int s = wedge_sign(ka.form, kb.form);
      if (s == 0) continue;
      LaurentPoly2 fab = fa * fb;
      if (fab.is_zero() && fab.exact()) continue;
      int kmax = std::min(ka.m + ka.n, kb.m + kb.n);
      Scalar pref(s);
      for (int k = 0; k <= kmax; ++k) {
        if (k > 0) pref *= half_ih * Scalar(make_rational(1, k));
        for (int rr = 0; rr <= k; ++rr) {
          // d1^{k-r} d2^r a . d1^r d2^{k-r} b
          int p1 = k - rr, p2 = rr, q1 = rr, q2 = k - rr;
          if (p1 > ka.m || p2 > ka.n || q1 > kb.m || q2 > kb.n) continue;
          Scalar c = pref * Scalar(binomial(k, rr)) * falling(ka.m, p1) * falling(ka.n, p2) * falling(kb.m, q1) *
                     falling(kb.n, q2);
          if (rr % 2) c = -c;
          WeylKey key{ka.k + kb.k + k, ka.m - p1 + kb.m - q1, ka.n - p2 + kb.n - q2, ka.form | kb.form};
          r.add(key, fab * c);
        }
      }
    }
  }
  return r;
}

WeylSection weyl_commutator(const WeylSection& a, const WeylSection& b, int bound) {
  int da = std::max(a.form_degree(), 0), db = std::max(b.form_degree(), 0);
  WeylSection ab = weyl_mul(a, b, bound);
  WeylSection ba = weyl_mul(b, a, bound);
  if ((da * db) % 2) return ab + ba;
  return ab - ba;
}

WeylSection weyl_delta(const WeylSection& a) {
  WeylSection r(a.bound());
  for (const auto& [k, f] : a.terms()) {
    if (k.m > 0) {
      int s = wedge_sign(kDx1, k.form);
      if (s) r.add({k.k, k.m - 1, k.n, k.form | kDx1}, f * Scalar(s * k.m));
    }
    if (k.n > 0) {
      int s = wedge_sign(kDx2, k.form);
      if (s) r.add({k.k, k.m, k.n - 1, k.form | kDx2}, f * Scalar(s * k.n));
    }
  }
  return r;
}

WeylSection weyl_delta_star(const WeylSection& a) {
  WeylSection r(a.bound());
  for (const auto& [k, f] : a.terms()) {
    for (int v = 1; v <= 2; ++v) {
      auto [s, nf] = contract(v, k.form);
      if (!s) continue;
      WeylKey nk{k.k, k.m + (v == 1), k.n + (v == 2), nf};
      r.add(nk, f * Scalar(s));
    }
  }
  return r;
}

WeylSection weyl_d(const WeylSection& a) {
  WeylSection r(a.bound());
  for (const auto& [k, f] : a.terms()) {
    for (int v = 1; v <= 2; ++v) {
      int bit = v == 1 ? kDx1 : kDx2;
      int s = wedge_sign(bit, k.form);
      if (!s) continue;
      r.add({k.k, k.m, k.n, k.form | bit}, f.partial(v - 1) * Scalar(s));
    }
  }
  return r;
}

HbarSeries<LaurentPoly2> moyal_star(const LaurentPoly2& f, const LaurentPoly2& g, int order) {
  HbarSeries<LaurentPoly2> r(order);
  const Scalar half_ih = Scalar(Rational(0), make_rational(-1, 2));
  // derivative tables d1^i d2^j
  std::vector<std::vector<LaurentPoly2>> df(order + 1), dg(order + 1);
  for (int i = 0; i <= order; ++i) {
    df[i].resize(order + 1 - i);
    dg[i].resize(order + 1 - i);
    df[i][0] = i == 0 ? f : df[i - 1][0].partial_x1();
    dg[i][0] = i == 0 ? g : dg[i - 1][0].partial_x1();
    for (int j = 1; i + j <= order; ++j) {
      df[i][j] = df[i][j - 1].partial_x2();
      dg[i][j] = dg[i][j - 1].partial_x2();
    }
  }
  Scalar pref(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) pref *= half_ih * Scalar(make_rational(1, k));
    LaurentPoly2 acc;
    for (int rr = 0; rr <= k; ++rr) {
      Scalar c = pref * Scalar(binomial(k, rr));
      if (rr % 2) c = -c;
      acc += df[k - rr][rr] * dg[rr][k - rr] * c;
    }
    r[k] = acc;
  }
  return r;
}

LaurentPoly2 poisson_bracket(const LaurentPoly2& f, const LaurentPoly2& g) {
  return f.partial_x1() * g.partial_x2() - f.partial_x2() * g.partial_x1();
}

H1Element rising_y(const Scalar& s, int r, const Scalar& y_scale) {
  H1Element out(1);
  for (int j = 0; j < r; ++j) out = out * (H1Element::Y() * y_scale + H1Element(s + Scalar(j)));
  return out;
}

H1Tensor gz_element(int n) {
  if (n < 0) throw MathError("negative order for the Giaquinto-Zhang element");
  H1Tensor r(2);
  for (int k = 0; k <= n; ++k) {
    H1Element left = H1Element::X().pow(n - k) * rising_y(0, k);
    H1Element right = H1Element::X().pow(k) * rising_y(0, n - k);
    H1Tensor t = H1Tensor::pure({left, right}) * Scalar(binomial(n, k));
    if (k % 2) t *= Scalar(-1);
    r += t;
  }
  return r;
}

}  // namespace rcq
