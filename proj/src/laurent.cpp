#include "rcq/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace rcq {

namespace {

int sat_add(long a, long b) {
  if (a == LaurentPoly2::kExact || b == LaurentPoly2::kExact) return LaurentPoly2::kExact;
  long s = a + b;
  if (s >= LaurentPoly2::kExact) return LaurentPoly2::kExact - 1;
  if (s <= INT_MIN / 2) return INT_MIN / 2;
  return static_cast<int>(s);
}

}  // namespace

LaurentPoly2::LaurentPoly2(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, std::move(c));
}

LaurentPoly2 LaurentPoly2::monomial(int e1, int e2, Scalar c) {
  LaurentPoly2 p;
  if (!c.is_zero()) p.terms_.emplace(Exponent{e1, e2}, std::move(c));
  return p;
}

LaurentPoly2 LaurentPoly2::big_o(int prec) {
  LaurentPoly2 p;
  p.prec_ = prec;
  return p;
}

LaurentPoly2 LaurentPoly2::from_terms(Terms terms, int prec) {
  LaurentPoly2 p;
  p.terms_ = std::move(terms);
  p.prec_ = prec;
  std::erase_if(p.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  p.drop_beyond_precision();
  return p;
}

void LaurentPoly2::drop_beyond_precision() {
  if (prec_ == kExact) return;
  std::erase_if(terms_, [this](const auto& kv) { return kv.first.first > prec_; });
}

int LaurentPoly2::x1_valuation() const {
  if (terms_.empty()) return prec_ == kExact ? kExact : prec_ + 1;
  return terms_.begin()->first.first;
}

int LaurentPoly2::x1_degree() const {
  if (terms_.empty()) return INT_MIN;
  return terms_.rbegin()->first.first;
}

bool LaurentPoly2::x2_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.second == 0; });
}

Scalar LaurentPoly2::coeff(int e1, int e2) const {
  auto it = terms_.find(Exponent{e1, e2});
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool LaurentPoly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

LaurentPoly2 LaurentPoly2::truncated(int prec) const {
  if (prec >= prec_) return *this;
  LaurentPoly2 r = *this;
  r.prec_ = prec;
  r.drop_beyond_precision();
  return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  prec_ = std::min(prec_, o.prec_);
  for (const auto& [e, c] : o.terms_) {
    if (e.first > prec_) continue;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  drop_beyond_precision();
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  prec_ = std::min(prec_, o.prec_);
  for (const auto& [e, c] : o.terms_) {
    if (e.first > prec_) continue;
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  drop_beyond_precision();
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  int prec = std::min(sat_add(a.prec_, b.x1_valuation()), sat_add(b.prec_, a.x1_valuation()));
  LaurentPoly2 r;
  r.prec_ = prec;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      int e1 = ea.first + eb.first;
      if (e1 > prec) break;  // b's terms are sorted by x1 exponent
      LaurentPoly2::Exponent e{e1, ea.second + eb.second};
      auto [it, inserted] = r.terms_.try_emplace(e, ca);
      if (inserted) {
        it->second *= cb;
      } else {
        it->second += ca * cb;
      }
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int e1, int e2, const Scalar& c) const {
  LaurentPoly2 r;
  r.prec_ = prec_ == kExact ? kExact : prec_ + e1;
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(Exponent{e.first + e1, e.second + e2}, v * c);
  return r;
}

LaurentPoly2 LaurentPoly2::partial(int var) const {
  LaurentPoly2 r;
  r.prec_ = (var == 0 && prec_ != kExact) ? prec_ - 1 : prec_;
  for (const auto& [e, c] : terms_) {
    int k = var == 0 ? e.first : e.second;
    if (k == 0) continue;
    Exponent ne = var == 0 ? Exponent{e.first - 1, e.second} : Exponent{e.first, e.second - 1};
    r.terms_.emplace(ne, c * Scalar(k));
  }
  r.drop_beyond_precision();
  return r;
}

LaurentPoly2 LaurentPoly2::pow(int n) const {
  if (n < 0) throw MathError("LaurentPoly2::pow with negative exponent; use power()");
  LaurentPoly2 result(1);
  LaurentPoly2 base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
  int prec = std::min(a.prec_, b.prec_);
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  auto skip = [prec](auto& it, auto end) {
    while (it != end && it->first.first > prec) ++it;
  };
  // both maps are ordered by (e1, e2); walk them jointly
  for (;;) {
    skip(ia, a.terms_.end());
    skip(ib, b.terms_.end());
    bool ea = ia == a.terms_.end();
    bool eb = ib == b.terms_.end();
    if (ea || eb) {
      // remaining terms must lie beyond the common precision
      for (; !ea && ia != a.terms_.end(); ++ia)
        if (ia->first.first <= prec) return false;
      for (; !eb && ib != b.terms_.end(); ++ib)
        if (ib->first.first <= prec) return false;
      return true;
    }
    if (ia->first != ib->first || ia->second != ib->second) return false;
    ++ia;
    ++ib;
  }
}

LaurentPoly2 LaurentPoly2::scale_x1(const Scalar& c) const {
  LaurentPoly2 r;
  r.prec_ = prec_;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c.pow(e.first));
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

LaurentPoly2 LaurentPoly2::swapped() const {
  if (!exact()) throw MathError("cannot swap variables of a truncated series");
  LaurentPoly2 r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, v);
  return r;
}

std::string LaurentPoly2::to_string(const VarNames& vars) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.to_string();
    bool unit_mono = e.first != 0 || e.second != 0;
    if (!first) {
      if (cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (!(unit_mono && cs == "1")) {
      if (unit_mono && cs == "-1") {
        os << "-";
      } else {
        os << cs;
        if (unit_mono) os << "*";
      }
    }
    bool wrote = false;
    for (int v = 0; v < 2; ++v) {
      int k = v == 0 ? e.first : e.second;
      if (k == 0) continue;
      if (wrote) os << "*";
      os << vars[v];
      if (k != 1) os << "^" << (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
      wrote = true;
    }
  }
  if (first) os << "0";
  if (!exact()) os << " + O(" << vars[0] << "^" << prec_ + 1 << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p) { return os << p.to_string(); }

LaurentPoly2 reciprocal(const LaurentPoly2& u, int trunc) {
  if (!u.x2_free()) throw MathError("reciprocal: series must depend on x1 only");
  if (u.is_zero()) throw MathError("reciprocal of zero series");
  int v = u.x1_valuation();
  if (u.exact() && u.terms().size() == 1) {
    const auto& [e, c] = *u.terms().begin();
    return LaurentPoly2::monomial(-e.first, 0, c.inverse());
  }
  LaurentPoly2 w = u.shifted(-v, 0);
  int n = std::min(w.precision(), trunc);
  std::vector<Scalar> wc(n + 1);
  for (int k = 0; k <= n; ++k) wc[k] = w.coeff(k, 0);
  std::vector<Scalar> b(n + 1);
  Scalar inv0 = wc[0].inverse();
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Scalar s;
    for (int j = 1; j <= k; ++j)
      if (!wc[j].is_zero()) s += wc[j] * b[k - j];
    b[k] = -(s * inv0);
  }
  LaurentPoly2::Terms t;
  for (int k = 0; k <= n; ++k)
    if (!b[k].is_zero()) t.emplace(LaurentPoly2::Exponent{k - v, 0}, b[k]);
  return LaurentPoly2::from_terms(std::move(t), n - v);
}

LaurentPoly2 power(const LaurentPoly2& u, int n, int trunc) {
  if (n >= 0) {
    LaurentPoly2 r = u.pow(n);
    return r;
  }
  return reciprocal(u, trunc).pow(-n);
}

LaurentPoly2 compose_x1(const LaurentPoly2& f, const LaurentPoly2& g, int trunc) {
  if (!g.x2_free()) throw MathError("compose_x1: inner series must depend on x1 only");
  bool g_fixes_zero = g.x1_valuation() >= 1;
  if (!f.exact() && !g_fixes_zero)
    throw MathError("compose_x1: truncated outer series needs an inner germ fixing 0");
  std::map<int, LaurentPoly2> powers;
  auto pw = [&](int a) -> const LaurentPoly2& {
    auto it = powers.find(a);
    if (it != powers.end()) return it->second;
    if (a < 0 && !g_fixes_zero && g.coeff(0, 0).is_zero())
      throw MathError("compose_x1: cannot invert inner series");
    return powers.emplace(a, power(g, a, trunc)).first->second;
  };
  LaurentPoly2 r;
  if (!f.exact()) r = LaurentPoly2::big_o(f.precision() * std::max(1, g.x1_valuation()));
  for (const auto& [e, c] : f.terms()) r += pw(e.first).shifted(0, e.second, c);
  return r;
}

}  // namespace rcq
