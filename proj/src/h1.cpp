#include "rcq/h1.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace rcq {

namespace {

using DeltaPoly = std::map<std::vector<int>, Scalar>;
using YPoly = std::vector<Scalar>;  // coefficients of Y^k

void add_to(DeltaPoly& p, const std::vector<int>& k, const Scalar& c) {
  auto [it, ins] = p.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// ad_X acts on delta monomials as the derivation delta_n -> delta_{n+1}.
DeltaPoly ad_x(const DeltaPoly& p) {
  DeltaPoly r;
  for (const auto& [k, c] : p) {
    for (size_t i = 0; i < k.size(); ++i) {
      if (i > 0 && k[i] == k[i - 1]) continue;  // identical factors handled by multiplicity
      long mult = std::count(k.begin(), k.end(), k[i]);
      std::vector<int> nk = k;
      auto pos = std::find(nk.begin(), nk.end(), k[i]);
      ++*pos;
      std::sort(nk.begin(), nk.end());
      add_to(r, nk, c * Scalar(mult));
    }
  }
  return r;
}

YPoly ypoly_mul(const YPoly& a, const YPoly& b) {
  YPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// (Y + s)^n
YPoly shifted_power(const Scalar& s, int n) {
  YPoly r(n + 1);
  for (int k = 0; k <= n; ++k) r[k] = Scalar(binomial(n, k)) * s.pow(n - k);
  return r;
}

std::vector<int> merge(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  r.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

int delta_weight(const std::vector<int>& d) {
  int w = 0;
  for (int n : d) w += n;
  return w;
}

}  // namespace

int PbwMonomial::weight() const { return delta_weight(delta) + x; }

std::string PbwMonomial::to_string() const {
  std::ostringstream os;
  bool any = false;
  auto sep = [&] {
    if (any) os << "*";
    any = true;
  };
  for (size_t i = 0; i < delta.size();) {
    size_t j = i;
    while (j < delta.size() && delta[j] == delta[i]) ++j;
    sep();
    os << "d" << delta[i];
    if (j - i > 1) os << "^" << j - i;
    i = j;
  }
  if (y) {
    sep();
    os << "Y";
    if (y > 1) os << "^" << y;
  }
  if (x) {
    sep();
    os << "X";
    if (x > 1) os << "^" << x;
  }
  if (!any) os << "1";
  return os.str();
}

H1Element::H1Element(Scalar c) {
  if (!c.is_zero()) terms_.emplace(PbwMonomial{}, std::move(c));
}

H1Element::H1Element(PbwMonomial m, Scalar c) {
  std::sort(m.delta.begin(), m.delta.end());
  if (!c.is_zero()) terms_.emplace(std::move(m), std::move(c));
}

H1Element H1Element::X() { return H1Element(PbwMonomial{{}, 0, 1}); }
H1Element H1Element::Y() { return H1Element(PbwMonomial{{}, 1, 0}); }
H1Element H1Element::delta(int n) {
  if (n < 1) throw InputError("delta index must be positive");
  return H1Element(PbwMonomial{{n}, 0, 0});
}
H1Element H1Element::delta2_prime() {
  return delta(2) - H1Element(PbwMonomial{{1, 1}, 0, 0}, Scalar::ratio(1, 2));
}

Scalar H1Element::coeff(const PbwMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

int H1Element::max_delta() const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    if (!m.delta.empty()) d = std::max(d, m.delta.back());
  return d;
}

void H1Element::add_term(const PbwMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

H1Element& H1Element::operator+=(const H1Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

H1Element& H1Element::operator-=(const H1Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

H1Element& H1Element::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

H1Element multiply(const PbwMonomial& a, const PbwMonomial& b) {
  // a b = d^A Y^p (X^q d^B) Y^r X^s, and X^q d^B = sum_j C(q,j) ad_X^j(d^B) X^(q-j)
  H1Element r;
  DeltaPoly adj{{b.delta, Scalar(1)}};
  for (int j = 0; j <= a.x; ++j) {
    if (j > 0) adj = ad_x(adj);
    Scalar bin(binomial(a.x, j));
    int xs = a.x - j;
    // X^xs Y^r = (Y - xs)^r X^xs
    YPoly right = shifted_power(Scalar(-xs), b.y);
    for (const auto& [g, c] : adj) {
      // Y^p d^g = d^g (Y + w)^p
      YPoly left = shifted_power(Scalar(delta_weight(g)), a.y);
      YPoly yp = ypoly_mul(left, right);
      std::vector<int> d = merge(a.delta, g);
      for (size_t k = 0; k < yp.size(); ++k) {
        if (yp[k].is_zero()) continue;
        r += H1Element(PbwMonomial{d, static_cast<int>(k), xs + b.x}, bin * c * yp[k]);
      }
    }
  }
  return r;
}

H1Element operator*(const H1Element& a, const H1Element& b) {
  H1Element r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      H1Element p = multiply(ma, mb);
      p *= ca * cb;
      r += p;
    }
  return r;
}

H1Element H1Element::pow(int n) const {
  if (n < 0) throw MathError("negative power in H1");
  H1Element r(1);
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

std::string H1Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    if (!first) {
      if (cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    first = false;
    if (m.is_unit()) {
      os << cs;
    } else {
      if (cs == "-1") os << "-";
      else if (cs != "1") os << cs << "*";
      os << m.to_string();
    }
  }
  return os.str();
}

H1Element pbw_normalize(const std::vector<Generator>& word) {
  H1Element r(1);
  for (const auto& g : word) {
    switch (g.kind) {
      case Generator::Kind::X:
        r = r * H1Element::X();
        break;
      case Generator::Kind::Y:
        r = r * H1Element::Y();
        break;
      case Generator::Kind::Delta:
        r = r * H1Element::delta(g.n);
        break;
    }
  }
  return r;
}

H1Element commutator(const H1Element& a, const H1Element& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

H1Tensor H1Tensor::pure(const std::vector<H1Element>& legs) {
  H1Tensor r(static_cast<int>(legs.size()));
  r.add_term(Key(legs.size()), Scalar(1));
  for (size_t i = 0; i < legs.size(); ++i) {
    H1Tensor next(r.rank_);
    for (const auto& [k, c] : r.terms_)
      for (const auto& [m, d] : legs[i].terms()) {
        Key nk = k;
        nk[i] = m;
        next.add_term(nk, c * d);
      }
    r = std::move(next);
  }
  return r;
}

H1Tensor H1Tensor::unit(int rank) {
  H1Tensor r(rank);
  r.add_term(Key(rank), Scalar(1));
  return r;
}

void H1Tensor::add_term(const Key& k, const Scalar& c) {
  if (static_cast<int>(k.size()) != rank_) throw InputError("tensor leg count mismatch");
  if (c.is_zero()) return;
  auto [it, ins] = terms_.try_emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

H1Tensor& H1Tensor::operator+=(const H1Tensor& o) {
  if (o.rank_ != rank_) throw InputError("tensor rank mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

H1Tensor& H1Tensor::operator-=(const H1Tensor& o) {
  if (o.rank_ != rank_) throw InputError("tensor rank mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

H1Tensor& H1Tensor::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

H1Tensor operator*(const H1Tensor& a, const H1Tensor& b) {
  if (a.rank_ != b.rank_) throw InputError("tensor rank mismatch");
  H1Tensor r(a.rank_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      // expand the leg-wise products
      std::vector<H1Element> legs;
      legs.reserve(ka.size());
      for (size_t i = 0; i < ka.size(); ++i) legs.push_back(multiply(ka[i], kb[i]));
      H1Tensor p = H1Tensor::pure(legs);
      p *= ca * cb;
      r += p;
    }
  return r;
}

H1Tensor H1Tensor::map_leg(int leg, const std::function<H1Tensor(const PbwMonomial&)>& f) const {
  std::map<PbwMonomial, H1Tensor> cache;
  H1Tensor* out = nullptr;
  H1Tensor r(0);
  for (const auto& [k, c] : terms_) {
    auto it = cache.find(k[leg]);
    if (it == cache.end()) it = cache.emplace(k[leg], f(k[leg])).first;
    const H1Tensor& img = it->second;
    if (!out) {
      r = H1Tensor(rank_ + img.rank() - 1);
      out = &r;
    }
    for (const auto& [ki, ci] : img.terms()) {
      Key nk;
      nk.reserve(r.rank_);
      nk.insert(nk.end(), k.begin(), k.begin() + leg);
      nk.insert(nk.end(), ki.begin(), ki.end());
      nk.insert(nk.end(), k.begin() + leg + 1, k.end());
      r.add_term(nk, c * ci);
    }
  }
  if (!out) r = H1Tensor(rank_ + 1);  // rank of the zero tensor is nominal
  return r;
}

H1Tensor H1Tensor::multiply_legs(int leg) const {
  H1Tensor r(rank_ - 1);
  for (const auto& [k, c] : terms_) {
    H1Element p = multiply(k[leg], k[leg + 1]);
    for (const auto& [m, d] : p.terms()) {
      Key nk;
      nk.insert(nk.end(), k.begin(), k.begin() + leg);
      nk.push_back(m);
      nk.insert(nk.end(), k.begin() + leg + 2, k.end());
      r.add_term(nk, c * d);
    }
  }
  return r;
}

H1Tensor H1Tensor::reversed() const {
  H1Tensor r(rank_);
  for (const auto& [k, c] : terms_) r.add_term(Key(k.rbegin(), k.rend()), c);
  return r;
}

std::string H1Tensor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (size_t i = 0; i < k.size(); ++i) os << (i ? " # " : " ") << k[i].to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

std::mutex g_cache_mutex;

H1Tensor x_coproduct() {
  H1Tensor r = H1Tensor::pure({H1Element::X(), 1}) + H1Tensor::pure({1, H1Element::X()});
  r += H1Tensor::pure({H1Element::delta(1), H1Element::Y()});
  return r;
}

H1Tensor delta_coproduct(int n) {
  static std::vector<H1Tensor> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  if (cache.empty()) cache.push_back(H1Tensor::pure({H1Element::delta(1), 1}) + H1Tensor::pure({1, H1Element::delta(1)}));
  H1Tensor dx = x_coproduct();
  while (static_cast<int>(cache.size()) < n) {
    const H1Tensor& prev = cache.back();
    cache.push_back(dx * prev - prev * dx);
  }
  return cache[n - 1];
}

H1Element antipode_delta(int n) {
  static std::vector<H1Element> cache;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  H1Element sx = -H1Element::X() + H1Element::delta(1) * H1Element::Y();
  if (cache.empty()) cache.push_back(-H1Element::delta(1));
  while (static_cast<int>(cache.size()) < n) {
    const H1Element& prev = cache.back();
    cache.push_back(commutator(prev, sx));
  }
  return cache[n - 1];
}

}  // namespace

H1Tensor coproduct(const PbwMonomial& m) {
  static std::map<PbwMonomial, H1Tensor> memo;
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }
  H1Tensor r = H1Tensor::unit(2);
  for (int n : m.delta) r = r * delta_coproduct(n);
  if (m.y) {
    H1Tensor dy = H1Tensor::pure({H1Element::Y(), 1}) + H1Tensor::pure({1, H1Element::Y()});
    for (int k = 0; k < m.y; ++k) r = r * dy;
  }
  if (m.x) {
    H1Tensor dx = x_coproduct();
    for (int k = 0; k < m.x; ++k) r = r * dx;
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return memo.emplace(m, std::move(r)).first->second;
}

H1Tensor coproduct(const H1Element& h) {
  H1Tensor r(2);
  for (const auto& [m, c] : h.terms()) r += coproduct(m) * c;
  return r;
}

H1Element antipode(const PbwMonomial& m) {
  H1Element r(1);
  H1Element sx = -H1Element::X() + H1Element::delta(1) * H1Element::Y();
  for (int k = 0; k < m.x; ++k) r = r * sx;
  for (int k = 0; k < m.y; ++k) r = r * -H1Element::Y();
  for (auto it = m.delta.rbegin(); it != m.delta.rend(); ++it) r = r * antipode_delta(*it);
  return r;
}

H1Element antipode(const H1Element& h) {
  H1Element r;
  for (const auto& [m, c] : h.terms()) r += antipode(m) * c;
  return r;
}

Scalar counit(const H1Element& h) { return h.coeff(PbwMonomial{}); }

H1Element as_element(const H1Tensor& t) {
  if (t.rank() != 1) throw InputError("expected a rank-1 tensor");
  H1Element r;
  for (const auto& [k, c] : t.terms()) r += H1Element(k[0], c);
  return r;
}

}  // namespace rcq
