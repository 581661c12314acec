#include "rcq/modular.hpp"

#include <sstream>

#include "rcq/linalg.hpp"

namespace rcq {

namespace {

Rational real_part(const Scalar& c) {
  if (!c.is_real()) throw MathError("modular forms carry rational coefficients");
  return c.re();
}

bool all_zero(const QSeries& s) { return s.is_zero(); }

}  // namespace

ModularForm& ModularForm::operator+=(const ModularForm& o) {
  if (all_zero(o.q) && o.weight != weight) {
    q = q.truncated(std::min(q.precision(), o.q.precision()));
    return *this;
  }
  if (all_zero(q) && o.weight != weight) weight = o.weight;
  if (o.weight != weight) throw MathError("adding modular forms of different weights");
  int p = std::min(q.precision(), o.q.precision());
  q = q.truncated(p) + o.q.truncated(p);
  return *this;
}

ModularForm& ModularForm::operator-=(const ModularForm& o) { return *this += o * Scalar(-1); }

ModularForm& ModularForm::operator*=(const Scalar& c) {
  q *= real_part(c);
  return *this;
}

std::string ModularForm::to_string(int max_terms) const {
  return "[weight " + std::to_string(weight) + "] " + q.to_string(max_terms);
}

Rational bernoulli(int n) {
  // B_0 .. B_n by the standard recurrence, B_1 = -1/2
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational s = 0;
    for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * b[k];
    b[m] = -s / Rational(m + 1);
  }
  return b[n];
}

QSeries eisenstein(int k, int prec) {
  if (k < 2 || k % 2) throw InputError("Eisenstein series need even weight k >= 2");
  if (prec < 1) throw InputError("q-precision must be at least 1");
  Rational c = Rational(-2 * k) / bernoulli(k);
  std::vector<Rational> co(prec + 1);
  co[0] = 1;
  for (int n = 1; n <= prec; ++n) {
    mpz_class sigma = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), d, k - 1);
        sigma += p;
      }
    co[n] = c * Rational(sigma);
  }
  return QSeries(prec, std::move(co));
}

ModularForm eisenstein_form(int k, int prec) { return ModularForm(eisenstein(k, prec), k); }

ModularForm delta_form(int prec) {
  if (prec < 1) throw InputError("q-precision must be at least 1");
  std::vector<Rational> one(prec + 1);
  one[0] = 1;
  QSeries r(prec, one);
  for (int n = 1; n <= prec; ++n) {
    std::vector<Rational> f(prec + 1);
    f[0] = 1;
    f[n] = -1;
    r = r * QSeries(prec, f).pow(24);
  }
  std::vector<Rational> sh(prec + 1);
  for (int n = 1; n <= prec; ++n) sh[n] = r[n - 1];
  return ModularForm(QSeries(prec, std::move(sh)), 12);
}

ModularForm named_form(const std::string& name, int prec) {
  if (name == "Delta" || name == "delta") return delta_form(prec);
  if (name.size() >= 2 && (name[0] == 'E' || name[0] == 'e')) {
    int k = 0;
    try {
      size_t pos = 0;
      k = std::stoi(name.substr(1), &pos);
      if (pos != name.size() - 1) throw InputError("bad form name");
    } catch (const std::logic_error&) {
      throw InputError("unknown modular form '" + name + "'");
    }
    return eisenstein_form(k, prec);
  }
  throw InputError("unknown modular form '" + name + "'");
}

ModularForm x_op(const ModularForm& f) {
  int p = f.precision();
  QSeries r = f.q.derivative() - eisenstein(2, std::max(p, 1)).truncated(p) * f.q * make_rational(f.weight, 12);
  return ModularForm(r, f.weight + 2);
}

ModularForm y_op(const ModularForm& f) { return f * Scalar(make_rational(f.weight, 2)); }

ModularForm rc_modular(int n, const ModularForm& f, const ModularForm& g) {
  if (n < 0) throw InputError("negative Rankin-Cohen index");
  int k = f.weight, l = g.weight;
  std::vector<QSeries> df{f.q}, dg{g.q};
  for (int j = 1; j <= n; ++j) {
    df.push_back(df.back().derivative());
    dg.push_back(dg.back().derivative());
  }
  int p = std::min(f.precision(), g.precision());
  QSeries acc(p);
  for (int r = 0; r <= n; ++r) {
    int s = n - r;
    Rational c = binomial(n + k - 1, s) * binomial(n + l - 1, r);
    if (r % 2) c = -c;
    if (c == 0) continue;
    acc += (df[r] * dg[s]).truncated(p) * c;
  }
  return ModularForm(acc, k + l + 2 * n);
}

std::vector<std::pair<int, int>> modular_basis_exponents(int k) {
  std::vector<std::pair<int, int>> r;
  if (k < 0 || k % 2) return r;
  for (int a = k / 4; a >= 0; --a) {
    int rest = k - 4 * a;
    if (rest % 6 == 0) r.emplace_back(a, rest / 6);
  }
  return r;
}

int modular_dimension(int k) { return static_cast<int>(modular_basis_exponents(k).size()); }

std::optional<std::vector<Rational>> modular_coordinates(const QSeries& s, int k) {
  auto exps = modular_basis_exponents(k);
  int p = s.precision();
  if (exps.empty()) {
    if (s.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  if (p + 1 < static_cast<int>(exps.size()) + 1)
    throw MathError("q-precision " + std::to_string(p) + " too low for membership in M_" + std::to_string(k));
  QSeries e4 = eisenstein(4, p), e6 = eisenstein(6, p);
  std::vector<QSeries> basis;
  for (auto [a, b] : exps) basis.push_back(e4.pow(a) * e6.pow(b));
  Matrix m(p + 1, Row(basis.size()));
  std::vector<Scalar> rhs(p + 1);
  for (int i = 0; i <= p; ++i) {
    for (size_t j = 0; j < basis.size(); ++j) m[i][j] = Scalar(basis[j][i]);
    rhs[i] = Scalar(s[i]);
  }
  auto sol = solve_linear(m, rhs);
  if (!sol) return std::nullopt;
  std::vector<Rational> out;
  for (const auto& c : *sol) out.push_back(real_part(c));
  return out;
}

QuasiForm::QuasiForm(int weight, int prec) : weight_(weight), prec_(prec) {}

QuasiForm QuasiForm::from_modular(const ModularForm& f) {
  QuasiForm r(f.weight, f.precision());
  r.add(0, f.q);
  return r;
}

QuasiForm QuasiForm::e2(int prec) {
  QuasiForm r(2, prec);
  r.add(1, QSeries::constant(1, prec));
  return r;
}

int QuasiForm::depth() const {
  int d = -1;
  for (const auto& [j, f] : parts_)
    if (!f.is_zero()) d = std::max(d, j);
  return d;
}

QuasiForm& QuasiForm::add(int j, const QSeries& f) {
  auto it = parts_.find(j);
  if (it == parts_.end())
    parts_.emplace(j, f.truncated(std::min(prec_, f.precision())));
  else
    it->second = it->second.truncated(prec_) + f.truncated(prec_);
  return *this;
}

QuasiForm operator+(const QuasiForm& a, const QuasiForm& b) {
  if (a.weight_ != b.weight_) throw MathError("adding quasimodular forms of different weights");
  QuasiForm r(a.weight_, std::min(a.prec_, b.prec_));
  for (const auto& [j, f] : a.parts_) r.add(j, f);
  for (const auto& [j, f] : b.parts_) r.add(j, f);
  return r;
}

QuasiForm operator*(const QuasiForm& a, const QuasiForm& b) {
  QuasiForm r(a.weight_ + b.weight_, std::min(a.prec_, b.prec_));
  for (const auto& [i, f] : a.parts_)
    for (const auto& [j, g] : b.parts_) r.add(i + j, f * g);
  return r;
}

QuasiForm QuasiForm::derivative() const {
  // D(E2^j F) = j E2^{j-1} (E2^2 - E4)/12 F + E2^j (X F + (k/12) E2 F)
  QuasiForm r(weight_ + 2, prec_);
  QSeries e4 = eisenstein(4, std::max(prec_, 1)).truncated(prec_);
  for (const auto& [j, f] : parts_) {
    int k = weight_ - 2 * j;
    if (j > 0) {
      r.add(j + 1, f * make_rational(j, 12));
      r.add(j - 1, -(e4 * f) * make_rational(j, 12));
    }
    r.add(j, x_op(ModularForm(f, k)).q);
    r.add(j + 1, f * make_rational(k, 12));
  }
  return r;
}

QSeries QuasiForm::to_qseries() const {
  QSeries e2 = eisenstein(2, std::max(prec_, 1)).truncated(prec_);
  QSeries r(prec_);
  for (const auto& [j, f] : parts_) r += (e2.pow(j) * f).truncated(prec_);
  return r;
}

std::vector<ModularForm> zagier_product(const ModularForm& f, const ModularForm& g, int order) {
  std::vector<ModularForm> r;
  for (int n = 0; n <= order; ++n) r.push_back(rc_modular(n, f, g));
  return r;
}

std::vector<AssocResult> zagier_assoc_check(const ModularForm& f, const ModularForm& g, const ModularForm& h,
                                            int order) {
  std::vector<ModularForm> fg = zagier_product(f, g, order), gh = zagier_product(g, h, order);
  std::vector<AssocResult> out;
  for (int n = 0; n <= order; ++n) {
    ModularForm lhs, rhs;
    bool first = true;
    for (int i = 0; i <= n; ++i) {
      ModularForm a = rc_modular(n - i, fg[i], h);
      ModularForm b = rc_modular(n - i, f, gh[i]);
      if (first) {
        lhs = a;
        rhs = b;
        first = false;
      } else {
        lhs += a;
        rhs += b;
      }
    }
    int bad = -1;
    int p = std::min(lhs.precision(), rhs.precision());
    for (int i = 0; i <= p; ++i)
      if (lhs.q[i] != rhs.q[i]) {
        bad = i;
        break;
      }
    out.push_back({n, bad < 0, bad});
  }
  return out;
}

}  // namespace rcq
