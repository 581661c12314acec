#include "rcq/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace rcq {

QSeries::QSeries(int prec, std::vector<Rational> coeffs) : QSeries(prec) {
  for (int n = 0; n <= prec && n < static_cast<int>(coeffs.size()); ++n) coeffs_[n] = std::move(coeffs[n]);
}

QSeries QSeries::constant(const Rational& c, int prec) {
  QSeries s(prec);
  s.coeffs_[0] = c;
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

QSeries QSeries::truncated(int prec) const {
  if (prec >= precision()) return *this;
  QSeries r(prec);
  std::copy_n(coeffs_.begin(), prec + 1, r.coeffs_.begin());
  return r;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.precision() < precision()) coeffs_.resize(o.coeffs_.size());
  for (size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.precision() < precision()) coeffs_.resize(o.coeffs_.size());
  for (size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  int prec = std::min(a.precision(), b.precision());
  QSeries r(prec);
  for (int i = 0; i <= prec; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; i + j <= prec; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& v : r.coeffs_) v = -v;
  return r;
}

QSeries QSeries::derivative() const {
  QSeries r = *this;
  for (size_t n = 0; n < r.coeffs_.size(); ++n) r.coeffs_[n] *= static_cast<long>(n);
  return r;
}

QSeries QSeries::pow(int n) const {
  if (n < 0) throw MathError("negative power of a q-series");
  QSeries r = constant(1, precision());
  for (int k = 0; k < n; ++k) r = r * *this;
  return r;
}

bool operator==(const QSeries& a, const QSeries& b) {
  int prec = std::min(a.precision(), b.precision());
  for (int n = 0; n <= prec; ++n)
    if (a.coeffs_[n] != b.coeffs_[n]) return false;
  return true;
}

std::string QSeries::to_string(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (int n = 0; n <= precision() && shown < max_terms; ++n) {
    const Rational& c = coeffs_[n];
    if (sgn(c) == 0) continue;
    if (shown > 0) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    if (n == 0 || a != 1) os << a;
    if (n > 0) os << (a != 1 ? "*q" : "q");
    if (n > 1) os << "^" << n;
    ++shown;
  }
  if (shown == 0) os << "0";
  os << " + O(q^" << precision() + 1 << ")";
  return os.str();
}

}  // namespace rcq
