#pragma once

// q-expansions of modular forms for SL2(Z), the operators X and Y, and the
// Rankin-Cohen brackets.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcq/qseries.hpp"

namespace rcq {

struct ModularForm {
  QSeries q;
  int weight = 0;

  ModularForm() = default;
  ModularForm(QSeries s, int k) : q(std::move(s)), weight(k) {}

  int precision() const { return q.precision(); }
  ModularForm& operator+=(const ModularForm& o);
  ModularForm& operator-=(const ModularForm& o);
  ModularForm& operator*=(const Scalar& c);
  friend ModularForm operator+(ModularForm a, const ModularForm& b) { return a += b; }
  friend ModularForm operator-(ModularForm a, const ModularForm& b) { return a -= b; }
  friend ModularForm operator*(ModularForm a, const Scalar& c) { return a *= c; }
  friend ModularForm operator*(const ModularForm& a, const ModularForm& b) {
    return ModularForm(a.q * b.q, a.weight + b.weight);
  }
  friend bool operator==(const ModularForm& a, const ModularForm& b) {
    // the zero form carries every weight
    return a.q == b.q && (a.weight == b.weight || a.q.is_zero());
  }
  std::string to_string(int max_terms = 8) const;
};

/// Bernoulli number B_n.
Rational bernoulli(int n);
/// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for even k >= 2.
QSeries eisenstein(int k, int prec = kDefaultQPrecision);
ModularForm eisenstein_form(int k, int prec = kDefaultQPrecision);
/// q prod (1 - q^n)^24.
ModularForm delta_form(int prec = kDefaultQPrecision);
/// Named built-ins: E2 (weight 2, quasimodular), E4, E6, ..., Delta.
ModularForm named_form(const std::string& name, int prec = kDefaultQPrecision);

/// X f = D f - (k/12) E2 f with D = q d/dq.
ModularForm x_op(const ModularForm& f);
/// Y f = (k/2) f.
ModularForm y_op(const ModularForm& f);

struct ModularOps {
  ModularForm X(const ModularForm& f) const { return x_op(f); }
  ModularForm Y(const ModularForm& f) const { return y_op(f); }
  ModularForm delta(int, const ModularForm& f) const { return f * Scalar(0); }
};

/// RC_n(f, g) = sum_{r+s=n} (-1)^r C(n+k-1, s) C(n+l-1, r) D^r f D^s g.
ModularForm rc_modular(int n, const ModularForm& f, const ModularForm& g);

/// Dimension of M_k for SL2(Z).
int modular_dimension(int k);
/// Coordinates of s in the basis E4^a E6^b (a descending) of M_k, or nullopt
/// if s is not modular of weight k to the available precision.
std::optional<std::vector<Rational>> modular_coordinates(const QSeries& s, int k);
std::vector<std::pair<int, int>> modular_basis_exponents(int k);

/// Polynomial in E2 with holomorphic modular coefficients: sum_j E2^j F_j,
/// F_j of weight weight - 2j.
class QuasiForm {
 public:
  QuasiForm(int weight, int prec);
  static QuasiForm from_modular(const ModularForm& f);
  static QuasiForm e2(int prec);

  int weight() const { return weight_; }
  int depth() const;
  const std::map<int, QSeries>& parts() const { return parts_; }
  QuasiForm& add(int j, const QSeries& f);

  friend QuasiForm operator+(const QuasiForm& a, const QuasiForm& b);
  friend QuasiForm operator*(const QuasiForm& a, const QuasiForm& b);
  /// D = q d/dq through the Ramanujan identities.
  QuasiForm derivative() const;
  QSeries to_qseries() const;

 private:
  int weight_;
  int prec_;
  std::map<int, QSeries> parts_;
};

/// Zagier's product f * g = sum t^n RC_n(f, g).
std::vector<ModularForm> zagier_product(const ModularForm& f, const ModularForm& g, int order);

struct AssocResult {
  int order;      // t^order
  bool equal;
  int first_bad;  // first differing q-exponent, -1 if equal
};

/// ((f*g)*h) versus (f*(g*h)) coefficient by coefficient in t.
std::vector<AssocResult> zagier_assoc_check(const ModularForm& f, const ModularForm& g, const ModularForm& h,
                                            int order);

}  // namespace rcq
