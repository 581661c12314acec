#pragma once

// Torsion-free connections on R x R+, their transformation under lifted
// diffeomorphisms, curvature, and the coadjoint-orbit moment maps.

#include <array>
#include <string>

#include "rcq/germ.hpp"
#include "rcq/h1.hpp"

namespace rcq {

class Connection2D {
 public:
  /// gamma(k, i, j) = Gamma^k_{ij}, indices 1-based as in the coordinates.
  using Table = std::array<std::array<std::array<LaurentPoly2, 2>, 2>, 2>;

  Connection2D() = default;
  explicit Connection2D(Table t);
  /// Gamma^2_11 = mu, Gamma^1_12 = Gamma^1_21 = 1/(2 x2), Gamma^2_22 = -1/(2 x2).
  static Connection2D family(const LaurentPoly2& mu);

  const LaurentPoly2& gamma(int k, int i, int j) const { return t_[k - 1][i - 1][j - 1]; }
  const Table& table() const { return t_; }
  bool torsion_free() const;

  friend bool operator==(const Connection2D& a, const Connection2D& b);
  friend bool operator!=(const Connection2D& a, const Connection2D& b) { return !(a == b); }

 private:
  Table t_;
};

/// R(d1, d2) applied to d_k: components[k-1] = (coefficient of d1, coefficient of d2).
struct Curvature {
  std::array<std::array<LaurentPoly2, 2>, 2> components;
  bool is_zero() const;
};

Curvature curvature(const Connection2D& conn);
/// mu/x2 - d mu/d x2, the displayed closed form of the d2-coefficient of R(d1,d2)d1.
LaurentPoly2 curvature_formula(const LaurentPoly2& mu);

/// Christoffel symbols of the connection transported by the lift
/// L_phi(x1, x2) = (phi(x1), x2/phi'(x1)); invariance means equality with conn.
Connection2D pushforward_connection(const Connection2D& conn, const DiffeoGerm& phi);
/// phi'^3 (mu o L_phi) - x2 S(phi) - mu: the change of Gamma^2_11.
LaurentPoly2 delta2_discrepancy(const LaurentPoly2& mu, const DiffeoGerm& phi);
bool connection_preserved(const LaurentPoly2& mu, const DiffeoGerm& phi);

/// Omega = -mu / x2^3, so that delta_2'(a) = [Omega, a] on invariant germs.
LaurentPoly2 omega_from_mu(const LaurentPoly2& mu);
/// Inverse of omega_from_mu.
LaurentPoly2 mu_from_omega(const LaurentPoly2& omega);
/// phi^* Omega = U_phi Omega U_phi^{-1} = Omega o L_phi^{-1}.
LaurentPoly2 push_omega(const LaurentPoly2& omega, const DiffeoGerm& phi);

// --- coadjoint orbit chart (p, q) ------------------------------------------

enum class OrbitGenerator { H, E, F, P, Q };

struct MomentSystem {
  static LaurentPoly2 moment(OrbitGenerator a);
  /// lambda_[A,B]; the central element has moment map 1.
  static LaurentPoly2 bracket_moment(OrbitGenerator a, OrbitGenerator b);
  static std::string name(OrbitGenerator a);
  /// E~ = (1/q) d/dp, H~ = -p d/dp - q d/dq.
  static LaurentPoly2 e_tilde(const LaurentPoly2& u);
  static LaurentPoly2 h_tilde(const LaurentPoly2& u);
  /// (x1, x2) = (p / (2q), q^2): express f(x1, x2) in the orbit chart.
  static LaurentPoly2 to_orbit_chart(const LaurentPoly2& f);
};

/// h1 acting on orbit functions: X = E~, Y = H~/2.
struct MomentOps {
  LaurentPoly2 X(const LaurentPoly2& u) const { return MomentSystem::e_tilde(u); }
  LaurentPoly2 Y(const LaurentPoly2& u) const { return MomentSystem::h_tilde(u) * Scalar::ratio(1, 2); }
  LaurentPoly2 delta(int, const LaurentPoly2& u) const { return u * Scalar(0); }
};

}  // namespace rcq
