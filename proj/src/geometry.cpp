#include "rcq/geometry.hpp"

namespace rcq {

Connection2D::Connection2D(Table t) : t_(std::move(t)) {}

Connection2D Connection2D::family(const LaurentPoly2& mu) {
  Table t;
  LaurentPoly2 h = LaurentPoly2::monomial(0, -1, Scalar::ratio(1, 2));
  t[1][0][0] = mu;
  t[0][0][1] = h;
  t[0][1][0] = h;
  t[1][1][1] = -h;
  return Connection2D(std::move(t));
}

bool Connection2D::torsion_free() const {
  for (int k = 0; k < 2; ++k)
    if (t_[k][0][1] != t_[k][1][0]) return false;
  return true;
}

bool operator==(const Connection2D& a, const Connection2D& b) {
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (a.t_[k][i][j] != b.t_[k][i][j]) return false;
  return true;
}

bool Curvature::is_zero() const {
  for (const auto& v : components)
    for (const auto& c : v)
      if (!c.is_zero()) return false;
  return true;
}

Curvature curvature(const Connection2D& conn) {
  // R(d_i, d_j) d_k = (d_i G^l_{jk} - d_j G^l_{ik} + G^l_{im} G^m_{jk} - G^l_{jm} G^m_{ik}) d_l, with i=1, j=2
  Curvature r;
  auto g = [&](int l, int a, int b) -> const LaurentPoly2& { return conn.gamma(l, a, b); };
  for (int k = 1; k <= 2; ++k) {
    for (int l = 1; l <= 2; ++l) {
      LaurentPoly2 v = g(l, 2, k).partial_x1() - g(l, 1, k).partial_x2();
      for (int m = 1; m <= 2; ++m) v += g(l, 1, m) * g(m, 2, k) - g(l, 2, m) * g(m, 1, k);
      r.components[k - 1][l - 1] = v;
    }
  }
  return r;
}

LaurentPoly2 curvature_formula(const LaurentPoly2& mu) { return mu.shifted(0, -1) - mu.partial_x2(); }

Connection2D pushforward_connection(const Connection2D& conn, const DiffeoGerm& phi) {
  // J = D L_phi, J^{-1} has unit determinant
  LaurentPoly2 d1 = phi.derivative(1);
  LaurentPoly2 d2 = d1.partial_x1();
  LaurentPoly2 inv_d1 = reciprocal(d1, phi.trunc());
  LaurentPoly2 x2 = LaurentPoly2::x2();
  std::array<std::array<LaurentPoly2, 2>, 2> j, ji;
  j[0][0] = d1;
  j[0][1] = LaurentPoly2();
  j[1][0] = -(x2 * d2 * inv_d1 * inv_d1);
  j[1][1] = inv_d1;
  ji[0][0] = j[1][1];
  ji[0][1] = -j[0][1];
  ji[1][0] = -j[1][0];
  ji[1][1] = j[0][0];
  // d_i J^l_j
  auto dj = [&](int i, int l, int jj) { return j[l][jj].partial(i); };
  Connection2D::Table pulled;
  for (int l = 0; l < 2; ++l)
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n) pulled[l][m][n] = lift_pullback(conn.table()[l][m][n], phi);
  Connection2D::Table out;
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int jj = 0; jj < 2; ++jj) {
        LaurentPoly2 acc;
        for (int l = 0; l < 2; ++l) {
          LaurentPoly2 inner = dj(i, l, jj);
          for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n)
              if (!pulled[l][m][n].is_zero()) inner += pulled[l][m][n] * j[m][i] * j[n][jj];
          acc += ji[k][l] * inner;
        }
        out[k][i][jj] = acc;
      }
  return Connection2D(std::move(out));
}

LaurentPoly2 delta2_discrepancy(const LaurentPoly2& mu, const DiffeoGerm& phi) {
  LaurentPoly2 d1 = phi.derivative(1);
  LaurentPoly2 s = schwarzian(phi);
  return d1 * d1 * d1 * lift_pullback(mu, phi) - s.shifted(0, 1) - mu;
}

bool connection_preserved(const LaurentPoly2& mu, const DiffeoGerm& phi) {
  Connection2D c = Connection2D::family(mu);
  return pushforward_connection(c, phi) == c;
}

LaurentPoly2 omega_from_mu(const LaurentPoly2& mu) { return -mu.shifted(0, -3); }

LaurentPoly2 mu_from_omega(const LaurentPoly2& omega) { return -omega.shifted(0, 3); }

LaurentPoly2 push_omega(const LaurentPoly2& omega, const DiffeoGerm& phi) {
  return lift_pullback(omega, phi.inverse());
}

LaurentPoly2 MomentSystem::moment(OrbitGenerator a) {
  switch (a) {
    case OrbitGenerator::H:
      return LaurentPoly2::monomial(1, 1);
    case OrbitGenerator::E:
      return LaurentPoly2::monomial(0, 2, Scalar::ratio(1, 2));
    case OrbitGenerator::F:
      return LaurentPoly2::monomial(2, 0, Scalar::ratio(-1, 2));
    case OrbitGenerator::P:
      return LaurentPoly2::monomial(0, 1);
    case OrbitGenerator::Q:
      return LaurentPoly2::monomial(1, 0, -1);
  }
  throw InputError("unknown orbit generator");
}

LaurentPoly2 MomentSystem::bracket_moment(OrbitGenerator a, OrbitGenerator b) {
  using G = OrbitGenerator;
  // structure constants of sl2 x| heisenberg, antisymmetric
  auto table = [](G x, G y) -> std::pair<bool, LaurentPoly2> {
    if (x == G::H && y == G::E) return {true, moment(G::E) * Scalar(2)};
    if (x == G::H && y == G::F) return {true, moment(G::F) * Scalar(-2)};
    if (x == G::E && y == G::F) return {true, moment(G::H)};
    if (x == G::H && y == G::P) return {true, moment(G::P)};
    if (x == G::H && y == G::Q) return {true, -moment(G::Q)};
    if (x == G::E && y == G::Q) return {true, moment(G::P)};
    if (x == G::F && y == G::P) return {true, moment(G::Q)};
    if (x == G::P && y == G::Q) return {true, LaurentPoly2(1)};
    if ((x == G::E && y == G::P) || (x == G::F && y == G::Q)) return {true, LaurentPoly2()};
    return {false, LaurentPoly2()};
  };
  if (a == b) return LaurentPoly2();
  auto [found, v] = table(a, b);
  if (found) return v;
  auto [found2, w] = table(b, a);
  if (found2) return -w;
  throw InputError("missing structure constant");
}

std::string MomentSystem::name(OrbitGenerator a) {
  switch (a) {
    case OrbitGenerator::H: return "H";
    case OrbitGenerator::E: return "E";
    case OrbitGenerator::F: return "F";
    case OrbitGenerator::P: return "P";
    case OrbitGenerator::Q: return "Q";
  }
  return "?";
}

LaurentPoly2 MomentSystem::e_tilde(const LaurentPoly2& u) { return u.partial_x1().shifted(0, -1); }

LaurentPoly2 MomentSystem::h_tilde(const LaurentPoly2& u) {
  return -(u.partial_x1().shifted(1, 0) + u.partial_x2().shifted(0, 1));
}

LaurentPoly2 MomentSystem::to_orbit_chart(const LaurentPoly2& f) {
  if (!f.exact()) throw MathError("orbit chart substitution needs an exact function");
  LaurentPoly2 r;
  for (const auto& [e, c] : f.terms()) {
    // x1^a x2^b -> p^a (2q)^{-a} q^{2b}
    Scalar k = c * Scalar(2).pow(-e.first);
    r += LaurentPoly2::monomial(e.first, 2 * e.second - e.first, k);
  }
  return r;
}

}  // namespace rcq
