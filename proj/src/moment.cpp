#include "rcq/moment.hpp"

#include "rcq/fedosov.hpp"
#include "rcq/weyl.hpp"

namespace rcq {

namespace {

constexpr OrbitGenerator kGenerators[] = {OrbitGenerator::H, OrbitGenerator::E, OrbitGenerator::F,
                                          OrbitGenerator::P, OrbitGenerator::Q};

bool in_sl2(OrbitGenerator a) {
  return a == OrbitGenerator::H || a == OrbitGenerator::E || a == OrbitGenerator::F;
}

std::string show(const LaurentPoly2& f) { return f.to_string({"p", "q"}); }

MomentFinding finding(std::string claim, const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
  MomentFinding r{std::move(claim), lhs == rhs, {}};
  if (!r.ok) r.witness = "lhs = " + show(lhs) + ", rhs = " + show(rhs);
  return r;
}

}  // namespace

LaurentPoly2 moment_rc(int n, const LaurentPoly2& a, const LaurentPoly2& b) {
  return evaluate(rc_h1(n), a, b, MomentOps{}, [](const LaurentPoly2& u, const LaurentPoly2& v) { return u * v; });
}

std::vector<LaurentPoly2> orbit_monomials() {
  std::vector<LaurentPoly2> r;
  for (int a = 0; a <= 3; ++a)
    for (int b = -2; b <= 3; ++b) r.push_back(LaurentPoly2::monomial(a, b));
  return r;
}

std::vector<MomentFinding> moment_bracket_check(const std::vector<LaurentPoly2>& corpus) {
  std::vector<MomentFinding> out;
  for (auto a : kGenerators)
    for (auto b : kGenerators) {
      if (a >= b) continue;
      out.push_back(finding("lambda_[" + MomentSystem::name(a) + "," + MomentSystem::name(b) + "] = {lambda, lambda}",
                            MomentSystem::bracket_moment(a, b),
                            poisson_bracket(MomentSystem::moment(a), MomentSystem::moment(b))));
    }
  MomentOps ops;
  for (const auto& u : corpus)
    out.push_back(finding("[Y, X] = X on " + show(u), ops.Y(ops.X(u)) - ops.X(ops.Y(u)), ops.X(u)));
  return out;
}

std::vector<MomentFinding> lemma_diag_check(int rmax) {
  std::vector<MomentFinding> out;
  for (auto a : kGenerators) {
    const LaurentPoly2 lam = MomentSystem::moment(a);
    const std::string nm = MomentSystem::name(a);
    const bool g = in_sl2(a);
    out.push_back(finding("H~ lambda_" + nm + " = " + (g ? "-2" : "-1") + " lambda_" + nm,
                          MomentSystem::h_tilde(lam), lam * Scalar(g ? -2 : -1)));
    LaurentPoly2 v = lam;
    for (int r = 1; r <= rmax; ++r) {
      v = MomentSystem::e_tilde(v);
      if (r >= (g ? 3 : 2)) out.push_back(finding("E~^" + std::to_string(r) + " lambda_" + nm + " = 0", v, {}));
    }
  }
  // linearity of (i) on mixed X + v
  for (auto x : {OrbitGenerator::H, OrbitGenerator::E, OrbitGenerator::F})
    for (auto w : {OrbitGenerator::P, OrbitGenerator::Q}) {
      LaurentPoly2 lx = MomentSystem::moment(x), lv = MomentSystem::moment(w);
      out.push_back(finding("H~ lambda_" + MomentSystem::name(x) + "+" + MomentSystem::name(w),
                            MomentSystem::h_tilde(lx + lv), lx * Scalar(-2) - lv));
    }
  return out;
}

std::vector<MomentFinding> moment_commutator_check(const std::vector<LaurentPoly2>& corpus,
                                                   const std::vector<int>& orders) {
  std::vector<MomentFinding> out;
  for (int n : orders) {
    if (n == 1) throw InputError("the moment commutator does not vanish at n = 1");
    for (auto a : kGenerators) {
      const LaurentPoly2 lam = MomentSystem::moment(a);
      for (const auto& u : corpus)
        out.push_back(finding("[lambda_" + MomentSystem::name(a) + ", " + show(u) + "]_" + std::to_string(n) + " = 0",
                              moment_rc(n, lam, u) - moment_rc(n, u, lam), {}));
    }
  }
  return out;
}

}  // namespace rcq
