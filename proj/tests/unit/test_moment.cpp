#include "doctest.h"
#include "rcq/moment.hpp"
#include "rcq/weyl.hpp"

using namespace rcq;

namespace {
LaurentPoly2 mono(int a, int b, Scalar c = 1) { return LaurentPoly2::monomial(a, b, c); }

bool all_ok(const std::vector<MomentFinding>& fs) {
  for (const auto& f : fs)
    if (!f.ok) {
      MESSAGE(f.claim << ": " << f.witness);
      return false;
    }
  return !fs.empty();
}
}  // namespace

TEST_CASE("orbit chart fields") {
  // E~ = (1/q) d/dp, H~ = -p d/dp - q d/dq
  CHECK(MomentSystem::e_tilde(mono(2, 1)) == mono(1, 0, 2));
  CHECK(MomentSystem::h_tilde(mono(2, 1)) == mono(2, 1, -3));
  CHECK(MomentSystem::e_tilde(MomentSystem::e_tilde(MomentSystem::e_tilde(MomentSystem::moment(OrbitGenerator::F))))
            .is_zero());
  CHECK(MomentSystem::e_tilde(MomentSystem::e_tilde(MomentSystem::moment(OrbitGenerator::P))).is_zero());
  CHECK_FALSE(MomentSystem::e_tilde(MomentSystem::e_tilde(MomentSystem::moment(OrbitGenerator::F))).is_zero());
}

TEST_CASE("moment map is a lie algebra map") { CHECK(all_ok(moment_bracket_check(orbit_monomials()))); }

TEST_CASE("weights and nilpotency of the moment maps") { CHECK(all_ok(lemma_diag_check())); }

TEST_CASE("moment maps commute with u beyond first order") {
  CHECK(moment_rc(3, MomentSystem::moment(OrbitGenerator::H), mono(1, 2)) ==
        moment_rc(3, mono(1, 2), MomentSystem::moment(OrbitGenerator::H)));
  CHECK(all_ok(moment_commutator_check(orbit_monomials())));
  CHECK_THROWS_AS(moment_commutator_check(orbit_monomials(), {1}), InputError);
}

TEST_CASE("first order commutator is twice the bracket") {
  for (const auto& u : orbit_monomials()) {
    LaurentPoly2 lam = MomentSystem::moment(OrbitGenerator::E);
    LaurentPoly2 c = moment_rc(1, lam, u) - moment_rc(1, u, lam);
    CHECK(c == poisson_bracket(lam, u) * Scalar(2));
  }
  // and the brackets do not vanish for a generic pair
  CHECK_FALSE((moment_rc(3, mono(2, 1), mono(1, -1)) - moment_rc(3, mono(1, -1), mono(2, 1))).is_zero());
}
