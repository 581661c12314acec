#pragma once

// Moment maps of sl2 x| heisenberg on the open orbit, checked against the
// h1 Rankin-Cohen brackets. Orbit functions are Laurent polynomials in
// (p, q), stored as (x1, x2).

#include <string>
#include <vector>

#include "rcq/geometry.hpp"

namespace rcq {

struct MomentFinding {
  std::string claim;
  bool ok = true;
  std::string witness;
};

/// RC_n(a, b) for the h1 action X = E~, Y = H~/2.
LaurentPoly2 moment_rc(int n, const LaurentPoly2& a, const LaurentPoly2& b);

/// Laurent monomials p^a q^b, 0 <= a <= 3, -2 <= b <= 3.
std::vector<LaurentPoly2> orbit_monomials();

/// lambda_[A,B] = {lambda_A, lambda_B} and [Y, X] = X on the orbit functions.
std::vector<MomentFinding> moment_bracket_check(const std::vector<LaurentPoly2>& corpus);

/// Weights of H~ on the moment maps and the nilpotency of E~, up to r = rmax.
std::vector<MomentFinding> lemma_diag_check(int rmax = 6);

/// RC_n(lambda_A, u) - RC_n(u, lambda_A) = 0 for each n listed, all generators.
std::vector<MomentFinding> moment_commutator_check(const std::vector<LaurentPoly2>& corpus,
                                                   const std::vector<int>& orders = {0, 2, 3, 4, 5});

}  // namespace rcq
