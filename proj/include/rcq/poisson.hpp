#pragma once

// Hochschild coboundaries of H1-cochains on crossed-product algebras, and the
// noncommutative Poisson condition b(B) = [RC1, RC1].

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rcq/crossed.hpp"
#include "rcq/h1.hpp"

namespace rcq {

/// An n-cochain given by an element of H1^{(x) n}, acting leg by leg.
using Cochain = H1Tensor;
/// Any multilinear map A^n -> A.
using Multilinear = std::function<CrossedElement(const std::vector<CrossedElement>&)>;

CrossedElement evaluate_cochain(const Cochain& c, const std::vector<CrossedElement>& args);
Multilinear as_multilinear(const Cochain& c);

/// (bC)(a_0..a_n) = a_0 C(a_1..a_n) + sum_i (-1)^{i+1} C(.., a_i a_{i+1}, ..) + (-1)^{n+1} C(a_0..a_{n-1}) a_n.
Multilinear coboundary(const Multilinear& c, int degree);
/// b of a 2-cochain on (a, b, c).
CrossedElement hochschild_b(const Cochain& c, const CrossedElement& a, const CrossedElement& b,
                            const CrossedElement& cc);

/// -X (x) 2Y + 2Y (x) X + delta_1 Y (x) 2Y.
Cochain rc1_cochain();
/// RC1(RC1(a, b), c) - RC1(a, RC1(b, c)).
CrossedElement associator_defect(const CrossedElement& a, const CrossedElement& b, const CrossedElement& c);

/// S(X)^2 (x) Y(2Y+1) + S(X)(2Y+1) (x) X(2Y+1) + Y(2Y+1) (x) X^2.
Cochain b_prime();
/// 2 d Y^2 (x) Y + 2/3 d (x) Y^3 + 2 d Y (x) Y^2 + 2 d Y (x) Y + d (x) Y^2 with d = delta_2'.
Cochain b_double_prime();
/// The five cochains d Y^2 (x) Y, d (x) Y^3, d Y (x) Y, d (x) Y^2, d Y (x) Y^2.
std::vector<Cochain> b_identity_cochains();
/// The expanded right-hand sides printed for those five coboundaries.
CrossedElement b_identity_rhs(int which, const CrossedElement& a, const CrossedElement& b, const CrossedElement& c);

/// Test algebra: crossed products over a germ pseudogroup.
struct AlgebraConfig {
  std::string name;
  std::vector<DiffeoGerm> germs;  // closed under inverses; identity first
  int min_x1 = 0, max_x1 = 3;
  int min_x2 = -3, max_x2 = 3;
};

/// Scalings x -> 2x, x -> x/2 with x + x^2 and its inverse.
AlgebraConfig affine_quadratic_config(int germ_order = kDefaultGermOrder);
/// Scalings only (all deltas vanish).
AlgebraConfig affine_config();

/// Portable deterministic sampling.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  int uniform(int lo, int hi);  // inclusive
  CrossedElement element(const AlgebraConfig& cfg);
  /// 1 to max_terms monomials c x1^a x2^b, c in +-{1, 2, 3}.
  LaurentPoly2 function(int min_x1, int max_x1, int min_x2, int max_x2, int max_terms = 2);

 private:
  std::mt19937_64 rng_;
};

/// Weight-2 tensors of PBW monomials with at most max_y powers of Y per leg.
std::vector<Cochain> weight_two_basis(int max_y = 3);

struct BoundingSolve {
  bool consistent = false;
  int unknowns = 0;
  int rank = 0;
  Cochain b{2};
};

/// Exact linear solve for B in the span of basis with b(B) = associator_defect
/// on the given triples.
BoundingSolve solve_bounding_cochain(const std::vector<Cochain>& basis,
                                     const std::vector<std::array<CrossedElement, 3>>& triples);

}  // namespace rcq
