#pragma once

// Exact linear algebra over Gaussian rationals.

#include <optional>
#include <vector>

#include "rcq/scalar.hpp"

namespace rcq {

using Row = std::vector<Scalar>;
using Matrix = std::vector<Row>;

/// Solve A x = b exactly. Returns one solution (free variables set to zero) or
/// nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear(Matrix a, std::vector<Scalar> b);

/// Incremental row-echelon accumulator: feed equations one at a time, keep
/// only independent ones.
class EchelonSystem {
 public:
  explicit EchelonSystem(int unknowns) : n_(unknowns) {}

  /// Adds sum_j row[j] x_j = rhs. Returns false if it contradicts earlier rows.
  bool add(Row row, Scalar rhs);
  int rank() const { return static_cast<int>(rows_.size()); }
  int unknowns() const { return n_; }
  bool consistent() const { return consistent_; }
  /// Back-substitution with free variables set to zero.
  std::vector<Scalar> solution() const;

 private:
  int n_;
  bool consistent_ = true;
  std::vector<Row> rows_;  // each normalized with pivot 1
  std::vector<Scalar> rhs_;
  std::vector<int> pivots_;
};

}  // namespace rcq
