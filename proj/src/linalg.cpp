#include "rcq/linalg.hpp"

namespace rcq {

bool EchelonSystem::add(Row row, Scalar rhs) {
  if (static_cast<int>(row.size()) != n_) throw InputError("equation has the wrong number of unknowns");
  for (size_t i = 0; i < rows_.size(); ++i) {
    int p = pivots_[i];
    if (row[p].is_zero()) continue;
    Scalar f = row[p];
    const Row& r = rows_[i];
    for (int j = p; j < n_; ++j)
      if (!r[j].is_zero()) row[j] -= f * r[j];
    rhs -= f * rhs_[i];
  }
  int p = 0;
  while (p < n_ && row[p].is_zero()) ++p;
  if (p == n_) {
    if (!rhs.is_zero()) consistent_ = false;
    return rhs.is_zero();
  }
  Scalar inv = row[p].inverse();
  for (int j = p; j < n_; ++j)
    if (!row[j].is_zero()) row[j] *= inv;
  rhs *= inv;
  rows_.push_back(std::move(row));
  rhs_.push_back(std::move(rhs));
  pivots_.push_back(p);
  return true;
}

std::vector<Scalar> EchelonSystem::solution() const {
  if (!consistent_) throw MathError("inconsistent linear system has no solution");
  std::vector<Scalar> x(n_);
  for (int i = static_cast<int>(rows_.size()) - 1; i >= 0; --i) {
    const Row& r = rows_[i];
    int p = pivots_[i];
    Scalar v = rhs_[i];
    for (int j = p + 1; j < n_; ++j)
      if (!r[j].is_zero() && !x[j].is_zero()) v -= r[j] * x[j];
    x[p] = v;
  }
  return x;
}

std::optional<std::vector<Scalar>> solve_linear(Matrix a, std::vector<Scalar> b) {
  if (a.size() != b.size()) throw InputError("matrix and right-hand side sizes differ");
  int n = a.empty() ? 0 : static_cast<int>(a[0].size());
  EchelonSystem sys(n);
  for (size_t i = 0; i < a.size(); ++i) sys.add(std::move(a[i]), std::move(b[i]));
  if (!sys.consistent()) return std::nullopt;
  return sys.solution();
}

}  // namespace rcq
