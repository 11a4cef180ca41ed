#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <vector>

namespace nimforge {

using Integer = std::int64_t;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Non-negative integer matrices of NIM-reps and structure-constant slices.
using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

/// True iff every entry of `m` is >= 0.
template <typename Derived>
bool is_nonnegative(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 || m.minCoeff() >= 0;
}

/// True iff `m` is square with exactly one 1 per row and column, 0 elsewhere.
template <typename Derived>
bool is_permutation_matrix(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && m(i, j) != 1) return false;
    }
  }
  return (m.rowwise().sum().array() == 1).all() && (m.colwise().sum().array() == 1).all();
}

/// Permutation matrix sending basis vector e_i to e_{perm[i]}.
template <typename Scalar = Integer>
Matrix<Scalar> permutation_matrix(const std::vector<int>& perm) {
  const auto n = static_cast<Eigen::Index>(perm.size());
  Matrix<Scalar> p = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(perm[static_cast<std::size_t>(i)], i) = 1;
  return p;
}

/// Sorted insert without duplicates.
inline void insert_class_id(std::vector<int>& ids, int id) {
  const auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) ids.insert(it, id);
}

}  // namespace nimforge
