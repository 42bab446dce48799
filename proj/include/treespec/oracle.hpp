#pragma once

#include <span>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "treespec/bigint.hpp"
#include "treespec/poly.hpp"
#include "treespec/tree.hpp"

namespace treespec {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using DenseIntMatrix = DenseMatrix<BigInt>;

/// adjacency: A(T); laplacian: L(T); shifted_plus: A(T) + diag(beta);
/// shifted_minus: -A(T) + diag(beta). Rows follow the tree's vertex order.
enum class MatrixKind { adjacency, laplacian, shifted_plus, shifted_minus };

/// Throws LengthMismatch when a shifted kind gets a beta of the wrong length.
DenseIntMatrix build_matrix(const RootedTree& t, MatrixKind which, std::span<const long> beta = {});

/// det(xI - M) by Berkowitz's division-free algorithm.
IntPoly charpoly_dense(const DenseIntMatrix& m);

/// det(xI - M) by Faddeev-LeVerrier. Each step divides by the iteration
/// index; a nonzero remainder throws NotDivisible, so the routine checks
/// itself.
IntPoly charpoly_faddeev_leverrier(const DenseIntMatrix& m);

/// P M P^T for the permutation sending row i to perm[i].
template <class Scalar>
DenseMatrix<Scalar> permute_symmetric(const DenseMatrix<Scalar>& m, std::span<const std::size_t> perm) {
  const auto n = m.rows();
  DenseMatrix<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      out(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(perm[j])) = m(i, j);
  return out;
}

}  // namespace treespec
