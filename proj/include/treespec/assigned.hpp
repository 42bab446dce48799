#pragma once

#include <span>
#include <vector>

#include "treespec/poly.hpp"
#include "treespec/tree.hpp"

namespace treespec {

/// Integer diagonal shift beta(v), one entry per vertex in tree order.
using BetaSequence = std::vector<long>;

/// Numerator/denominator of the rational function assigned to one vertex.
///
/// Both polynomials are monic, deg num = deg den + 1, and den is the product
/// of the children's numerators.
struct AssignedPair {
  IntPoly num;
  IntPoly den;

  friend bool operator==(const AssignedPair&, const AssignedPair&) = default;
};

/// Assigns F(v,x) = x - beta(v) - sum over children w of 1/F(w,x) bottom up,
/// returning one pair per vertex (indexed by vertex).
///
/// Children are folded with prefix/suffix products so each vertex costs
/// O(|c(v)|) polynomial multiplications. Traversal is iterative, so deep
/// trees (long paths) do not grow the call stack.
std::vector<AssignedPair> assign_all(const RootedTree& t, std::span<const long> beta);

/// det(xI - (A(T) + diag(beta))), which also equals det(xI - (-A(T) + diag(beta))).
/// The product of all assigned functions telescopes to the root's numerator.
IntPoly charpoly_general(const RootedTree& t, std::span<const long> beta);

/// P(T, x), the adjacency characteristic polynomial.
IntPoly charpoly_adjacency(const RootedTree& t);

/// Q(T, x), the Laplacian characteristic polynomial (beta(v) = d(v)).
IntPoly charpoly_laplacian(const RootedTree& t);

BetaSequence zero_beta(const RootedTree& t);
BetaSequence degree_beta(const RootedTree& t);

}  // namespace treespec
