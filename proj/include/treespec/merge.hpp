#pragma once

#include <span>
#include <vector>

#include "treespec/poly.hpp"
#include "treespec/spectrum.hpp"
#include "treespec/tree.hpp"

namespace treespec {

/// Exact witness that prod_j P(T_j,x)^(alpha_j - 1) divides P(T_0,x) for the
/// merged tree T_0.
struct MergeCertificate {
  RootedTree merged;
  IntPoly merged_charpoly;
  IntPoly claimed_divisor;
  /// P(T_0) / claimed_divisor when holds, zero otherwise.
  IntPoly quotient;
  bool holds = false;
};

MergeCertificate verify_merge(std::span<const RootedTree> inputs, std::span<const unsigned> alphas);

/// verify_merge with every multiplicity equal to 2, so that the spectrum of
/// each input survives in the merged tree.
MergeCertificate verify_corollary14(std::span<const RootedTree> inputs);

/// One distinct eigenvalue of an input tree checked against the merged tree.
struct MultiplicityCheck {
  double eigenvalue = 0.0;
  std::size_t required = 0;  // sum_j (alpha_j - 1) mu(T_j, lambda)
  std::size_t found = 0;     // mu(T_0, lambda)
};

/// Numeric second witness: for every distinct eigenvalue lambda of any input,
/// compare mu(T_0, lambda) with sum_j (alpha_j - 1) mu(T_j, lambda). Roots
/// closer than `slack` are treated as equal. Sorted by eigenvalue.
std::vector<MultiplicityCheck> check_merge_multiplicities(std::span<const RootedTree> inputs,
                                                          std::span<const unsigned> alphas,
                                                          const RootedTree& merged,
                                                          double slack = 1e-9);

}  // namespace treespec
