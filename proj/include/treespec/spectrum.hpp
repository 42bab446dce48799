#pragma once

#include <cstddef>
#include <vector>

#include "treespec/bigint.hpp"
#include "treespec/poly.hpp"
#include "treespec/tree.hpp"

namespace treespec {

/// One distinct real root: a certified enclosure, its midpoint in double and
/// its multiplicity in the source polynomial.
struct RootEntry {
  BigRational lo;
  BigRational hi;
  double approx = 0.0;
  std::size_t multiplicity = 0;
};

struct SpectrumReport {
  /// Ascending by approx; intervals are pairwise disjoint.
  std::vector<RootEntry> entries;
  /// Sum of multiplicity * |approx|.
  double energy = 0.0;
  int source_degree = 0;

  std::size_t distinct() const { return entries.size(); }
  /// Multiplicity of the entry whose interval contains `value`, 0 if none
  /// does (within slack on either side).
  std::size_t multiplicity_near(double value, double slack) const;
};

inline const BigRational kDefaultTolerance =
    BigRational(BigInt(1), boost::multiprecision::pow(BigInt(10), 12));

/// Isolates every real root of p with Sturm sequences over the integers and
/// refines each by bisection to an interval of width <= tol.
///
/// Multiplicities come from the gcd(p, p') filtration; the root 0 is split
/// off exactly first. p must have only real roots: if the multiplicities
/// found do not add up to deg p, MultiplicityMismatch is thrown.
SpectrumReport real_roots_with_multiplicity(const IntPoly& p,
                                            const BigRational& tol = kDefaultTolerance);

/// Sum of |eigenvalue| over the adjacency spectrum.
double energy_numeric(const RootedTree& t, const BigRational& tol = kDefaultTolerance);
double energy_numeric(const IntPoly& p, const BigRational& tol = kDefaultTolerance);

// Lower level pieces, exposed for tests.

/// Sign of p at a rational point, computed without forming the rational value.
int sign_at(const IntPoly& p, const BigRational& v);

/// Sturm chain p, p', -rem(...), ... kept primitive with sign-correct
/// pseudo-remainders. p should be square-free.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Sign variations of the chain at v, zeros skipped.
std::size_t sign_variations(const std::vector<IntPoly>& chain, const BigRational& v);

/// Square-free factors by multiplicity: result[i] holds the product of the
/// irreducible factors of multiplicity i+1 (primitive, possibly constant 1).
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/// Integer B with every real root of p inside (-B, B).
BigInt root_bound(const IntPoly& p);

}  // namespace treespec
