#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "treespec/factored.hpp"
#include "treespec/poly.hpp"
#include "treespec/tree.hpp"

namespace treespec {

enum class GraphMatrix { adjacency, laplacian };

enum class SequenceKind { W, Y, Dickson, Hermite };

/// Polynomials item_0..item_n of one of the level recurrences.
struct PolySequence {
  SequenceKind kind = SequenceKind::W;
  /// The constant a of the Dickson recurrence; unused otherwise.
  long parameter = 0;
  std::vector<IntPoly> items;

  const IntPoly& operator[](std::size_t j) const { return items[j]; }
  std::size_t size() const { return items.size(); }
};

/// W_0 = 1, W_1 = x, W_j = x W_{j-1} - c_{l+1-j} W_{j-2}.
PolySequence w_sequence(const BalancedProfile& p);

/// Laplacian counterpart of w_sequence. Throws TrivialTree on l = 1.
PolySequence y_sequence(const BalancedProfile& p);

/// Dickson polynomials of the second kind: E_j = x E_{j-1} - a E_{j-2}.
PolySequence dickson_sequence(long a, std::size_t last);

/// Probabilists' Hermite polynomials: He_j = x He_{j-1} - (j-1) He_{j-2}.
PolySequence hermite_sequence(std::size_t last);

/// Product of W_j (or Y_j) raised to n(T,l+1-j) - n(T,l-j), ascending in j,
/// with vanishing exponents left out. Laplacian throws TrivialTree on l = 1.
FactoredPoly factored_charpoly_balanced(const BalancedProfile& p, GraphMatrix which);

/// Levels j whose W_j divides P(T,x): j = l, plus every j < l with c_{l-j} > 1.
struct PhiSet {
  std::vector<std::size_t> indices;  // ascending

  bool contains(std::size_t j) const;
  friend bool operator==(const PhiSet&, const PhiSet&) = default;
};

PhiSet phi_set(const BalancedProfile& p);

/// {W_j : j in Phi}; the union of their roots is the set of distinct
/// adjacency eigenvalues.
std::vector<IntPoly> distinct_eigenvalue_polys(const BalancedProfile& p);

// ---------------------------------------------------------------------------
// Closed forms

/// 2 sqrt(scale_squared) cos(angle_num * pi / angle_den), with the angle
/// fraction in lowest terms so equal values compare equal.
struct CosineRoot {
  long scale_squared = 1;
  long angle_num = 0;
  long angle_den = 1;

  long double value() const;
  std::string str() const;

  friend auto operator<=>(const CosineRoot&, const CosineRoot&) = default;
};

enum class Trig { one, cos, cot, csc };

/// coefficient * sqrt(radicand) * trig(angle_num * pi / angle_den).
/// Trig::one ignores the angle.
struct TrigTerm {
  BigInt coefficient;
  long radicand = 1;
  Trig kind = Trig::one;
  long angle_num = 0;
  long angle_den = 1;

  long double value() const;
};

/// Finite sum of TrigTerms; evaluated in long double.
struct ClosedForm {
  std::vector<TrigTerm> terms;

  long double value() const;
  std::string str() const;
};

FactoredPoly bethe_charpoly(int d, int k);

/// Distinct adjacency eigenvalues of B_{d,k}, sorted descending by value.
std::vector<CosineRoot> bethe_distinct_eigenvalues(int d, int k);

/// Sum of |roots| of E_j(x, a).
ClosedForm psi_closed_form(int j, long a);

/// Energy of B_{d,k} as a sum of cot/csc terms.
ClosedForm bethe_energy(int d, int k);

FactoredPoly antifactorial_charpoly(int k);

/// {He_j : 2 <= j <= k} for k >= 2 and {x} for k = 1.
std::vector<IntPoly> antifactorial_distinct_eigenvalues(int k);

}  // namespace treespec
