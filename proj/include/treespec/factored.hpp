#pragma once

#include <string>
#include <vector>

#include "treespec/poly.hpp"

namespace treespec {

struct Factor {
  IntPoly base;
  unsigned exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Product of polynomial powers, kept unexpanded.
///
/// Bases are never the constants 0 or 1 and exponents are at least one;
/// `append` silently drops factors that would violate this.
class FactoredPoly {
 public:
  FactoredPoly() = default;
  FactoredPoly(std::initializer_list<Factor> factors);

  void append(IntPoly base, unsigned exponent);
  void append(const FactoredPoly& other);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  /// Sum of exponent * degree over the factors.
  int degree() const;

  /// `x^4*(x^4-7*x^2+11)`; "1" for the empty product.
  std::string pretty() const;

  friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;

 private:
  std::vector<Factor> factors_;
};

IntPoly expand(const FactoredPoly& f);

}  // namespace treespec
