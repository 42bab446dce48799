#include "treespec/factored.hpp"

#include <algorithm>

namespace treespec {

FactoredPoly::FactoredPoly(std::initializer_list<Factor> factors) {
  for (const auto& f : factors) append(f.base, f.exponent);
}

void FactoredPoly::append(IntPoly base, unsigned exponent) {
  if (exponent == 0 || base.is_zero()) return;
  if (base == IntPoly{1}) return;
  factors_.push_back({std::move(base), exponent});
}

void FactoredPoly::append(const FactoredPoly& other) {
  for (const auto& f : other.factors_) factors_.push_back(f);
}

int FactoredPoly::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += static_cast<int>(f.exponent) * f.base.degree();
  return d;
}

namespace {

bool needs_parens(const IntPoly& p) {
  return std::count_if(p.coeffs().begin(), p.coeffs().end(),
                       [](const BigInt& c) { return !c.is_zero(); }) > 1;
}

}  // namespace

std::string FactoredPoly::pretty() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '*';
    const std::string body = f.base.pretty();
    // x^k raised to a power would read ambiguously without parentheses.
    const bool monomial_power = f.base.degree() > 1 && !needs_parens(f.base);
    if (f.exponent == 1) {
      out += needs_parens(f.base) ? "(" + body + ")" : body;
    } else if (f.base == IntPoly::x()) {
      out += "x^" + std::to_string(f.exponent);
    } else {
      out += (needs_parens(f.base) || monomial_power || body[0] == '-' ? "(" + body + ")" : body) +
             "^" + std::to_string(f.exponent);
    }
  }
  return out;
}

IntPoly expand(const FactoredPoly& f) {
  IntPoly out{1};
  for (const auto& factor : f.factors()) out *= pow(factor.base, factor.exponent);
  return out;
}

}  // namespace treespec
