#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "treespec/bigint.hpp"

namespace treespec {

/// Dense univariate polynomial over the integers.
///
/// Coefficients are stored in ascending order: `coeffs()[i]` multiplies x^i.
/// The representation is canonical; the highest stored coefficient is never
/// zero and the zero polynomial has no coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly x();
  /// c * x^k
  static IntPoly monomial(const BigInt& c, std::size_t k);
  /// x - root
  static IntPoly linear(const BigInt& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i; zero outside the stored range.
  BigInt coeff(std::size_t i) const;
  const BigInt& leading() const;
  bool is_monic() const;
  bool is_constant() const { return coeffs_.size() <= 1; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  friend IntPoly operator-(IntPoly a);

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Value at an integer point.
  BigInt operator()(const BigInt& v) const;
  /// Value at a rational point, exact.
  BigRational operator()(const BigRational& v) const;
  /// Horner evaluation in long double.
  long double eval(long double v) const;

  /// Ascending space separated coefficients, "0" for the zero polynomial.
  std::string to_text() const;
  /// Human readable form such as `x^4-7*x^2+11`.
  std::string pretty() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Degree above which multiplication switches to Karatsuba.
inline constexpr std::size_t kKaratsubaThreshold = 32;

IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b);
IntPoly mul_karatsuba(const IntPoly& a, const IntPoly& b);

IntPoly pow(const IntPoly& base, unsigned exponent);

/// Exact quotient num / den in Z[x].
/// Throws DivisionByZero when den is zero and NotDivisible when no such
/// quotient exists.
IntPoly divexact(const IntPoly& num, const IntPoly& den);

/// Quotient if den divides num exactly, otherwise false.
bool divides(const IntPoly& den, const IntPoly& num, IntPoly* quotient = nullptr);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

BigInt content(const IntPoly& p);
/// p / content(p) with a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Primitive gcd with a positive leading coefficient; throws BothZero.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

IntPoly derivative(const IntPoly& p);

/// Number of trailing zero coefficients, i.e. the multiplicity of the root 0.
std::size_t zero_root_multiplicity(const IntPoly& p);
/// p / x^k where k = zero_root_multiplicity(p).
IntPoly strip_zero_roots(const IntPoly& p);

/// Parses the ascending coefficient format produced by IntPoly::to_text.
IntPoly parse_poly(std::string_view text);

}  // namespace treespec
