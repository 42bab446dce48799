#include "treespec/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <utility>

#include "treespec/errors.hpp"

namespace treespec {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const BigInt& root) {
  return IntPoly(std::vector<BigInt>{-root, BigInt(1)});
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial();
  return coeffs_.back();
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const BigInt& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& v : a.coeffs_) v = -v;
  return a;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.coeffs().size() > kKaratsubaThreshold && b.coeffs().size() > kKaratsubaThreshold)
    return mul_karatsuba(a, b);
  return mul_schoolbook(a, b);
}

BigInt IntPoly::operator()(const BigInt& v) const {
  BigInt acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

BigRational IntPoly::operator()(const BigRational& v) const {
  // Homogenised Horner keeps the running value an integer.
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  BigInt acc;
  BigInt den_pow(1);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  // acc = den^deg * p(v)
  if (coeffs_.empty()) return BigRational(0);
  return BigRational(acc, den_pow / den);
}

long double IntPoly::eval(long double v) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * v + it->convert_to<long double>();
  return acc;
}

std::string IntPoly::to_text() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].str();
  }
  return out;
}

std::string IntPoly::pretty() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += 'x';
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<BigInt> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return IntPoly(std::move(out));
}

namespace {

using Coeffs = std::vector<BigInt>;

// Both operands have length n; out receives 2n-1 coefficients.
void karatsuba_rec(const BigInt* a, const BigInt* b, std::size_t n, BigInt* out) {
  if (n <= kKaratsubaThreshold) {
    for (std::size_t i = 0; i < 2 * n - 1; ++i) out[i] = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return;
  }
  const std::size_t lo = n / 2;
  const std::size_t hi = n - lo;

  Coeffs a_sum(hi), b_sum(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    a_sum[i] = a[lo + i];
    b_sum[i] = b[lo + i];
  }
  for (std::size_t i = 0; i < lo; ++i) {
    a_sum[i] += a[i];
    b_sum[i] += b[i];
  }

  Coeffs low(2 * lo - 1), high(2 * hi - 1), mid(2 * hi - 1);
  karatsuba_rec(a, b, lo, low.data());
  karatsuba_rec(a + lo, b + lo, hi, high.data());
  karatsuba_rec(a_sum.data(), b_sum.data(), hi, mid.data());

  for (std::size_t i = 0; i < low.size(); ++i) mid[i] -= low[i];
  for (std::size_t i = 0; i < high.size(); ++i) mid[i] -= high[i];

  for (std::size_t i = 0; i < 2 * n - 1; ++i) out[i] = 0;
  for (std::size_t i = 0; i < low.size(); ++i) out[i] += low[i];
  for (std::size_t i = 0; i < mid.size(); ++i) out[lo + i] += mid[i];
  for (std::size_t i = 0; i < high.size(); ++i) out[2 * lo + i] += high[i];
}

}  // namespace

IntPoly mul_karatsuba(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  Coeffs pa(a.coeffs()), pb(b.coeffs());
  pa.resize(n);
  pb.resize(n);
  Coeffs out(2 * n - 1);
  karatsuba_rec(pa.data(), pb.data(), n, out.data());
  return IntPoly(std::move(out));
}

IntPoly pow(const IntPoly& base, unsigned exponent) {
  IntPoly result = IntPoly::constant(BigInt(1));
  IntPoly sq = base;
  while (exponent) {
    if (exponent & 1u) result *= sq;
    exponent >>= 1;
    if (exponent) sq = sq * sq;
  }
  return result;
}

bool divides(const IntPoly& den, const IntPoly& num, IntPoly* quotient) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    if (quotient) *quotient = IntPoly();
    return true;
  }
  if (num.degree() < den.degree()) return false;

  std::vector<BigInt> rem = num.coeffs();
  const auto& d = den.coeffs();
  const BigInt& lc = d.back();
  const std::size_t dd = d.size() - 1;
  std::vector<BigInt> q(rem.size() - dd);
  BigInt r;
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = rem[k + dd];
    if (top.is_zero()) continue;
    boost::multiprecision::divide_qr(top, lc, q[k], r);
    if (!r.is_zero()) return false;
    for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= q[k] * d[i];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (!rem[i].is_zero()) return false;
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

IntPoly divexact(const IntPoly& num, const IntPoly& den) {
  IntPoly q;
  if (!divides(den, num, &q)) throw NotDivisible();
  return q;
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> rem = a.coeffs();
  const auto& d = b.coeffs();
  const BigInt& lc = d.back();
  const std::size_t db = d.size() - 1;
  // Each step scales by lc, so after deg a - deg b + 1 steps the factor is
  // lc^(delta+1) regardless of cancellations.
  const std::size_t steps = rem.size() - db;
  std::size_t top = rem.size() - 1;
  for (std::size_t s = 0; s < steps; ++s, --top) {
    const BigInt t = rem[top];
    for (auto& v : rem) v *= lc;
    for (std::size_t i = 0; i <= db; ++i) rem[top - db + i] -= t * d[i];
  }
  rem.resize(db);
  return IntPoly(std::move(rem));
}

BigInt content(const IntPoly& p) {
  BigInt g;
  for (const auto& c : p.coeffs()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt c = content(p);
  if (p.leading().sign() < 0) c = -c;
  std::vector<BigInt> v = p.coeffs();
  for (auto& x : v) x /= c;
  return IntPoly(std::move(v));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero();
  IntPoly u = primitive_part(a);
  IntPoly v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  return primitive_part(u);
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<BigInt> v(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) v[i - 1] = p.coeffs()[i] * i;
  return IntPoly(std::move(v));
}

std::size_t zero_root_multiplicity(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::size_t k = 0;
  while (p.coeffs()[k].is_zero()) ++k;
  return k;
}

IntPoly strip_zero_roots(const IntPoly& p) {
  const std::size_t k = zero_root_multiplicity(p);
  return IntPoly(std::vector<BigInt>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k),
                                     p.coeffs().end()));
}

IntPoly parse_poly(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<BigInt> v;
  std::string tok;
  while (in >> tok) {
    std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (start == tok.size() ||
        !std::all_of(tok.begin() + static_cast<std::ptrdiff_t>(start), tok.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw MalformedInput("bad polynomial coefficient '" + tok + "'");
    if (tok[0] == '+') tok.erase(0, 1);
    v.emplace_back(tok);
  }
  if (v.empty()) throw MalformedInput("empty polynomial text");
  return IntPoly(std::move(v));
}

}  // namespace treespec
