#include "treespec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "treespec/assigned.hpp"
#include "treespec/errors.hpp"

namespace treespec {

namespace {

BigRational midpoint(const BigRational& a, const BigRational& b) { return (a + b) / 2; }

struct Interval {
  BigRational lo;
  BigRational hi;
  std::size_t roots;
};

/// A point strictly inside (a, b) at which p does not vanish.
BigRational non_root_split(const IntPoly& p, const BigRational& a, const BigRational& b) {
  BigRational m = midpoint(a, b);
  BigRational step = (b - a) / 4;
  while (sign_at(p, m) == 0) {
    m = midpoint(a, b) + step;
    step /= 2;
  }
  return m;
}

}  // namespace

std::size_t SpectrumReport::multiplicity_near(double value, double slack) const {
  for (const auto& e : entries) {
    if (e.lo.convert_to<double>() - slack <= value && value <= e.hi.convert_to<double>() + slack)
      return e.multiplicity;
  }
  return 0;
}

int sign_at(const IntPoly& p, const BigRational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);  // positive
  BigInt acc;
  BigInt den_pow(1);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return acc.sign();
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{p};
  if (p.degree() < 1) return chain;
  chain.push_back(derivative(p));
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem scales the true remainder by lc(b)^(deg a - deg b + 1).
    const bool flipped = b.leading().sign() < 0 && (a.degree() - b.degree() + 1) % 2 == 1;
    BigInt c = content(r);
    if (!flipped) c = -c;  // next = -rem
    std::vector<BigInt> v = r.coeffs();
    for (auto& x : v) x /= c;
    chain.emplace_back(std::move(v));
    if (chain.back().degree() == 0) break;
  }
  return chain;
}

std::size_t sign_variations(const std::vector<IntPoly>& chain, const BigRational& v) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  // f_i = gcd(f_{i-1}, f_{i-1}'); s_i = f_{i-1} / f_i collects the factors of
  // multiplicity >= i, and s_i / s_{i+1} those of multiplicity exactly i.
  std::vector<IntPoly> f{primitive_part(p)};
  while (f.back().degree() > 0) f.push_back(gcd(f.back(), derivative(f.back())));
  std::vector<IntPoly> s;
  for (std::size_t i = 1; i < f.size(); ++i) s.push_back(divexact(f[i - 1], f[i]));
  std::vector<IntPoly> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    out.push_back(i + 1 < s.size() ? divexact(s[i], s[i + 1]) : s[i]);
  return out;
}

BigInt root_bound(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  BigInt top = 0;
  for (const auto& c : p.coeffs()) top = std::max(top, BigInt(abs(c)));
  const BigInt lc = abs(p.leading());
  return 1 + (top + lc - 1) / lc;
}

SpectrumReport real_roots_with_multiplicity(const IntPoly& p, const BigRational& tol) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (tol.sign() <= 0) throw DomainError("tolerance must be positive");

  SpectrumReport report;
  report.source_degree = p.degree();

  const std::size_t zero_mult = zero_root_multiplicity(p);
  if (zero_mult > 0) report.entries.push_back({BigRational(0), BigRational(0), 0.0, zero_mult});

  const IntPoly rest = strip_zero_roots(p);
  if (rest.degree() > 0) {
    const std::vector<IntPoly> by_mult = squarefree_decomposition(rest);
    const IntPoly sqf = divexact(primitive_part(rest), gcd(rest, derivative(rest)));
    const std::vector<IntPoly> chain = sturm_chain(sqf);

    const BigRational bound(root_bound(sqf));
    std::vector<Interval> work;
    std::vector<Interval> isolated;
    const std::size_t total = sign_variations(chain, -bound) - sign_variations(chain, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
      Interval iv = std::move(work.back());
      work.pop_back();
      if (iv.roots == 1) {
        isolated.push_back(std::move(iv));
        continue;
      }
      const BigRational m = non_root_split(sqf, iv.lo, iv.hi);
      const std::size_t vm = sign_variations(chain, m);
      const std::size_t left = sign_variations(chain, iv.lo) - vm;
      const std::size_t right = iv.roots - left;
      if (left) work.push_back({iv.lo, m, left});
      if (right) work.push_back({m, iv.hi, right});
    }

    for (auto& iv : isolated) {
      BigRational lo = iv.lo, hi = iv.hi;
      const int s_lo = sign_at(sqf, lo);
      while (hi - lo > tol) {
        const BigRational m = midpoint(lo, hi);
        const int s = sign_at(sqf, m);
        if (s == 0) {
          lo = hi = m;
          break;
        }
        (s == s_lo ? lo : hi) = m;
      }

      std::size_t mult = 0;
      for (std::size_t k = 0; k < by_mult.size(); ++k) {
        const IntPoly& q = by_mult[k];
        if (q.degree() < 1) continue;
        const bool here = lo == hi ? sign_at(q, lo) == 0 : sign_at(q, lo) * sign_at(q, hi) < 0;
        if (here) {
          if (mult) throw MultiplicityMismatch("root claimed by two square-free factors");
          mult = k + 1;
        }
      }
      if (!mult) throw MultiplicityMismatch("isolated root not found in any square-free factor");
      const double approx = midpoint(lo, hi).convert_to<double>();
      report.entries.push_back({std::move(lo), std::move(hi), approx, mult});
    }
  }

  std::sort(report.entries.begin(), report.entries.end(),
            [](const RootEntry& a, const RootEntry& b) { return a.lo < b.lo; });

  std::size_t counted = 0;
  for (const auto& e : report.entries) {
    counted += e.multiplicity;
    report.energy += static_cast<double>(e.multiplicity) * std::fabs(e.approx);
  }
  if (counted != static_cast<std::size_t>(p.degree()))
    throw MultiplicityMismatch("found " + std::to_string(counted) + " real roots counting "
                               "multiplicity for a polynomial of degree " +
                               std::to_string(p.degree()));
  return report;
}

double energy_numeric(const IntPoly& p, const BigRational& tol) {
  return real_roots_with_multiplicity(p, tol).energy;
}

double energy_numeric(const RootedTree& t, const BigRational& tol) {
  return energy_numeric(charpoly_adjacency(t), tol);
}

}  // namespace treespec
