#include "treespec/balanced.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <set>

#include "treespec/errors.hpp"

namespace treespec {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

/// item_j = (x - shift_j) item_{j-1} - weight_j item_{j-2}
template <class Shift, class Weight>
std::vector<IntPoly> three_term(std::size_t last, IntPoly first, Shift shift, Weight weight) {
  std::vector<IntPoly> items{IntPoly{1}};
  if (last >= 1) items.push_back(std::move(first));
  for (std::size_t j = 2; j <= last; ++j) {
    IntPoly next = IntPoly::linear(BigInt(shift(j))) * items[j - 1];
    next -= items[j - 2] * BigInt(weight(j));
    items.push_back(std::move(next));
  }
  return items;
}

unsigned exponent_cast(std::size_t e) {
  if (e > std::numeric_limits<unsigned>::max()) throw DomainError("exponent too large");
  return static_cast<unsigned>(e);
}

}  // namespace

PolySequence w_sequence(const BalancedProfile& p) {
  const std::size_t l = p.levels();
  return {SequenceKind::W, 0,
          three_term(
              l, IntPoly::x(), [](std::size_t) { return 0L; },
              [&](std::size_t j) { return static_cast<long>(p.c(l + 1 - j)); })};
}

PolySequence y_sequence(const BalancedProfile& p) {
  const std::size_t l = p.levels();
  if (l < 2) throw TrivialTree();
  // The last step uses the root's degree c_1 instead of c_1 + 1.
  return {SequenceKind::Y, 0,
          three_term(
              l, IntPoly{-1, 1},
              [&](std::size_t j) {
                const long c = static_cast<long>(p.c(l + 1 - j));
                return j == l ? c : c + 1;
              },
              [&](std::size_t j) { return static_cast<long>(p.c(l + 1 - j)); })};
}

PolySequence dickson_sequence(long a, std::size_t last) {
  return {SequenceKind::Dickson, a,
          three_term(
              last, IntPoly::x(), [](std::size_t) { return 0L; }, [=](std::size_t) { return a; })};
}

PolySequence hermite_sequence(std::size_t last) {
  return {SequenceKind::Hermite, 0,
          three_term(
              last, IntPoly::x(), [](std::size_t) { return 0L; },
              [](std::size_t j) { return static_cast<long>(j - 1); })};
}

FactoredPoly factored_charpoly_balanced(const BalancedProfile& p, GraphMatrix which) {
  const PolySequence seq = which == GraphMatrix::adjacency ? w_sequence(p) : y_sequence(p);
  const std::size_t l = p.levels();
  FactoredPoly out;
  for (std::size_t j = 1; j <= l; ++j) {
    // n(T, l+1-j) >= n(T, l-j) always holds for balanced trees.
    out.append(seq[j], exponent_cast(p.n(l + 1 - j) - p.n(l - j)));
  }
  return out;
}

bool PhiSet::contains(std::size_t j) const {
  return std::binary_search(indices.begin(), indices.end(), j);
}

PhiSet phi_set(const BalancedProfile& p) {
  const std::size_t l = p.levels();
  PhiSet phi;
  for (std::size_t j = 1; j < l; ++j)
    if (p.c(l - j) > 1) phi.indices.push_back(j);
  phi.indices.push_back(l);
  return phi;
}

std::vector<IntPoly> distinct_eigenvalue_polys(const BalancedProfile& p) {
  const PolySequence w = w_sequence(p);
  std::vector<IntPoly> out;
  for (std::size_t j : phi_set(p).indices) out.push_back(w[j]);
  return out;
}

// ---------------------------------------------------------------------------

long double CosineRoot::value() const {
  if (2 * angle_num == angle_den) return 0.0L;
  return 2.0L * std::sqrt(static_cast<long double>(scale_squared)) *
         std::cos(static_cast<long double>(angle_num) * kPi / static_cast<long double>(angle_den));
}

std::string CosineRoot::str() const {
  std::string s = "2";
  if (scale_squared != 1) s += "*sqrt(" + std::to_string(scale_squared) + ")";
  s += "*cos(";
  if (angle_num != 1) s += std::to_string(angle_num) + "*";
  s += "pi/" + std::to_string(angle_den) + ")";
  return s;
}

long double TrigTerm::value() const {
  long double v = coefficient.convert_to<long double>();
  if (radicand != 1) v *= std::sqrt(static_cast<long double>(radicand));
  const long double angle =
      static_cast<long double>(angle_num) * kPi / static_cast<long double>(angle_den);
  switch (kind) {
    case Trig::one:
      return v;
    case Trig::cos:
      return v * std::cos(angle);
    case Trig::cot:
      return v * std::cos(angle) / std::sin(angle);
    case Trig::csc:
      return v / std::sin(angle);
  }
  return v;
}

long double ClosedForm::value() const {
  long double sum = 0.0L;
  for (const auto& t : terms) sum += t.value();
  return sum;
}

std::string ClosedForm::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    const bool negative = t.coefficient.sign() < 0;
    const BigInt mag = negative ? BigInt(-t.coefficient) : t.coefficient;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body;
    if (mag != 1 || (t.radicand == 1 && t.kind == Trig::one)) body = mag.str();
    auto join = [&](const std::string& part) { body += (body.empty() ? "" : "*") + part; };
    if (t.radicand != 1) join("sqrt(" + std::to_string(t.radicand) + ")");
    if (t.kind != Trig::one) {
      const char* name = t.kind == Trig::cos ? "cos" : t.kind == Trig::cot ? "cot" : "csc";
      std::string angle = (t.angle_num != 1 ? std::to_string(t.angle_num) + "*" : "") + "pi/" +
                          std::to_string(t.angle_den);
      join(std::string(name) + "(" + angle + ")");
    }
    out += body;
  }
  return out;
}

FactoredPoly bethe_charpoly(int d, int k) {
  if (d < 2 || k < 1) throw DomainError("Bethe tree needs d >= 2 and k >= 1");
  const PolySequence e = dickson_sequence(d - 1, static_cast<std::size_t>(k));
  FactoredPoly out;
  // Exponent of E_j for j < k is (d-2)(d-1)^(k-1-j).
  for (int j = 1; j < k; ++j) {
    std::size_t exponent = static_cast<std::size_t>(d - 2);
    for (int i = 0; i < k - 1 - j; ++i) exponent *= static_cast<std::size_t>(d - 1);
    out.append(e[static_cast<std::size_t>(j)], exponent_cast(exponent));
  }
  out.append(e[static_cast<std::size_t>(k)], 1);
  return out;
}

std::vector<CosineRoot> bethe_distinct_eigenvalues(int d, int k) {
  if (d < 2 || k < 1) throw DomainError("Bethe tree needs d >= 2 and k >= 1");
  std::set<CosineRoot> roots;
  // A path only carries the roots of E_k; otherwise every E_j with j <= k
  // contributes.
  const int first = d == 2 ? k : 1;
  for (int j = first; j <= k; ++j) {
    for (int h = 1; h <= j; ++h) {
      const long g = std::gcd(h, j + 1);
      roots.insert({d - 1, h / g, (j + 1) / g});
    }
  }
  std::vector<CosineRoot> out(roots.begin(), roots.end());
  // Larger angle fraction means smaller cosine.
  std::sort(out.begin(), out.end(), [](const CosineRoot& a, const CosineRoot& b) {
    return a.angle_num * b.angle_den < b.angle_num * a.angle_den;
  });
  return out;
}

ClosedForm psi_closed_form(int j, long a) {
  if (j < 1 || a < 1) throw DomainError("psi needs j >= 1 and a >= 1");
  ClosedForm out;
  const Trig kind = j % 2 ? Trig::cot : Trig::csc;
  out.terms.push_back({BigInt(2), a, kind, 1, 2L * j + 2});
  out.terms.push_back({BigInt(-2), a, Trig::one, 0, 1});
  return out;
}

ClosedForm bethe_energy(int d, int k) {
  if (d < 2 || k < 1) throw DomainError("Bethe tree needs d >= 2 and k >= 1");
  if (d == 2) return psi_closed_form(k, 1);

  // sum_{j=1}^{k-1} f_j (d-1)^(k-1/2-j), with f_j a csc/cot difference.
  ClosedForm out;
  const long a = d - 1;
  for (int j = 1; j < k; ++j) {
    BigInt scale = 2;
    for (int i = 0; i < k - 1 - j; ++i) scale *= a;
    const bool odd = j % 2 == 1;
    out.terms.push_back({scale, a, odd ? Trig::csc : Trig::cot, 1, 2L * j + 4});
    out.terms.push_back({BigInt(-scale), a, odd ? Trig::cot : Trig::csc, 1, 2L * j + 2});
  }
  return out;
}

FactoredPoly antifactorial_charpoly(int k) {
  if (k < 1) throw DomainError("anti-factorial tree needs k >= 1");
  const PolySequence he = hermite_sequence(static_cast<std::size_t>(k));
  FactoredPoly out;
  // (j-1)(k-1)!/j! = (j-1)(j+1)(j+2)...(k-1)
  for (int j = 2; j < k; ++j) {
    std::size_t exponent = static_cast<std::size_t>(j - 1);
    for (int i = j + 1; i <= k - 1; ++i) exponent *= static_cast<std::size_t>(i);
    out.append(he[static_cast<std::size_t>(j)], exponent_cast(exponent));
  }
  out.append(he[static_cast<std::size_t>(k)], 1);
  return out;
}

std::vector<IntPoly> antifactorial_distinct_eigenvalues(int k) {
  if (k < 1) throw DomainError("anti-factorial tree needs k >= 1");
  if (k == 1) return {IntPoly::x()};
  const PolySequence he = hermite_sequence(static_cast<std::size_t>(k));
  return {he.items.begin() + 2, he.items.end()};
}

}  // namespace treespec
