#include <doctest.h>

#include <cmath>
#include <numbers>

#include "doctest_printers.hpp"
#include "support.hpp"
#include "treespec/assigned.hpp"
#include "treespec/balanced.hpp"
#include "treespec/errors.hpp"
#include "treespec/spectrum.hpp"

using namespace treespec;
using treespec::testing::P;

namespace {

/// Every profile with `levels` levels and child counts in [1, max_children].
std::vector<BalancedProfile> profiles(std::size_t levels, std::size_t max_children) {
  std::vector<BalancedProfile> out;
  std::vector<std::size_t> counts(levels - 1, 1);
  while (true) {
    out.push_back(BalancedProfile::from_child_counts(counts));
    std::size_t i = 0;
    while (i < counts.size() && counts[i] == max_children) counts[i++] = 1;
    if (i == counts.size()) break;
    ++counts[i];
  }
  return out;
}

}  // namespace

TEST_CASE("profile enumeration") {
  CHECK(profiles(1, 4).size() == 1);
  CHECK(profiles(3, 3).size() == 9);
  const BalancedProfile p = BalancedProfile::from_child_counts({2, 3});
  CHECK(p.levels() == 3);
  CHECK(p.c(3) == 0);
  CHECK(p.n(3) == 6);
  CHECK(p.n(0) == 0);
  CHECK(p.vertex_count() == 9);
}

TEST_CASE("W sequence on the Bethe profile is Dickson") {
  for (int d = 2; d <= 5; ++d)
    for (int k = 1; k <= 8; ++k) {
      const auto profile = detect_balanced(build_bethe(d, k));
      REQUIRE(profile.has_value());
      const PolySequence w = w_sequence(*profile);
      const PolySequence e = dickson_sequence(d - 1, static_cast<std::size_t>(k));
      CHECK(w.items == e.items);
    }
}

TEST_CASE("W sequence on the anti-factorial profile is Hermite") {
  for (int k = 1; k <= 8; ++k) {
    const BalancedProfile profile = [&] {
      std::vector<std::size_t> counts;
      for (int j = 1; j < k; ++j) counts.push_back(static_cast<std::size_t>(k - j));
      return BalancedProfile::from_child_counts(counts);
    }();
    CHECK(w_sequence(profile).items == hermite_sequence(static_cast<std::size_t>(k)).items);
  }
  const PolySequence he = hermite_sequence(4);
  CHECK(he[2] == P({-1, 0, 1}));
  CHECK(he[3] == P({0, -3, 0, 1}));
  CHECK(he[4] == P({3, 0, -6, 0, 1}));
}

TEST_CASE("factored forms agree with the engine") {
  for (std::size_t l = 1; l <= 5; ++l)
    for (const BalancedProfile& p : profiles(l, 3)) {
      const RootedTree t = build_balanced(p);
      const FactoredPoly adj = factored_charpoly_balanced(p, GraphMatrix::adjacency);
      CHECK(expand(adj) == charpoly_adjacency(t));
      CHECK(adj.degree() == static_cast<int>(p.vertex_count()));
      if (l >= 2) {
        CHECK(expand(factored_charpoly_balanced(p, GraphMatrix::laplacian)) ==
              charpoly_laplacian(t));
      } else {
        CHECK_THROWS_AS(factored_charpoly_balanced(p, GraphMatrix::laplacian), TrivialTree);
      }
    }
}

TEST_CASE("Y sequence") {
  const auto p = detect_balanced(build_bethe(3, 3));
  REQUIRE(p.has_value());
  const PolySequence y = y_sequence(*p);
  CHECK(y[0] == P({1}));
  CHECK(y[1] == P({-1, 1}));
  // (x-3)(x-1) - 2
  CHECK(y[2] == P({1, -4, 1}));
  CHECK_THROWS_AS(y_sequence(BalancedProfile::from_child_counts({})), TrivialTree);
}

TEST_CASE("path profile") {
  // every c_j = 1, so Phi = {l} and W_l is the whole charpoly
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto p = detect_balanced(build_path(n));
    REQUIRE(p.has_value());
    CHECK(phi_set(*p).indices == std::vector<std::size_t>{n});
    const FactoredPoly f = factored_charpoly_balanced(*p, GraphMatrix::adjacency);
    CHECK(f.factors().size() == 1);
    CHECK(expand(f) == dickson_sequence(1, n)[n]);
  }
}

TEST_CASE("phi set") {
  CHECK(phi_set(BalancedProfile::from_child_counts({2, 2})).indices ==
        std::vector<std::size_t>{1, 2, 3});
  CHECK(phi_set(BalancedProfile::from_child_counts({1, 3, 1})).indices ==
        std::vector<std::size_t>{2, 4});
  CHECK(phi_set(BalancedProfile::from_child_counts({3, 1})).indices ==
        std::vector<std::size_t>{2, 3});
  CHECK(phi_set(BalancedProfile::from_child_counts({2, 2})).contains(2));
  CHECK_FALSE(phi_set(BalancedProfile::from_child_counts({1, 3, 1})).contains(1));
}

TEST_CASE("phi set predicts the number of distinct eigenvalues") {
  for (std::size_t l = 1; l <= 4; ++l)
    for (const BalancedProfile& p : profiles(l, 3)) {
      IntPoly product{1};
      for (const IntPoly& w : distinct_eigenvalue_polys(p)) product *= w;
      const IntPoly full = charpoly_adjacency(build_balanced(p));
      // same root set: each divides a power of the other's square-free part
      const IntPoly radical = divexact(full, gcd(full, derivative(full)));
      const IntPoly product_radical = divexact(product, gcd(product, derivative(product)));
      CHECK(radical == product_radical);
      CHECK(real_roots_with_multiplicity(full).distinct() ==
            real_roots_with_multiplicity(product_radical).distinct());
    }
}

TEST_CASE("Bethe closed forms") {
  CHECK(expand(bethe_charpoly(3, 3)) == charpoly_adjacency(build_bethe(3, 3)));
  CHECK(bethe_charpoly(3, 3).pretty() == "x^2*(x^2-2)*(x^3-4*x)");
  for (int d = 2; d <= 4; ++d)
    for (int k = 1; k <= 5; ++k) {
      const IntPoly engine = charpoly_adjacency(build_bethe(d, k));
      CHECK(expand(bethe_charpoly(d, k)) == engine);

      // residuals of the expanded charpoly are swamped by rounding, so
      // compare against certified enclosures of its roots instead
      const auto roots = bethe_distinct_eigenvalues(d, k);
      const SpectrumReport spectrum = real_roots_with_multiplicity(engine);
      for (const CosineRoot& r : roots)
        CHECK(spectrum.multiplicity_near(static_cast<double>(r.value()), 1e-9) > 0);
      CHECK(roots.size() == spectrum.distinct());
      for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].value() > roots[i].value());
    }
  CHECK_THROWS_AS(bethe_charpoly(1, 3), DomainError);
}

TEST_CASE("Dickson roots") {
  for (long a = 1; a <= 4; ++a)
    for (std::size_t j = 1; j <= 8; ++j) {
      const IntPoly e = dickson_sequence(a, j)[j];
      for (std::size_t h = 1; h <= j; ++h) {
        const long double root = 2.0L * std::sqrt(static_cast<long double>(a)) *
                                 std::cos(static_cast<long double>(h) *
                                          std::numbers::pi_v<long double> / (j + 1));
        CHECK(std::fabs(static_cast<double>(e.eval(root))) < 1e-9);
      }
    }
}

TEST_CASE("psi and Bethe energy") {
  for (long a = 1; a <= 4; ++a)
    for (int j = 1; j <= 8; ++j) {
      const IntPoly e = dickson_sequence(a, static_cast<std::size_t>(j))[static_cast<std::size_t>(j)];
      CHECK(static_cast<double>(psi_closed_form(j, a).value()) ==
            doctest::Approx(energy_numeric(e)).epsilon(1e-12));
    }
  for (int d = 2; d <= 4; ++d)
    for (int k = 1; k <= 5; ++k) {
      const double closed = static_cast<double>(bethe_energy(d, k).value());
      CHECK(std::fabs(closed - energy_numeric(build_bethe(d, k))) < 1e-9);
    }
  CHECK(std::fabs(static_cast<double>(bethe_energy(3, 3).value()) - (2 * std::sqrt(2.0) + 4)) <
        1e-12);
  CHECK(bethe_energy(3, 1).value() == 0.0L);
}

TEST_CASE("anti-factorial closed forms") {
  CHECK(expand(antifactorial_charpoly(3)) == P({0, 1}) * P({-1, 0, 1}) * P({-3, 0, 1}));
  for (int k = 1; k <= 6; ++k) {
    const RootedTree t = build_antifactorial(k);
    const FactoredPoly f = antifactorial_charpoly(k);
    CHECK(expand(f) == charpoly_adjacency(t));
    CHECK(f.degree() == static_cast<int>(t.size()));

    IntPoly product{1};
    for (const IntPoly& he : antifactorial_distinct_eigenvalues(k)) product *= he;
    CHECK(real_roots_with_multiplicity(product).distinct() ==
          real_roots_with_multiplicity(charpoly_adjacency(t)).distinct());
  }
}

TEST_CASE("exponents add up to the vertex count") {
  for (std::size_t l = 1; l <= 5; ++l)
    for (const BalancedProfile& p : profiles(l, 3)) {
      const FactoredPoly factored = factored_charpoly_balanced(p, GraphMatrix::adjacency);
      std::size_t degree = 0;
      for (const Factor& f : factored.factors())
        degree += static_cast<std::size_t>(f.base.degree()) * f.exponent;
      CHECK(degree == p.vertex_count());
    }
}
