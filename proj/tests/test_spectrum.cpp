#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest_printers.hpp"
#include "support.hpp"
#include "treespec/assigned.hpp"
#include "treespec/errors.hpp"
#include "treespec/oracle.hpp"
#include "treespec/spectrum.hpp"

using namespace treespec;
using treespec::testing::P;

namespace {

Eigen::MatrixXd to_double(const DenseIntMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).convert_to<double>();
  return out;
}

}  // namespace

TEST_CASE("example 1 spectrum") {
  const SpectrumReport r = real_roots_with_multiplicity(P({0, 0, 0, 0, 11, 0, -7, 0, 1}));
  REQUIRE(r.distinct() == 5);
  CHECK(r.source_degree == 8);
  const double big = 2.1489611417496349993;    // sqrt((7+sqrt 5)/2)
  const double small = 1.5433619184268170713;  // sqrt((7-sqrt 5)/2)
  const double expected[] = {-big, -small, 0.0, small, big};
  const std::size_t mult[] = {1, 1, 4, 1, 1};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::fabs(r.entries[i].approx - expected[i]) < 1e-10);
    CHECK(r.entries[i].multiplicity == mult[i]);
  }
  // zero is split off exactly
  CHECK(r.entries[2].lo == 0);
  CHECK(r.entries[2].hi == 0);
  CHECK(std::fabs(r.energy - 7.38464612035290) < 1e-11);
}

TEST_CASE("enclosures are certified by a sign change") {
  const IntPoly p = P({0, 0, 0, 0, 11, 0, -7, 0, 1});
  const IntPoly radical = divexact(p, gcd(p, derivative(p)));
  for (const RootEntry& e : real_roots_with_multiplicity(p).entries) {
    if (e.lo == e.hi) {
      CHECK(sign_at(radical, e.lo) == 0);
      continue;
    }
    CHECK(e.hi - e.lo <= kDefaultTolerance);
    CHECK(sign_at(radical, e.lo) * sign_at(radical, e.hi) < 0);
  }
}

TEST_CASE("coarser tolerance") {
  const BigRational tol(1, 100);
  const SpectrumReport r = real_roots_with_multiplicity(P({-2, 0, 1}), tol);
  REQUIRE(r.distinct() == 2);
  for (const auto& e : r.entries) CHECK(e.hi - e.lo <= tol);
  CHECK(std::fabs(r.entries[1].approx - std::sqrt(2.0)) < 0.01);
}

TEST_CASE("sturm pieces") {
  const IntPoly p = P({-2, 0, 1});
  const auto chain = sturm_chain(p);
  CHECK(chain.front() == p);
  CHECK(sign_variations(chain, BigRational(-2)) - sign_variations(chain, BigRational(2)) == 2);
  CHECK(sign_variations(chain, BigRational(0)) - sign_variations(chain, BigRational(2)) == 1);
  CHECK(sign_at(p, BigRational(3, 2)) == 1);
  CHECK(sign_at(p, BigRational(1)) == -1);
  CHECK(sign_at(P({-1, 2}), BigRational(1, 2)) == 0);
  CHECK(root_bound(p) > 1);

  // (x-1)^3 (x+2)^2 x
  const auto parts = squarefree_decomposition(pow(P({-1, 1}), 3) * pow(P({2, 1}), 2) * P({0, 1}));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == P({0, 1}));
  CHECK(parts[1] == P({2, 1}));
  CHECK(parts[2] == P({-1, 1}));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(real_roots_with_multiplicity(P({1, 0, 1})), MultiplicityMismatch);
  CHECK_THROWS_AS(real_roots_with_multiplicity(IntPoly{}), ZeroPolynomial);
  CHECK(real_roots_with_multiplicity(P({7})).distinct() == 0);
}

TEST_CASE("spectra of random trees") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const RootedTree t = testing::random_tree(1 + rng() % 25, rng);
    const SpectrumReport adj = real_roots_with_multiplicity(charpoly_adjacency(t));
    const SpectrumReport lap = real_roots_with_multiplicity(charpoly_laplacian(t));

    std::size_t total = 0;
    for (const auto& e : adj.entries) total += e.multiplicity;
    CHECK(total == t.size());

    // bipartite graphs have a spectrum symmetric about 0
    const std::size_t m = adj.distinct();
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(std::fabs(adj.entries[i].approx + adj.entries[m - 1 - i].approx) < 1e-10);
      CHECK(adj.entries[i].multiplicity == adj.entries[m - 1 - i].multiplicity);
    }

    // Laplacian: nonnegative, 0 simple since a tree is connected
    REQUIRE(lap.distinct() >= 1);
    CHECK(lap.entries.front().lo == 0);
    CHECK(lap.entries.front().multiplicity == 1);
    for (const auto& e : lap.entries) CHECK(e.lo >= 0);

    // floating-point witness from a dense symmetric eigensolver
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        to_double(build_matrix(t, MatrixKind::adjacency)), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();
    std::size_t index = 0;
    for (const auto& e : adj.entries)
      for (std::size_t k = 0; k < e.multiplicity; ++k, ++index)
        CHECK(std::fabs(ev(static_cast<Eigen::Index>(index)) - e.approx) < 1e-8);

    CHECK(energy_numeric(t) == doctest::Approx(ev.cwiseAbs().sum()).epsilon(1e-9));
  }
}

TEST_CASE("known energies") {
  CHECK(std::fabs(energy_numeric(build_bethe(3, 3)) - 6.82842712474619) < 1e-11);
  CHECK(energy_numeric(parse_tree("1\n0")) == 0.0);
  CHECK(std::fabs(energy_numeric(build_star(4)) - 4.0) < 1e-11);
}
