#pragma once

// Shared fixtures and generators for the test binaries.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "treespec/poly.hpp"
#include "treespec/tree.hpp"

namespace treespec::testing {

inline RootedTree example1_tree() { return parse_tree("8\n6 6 7 7 7 8 8 0\n"); }

inline RootedTree example2_tree() {
  return parse_tree("13\n5 5 10 10 10 11 11 11 11 13 13 13 0\n");
}

/// Polynomial from ascending integer coefficients.
inline IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }

/// All rooted unlabeled trees on n vertices, one per isomorphism class, via
/// Beyer-Hedetniemi level sequences (root at level 1).
inline std::vector<RootedTree> all_rooted_trees(std::size_t n) {
  std::vector<RootedTree> out;
  if (n == 0) return out;
  std::vector<std::size_t> level(n);
  std::iota(level.begin(), level.end(), std::size_t{1});
  while (true) {
    std::vector<Vertex> parent(n, kNoParent);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t j = i;
      while (level[--j] != level[i] - 1) {
      }
      parent[i] = j;
    }
    out.emplace_back(std::move(parent));

    std::size_t p = n;
    for (std::size_t i = n; i-- > 1;)
      if (level[i] > 2) {
        p = i;
        break;
      }
    if (p == n) break;
    std::size_t q = p;
    while (level[--q] != level[p] - 1) {
    }
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

/// Random recursive tree with a random vertex labelling, so the root is not
/// necessarily vertex 0 and parents do not precede children.
template <class Rng>
RootedTree random_tree(std::size_t n, Rng& rng) {
  std::vector<Vertex> shape(n, kNoParent);
  for (std::size_t i = 1; i < n; ++i)
    shape[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), std::size_t{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Vertex> parent(n, kNoParent);
  for (std::size_t i = 0; i < n; ++i)
    parent[label[i]] = shape[i] == kNoParent ? kNoParent : label[shape[i]];
  return RootedTree(std::move(parent));
}

template <class Rng>
std::vector<long> random_beta(std::size_t n, long lo, long hi, Rng& rng) {
  std::uniform_int_distribution<long> dist(lo, hi);
  std::vector<long> beta(n);
  for (auto& b : beta) b = dist(rng);
  return beta;
}

template <class Rng>
IntPoly random_poly(int max_degree, long bound, Rng& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPoly(std::move(c));
}

}  // namespace treespec::testing
