#include "treespec/assigned.hpp"

#include <string>

#include "treespec/errors.hpp"

namespace treespec {

namespace {

void check_length(const RootedTree& t, std::span<const long> beta) {
  if (beta.size() != t.size())
    throw LengthMismatch("beta sequence has " + std::to_string(beta.size()) +
                         " entries for a tree with " + std::to_string(t.size()) + " vertices");
}

AssignedPair assign_vertex(long beta, std::span<const Vertex> kids,
                           const std::vector<AssignedPair>& pairs) {
  const IntPoly shifted = IntPoly::linear(BigInt(beta));
  if (kids.empty()) return {shifted, IntPoly{1}};

  // prefix[i] = F1(w_0)...F1(w_{i-1}); the suffix product is rolled on the fly.
  const std::size_t m = kids.size();
  std::vector<IntPoly> prefix(m + 1);
  prefix[0] = IntPoly{1};
  for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * pairs[kids[i]].num;

  IntPoly cross;  // sum_w F2(w) * prod_{t != w} F1(t)
  IntPoly suffix{1};
  for (std::size_t i = m; i-- > 0;) {
    cross += pairs[kids[i]].den * prefix[i] * suffix;
    suffix *= pairs[kids[i]].num;
  }
  AssignedPair out;
  out.den = std::move(prefix[m]);
  out.num = shifted * out.den - cross;
  return out;
}

}  // namespace

std::vector<AssignedPair> assign_all(const RootedTree& t, std::span<const long> beta) {
  check_length(t, beta);
  std::vector<AssignedPair> pairs(t.size());
  const auto& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    pairs[*it] = assign_vertex(beta[*it], t.children(*it), pairs);
  return pairs;
}

IntPoly charpoly_general(const RootedTree& t, std::span<const long> beta) {
  check_length(t, beta);
  std::vector<AssignedPair> pairs(t.size());
  const auto& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    pairs[v] = assign_vertex(beta[v], t.children(v), pairs);
    // Children are folded into v; drop their polynomials.
    for (Vertex w : t.children(v)) pairs[w] = {};
  }
  return std::move(pairs[t.root()].num);
}

BetaSequence zero_beta(const RootedTree& t) { return BetaSequence(t.size(), 0); }

BetaSequence degree_beta(const RootedTree& t) {
  BetaSequence beta(t.size());
  for (Vertex v = 0; v < t.size(); ++v) beta[v] = static_cast<long>(t.degree(v));
  return beta;
}

IntPoly charpoly_adjacency(const RootedTree& t) { return charpoly_general(t, zero_beta(t)); }

IntPoly charpoly_laplacian(const RootedTree& t) { return charpoly_general(t, degree_beta(t)); }

}  // namespace treespec
