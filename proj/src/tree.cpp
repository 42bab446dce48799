#include "treespec/tree.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "treespec/errors.hpp"

namespace treespec {

RootedTree::RootedTree(std::vector<Vertex> parent) : parent_(std::move(parent)) {
  const std::size_t n = parent_.size();
  if (n == 0) throw MalformedInput("a tree needs at least one vertex");

  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = parent_[v];
    if (p == kNoParent) {
      if (root_ != kNoParent)
        throw MultipleRoots("vertices " + std::to_string(root_ + 1) + " and " +
                            std::to_string(v + 1) + " both have no parent");
      root_ = v;
    } else if (p >= n) {
      throw DisconnectedVertex("vertex " + std::to_string(v + 1) + " has parent " +
                               std::to_string(p + 1) + " outside the vertex range");
    } else if (p == v) {
      throw CycleDetected("vertex " + std::to_string(v + 1) + " is its own parent");
    }
  }
  if (root_ == kNoParent) throw CycleDetected("no root: every vertex has a parent");

  // Counting sort of children keeps them in input order.
  child_offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v)
    if (v != root_) ++child_offset_[parent_[v] + 1];
  std::partial_sum(child_offset_.begin(), child_offset_.end(), child_offset_.begin());
  child_list_.resize(n - 1);
  std::vector<std::size_t> fill(child_offset_.begin(), child_offset_.end() - 1);
  for (Vertex v = 0; v < n; ++v)
    if (v != root_) child_list_[fill[parent_[v]]++] = v;

  level_.assign(n, 0);
  bfs_.reserve(n);
  bfs_.push_back(root_);
  level_[root_] = 1;
  for (std::size_t head = 0; head < bfs_.size(); ++head) {
    const Vertex v = bfs_[head];
    for (Vertex w : children(v)) {
      level_[w] = level_[v] + 1;
      bfs_.push_back(w);
    }
  }
  if (bfs_.size() != n) {
    // Anything unreachable from the root hangs off a parent cycle.
    for (Vertex v = 0; v < n; ++v)
      if (level_[v] == 0)
        throw CycleDetected("vertex " + std::to_string(v + 1) +
                            " is not connected to the root (parent links form a cycle)");
  }

  level_sizes_.assign(level_[bfs_.back()], 0);
  for (Vertex v = 0; v < n; ++v) ++level_sizes_[level_[v] - 1];
}

std::span<const Vertex> RootedTree::children(Vertex v) const {
  return {child_list_.data() + child_offset_[v], child_offset_[v + 1] - child_offset_[v]};
}

std::size_t RootedTree::degree(Vertex v) const {
  return children(v).size() + (v == root_ ? 0 : 1);
}

std::size_t RootedTree::level_size(std::size_t j) const {
  if (j == 0 || j > level_sizes_.size()) return 0;
  return level_sizes_[j - 1];
}

std::vector<std::pair<Vertex, Vertex>> RootedTree::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(size() - 1);
  for (Vertex v = 0; v < size(); ++v)
    if (v != root_) out.emplace_back(parent_[v], v);
  return out;
}

std::size_t BalancedProfile::vertex_count() const {
  return std::accumulate(level_sizes.begin(), level_sizes.end(), std::size_t{0});
}

BalancedProfile BalancedProfile::from_child_counts(std::vector<std::size_t> counts) {
  BalancedProfile p;
  p.child_counts = std::move(counts);
  p.child_counts.push_back(0);
  p.level_sizes.push_back(1);
  for (std::size_t j = 0; j + 1 < p.child_counts.size(); ++j) {
    if (p.child_counts[j] == 0)
      throw DomainError("balanced profile has a leaf level before the last level");
    p.level_sizes.push_back(p.level_sizes.back() * p.child_counts[j]);
  }
  return p;
}

namespace {

long parse_long(const std::string& tok) {
  long value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw MalformedInput("expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace

RootedTree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok)) throw MalformedInput("empty tree description");
  const long n = parse_long(tok);
  if (n <= 0) throw MalformedInput("vertex count must be positive");

  std::vector<Vertex> parent;
  parent.reserve(static_cast<std::size_t>(n));
  while (in >> tok) {
    const long p = parse_long(tok);
    if (p < 0) throw MalformedInput("negative parent index " + tok);
    parent.push_back(p == 0 ? kNoParent : static_cast<Vertex>(p - 1));
  }
  if (parent.size() != static_cast<std::size_t>(n))
    throw MalformedInput("expected " + std::to_string(n) + " parent entries, got " +
                         std::to_string(parent.size()));
  return RootedTree(std::move(parent));
}

std::string serialize(const RootedTree& t) {
  std::string out = std::to_string(t.size()) + "\n";
  for (Vertex v = 0; v < t.size(); ++v) {
    if (v) out += ' ';
    out += t.parent(v) == kNoParent ? "0" : std::to_string(t.parent(v) + 1);
  }
  out += '\n';
  return out;
}

std::optional<BalancedProfile> detect_balanced(const RootedTree& t) {
  const std::size_t l = t.level_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> counts(l, kUnset);
  for (Vertex v : t.bfs_order()) {
    std::size_t& c = counts[t.level(v) - 1];
    const std::size_t here = t.children(v).size();
    if (c == kUnset) {
      c = here;
    } else if (c != here) {
      return std::nullopt;
    }
  }
  BalancedProfile p;
  p.child_counts = std::move(counts);
  for (std::size_t j = 1; j <= l; ++j) p.level_sizes.push_back(t.level_size(j));
  return p;
}

RootedTree build_balanced(const BalancedProfile& p) {
  std::vector<Vertex> parent{kNoParent};
  std::size_t level_begin = 0;
  for (std::size_t j = 1; j < p.levels(); ++j) {
    const std::size_t level_end = parent.size();
    for (Vertex v = level_begin; v < level_end; ++v)
      for (std::size_t i = 0; i < p.c(j); ++i) parent.push_back(v);
    level_begin = level_end;
  }
  return RootedTree(std::move(parent));
}

RootedTree build_bethe(int d, int k) {
  if (d < 2) throw DomainError("Bethe tree needs d >= 2");
  if (k < 1) throw DomainError("Bethe tree needs k >= 1");
  return build_balanced(BalancedProfile::from_child_counts(
      std::vector<std::size_t>(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(d - 1))));
}

RootedTree build_antifactorial(int k) {
  if (k < 1) throw DomainError("anti-factorial tree needs k >= 1");
  std::vector<std::size_t> counts;
  for (int j = 1; j < k; ++j) counts.push_back(static_cast<std::size_t>(k - j));
  return build_balanced(BalancedProfile::from_child_counts(std::move(counts)));
}

RootedTree build_path(std::size_t n) {
  if (n == 0) throw DomainError("path needs at least one vertex");
  std::vector<Vertex> parent(n);
  parent[0] = kNoParent;
  for (Vertex v = 1; v < n; ++v) parent[v] = v - 1;
  return RootedTree(std::move(parent));
}

RootedTree build_star(std::size_t leaves) {
  std::vector<Vertex> parent(leaves + 1, 0);
  parent[0] = kNoParent;
  return RootedTree(std::move(parent));
}

RootedTree merge_trees(std::span<const RootedTree> inputs, std::span<const unsigned> alphas) {
  if (inputs.empty()) throw EmptyInput();
  if (inputs.size() != alphas.size())
    throw LengthMismatch("merge needs one multiplicity per input tree");
  std::vector<Vertex> parent{kNoParent};
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    if (alphas[j] == 0) throw DomainError("merge multiplicities must be positive");
    const RootedTree& t = inputs[j];
    for (unsigned copy = 0; copy < alphas[j]; ++copy) {
      const Vertex offset = parent.size();
      for (Vertex v = 0; v < t.size(); ++v)
        parent.push_back(v == t.root() ? 0 : offset + t.parent(v));
    }
  }
  return RootedTree(std::move(parent));
}

}  // namespace treespec
