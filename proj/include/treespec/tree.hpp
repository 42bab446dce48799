#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treespec {

using Vertex = std::size_t;
inline constexpr Vertex kNoParent = static_cast<Vertex>(-1);

/// Immutable rooted tree stored as a parent array.
///
/// Vertices are 0-based and kept in the order they were supplied. Levels are
/// 1-based: the root sits on level 1. Derived structure (children, levels,
/// breadth-first order) is computed once at construction.
class RootedTree {
 public:
  /// Validates the parent array; exactly one entry must be kNoParent.
  /// Throws MultipleRoots, CycleDetected, DisconnectedVertex or
  /// MalformedInput.
  explicit RootedTree(std::vector<Vertex> parent);

  std::size_t size() const { return parent_.size(); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  const std::vector<Vertex>& parents() const { return parent_; }
  std::span<const Vertex> children(Vertex v) const;

  /// |c(v)| for the root, |c(v)| + 1 otherwise.
  std::size_t degree(Vertex v) const;
  std::size_t level(Vertex v) const { return level_[v]; }
  /// l(T), the number of levels.
  std::size_t level_count() const { return level_sizes_.size(); }
  /// n(T, j) for 1 <= j <= l(T); n(T, 0) = 0.
  std::size_t level_size(std::size_t j) const;

  /// Vertices in breadth-first order from the root. Reversing it visits every
  /// child before its parent.
  const std::vector<Vertex>& bfs_order() const { return bfs_; }

  /// Edges as (parent, child) pairs in vertex order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  std::vector<Vertex> parent_;
  Vertex root_ = kNoParent;
  std::vector<std::size_t> child_offset_;
  std::vector<Vertex> child_list_;
  std::vector<std::size_t> level_;
  std::vector<std::size_t> level_sizes_;
  std::vector<Vertex> bfs_;
};

/// Per-level child counts of a balanced tree.
struct BalancedProfile {
  /// c_1..c_l, stored 0-based (child_counts[j-1] = c_j); the last entry is 0.
  std::vector<std::size_t> child_counts;
  /// n(T,1)..n(T,l), stored 0-based.
  std::vector<std::size_t> level_sizes;

  std::size_t levels() const { return child_counts.size(); }
  /// c_j with the 1-based level index used in the formulas.
  std::size_t c(std::size_t j) const { return child_counts[j - 1]; }
  /// n(T, j) with n(T, 0) = 0.
  std::size_t n(std::size_t j) const { return j == 0 ? 0 : level_sizes[j - 1]; }
  std::size_t vertex_count() const;
  bool is_trivial() const { return child_counts.size() == 1; }

  /// Profile from child counts c_1..c_{l-1}; c_l = 0 is appended.
  static BalancedProfile from_child_counts(std::vector<std::size_t> counts);

  friend bool operator==(const BalancedProfile&, const BalancedProfile&) = default;
};

/// Parses the text format: vertex count, then one 1-based parent per vertex
/// with 0 marking the root.
RootedTree parse_tree(std::string_view text);
std::string serialize(const RootedTree& t);

/// Profile if every level is degree uniform, std::nullopt otherwise.
std::optional<BalancedProfile> detect_balanced(const RootedTree& t);

/// Expands a profile into a concrete tree, levels laid out breadth first.
RootedTree build_balanced(const BalancedProfile& p);
RootedTree build_bethe(int d, int k);
RootedTree build_antifactorial(int k);
RootedTree build_path(std::size_t n);
/// Root with `leaves` pendant children.
RootedTree build_star(std::size_t leaves);

/// New root whose children carry alphas[j] copies of inputs[j], in order.
/// Vertex 0 is the new root and every copy occupies a contiguous block.
RootedTree merge_trees(std::span<const RootedTree> inputs, std::span<const unsigned> alphas);

}  // namespace treespec
