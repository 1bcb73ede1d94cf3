#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geotree {

/// Undirected tree on vertices 0..k-1. Neighbor lists are kept sorted.
class Tree {
 public:
  Tree() = default;
  /// Throws std::invalid_argument unless the edges form a tree on k vertices.
  Tree(int k, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  /// Edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::vector<std::vector<int>> adjacency_;
};

struct RootedTree {
  Tree tree;
  int root = 0;
  std::vector<std::vector<int>> children;
  std::vector<std::optional<int>> parent;
  std::vector<int> subtree_size;

  int size() const { return tree.size(); }
  bool is_leaf(int v) const { return children.at(v).empty(); }
};

/// The spider on n vertices, centered at vertex 0. Odd n has (n-1)/2 legs of length
/// two; even n > 2 subdivides the center edge of the first leg of the n-1 spider.
Tree spider_tree(int n);
Tree path_tree(int k);
Tree star_tree(int k);

/// Children in ascending vertex order.
RootedTree root_at(const Tree& t, int v);

/// Reorders every child list by subtree size, ties by vertex index.
RootedTree sort_children_by_subtree_size(RootedTree rt, bool ascending = true);

/// Center-rooted AHU encoding. A subtree is "(" + sorted child codes + ")";
/// with two centers the smaller of the two rootings is taken. Equal strings
/// iff isomorphic.
std::string ahu_canonical(const Tree& t);

/// Tree whose preorder numbering follows a canonical string (vertex 0 is the
/// outermost node). Inverse of ahu_canonical up to isomorphism.
Tree tree_from_canonical(const std::string& code);

/// Labeled tree from a Prufer sequence over 0..k-1 (length k-2).
Tree tree_from_prufer(const std::vector<int>& sequence);

inline constexpr int kMaxEnumeratedTreeSize = 10;

/// One tree per isomorphism class on k vertices (2 <= k <= 10), sorted by
/// canonical string, each labeled by tree_from_canonical.
std::vector<Tree> all_trees(int k);

}  // namespace geotree
