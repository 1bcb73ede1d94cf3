#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "geotree/geometry.hpp"
#include "geotree/trees.hpp"

namespace geotree {

/// Raised when a construction that is proven to succeed does not. Always a
/// bug or a misreading of the construction, never an expected outcome.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A tree drawn on a point set: vertex v sits on point assignment[v].
struct Embedding {
  RootedTree tree;
  PointSet points;
  std::vector<int> assignment;

  /// Images of the tree edges, in Tree::edges() order.
  std::vector<Edge> edge_images() const;
  bool uses(Edge e) const;
};

struct EmbeddingCheck {
  bool in_range = true;
  bool injective = true;
  int crossings = 0;

  bool ok() const { return in_range && injective && crossings == 0; }
};

/// Full validator: indices in range, injective, no two tree-edge images
/// properly crossing.
EmbeddingCheck check_embedding(const Tree& t, const PointSet& s,
                               std::span<const int> assignment);
inline EmbeddingCheck check_embedding(const Embedding& e) {
  return check_embedding(e.tree.tree, e.points, e.assignment);
}

/// Number of tree edges mapped onto convex hull edges (depth 0).
int hull_edges_used(const Embedding& e);

/// Split of the points around an apex into consecutive angular blocks.
/// `order` is the counter-clockwise sort; cell i is
/// order[boundaries[i] .. boundaries[i+1]).
struct WedgePartition {
  int apex = -1;
  std::vector<int> order;
  std::vector<std::size_t> boundaries;
  std::vector<std::vector<int>> cells;
};

WedgePartition wedge_partition(const PointSet& s, int apex,
                               std::span<const int> points,
                               std::span<const int> sizes);

/// Hull vertices q of `cell` whose segment to apex crosses no hull edge of
/// the cell, in counter-clockwise order around apex. The two angular
/// extremes are always included.
std::vector<int> visible_hull_vertices(const PointSet& s, int apex,
                                       std::span<const int> cell);

/// Picks the root's point among the hull vertices of the whole set.
using RootSelector =
    std::function<int(const PointSet&, std::span<const int> hull)>;
/// Picks a child's point among the visible hull vertices of its cell,
/// given in counter-clockwise order around the parent's point.
using ChildSelector =
    std::function<int(const PointSet&, int apex, std::span<const int> visible)>;

/// Lowest, then leftmost, hull point.
RootSelector lowest_hull_point();
/// The clockwise extreme of the cell, i.e. the first point counter-clockwise.
ChildSelector rightmost_visible();

/// Wedge-splitting recursive embedding of a rooted tree on |s| vertices,
/// children taken in rt's order.
Embedding embed_recursive(const RootedTree& rt, const PointSet& s,
                          RootSelector root_choice = lowest_hull_point(),
                          ChildSelector child_choice = rightmost_visible());

/// Spanning embedding avoiding one forbidden edge (n >= 5). Runs the
/// recursive embedding with ascending child order and rightmost choices, then
/// repairs the edge that lands on e until it is avoided.
Embedding embed_avoiding_single(const Tree& t, const PointSet& s, Edge e);

/// Spanning embedding into a convex set using fewer than n/2 hull edges
/// (n >= 5).
Embedding embed_few_hull_edges(const Tree& t, const PointSet& s);

/// Moves every vertex i places clockwise along the hull. Convex sets only.
Embedding rotate_embedding(const Embedding& emb, int i);

/// Spanning embedding into a convex set avoiding f1 and f2: the first
/// rotation of embed_few_hull_edges that uses neither.
Embedding embed_convex_avoiding_two(const Tree& t, const PointSet& s, Edge f1,
                                    Edge f2);

}  // namespace geotree
