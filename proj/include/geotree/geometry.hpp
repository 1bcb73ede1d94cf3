#pragma once

#include <cstdint>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

namespace geotree {

/// Largest admissible absolute coordinate value. Orientation determinants of
/// points inside this box never overflow the 128-bit accumulator.
inline constexpr std::int64_t kMaxCoordinate = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Raised when input violates general position or the coordinate bound.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sign of (q - p) x (r - p): +1 counter-clockwise, -1 clockwise, 0 collinear.
int orient(const Point& p, const Point& q, const Point& r);

/// An ordered collection of points in general position: pairwise distinct,
/// no three collinear, every coordinate within kMaxCoordinate.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const Point& at(std::size_t i) const;
  std::span<const Point> points() const { return points_; }

  /// Sub-point-set made of the given indices, renumbered 0..m-1 in the
  /// order given.
  PointSet subset(std::span<const int> indices) const;

 private:
  std::vector<Point> points_;
};

/// Unordered pair of point indices, stored with a < b.
struct Edge {
  int a = 0;
  int b = 1;

  Edge() = default;
  Edge(int u, int v);

  bool has(int p) const { return a == p || b == p; }
  int other(int p) const { return p == a ? b : a; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<Edge> edges);

  bool insert(Edge e) { return edges_.insert(e).second; }
  bool erase(Edge e) { return edges_.erase(e) > 0; }
  bool contains(Edge e) const { return edges_.contains(e); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  /// Throws std::out_of_range if any endpoint is not below n.
  void check_indices(std::size_t n) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::set<Edge> edges_;
};

/// Every edge of the complete geometric graph on n points, lexicographic.
std::vector<Edge> all_edges(std::size_t n);

/// Dense id of an edge among the n(n-1)/2 edges on n points.
inline int edge_id(int a, int b, int n) {
  if (a > b) std::swap(a, b);
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}

/// True iff the open segments of e1 and e2 intersect. Edges that share an
/// endpoint, or are equal, never cross.
bool segments_cross(const PointSet& s, Edge e1, Edge e2);

/// Hull vertex indices in counter-clockwise order, starting from the lowest
/// (then leftmost) point.
std::vector<int> convex_hull(const PointSet& s);
/// Same, restricted to a subset of the indices of s. Subsets of size 1 or 2
/// are returned as-is (in angular order for 2).
std::vector<int> convex_hull(const PointSet& s, std::span<const int> subset);

bool in_convex_position(const PointSet& s);

/// Sorts `subset` counter-clockwise around `center`, starting at the
/// clockwise extreme. Requires every point of the subset to lie in one open
/// half-plane through center, which holds iff center is a hull vertex of
/// {center} + subset; otherwise throws GeometryError.
std::vector<int> angular_sort(const PointSet& s, int center,
                              std::span<const int> subset);

/// Full-turn counter-clockwise sort around `center`, starting at the first
/// direction at or after `start` (a direction vector, not a point).
std::vector<int> sort_around(const PointSet& s, int center,
                             std::span<const int> subset, Point start);

/// Point counts in the two open half-planes bounded by the line through e:
/// first = left of a->b, second = right.
std::pair<int, int> side_counts(const PointSet& s, Edge e);

/// min of side_counts; 0 exactly for hull edges.
int edge_depth(const PointSet& s, Edge e);

}  // namespace geotree
