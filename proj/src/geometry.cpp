#include "geotree/geometry.hpp"

#include <algorithm>
#include <string>

namespace geotree {

namespace {

using Wide = __int128;

Wide cross(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  return Wide{ax} * by - Wide{ay} * bx;
}

int sign(Wide v) { return (v > 0) - (v < 0); }

}  // namespace

int orient(const Point& p, const Point& q, const Point& r) {
  return sign(cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y));
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = points_[i];
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate || p.y > kMaxCoordinate ||
        p.y < -kMaxCoordinate) {
      throw GeometryError("point " + std::to_string(i) +
                          " exceeds the coordinate bound 2^30");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points_[i] == points_[j]) {
        throw GeometryError("points " + std::to_string(i) + " and " +
                            std::to_string(j) + " coincide");
      }
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(points_[i], points_[j], points_[k]) == 0) {
          throw GeometryError("points " + std::to_string(i) + ", " +
                              std::to_string(j) + ", " + std::to_string(k) +
                              " are collinear");
        }
      }
    }
  }
}

const Point& PointSet::at(std::size_t i) const {
  if (i >= points_.size()) throw std::out_of_range("point index out of range");
  return points_[i];
}

PointSet PointSet::subset(std::span<const int> indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (int i : indices) pts.push_back(at(static_cast<std::size_t>(i)));
  return PointSet(std::move(pts));
}

Edge::Edge(int u, int v) : a(std::min(u, v)), b(std::max(u, v)) {
  if (u == v) throw std::invalid_argument("edge endpoints must differ");
  if (a < 0) throw std::out_of_range("negative point index in edge");
}

EdgeSet::EdgeSet(std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (!edges_.insert(e).second) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.a) + "," +
                                  std::to_string(e.b) + ")");
    }
  }
}

void EdgeSet::check_indices(std::size_t n) const {
  for (const Edge& e : edges_) {
    if (static_cast<std::size_t>(e.b) >= n) {
      throw std::out_of_range("edge (" + std::to_string(e.a) + "," +
                              std::to_string(e.b) + ") references a missing point");
    }
  }
}

std::vector<Edge> all_edges(std::size_t n) {
  std::vector<Edge> out;
  out.reserve(n * (n - 1) / 2);
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b = a + 1; b < static_cast<int>(n); ++b) out.emplace_back(a, b);
  return out;
}

bool segments_cross(const PointSet& s, Edge e1, Edge e2) {
  const Point& p1 = s.at(e1.a);
  const Point& p2 = s.at(e1.b);
  const Point& q1 = s.at(e2.a);
  const Point& q2 = s.at(e2.b);
  if (e1.has(e2.a) || e1.has(e2.b)) return false;
  return orient(p1, p2, q1) * orient(p1, p2, q2) < 0 &&
         orient(q1, q2, p1) * orient(q1, q2, p2) < 0;
}

std::vector<int> convex_hull(const PointSet& s, std::span<const int> subset) {
  for (int i : subset) (void)s.at(static_cast<std::size_t>(i));
  if (subset.size() <= 2) return {subset.begin(), subset.end()};

  std::vector<int> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end(), [&](int i, int j) {
    return s[i].x != s[j].x ? s[i].x < s[j].x : s[i].y < s[j].y;
  });
  // Andrew's monotone chain; general position means no collinear triples.
  std::vector<int> hull(2 * idx.size());
  std::size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && orient(s[hull[k - 2]], s[hull[k - 1]], s[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    const int i = idx[t];
    while (k >= lower && orient(s[hull[k - 2]], s[hull[k - 1]], s[i]) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);

  auto lowest = std::min_element(hull.begin(), hull.end(), [&](int i, int j) {
    return s[i].y != s[j].y ? s[i].y < s[j].y : s[i].x < s[j].x;
  });
  std::rotate(hull.begin(), lowest, hull.end());
  return hull;
}

std::vector<int> convex_hull(const PointSet& s) {
  if (s.size() < 3) throw GeometryError("convex hull needs at least 3 points");
  std::vector<int> all(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) all[i] = static_cast<int>(i);
  return convex_hull(s, all);
}

bool in_convex_position(const PointSet& s) {
  return s.size() < 3 || convex_hull(s).size() == s.size();
}

std::vector<int> angular_sort(const PointSet& s, int center,
                              std::span<const int> subset) {
  const Point& c = s.at(static_cast<std::size_t>(center));
  std::vector<int> out(subset.begin(), subset.end());
  if (out.empty()) return out;
  for (int i : out) {
    if (i == center) throw std::invalid_argument("center listed in its own subset");
    (void)s.at(static_cast<std::size_t>(i));
  }
  int first = out.front();
  for (int i : out)
    if (orient(c, s[i], s[first]) > 0) first = i;
  for (int i : out) {
    if (i != first && orient(c, s[first], s[i]) <= 0) {
      throw GeometryError("center " + std::to_string(center) +
                          " is not a hull vertex of the sorted set");
    }
  }
  std::sort(out.begin(), out.end(),
            [&](int i, int j) { return i != j && orient(c, s[i], s[j]) > 0; });
  return out;
}

std::vector<int> sort_around(const PointSet& s, int center,
                             std::span<const int> subset, Point start) {
  const Point& c = s.at(static_cast<std::size_t>(center));
  auto upper = [&](const Point& p) {
    const std::int64_t vx = p.x - c.x, vy = p.y - c.y;
    const Wide cr = cross(start.x, start.y, vx, vy);
    if (cr != 0) return cr > 0;
    return Wide{start.x} * vx + Wide{start.y} * vy > 0;
  };
  std::vector<int> out(subset.begin(), subset.end());
  std::sort(out.begin(), out.end(), [&](int i, int j) {
    const bool ui = upper(s[i]), uj = upper(s[j]);
    if (ui != uj) return ui;
    return orient(c, s[i], s[j]) > 0;
  });
  return out;
}

std::pair<int, int> side_counts(const PointSet& s, Edge e) {
  const Point& p = s.at(e.a);
  const Point& q = s.at(e.b);
  int left = 0, right = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (static_cast<int>(i) == e.a || static_cast<int>(i) == e.b) continue;
    (orient(p, q, s[i]) > 0 ? left : right)++;
  }
  return {left, right};
}

int edge_depth(const PointSet& s, Edge e) {
  const auto [left, right] = side_counts(s, e);
  return std::min(left, right);
}

}  // namespace geotree
