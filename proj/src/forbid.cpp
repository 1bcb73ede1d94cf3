#include "geotree/forbid.hpp"

#include <algorithm>
#include <stdexcept>

namespace geotree {

const char* to_string(ForbidKind kind) {
  switch (kind) {
    case ForbidKind::ThreeConsecutiveHull: return "three-consecutive-hull";
    case ForbidKind::ThreePairsHull: return "three-pairs-hull";
    case ForbidKind::REdgeBlanket: return "r-edge-blanket";
  }
  return "?";
}

ForbidKind forbid_kind_from_string(const std::string& name) {
  for (ForbidKind k : {ForbidKind::ThreeConsecutiveHull, ForbidKind::ThreePairsHull,
                       ForbidKind::REdgeBlanket})
    if (name == to_string(k)) return k;
  throw std::invalid_argument("unknown construction kind '" + name + "'");
}

namespace {

std::vector<int> convex_hull_order(const PointSet& s, int min_n) {
  if (static_cast<int>(s.size()) < min_n)
    throw std::invalid_argument("construction needs at least " + std::to_string(min_n) + " points");
  std::vector<int> hull = convex_hull(s);
  if (hull.size() != s.size()) throw GeometryError("point set is not in convex position");
  return hull;
}

int wrap(int i, int n) { return ((i % n) + n) % n; }

}  // namespace

ForbidConstruction three_consecutive_hull_edges(const PointSet& s, int start) {
  const auto hull = convex_hull_order(s, 5);
  const int n = static_cast<int>(hull.size());
  ForbidConstruction c;
  c.kind = ForbidKind::ThreeConsecutiveHull;
  c.params = {.n = n, .k = n, .r_threshold = -1, .hull_positions = {wrap(start, n)}};
  for (int i = 0; i < 3; ++i)
    c.edges.insert(Edge(hull[wrap(start + i, n)], hull[wrap(start + i + 1, n)]));
  c.target_tree = spider_tree(n);
  return c;
}

ForbidConstruction three_pairs_consecutive_hull_edges(const PointSet& s, std::vector<int> middles) {
  const auto hull = convex_hull_order(s, 6);
  const int n = static_cast<int>(hull.size());
  if (middles.size() != 3) throw std::invalid_argument("exactly three middle positions required");
  for (int& m : middles) m = wrap(m, n);
  ForbidConstruction c;
  c.kind = ForbidKind::ThreePairsHull;
  for (int m : middles) {
    c.edges.insert(Edge(hull[wrap(m - 1, n)], hull[m]));
    c.edges.insert(Edge(hull[m], hull[wrap(m + 1, n)]));
  }
  if (c.edges.size() != 6)
    throw std::invalid_argument("middle positions must be distinct and pairwise non-adjacent");
  c.params = {.n = n, .k = n, .r_threshold = -1, .hull_positions = middles};
  c.target_tree = spider_tree(n);
  return c;
}

std::vector<int> spread_middles(int n) { return {0, n / 3, (2 * n) / 3}; }

std::int64_t ceil(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  return (r.numerator() > 0 && r.numerator() % r.denominator() != 0) ? q + 1 : q;
}

int blanket_threshold(int n, int k) {
  if (k < 3) throw std::invalid_argument("blanket needs k >= 3");
  const Rational value = Rational(2 * (n - 2), k - 2) - 2;
  return static_cast<int>(std::max<std::int64_t>(0, ceil(value)));
}

ForbidConstruction r_edge_blanket(const PointSet& s, int k) {
  const auto hull = convex_hull_order(s, 3);
  const int n = static_cast<int>(hull.size());
  if (k < 3 || k > n) throw std::invalid_argument("blanket needs 3 <= k <= n");
  ForbidConstruction c;
  c.kind = ForbidKind::REdgeBlanket;
  const int r = blanket_threshold(n, k);
  for (const Edge& e : all_edges(s.size()))
    if (edge_depth(s, e) <= r) c.edges.insert(e);
  c.params = {.n = n, .k = k, .r_threshold = r, .hull_positions = {}};
  c.target_tree = spider_tree(k);
  return c;
}

Rational turan_lower_bound(int n, int k) {
  if (k < 3) throw std::invalid_argument("lower bound needs k >= 3");
  if (n < 2) throw std::invalid_argument("lower bound needs n >= 2");
  return Rational(std::int64_t{n} * n, 2 * (k - 1)) - Rational(n, 2);
}

Rational upper_bound_value(int n, int k) {
  if (k < 3) throw std::invalid_argument("upper bound needs k >= 3");
  return Rational(2 * std::int64_t{n} * (n - 2), k - 2);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace geotree
