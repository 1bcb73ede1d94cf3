#pragma once

// Independent reference implementations used to cross-check the library.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "geotree/geometry.hpp"
#include "geotree/trees.hpp"

namespace ref {

using geotree::Point;
using geotree::PointSet;

inline int sign(long double v) { return (v > 0) - (v < 0); }

inline int orient_ld(const Point& p, const Point& q, const Point& r) {
  const long double d = static_cast<long double>(q.x - p.x) * static_cast<long double>(r.y - p.y) -
                        static_cast<long double>(q.y - p.y) * static_cast<long double>(r.x - p.x);
  return sign(d);
}

// p is a hull vertex iff some line through p has every other point strictly
// on one side; with general position it is enough to test the lines through
// p and each other point.
inline std::set<int> hull_vertices(const PointSet& s) {
  const int n = static_cast<int>(s.size());
  std::set<int> out;
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      bool all_left = true;
      for (int r = 0; r < n; ++r)
        if (r != p && r != q && orient_ld(s[p], s[q], s[r]) <= 0) all_left = false;
      if (all_left) {
        out.insert(p);
        out.insert(q);
      }
    }
  }
  return out;
}

// Directed pairs (p, q) with every other point strictly left: the CCW hull edges.
inline std::set<std::pair<int, int>> hull_edges(const PointSet& s) {
  const int n = static_cast<int>(s.size());
  std::set<std::pair<int, int>> out;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      bool all_left = true;
      for (int r = 0; r < n; ++r)
        if (r != p && r != q && orient_ld(s[p], s[q], s[r]) <= 0) all_left = false;
      if (all_left) out.insert({p, q});
    }
  return out;
}

inline std::pair<int, int> side_counts(const PointSet& s, int a, int b) {
  int left = 0, right = 0;
  for (int r = 0; r < static_cast<int>(s.size()); ++r) {
    if (r == a || r == b) continue;
    (orient_ld(s[a], s[b], s[r]) > 0 ? left : right)++;
  }
  return {left, right};
}

// Floating-angle sort relative to the bisector of the subset, valid when the
// subset spans less than a half-turn around the center.
inline std::vector<int> float_angle_sort(const PointSet& s, int center, std::vector<int> subset) {
  const double cx = static_cast<double>(s[center].x), cy = static_cast<double>(s[center].y);
  double mx = 0, my = 0;
  for (int p : subset) {
    const double dx = static_cast<double>(s[p].x) - cx, dy = static_cast<double>(s[p].y) - cy;
    const double len = std::hypot(dx, dy);
    mx += dx / len;
    my += dy / len;
  }
  const double base = std::atan2(my, mx);
  auto rel = [&](int p) {
    double a = std::atan2(static_cast<double>(s[p].y) - cy, static_cast<double>(s[p].x) - cx) - base;
    while (a <= -M_PI) a += 2 * M_PI;
    while (a > M_PI) a -= 2 * M_PI;
    return a;
  };
  std::sort(subset.begin(), subset.end(), [&](int a, int b) { return rel(a) < rel(b); });
  return subset;
}

inline bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orient_ld(a, b, c) * orient_ld(a, b, d) < 0 && orient_ld(c, d, a) * orient_ld(c, d, b) < 0;
}

// Straightforward quadratic Prufer decoding.
inline std::vector<std::pair<int, int>> prufer_edges(const std::vector<int>& seq) {
  const int k = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(k, 1);
  for (int x : seq) ++degree[x];
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    for (int leaf = 0; leaf < k; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  int u = -1, v = -1;
  for (int i = 0; i < k; ++i)
    if (degree[i] == 1) (u < 0 ? u : v) = i;
  edges.emplace_back(u, v);
  return edges;
}

// Every labeled tree on k vertices.
inline std::vector<std::vector<std::pair<int, int>>> all_labeled_trees(int k) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (k == 2) return {{{0, 1}}};
  std::vector<int> seq(k - 2, 0);
  while (true) {
    out.push_back(prufer_edges(seq));
    int i = 0;
    while (i < k - 2 && ++seq[i] == k) seq[i++] = 0;
    if (i == k - 2) break;
  }
  return out;
}

// Isomorphism by trying every vertex permutation.
inline bool isomorphic(int k, const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b) {
  std::vector<int> da(k, 0), db(k, 0);
  for (auto [u, v] : a) ++da[u], ++da[v];
  for (auto [u, v] : b) ++db[u], ++db[v];
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::set<std::pair<int, int>> target;
  for (auto [u, v] : b) target.insert({std::min(u, v), std::max(u, v)});
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool same = true;
    for (auto [u, v] : a) {
      const int x = perm[u], y = perm[v];
      if (!target.contains({std::min(x, y), std::max(x, y)})) {
        same = false;
        break;
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Sorted leg lengths of a tree made of paths hanging off vertex 0.
inline std::vector<int> leg_lengths(const geotree::Tree& t) {
  std::vector<int> legs;
  for (int first : t.neighbors(0)) {
    int prev = 0, cur = first, len = 1;
    while (t.degree(cur) == 2) {
      const int next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  std::sort(legs.begin(), legs.end());
  return legs;
}

}  // namespace ref
