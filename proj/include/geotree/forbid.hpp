#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "geotree/geometry.hpp"
#include "geotree/trees.hpp"

namespace geotree {

using Rational = boost::rational<std::int64_t>;

enum class ForbidKind { ThreeConsecutiveHull, ThreePairsHull, REdgeBlanket };

const char* to_string(ForbidKind kind);
ForbidKind forbid_kind_from_string(const std::string& name);

struct ForbidParams {
  int n = 0;
  int k = 0;
  int r_threshold = -1;               // blanket only
  std::vector<int> hull_positions;    // start position, or the three middles
};

/// A forbidden edge set together with the tree it is claimed to forbid.
struct ForbidConstruction {
  ForbidKind kind = ForbidKind::ThreeConsecutiveHull;
  EdgeSet edges;
  Tree target_tree;
  ForbidParams params;
};

/// Hull edges (p1,p2),(p2,p3),(p3,p4) with p1 at hull position `start`,
/// following the counter-clockwise order of convex_hull(s).
ForbidConstruction three_consecutive_hull_edges(const PointSet& s, int start);

/// Both hull edges at each of three middle hull positions. The six edges
/// must be distinct, i.e. no two middles adjacent on the hull.
ForbidConstruction three_pairs_consecutive_hull_edges(const PointSet& s,
                                                      std::vector<int> middles);

/// Three middles spread as evenly as possible around an n-gon.
std::vector<int> spread_middles(int n);

/// ceil(2(n-2)/(k-2) - 2), clamped at 0.
int blanket_threshold(int n, int k);

/// Every edge of depth <= blanket_threshold(n, k), targeting spider_tree(k).
ForbidConstruction r_edge_blanket(const PointSet& s, int k);

/// n^2 / (2(k-1)) - n/2.
Rational turan_lower_bound(int n, int k);

/// 2n(n-2)/(k-2).
Rational upper_bound_value(int n, int k);

/// Smallest integer >= r.
std::int64_t ceil(const Rational& r);

std::string to_string(const Rational& r);

}  // namespace geotree
