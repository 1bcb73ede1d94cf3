#include "geotree/generate.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace geotree {

namespace {

constexpr int kMaxAttempts = 1000;

bool in_general_position_with(const std::vector<Point>& pts, const Point& p) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == p) return false;
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (orient(pts[i], pts[j], p) == 0) return false;
  }
  return true;
}

}  // namespace

PointSet convex_points(std::size_t n, std::uint64_t seed) {
  constexpr double kRadius = 1e6;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.35, 0.35);
  const double sector = 2.0 * std::numbers::pi / static_cast<double>(n);

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double angle = sector * (static_cast<double>(i) + jitter(rng));
      pts.push_back({std::llround(kRadius * std::cos(angle)),
                     std::llround(kRadius * std::sin(angle))});
    }
    try {
      PointSet s(std::move(pts));
      if (in_convex_position(s)) return s;
    } catch (const GeometryError&) {
    }
  }
  throw GenerationError("no convex general-position set of size " +
                        std::to_string(n) + " after bounded attempts");
}

PointSet random_points(std::size_t n, std::uint64_t seed, std::int64_t box) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, box - 1);
  std::vector<Point> pts;
  pts.reserve(n);
  int rejected = 0;
  while (pts.size() < n) {
    const Point p{coord(rng), coord(rng)};
    if (in_general_position_with(pts, p)) {
      pts.push_back(p);
    } else if (++rejected > kMaxAttempts * static_cast<int>(n + 1)) {
      throw GenerationError("general position unreachable for " +
                            std::to_string(n) + " points in box " +
                            std::to_string(box));
    }
  }
  return PointSet(std::move(pts));
}

PointSet generate_points(PointMode mode, std::size_t n, std::uint64_t seed) {
  return mode == PointMode::Convex ? convex_points(n, seed)
                                   : random_points(n, seed);
}

}  // namespace geotree
