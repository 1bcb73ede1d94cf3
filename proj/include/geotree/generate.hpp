#pragma once

#include <cstdint>
#include <stdexcept>

#include "geotree/geometry.hpp"

namespace geotree {

/// Failure to reach general position within the bounded number of attempts.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PointMode { Convex, Random };

// All generators draw from std::mt19937_64 seeded with the given seed.

/// n points in convex position on a circle of radius 10^6, one per angular
/// sector of width 2*pi/n with seeded jitter inside the sector. Point i is the
/// i-th point counter-clockwise, so index order equals hull order up to a
/// rotation.
PointSet convex_points(std::size_t n, std::uint64_t seed);

/// n points drawn uniformly from [0, box)^2, rejecting any draw that would
/// coincide with or be collinear with earlier points.
PointSet random_points(std::size_t n, std::uint64_t seed,
                       std::int64_t box = 10000);

PointSet generate_points(PointMode mode, std::size_t n, std::uint64_t seed);

}  // namespace geotree
