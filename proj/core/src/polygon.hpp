#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "spectral_bounds/geometry.hpp"

namespace spectral_bounds::detail {

/// Convex polygon with the index of the half-space that owns each edge
/// (edge i runs from vertex i to vertex i+1).
struct LabeledPolygon {
  std::vector<Eigen::Vector2d> vertices;
  std::vector<int> edge_labels;
};

/// Clips a large frame by every half-space. Throws InputError for empty or
/// unbounded intersections.
LabeledPolygon clip_halfspaces(std::span<const HalfSpace> halfspaces);

double polygon_area(std::span<const Eigen::Vector2d> vertices);
double polygon_perimeter(std::span<const Eigen::Vector2d> vertices);

}  // namespace spectral_bounds::detail
