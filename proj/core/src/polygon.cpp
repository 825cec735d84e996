#include "polygon.hpp"

#include <cmath>

#include "spectral_bounds/error.hpp"

namespace spectral_bounds::detail {

namespace {

constexpr double kFrame = 1e7;

struct Vertex {
  Eigen::Vector2d point;
  int label;  // half-space owning the edge that starts here, -1 for the frame
};

}  // namespace

LabeledPolygon clip_halfspaces(std::span<const HalfSpace> halfspaces) {
  std::vector<Vertex> poly = {
      {{-kFrame, -kFrame}, -1}, {{kFrame, -kFrame}, -1}, {{kFrame, kFrame}, -1}, {{-kFrame, kFrame}, -1}};

  for (std::size_t h = 0; h < halfspaces.size(); ++h) {
    const Eigen::Vector2d normal = halfspaces[h].normal.head<2>();
    const double offset = halfspaces[h].offset;
    const double tol = 1e-13 * (1.0 + std::abs(offset));
    std::vector<Vertex> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex& p = poly[i];
      const Vertex& q = poly[(i + 1) % n];
      const double sp = normal.dot(p.point) - offset;
      const double sq = normal.dot(q.point) - offset;
      const bool p_in = sp <= tol;
      const bool q_in = sq <= tol;
      if (p_in) out.push_back(p);
      if (p_in != q_in) {
        const double t = sp / (sp - sq);
        const Eigen::Vector2d cut = p.point + t * (q.point - p.point);
        // Leaving: the new edge runs along the clipping line.
        out.push_back({cut, p_in ? static_cast<int>(h) : p.label});
      }
    }
    // Drop zero-length edges.
    std::vector<Vertex> cleaned;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Vertex& next = out[(i + 1) % out.size()];
      if ((out[i].point - next.point).norm() > 1e-12 * (1.0 + out[i].point.norm())) {
        cleaned.push_back(out[i]);
      }
    }
    poly = std::move(cleaned);
    if (poly.size() < 3) throw InputError("polytope has empty interior");
  }

  LabeledPolygon result;
  for (const Vertex& v : poly) {
    if (v.label < 0) throw InputError("unbounded domain");
    result.vertices.push_back(v.point);
    result.edge_labels.push_back(v.label);
  }
  // Cuts of the huge frame lose digits; re-solve each vertex from its two lines.
  const std::size_t n = result.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const HalfSpace& a = halfspaces[result.edge_labels[(i + n - 1) % n]];
    const HalfSpace& b = halfspaces[result.edge_labels[i]];
    Eigen::Matrix2d m;
    m << a.normal[0], a.normal[1], b.normal[0], b.normal[1];
    const double det = m.determinant();
    if (std::abs(det) > 1e-12) result.vertices[i] = m.inverse() * Eigen::Vector2d(a.offset, b.offset);
  }
  if (polygon_area(result.vertices) <= 0.0) throw InputError("polytope has empty interior");
  return result;
}

double polygon_area(std::span<const Eigen::Vector2d> vertices) {
  double twice = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = vertices[i];
    const auto& q = vertices[(i + 1) % n];
    twice += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * twice;
}

double polygon_perimeter(std::span<const Eigen::Vector2d> vertices) {
  double total = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) total += (vertices[(i + 1) % n] - vertices[i]).norm();
  return total;
}

}  // namespace spectral_bounds::detail
