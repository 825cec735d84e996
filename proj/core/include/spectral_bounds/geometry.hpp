#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace spectral_bounds {

using Point = Eigen::VectorXd;

enum class ShapeKind { parallelepiped, ellipsoid, stadium, swiss_cross, polytope, ball };

std::string_view to_string(ShapeKind kind);
/// Accepts the canonical names plus the CLI aliases (rect, box, ellipse, disc, cross, ...).
ShapeKind parse_shape_kind(std::string_view name);

/// {x : x . normal <= offset}, normal of unit length.
struct HalfSpace {
  Point normal;
  double offset = 0.0;
};

/// A member of the shape catalog.
///
/// Parameter conventions:
///   parallelepiped  (-a_1,a_1) x ... x (-a_d,a_d)
///   ellipsoid       sum (x_i/a_i)^2 < 1
///   stadium         (-b,b) x (-a,a) union discs of radius a at (+-b, 0)
///   swiss_cross     (-b-a,b+a) x (-a,a) union (-a,a) x (-b-a,b+a)
///   ball            |x| < r in R^d
///   polytope        intersection of half-spaces (d = 2)
class ShapeSpec {
 public:
  static ShapeSpec parallelepiped(std::vector<double> half_axes);
  static ShapeSpec ellipsoid(std::vector<double> half_axes);
  static ShapeSpec stadium(double a, double b);
  static ShapeSpec swiss_cross(double a, double b);
  static ShapeSpec ball(double radius, int dimension);
  /// Normals are normalized on construction; throws InputError for an empty or
  /// unbounded intersection.
  static ShapeSpec polytope(std::vector<HalfSpace> halfspaces);

  ShapeKind kind() const { return kind_; }
  int dimension() const { return dimension_; }

  const std::vector<double>& half_axes() const { return half_axes_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double radius() const { return a_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

  bool is_convex() const;
  /// Short identifier such as "stadium(a=1,b=2)".
  std::string label() const;

 private:
  ShapeSpec() = default;

  ShapeKind kind_ = ShapeKind::ball;
  int dimension_ = 2;
  std::vector<double> half_axes_;
  double a_ = 0.0;
  double b_ = 0.0;
  std::vector<HalfSpace> halfspaces_;
};

struct DomainMeasures {
  double volume = 0.0;
  double surface = 0.0;
  double inradius = 0.0;
  int dimension = 0;
};

struct BoundaryNode {
  Point position;
  Point normal;
  double weight = 0.0;
};

/// Quadrature of the boundary: flat facets carry one exact node, curved
/// patches carry composite Gauss-Legendre nodes.
struct BoundaryMesh {
  int dimension = 0;
  std::vector<BoundaryNode> nodes;
  double total_weight = 0.0;
  /// Threshold below which a support value counts as non-positive.
  double star_tolerance = 0.0;
  double diameter = 0.0;
  /// True when every node is an exact flat-facet node.
  bool facet_exact = true;
};

struct ChebyshevCenter {
  double radius = 0.0;
  Point center;
};

DomainMeasures measures(const ShapeSpec& shape);
double diameter(const ShapeSpec& shape);
/// 1e-9 x diameter.
double star_tolerance(const ShapeSpec& shape);

BoundaryMesh boundary_mesh(const ShapeSpec& shape, int resolution);

/// min over nodes of (x - xi) . N(x).
double min_support(const BoundaryMesh& mesh, const Point& xi);
bool is_star_center(const BoundaryMesh& mesh, const Point& xi);
/// sum w_i / h_xi(x_i). Throws NotStarShapedError when xi is not admissible.
double support_inv_integral(const BoundaryMesh& mesh, const Point& xi);
/// sum w_i h_xi(x_i), which equals d |Omega| for every admissible xi.
double support_integral(const BoundaryMesh& mesh, const Point& xi);

/// Largest inscribed ball of a bounded polytope (Chebyshev center LP).
ChebyshevCenter inradius_polytope(std::span<const HalfSpace> halfspaces);

/// Origin for the symmetric catalog shapes, Chebyshev center for polytopes.
Point default_center(const ShapeSpec& shape);

/// Open-set membership.
bool contains(const ShapeSpec& shape, const Point& x);

/// Distance t in (0, max_distance] from an interior point x to the first
/// boundary crossing along +-e_axis, or nullopt if the segment of length
/// max_distance stays inside.
std::optional<double> boundary_crossing(const ShapeSpec& shape, const Point& x, int axis,
                                        int direction, double max_distance);

/// Axis-aligned bounding box (lower, upper).
std::pair<Point, Point> bounding_box(const ShapeSpec& shape);

/// Counter-clockwise vertices of a bounded 2D polytope.
std::vector<Eigen::Vector2d> polygon_vertices(std::span<const HalfSpace> halfspaces);

}  // namespace spectral_bounds
