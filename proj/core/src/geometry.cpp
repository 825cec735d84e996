#include "spectral_bounds/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "polygon.hpp"
#include "spectral_bounds/error.hpp"
#include "spectral_bounds/format.hpp"
#include "spectral_bounds/quadrature.hpp"
#include "spectral_bounds/simplex.hpp"

namespace spectral_bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxDimension = 10;
constexpr int kArcOrder = 4;

void require_length(double value, const char* what) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw InputError(std::string(what) + " must be a finite positive length");
  }
}

double unit_ball_volume(int d) { return std::pow(kPi, 0.5 * d) / std::tgamma(0.5 * d + 1.0); }

double ellipse_perimeter(double a1, double a2) {
  // Quarter arc, times four.
  auto speed = [a1, a2](double t) {
    const double s = std::sin(t);
    const double c = std::cos(t);
    return std::sqrt(a1 * a1 * s * s + a2 * a2 * c * c);
  };
  return 4.0 * integrate_adaptive(speed, 0.0, 0.5 * kPi, 1e-12);
}

double ellipsoid_area(double a1, double a2, double a3) {
  auto octant = [=](int panels) {
    const double a23 = a2 * a3, a13 = a1 * a3, a12 = a1 * a2;
    return integrate_composite(
        [&](double theta) {
          const double st = std::sin(theta);
          const double ct = std::cos(theta);
          const double inner = integrate_composite(
              [&](double phi) {
                const double cp = std::cos(phi);
                const double sp = std::sin(phi);
                return std::sqrt(a23 * a23 * st * st * cp * cp + a13 * a13 * st * st * sp * sp +
                                 a12 * a12 * ct * ct);
              },
              0.0, 0.5 * kPi, panels, 8);
          return st * inner;
        },
        0.0, 0.5 * kPi, panels, 8);
  };
  int panels = 8;
  double previous = octant(panels);
  for (int refinement = 0; refinement < 8; ++refinement) {
    panels *= 2;
    const double current = octant(panels);
    if (std::abs(current - previous) <= 1e-13 * current) return 8.0 * current;
    previous = current;
  }
  return 8.0 * previous;
}

void push_node(BoundaryMesh& mesh, Point position, Point normal, double weight) {
  mesh.total_weight += weight;
  mesh.nodes.push_back(BoundaryNode{std::move(position), std::move(normal), weight});
}

Point vec2(double x, double y) {
  Point p(2);
  p << x, y;
  return p;
}

// Circular arc of radius r about `center`, angles in [t0, t1].
void push_arc(BoundaryMesh& mesh, const Point& center, double r, double t0, double t1, int panels) {
  const QuadratureRule rule = composite_gauss_legendre(t0, t1, panels, kArcOrder);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double c = std::cos(rule.nodes[k]);
    const double s = std::sin(rule.nodes[k]);
    push_node(mesh, center + r * vec2(c, s), vec2(c, s), r * rule.weights[k]);
  }
  mesh.facet_exact = false;
}

void push_ellipse(BoundaryMesh& mesh, double a1, double a2, int panels) {
  const QuadratureRule rule = composite_gauss_legendre(0.0, 2.0 * kPi, panels, kArcOrder);
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double c = std::cos(rule.nodes[k]);
    const double s = std::sin(rule.nodes[k]);
    const double speed = std::hypot(a1 * s, a2 * c);
    Point normal = vec2(a2 * c, a1 * s);
    normal /= normal.norm();
    push_node(mesh, vec2(a1 * c, a2 * s), std::move(normal), speed * rule.weights[k]);
  }
  mesh.facet_exact = false;
}

void push_ellipsoid(BoundaryMesh& mesh, double a1, double a2, double a3, int resolution) {
  const int theta_panels = std::max(2, resolution / 16);
  const QuadratureRule theta_rule = composite_gauss_legendre(0.0, kPi, theta_panels, kArcOrder);
  const QuadratureRule phi_rule = composite_gauss_legendre(0.0, 2.0 * kPi, 2 * theta_panels, kArcOrder);
  const double a23 = a2 * a3, a13 = a1 * a3, a12 = a1 * a2;
  for (std::size_t i = 0; i < theta_rule.nodes.size(); ++i) {
    const double st = std::sin(theta_rule.nodes[i]);
    const double ct = std::cos(theta_rule.nodes[i]);
    for (std::size_t j = 0; j < phi_rule.nodes.size(); ++j) {
      const double cp = std::cos(phi_rule.nodes[j]);
      const double sp = std::sin(phi_rule.nodes[j]);
      Point x(3);
      x << a1 * st * cp, a2 * st * sp, a3 * ct;
      Point normal(3);
      normal << x(0) / (a1 * a1), x(1) / (a2 * a2), x(2) / (a3 * a3);
      normal /= normal.norm();
      const double area_element =
          st * std::sqrt(a23 * a23 * st * st * cp * cp + a13 * a13 * st * st * sp * sp + a12 * a12 * ct * ct);
      push_node(mesh, std::move(x), std::move(normal), area_element * theta_rule.weights[i] * phi_rule.weights[j]);
    }
  }
  mesh.facet_exact = false;
}

double bisect_crossing(const ShapeSpec& shape, const Point& x, int axis, int direction, double max_distance) {
  Point probe = x;
  probe(axis) += direction * max_distance;
  if (contains(shape, probe)) return std::numeric_limits<double>::infinity();
  double inside = 0.0;
  double outside = max_distance;
  for (int it = 0; it < 200 && outside - inside > 1e-15 * max_distance; ++it) {
    const double mid = 0.5 * (inside + outside);
    probe(axis) = x(axis) + direction * mid;
    if (contains(shape, probe)) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return outside;
}

}  // namespace

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::parallelepiped: return "parallelepiped";
    case ShapeKind::ellipsoid: return "ellipsoid";
    case ShapeKind::stadium: return "stadium";
    case ShapeKind::swiss_cross: return "swiss_cross";
    case ShapeKind::polytope: return "polytope";
    case ShapeKind::ball: return "ball";
  }
  return "unknown";
}

ShapeKind parse_shape_kind(std::string_view name) {
  if (name == "parallelepiped" || name == "rect" || name == "rectangle" || name == "box") {
    return ShapeKind::parallelepiped;
  }
  if (name == "ellipsoid" || name == "ellipse") return ShapeKind::ellipsoid;
  if (name == "stadium") return ShapeKind::stadium;
  if (name == "swiss_cross" || name == "cross") return ShapeKind::swiss_cross;
  if (name == "polytope" || name == "polygon") return ShapeKind::polytope;
  if (name == "ball" || name == "disc" || name == "disk") return ShapeKind::ball;
  throw InputError("unknown shape kind '" + std::string(name) + "'");
}

ShapeSpec ShapeSpec::parallelepiped(std::vector<double> half_axes) {
  if (half_axes.empty() || static_cast<int>(half_axes.size()) > kMaxDimension) {
    throw InputError("parallelepiped needs between 1 and 10 half-axis lengths");
  }
  for (double a : half_axes) require_length(a, "parallelepiped half-axis");
  ShapeSpec s;
  s.kind_ = ShapeKind::parallelepiped;
  s.dimension_ = static_cast<int>(half_axes.size());
  s.half_axes_ = std::move(half_axes);
  return s;
}

ShapeSpec ShapeSpec::ellipsoid(std::vector<double> half_axes) {
  if (half_axes.empty() || half_axes.size() > 3) {
    throw InputError("ellipsoid needs 1, 2 or 3 half-axis lengths");
  }
  for (double a : half_axes) require_length(a, "ellipsoid half-axis");
  ShapeSpec s;
  s.kind_ = ShapeKind::ellipsoid;
  s.dimension_ = static_cast<int>(half_axes.size());
  s.half_axes_ = std::move(half_axes);
  return s;
}

ShapeSpec ShapeSpec::stadium(double a, double b) {
  require_length(a, "stadium radius a");
  if (!std::isfinite(b) || b < 0.0) throw InputError("stadium half-length b must be finite and >= 0");
  ShapeSpec s;
  s.kind_ = ShapeKind::stadium;
  s.a_ = a;
  s.b_ = b;
  return s;
}

ShapeSpec ShapeSpec::swiss_cross(double a, double b) {
  require_length(a, "swiss cross half-width a");
  if (!std::isfinite(b) || b < 0.0) throw InputError("swiss cross arm length b must be finite and >= 0");
  ShapeSpec s;
  s.kind_ = ShapeKind::swiss_cross;
  s.a_ = a;
  s.b_ = b;
  return s;
}

ShapeSpec ShapeSpec::ball(double radius, int dimension) {
  require_length(radius, "ball radius");
  if (dimension < 1 || dimension > kMaxDimension) throw InputError("ball dimension must be in [1, 10]");
  ShapeSpec s;
  s.kind_ = ShapeKind::ball;
  s.a_ = radius;
  s.dimension_ = dimension;
  return s;
}

ShapeSpec ShapeSpec::polytope(std::vector<HalfSpace> halfspaces) {
  if (halfspaces.size() < 3) throw InputError("polytope needs at least three half-spaces");
  const Eigen::Index d = halfspaces.front().normal.size();
  if (d != 2) throw InputError("only two-dimensional polytopes are supported");
  for (HalfSpace& h : halfspaces) {
    if (h.normal.size() != d) throw InputError("half-space normals have inconsistent dimension");
    const double length = h.normal.norm();
    if (!std::isfinite(length) || length == 0.0 || !std::isfinite(h.offset)) {
      throw InputError("half-space normal must be finite and nonzero");
    }
    h.normal /= length;
    h.offset /= length;
  }
  detail::clip_halfspaces(halfspaces);  // validates boundedness and nonempty interior
  ShapeSpec s;
  s.kind_ = ShapeKind::polytope;
  s.dimension_ = static_cast<int>(d);
  s.halfspaces_ = std::move(halfspaces);
  return s;
}

bool ShapeSpec::is_convex() const { return !(kind_ == ShapeKind::swiss_cross && b_ > 0.0); }

std::string ShapeSpec::label() const {
  std::ostringstream os;
  os << to_string(kind_) << '(';
  switch (kind_) {
    case ShapeKind::parallelepiped:
    case ShapeKind::ellipsoid:
      for (std::size_t i = 0; i < half_axes_.size(); ++i) {
        os << (i ? "," : "") << format_double(half_axes_[i]);
      }
      break;
    case ShapeKind::stadium:
    case ShapeKind::swiss_cross:
      os << "a=" << format_double(a_) << ",b=" << format_double(b_);
      break;
    case ShapeKind::ball:
      os << "r=" << format_double(a_) << ",d=" << dimension_;
      break;
    case ShapeKind::polytope:
      os << halfspaces_.size() << " halfspaces";
      break;
  }
  os << ')';
  return os.str();
}

DomainMeasures measures(const ShapeSpec& shape) {
  DomainMeasures m;
  m.dimension = shape.dimension();
  switch (shape.kind()) {
    case ShapeKind::parallelepiped: {
      const auto& a = shape.half_axes();
      m.volume = std::pow(2.0, m.dimension) *
                 std::accumulate(a.begin(), a.end(), 1.0, std::multiplies<>());
      double inverse_sum = 0.0;
      for (double ai : a) inverse_sum += 1.0 / ai;
      m.surface = m.volume * inverse_sum;
      m.inradius = *std::min_element(a.begin(), a.end());
      break;
    }
    case ShapeKind::ellipsoid: {
      const auto& a = shape.half_axes();
      m.inradius = *std::min_element(a.begin(), a.end());
      if (m.dimension == 1) {
        m.volume = 2.0 * a[0];
        m.surface = 2.0;
      } else if (m.dimension == 2) {
        m.volume = kPi * a[0] * a[1];
        m.surface = ellipse_perimeter(a[0], a[1]);
      } else {
        m.volume = 4.0 * kPi / 3.0 * a[0] * a[1] * a[2];
        m.surface = ellipsoid_area(a[0], a[1], a[2]);
      }
      break;
    }
    case ShapeKind::stadium:
      m.volume = 4.0 * shape.a() * shape.b() + kPi * shape.a() * shape.a();
      m.surface = 4.0 * shape.b() + 2.0 * kPi * shape.a();
      m.inradius = shape.a();
      break;
    case ShapeKind::swiss_cross:
      m.volume = 4.0 * shape.a() * shape.a() + 8.0 * shape.a() * shape.b();
      m.surface = 8.0 * shape.a() + 8.0 * shape.b();
      m.inradius = shape.a();
      break;
    case ShapeKind::ball:
      m.volume = unit_ball_volume(m.dimension) * std::pow(shape.radius(), m.dimension);
      m.surface = m.dimension * m.volume / shape.radius();
      m.inradius = shape.radius();
      break;
    case ShapeKind::polytope: {
      const auto polygon = detail::clip_halfspaces(shape.halfspaces());
      m.volume = detail::polygon_area(polygon.vertices);
      m.surface = detail::polygon_perimeter(polygon.vertices);
      m.inradius = inradius_polytope(shape.halfspaces()).radius;
      break;
    }
  }
  return m;
}

double diameter(const ShapeSpec& shape) {
  switch (shape.kind()) {
    case ShapeKind::parallelepiped: {
      double sum = 0.0;
      for (double a : shape.half_axes()) sum += a * a;
      return 2.0 * std::sqrt(sum);
    }
    case ShapeKind::ellipsoid:
      return 2.0 * *std::max_element(shape.half_axes().begin(), shape.half_axes().end());
    case ShapeKind::stadium: return 2.0 * (shape.a() + shape.b());
    case ShapeKind::swiss_cross: return 2.0 * std::hypot(shape.a() + shape.b(), shape.a());
    case ShapeKind::ball: return 2.0 * shape.radius();
    case ShapeKind::polytope: {
      const auto vertices = polygon_vertices(shape.halfspaces());
      double best = 0.0;
      for (const auto& p : vertices) {
        for (const auto& q : vertices) best = std::max(best, (p - q).norm());
      }
      return best;
    }
  }
  return 0.0;
}

double star_tolerance(const ShapeSpec& shape) { return 1e-9 * diameter(shape); }

BoundaryMesh boundary_mesh(const ShapeSpec& shape, int resolution) {
  if (resolution < 4) throw InputError("boundary mesh resolution must be at least 4");
  BoundaryMesh mesh;
  mesh.dimension = shape.dimension();
  mesh.diameter = diameter(shape);
  mesh.star_tolerance = 1e-9 * mesh.diameter;
  const int d = shape.dimension();

  auto push_box = [&](const std::vector<double>& a) {
    const double volume = std::accumulate(a.begin(), a.end(), 1.0, std::multiplies<>()) * std::pow(2.0, d);
    for (int i = 0; i < d; ++i) {
      // Facet x_i = +-a_i has measure 2^{d-1} prod_{j != i} a_j.
      const double facet = volume / (2.0 * a[i]);
      for (int sign : {1, -1}) {
        Point x = Point::Zero(d);
        Point n = Point::Zero(d);
        x(i) = sign * a[i];
        n(i) = sign;
        push_node(mesh, std::move(x), std::move(n), facet);
      }
    }
  };

  switch (shape.kind()) {
    case ShapeKind::parallelepiped:
      push_box(shape.half_axes());
      break;
    case ShapeKind::ellipsoid:
    case ShapeKind::ball: {
      std::vector<double> a = shape.kind() == ShapeKind::ball ? std::vector<double>(d, shape.radius())
                                                             : shape.half_axes();
      if (d == 1) {
        push_box(a);
      } else if (d == 2) {
        push_ellipse(mesh, a[0], a[1], resolution);
      } else if (d == 3) {
        push_ellipsoid(mesh, a[0], a[1], a[2], resolution);
      } else {
        throw InputError("boundary meshes of balls are available for d <= 3 only");
      }
      break;
    }
    case ShapeKind::stadium: {
      const double a = shape.a();
      const double b = shape.b();
      if (b > 0.0) {
        push_node(mesh, vec2(0.0, a), vec2(0.0, 1.0), 2.0 * b);
        push_node(mesh, vec2(0.0, -a), vec2(0.0, -1.0), 2.0 * b);
      }
      push_arc(mesh, vec2(b, 0.0), a, -0.5 * kPi, 0.5 * kPi, resolution);
      push_arc(mesh, vec2(-b, 0.0), a, 0.5 * kPi, 1.5 * kPi, resolution);
      break;
    }
    case ShapeKind::swiss_cross: {
      const double a = shape.a();
      const double b = shape.b();
      const double reach = a + b;
      for (int axis = 0; axis < 2; ++axis) {
        for (int sign : {1, -1}) {
          Point x = Point::Zero(2);
          Point n = Point::Zero(2);
          x(axis) = sign * reach;
          n(axis) = sign;
          push_node(mesh, std::move(x), std::move(n), 2.0 * a);
          if (b == 0.0) continue;
          // The two sides of this arm.
          for (int side : {1, -1}) {
            Point xs = Point::Zero(2);
            Point ns = Point::Zero(2);
            xs(axis) = sign * (a + 0.5 * b);
            xs(1 - axis) = side * a;
            ns(1 - axis) = side;
            push_node(mesh, std::move(xs), std::move(ns), b);
          }
        }
      }
      break;
    }
    case ShapeKind::polytope: {
      const auto polygon = detail::clip_halfspaces(shape.halfspaces());
      const std::size_t n = polygon.vertices.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Eigen::Vector2d& p = polygon.vertices[i];
        const Eigen::Vector2d& q = polygon.vertices[(i + 1) % n];
        const double length = (q - p).norm();
        if (length <= 1e-14 * mesh.diameter) continue;
        const Eigen::Vector2d mid = 0.5 * (p + q);
        push_node(mesh, vec2(mid.x(), mid.y()), shape.halfspaces()[polygon.edge_labels[i]].normal, length);
      }
      break;
    }
  }
  return mesh;
}

double min_support(const BoundaryMesh& mesh, const Point& xi) {
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& node : mesh.nodes) lowest = std::min(lowest, (node.position - xi).dot(node.normal));
  return lowest;
}

bool is_star_center(const BoundaryMesh& mesh, const Point& xi) {
  if (xi.size() != mesh.dimension) return false;
  return min_support(mesh, xi) > mesh.star_tolerance;
}

double support_inv_integral(const BoundaryMesh& mesh, const Point& xi) {
  if (!is_star_center(mesh, xi)) throw NotStarShapedError("not strictly star-shaped from xi");
  double sum = 0.0;
  for (const auto& node : mesh.nodes) sum += node.weight / (node.position - xi).dot(node.normal);
  return sum;
}

double support_integral(const BoundaryMesh& mesh, const Point& xi) {
  if (!is_star_center(mesh, xi)) throw NotStarShapedError("not strictly star-shaped from xi");
  double sum = 0.0;
  for (const auto& node : mesh.nodes) sum += node.weight * (node.position - xi).dot(node.normal);
  return sum;
}

ChebyshevCenter inradius_polytope(std::span<const HalfSpace> halfspaces) {
  if (halfspaces.empty()) throw InputError("unbounded domain");
  const int d = static_cast<int>(halfspaces.front().normal.size());
  const int m = static_cast<int>(halfspaces.size());
  // Variables (xi+, xi-, r) >= 0; maximize r subject to N.(xi+ - xi-) + |N| r <= c.
  Eigen::MatrixXd A(m, 2 * d + 1);
  Eigen::VectorXd b(m);
  for (int i = 0; i < m; ++i) {
    const Point& n = halfspaces[i].normal;
    A.row(i).head(d) = n.transpose();
    A.row(i).segment(d, d) = -n.transpose();
    A(i, 2 * d) = n.norm();
    b(i) = halfspaces[i].offset;
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * d + 1);
  c(2 * d) = 1.0;
  const LpResult lp = maximize_lp(A, b, c);
  if (lp.status == LpStatus::unbounded) throw InputError("unbounded domain");
  if (lp.status == LpStatus::infeasible) throw InputError("polytope is empty");
  ChebyshevCenter out;
  out.radius = lp.x(2 * d);
  out.center = lp.x.head(d) - lp.x.segment(d, d);
  if (out.radius <= 0.0) throw InputError("polytope has empty interior");
  return out;
}

Point default_center(const ShapeSpec& shape) {
  if (shape.kind() == ShapeKind::polytope) return inradius_polytope(shape.halfspaces()).center;
  return Point::Zero(shape.dimension());
}

bool contains(const ShapeSpec& shape, const Point& x) {
  switch (shape.kind()) {
    case ShapeKind::parallelepiped:
      for (int i = 0; i < shape.dimension(); ++i) {
        if (std::abs(x(i)) >= shape.half_axes()[i]) return false;
      }
      return true;
    case ShapeKind::ellipsoid: {
      double s = 0.0;
      for (int i = 0; i < shape.dimension(); ++i) {
        const double t = x(i) / shape.half_axes()[i];
        s += t * t;
      }
      return s < 1.0;
    }
    case ShapeKind::ball: return x.squaredNorm() < shape.radius() * shape.radius();
    case ShapeKind::stadium: {
      const double q = std::max(std::abs(x(0)) - shape.b(), 0.0);
      return q * q + x(1) * x(1) < shape.a() * shape.a();
    }
    case ShapeKind::swiss_cross: {
      const double a = shape.a();
      const double reach = a + shape.b();
      const double u = std::abs(x(0));
      const double v = std::abs(x(1));
      return (u < reach && v < a) || (u < a && v < reach);
    }
    case ShapeKind::polytope:
      for (const auto& h : shape.halfspaces()) {
        if (h.normal.dot(x) >= h.offset) return false;
      }
      return true;
  }
  return false;
}

std::optional<double> boundary_crossing(const ShapeSpec& shape, const Point& x, int axis, int direction,
                                        double max_distance) {
  double t = std::numeric_limits<double>::infinity();
  switch (shape.kind()) {
    case ShapeKind::parallelepiped:
      t = shape.half_axes()[axis] - direction * x(axis);
      break;
    case ShapeKind::ellipsoid:
    case ShapeKind::ball: {
      // Solve sum ((x_i + t e_i)/a_i)^2 = 1 for the positive root.
      double rest = 0.0;
      for (int i = 0; i < shape.dimension(); ++i) {
        if (i == axis) continue;
        const double ai = shape.kind() == ShapeKind::ball ? shape.radius() : shape.half_axes()[i];
        rest += (x(i) / ai) * (x(i) / ai);
      }
      const double ak = shape.kind() == ShapeKind::ball ? shape.radius() : shape.half_axes()[axis];
      const double reach = ak * std::sqrt(std::max(0.0, 1.0 - rest));
      t = reach - direction * x(axis);
      break;
    }
    case ShapeKind::polytope:
      for (const auto& h : shape.halfspaces()) {
        const double rate = direction * h.normal(axis);
        if (rate > 0.0) t = std::min(t, (h.offset - h.normal.dot(x)) / rate);
      }
      break;
    case ShapeKind::stadium:
    case ShapeKind::swiss_cross:
      t = bisect_crossing(shape, x, axis, direction, max_distance);
      break;
  }
  if (!(t <= max_distance)) return std::nullopt;
  return std::max(t, 0.0);
}

std::pair<Point, Point> bounding_box(const ShapeSpec& shape) {
  const int d = shape.dimension();
  Point upper(d);
  switch (shape.kind()) {
    case ShapeKind::parallelepiped:
    case ShapeKind::ellipsoid:
      for (int i = 0; i < d; ++i) upper(i) = shape.half_axes()[i];
      break;
    case ShapeKind::ball: upper.setConstant(shape.radius()); break;
    case ShapeKind::stadium: upper << shape.a() + shape.b(), shape.a(); break;
    case ShapeKind::swiss_cross: upper.setConstant(shape.a() + shape.b()); break;
    case ShapeKind::polytope: {
      const auto vertices = polygon_vertices(shape.halfspaces());
      Point lower = Point::Constant(2, std::numeric_limits<double>::infinity());
      upper.setConstant(-std::numeric_limits<double>::infinity());
      for (const auto& v : vertices) {
        lower = lower.cwiseMin(Point(v));
        upper = upper.cwiseMax(Point(v));
      }
      return {lower, upper};
    }
  }
  return {-upper, upper};
}

std::vector<Eigen::Vector2d> polygon_vertices(std::span<const HalfSpace> halfspaces) {
  return detail::clip_halfspaces(halfspaces).vertices;
}

}  // namespace spectral_bounds
