#pragma once

// Planar primitives shared by every other module: points, normalized lines,
// segments, similarities, cones and parabolas.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace trivisit {

/// Raised for invalid geometry: degenerate or obtuse triangles, points
/// outside the triangle, out-of-domain angle arguments.
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace tol {
inline constexpr double kLength = 1e-12;     // degenerate lengths / areas
inline constexpr double kAngle = 1e-12;      // non-obtuse gate slack
inline constexpr double kAngleSum = 1e-9;
inline constexpr double kInside = 1e-9;      // point-in-triangle slack
inline constexpr double kTie = 1e-9;         // cost ties
}  // namespace tol

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  constexpr Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  constexpr Point2 operator-() const { return {-x, -y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Point2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Point2& operator+=(Point2 o) { x += o.x; y += o.y; return *this; }
  constexpr Point2& operator-=(Point2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr bool operator==(const Point2&) const = default;
};

constexpr Point2 operator*(double s, Point2 p) { return p * s; }

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
constexpr Point2 perp(Point2 a) { return {-a.y, a.x}; }
constexpr Point2 lerp(Point2 a, Point2 b, double t) { return a + (b - a) * t; }
constexpr Point2 midpoint(Point2 a, Point2 b) { return (a + b) * 0.5; }

inline Point2 normalized(Point2 a) {
  const double n = norm(a);
  if (n < tol::kLength) throw GeometryError("cannot normalize a zero vector");
  return a / n;
}

inline Point2 rotated(Point2 a, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Signed twice-area of (a, b, c); positive when counter-clockwise.
constexpr double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

/// Implicit line a*x + b*y + c = 0 with a^2 + b^2 = 1.
struct Line {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;

  static Line through(Point2 p, Point2 q) {
    const Point2 d = q - p;
    const double len = norm(d);
    if (len < tol::kLength) throw GeometryError("line through coincident points");
    const Point2 n = perp(d) / len;
    return {n.x, n.y, -dot(n, p)};
  }

  /// Line through p with the given (not necessarily unit) normal.
  static Line with_normal(Point2 p, Point2 normal) {
    const Point2 n = normalized(normal);
    return {n.x, n.y, -dot(n, p)};
  }

  Point2 normal() const { return {a, b}; }
  Point2 direction() const { return {-b, a}; }
  double signed_distance(Point2 p) const { return a * p.x + b * p.y + c; }
  double distance(Point2 p) const { return std::abs(signed_distance(p)); }
  Point2 some_point() const { return normal() * (-c); }
};

inline Point2 project(Point2 p, const Line& l) { return p - l.normal() * l.signed_distance(p); }

inline Point2 reflect(Point2 p, const Line& l) { return p - l.normal() * (2.0 * l.signed_distance(p)); }

/// Intersection of two lines; empty when (nearly) parallel.
inline std::optional<Point2> intersect(const Line& l1, const Line& l2) {
  const double det = l1.a * l2.b - l1.b * l2.a;
  if (std::abs(det) < 1e-14) return std::nullopt;
  return Point2{(l1.b * l2.c - l2.b * l1.c) / det, (l2.a * l1.c - l1.a * l2.c) / det};
}

struct Segment {
  Point2 p;
  Point2 q;

  Segment() = default;
  Segment(Point2 p0, Point2 q0) : p(p0), q(q0) {
    if (norm(q - p) <= tol::kLength) throw GeometryError("degenerate segment");
  }

  double length() const { return norm(q - p); }
  Line line() const { return Line::through(p, q); }
  Point2 at(double t) const { return lerp(p, q, t); }
};

/// Parameter in [0, 1] of the closest point of s to p.
inline double closest_parameter(Point2 p, const Segment& s) {
  const Point2 d = s.q - s.p;
  return std::clamp(dot(p - s.p, d) / dot(d, d), 0.0, 1.0);
}

inline Point2 closest_point(Point2 p, const Segment& s) { return s.at(closest_parameter(p, s)); }

inline double dist_point_segment(Point2 p, const Segment& s) { return distance(p, closest_point(p, s)); }

inline Segment reflect(const Segment& s, const Line& l) { return {reflect(s.p, l), reflect(s.q, l)}; }

/// Where the segment a->b crosses line l, as a parameter along a->b.
inline std::optional<double> crossing_parameter(Point2 a, Point2 b, const Line& l) {
  const double da = l.signed_distance(a), db = l.signed_distance(b);
  if (std::abs(da - db) < 1e-15) return std::nullopt;
  return da / (da - db);
}

/// x' = scale * R(rotation) * x + translation. Orientation preserving.
struct Similarity {
  double rotation = 0.0;
  double scale = 1.0;
  Point2 translation{};

  Point2 apply(Point2 p) const { return rotated(p, rotation) * scale + translation; }
  double apply_length(double len) const { return len * scale; }

  Similarity inverse() const {
    Similarity inv;
    inv.rotation = -rotation;
    inv.scale = 1.0 / scale;
    inv.translation = rotated(-translation, -rotation) * inv.scale;
    return inv;
  }

  /// (this ∘ other)(p) = this(other(p)).
  Similarity compose(const Similarity& other) const {
    Similarity out;
    out.rotation = rotation + other.rotation;
    out.scale = scale * other.scale;
    out.translation = apply(other.translation);
    return out;
  }
};

/// Cone with tip, unit bisector direction and half-angle; `empty` encodes
/// the degenerate empty cone, which is distinct from a zero-angle ray.
struct Cone {
  Point2 tip{};
  Point2 bisector{1.0, 0.0};
  double half_angle = 0.0;
  bool empty = false;

  bool is_ray() const { return !empty && half_angle <= 1e-12; }

  bool contains(Point2 p, double slack = 1e-12) const {
    if (empty) return false;
    const Point2 v = p - tip;
    const double r = norm(v);
    if (r <= slack) return true;
    const double c = std::clamp(dot(v, bisector) / r, -1.0, 1.0);
    return std::acos(c) <= half_angle + slack;
  }
};

/// Parabola as the locus of points equidistant from `focus` and `directrix`.
/// Parametrized by the coordinate u along the directrix direction, measured
/// from the foot of the focus.
struct Parabola {
  Point2 focus{};
  Line directrix{};

  Parabola() = default;
  Parabola(Point2 f, const Line& d) : focus(f), directrix(d) {
    if (directrix.distance(focus) <= tol::kLength) throw GeometryError("focus lies on directrix");
  }

  double focal_distance() const { return directrix.distance(focus); }

  Point2 at(double u) const {
    const double f = focal_distance();
    const Point2 n = directrix.normal() * (directrix.signed_distance(focus) > 0 ? 1.0 : -1.0);
    const Point2 foot = project(focus, directrix);
    const double v = (u * u + f * f) / (2.0 * f);
    return foot + directrix.direction() * u + n * v;
  }

  double parameter_of(Point2 p) const { return dot(p - project(focus, directrix), directrix.direction()); }

  /// Positive when p is on the focus side (closer to the focus than the directrix).
  double excess(Point2 p) const { return directrix.distance(p) - distance(p, focus); }
};

inline double deg2rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / std::numbers::pi; }

}  // namespace trivisit
