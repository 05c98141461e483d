#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "geometry.hpp"

namespace trivisit {

enum class VertexId { A = 0, B = 1, C = 2 };

/// L = AB, D = BC, R = CA.
enum class EdgeId { L = 0, D = 1, R = 2 };

inline constexpr std::array<VertexId, 3> kVertices{VertexId::A, VertexId::B, VertexId::C};
inline constexpr std::array<EdgeId, 3> kEdges{EdgeId::L, EdgeId::D, EdgeId::R};

inline char to_char(VertexId v) { return "ABC"[static_cast<int>(v)]; }
inline char to_char(EdgeId e) { return "LDR"[static_cast<int>(e)]; }

inline std::pair<VertexId, VertexId> endpoints(EdgeId e) {
  switch (e) {
    case EdgeId::L: return {VertexId::A, VertexId::B};
    case EdgeId::D: return {VertexId::B, VertexId::C};
    case EdgeId::R: return {VertexId::C, VertexId::A};
  }
  return {VertexId::A, VertexId::B};
}

inline EdgeId opposite_edge(VertexId v) {
  switch (v) {
    case VertexId::A: return EdgeId::D;
    case VertexId::B: return EdgeId::R;
    case VertexId::C: return EdgeId::L;
  }
  return EdgeId::D;
}

inline VertexId opposite_vertex(EdgeId e) {
  switch (e) {
    case EdgeId::L: return VertexId::C;
    case EdgeId::D: return VertexId::A;
    case EdgeId::R: return VertexId::B;
  }
  return VertexId::A;
}

/// Vertex shared by two distinct edges.
inline VertexId shared_vertex(EdgeId e1, EdgeId e2) {
  if (e1 == e2) throw std::invalid_argument("shared_vertex needs two distinct edges");
  const int third = 3 - static_cast<int>(e1) - static_cast<int>(e2);
  return opposite_vertex(static_cast<EdgeId>(third));
}

/// The two edges incident to v.
inline std::pair<EdgeId, EdgeId> incident_edges(VertexId v) {
  switch (v) {
    case VertexId::A: return {EdgeId::L, EdgeId::R};
    case VertexId::B: return {EdgeId::L, EdgeId::D};
    case VertexId::C: return {EdgeId::D, EdgeId::R};
  }
  return {EdgeId::L, EdgeId::R};
}

inline double interior_angle(Point2 v, Point2 p, Point2 q) {
  const Point2 a = p - v, b = q - v;
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}

/// Non-obtuse triangle, stored counter-clockwise. Construction swaps B and C
/// when the input is clockwise.
class Triangle {
 public:
  Triangle(Point2 a, Point2 b, Point2 c) : v_{a, b, c} {
    for (const auto& p : v_)
      if (!is_finite(p)) throw GeometryError("non-finite vertex coordinate");
    const double area2 = orient(a, b, c);
    if (std::abs(area2) * 0.5 <= tol::kLength) throw GeometryError("degenerate triangle");
    if (area2 < 0) std::swap(v_[1], v_[2]);
    angle_[0] = interior_angle(v_[0], v_[1], v_[2]);
    angle_[1] = interior_angle(v_[1], v_[2], v_[0]);
    angle_[2] = interior_angle(v_[2], v_[0], v_[1]);
    for (double ang : angle_)
      if (ang > std::numbers::pi / 2 + tol::kAngle) throw GeometryError("obtuse triangle");
    if (std::abs(angle_[0] + angle_[1] + angle_[2] - std::numbers::pi) > tol::kAngleSum)
      throw GeometryError("angle sum differs from pi");
  }

  /// Standard analytic form with the given angles at B and C.
  static Triangle from_angles(double angB, double angC);

  Point2 A() const { return v_[0]; }
  Point2 B() const { return v_[1]; }
  Point2 C() const { return v_[2]; }
  Point2 vertex(VertexId v) const { return v_[static_cast<int>(v)]; }

  double angle(VertexId v) const { return angle_[static_cast<int>(v)]; }

  Segment edge(EdgeId e) const {
    const auto [p, q] = endpoints(e);
    return {vertex(p), vertex(q)};
  }
  Line edge_line(EdgeId e) const { return edge(e).line(); }

  double edge_length(EdgeId e) const { return edge(e).length(); }

  double distance_to_edge(Point2 p, EdgeId e) const { return dist_point_segment(p, edge(e)); }

  double area() const { return 0.5 * orient(v_[0], v_[1], v_[2]); }

  /// Inside or on the boundary, with absolute slack.
  bool contains(Point2 p, double slack = tol::kInside) const {
    // Edge lines have unit normals; for a CCW triangle the interior is on the left.
    for (EdgeId e : kEdges) {
      const auto [a, b] = endpoints(e);
      const Point2 d = normalized(vertex(b) - vertex(a));
      if (cross(d, p - vertex(a)) < -slack) return false;
    }
    return true;
  }

  /// Largest-angle vertex; ties resolve A > B > C.
  VertexId largest_angle_vertex() const {
    VertexId best = VertexId::A;
    for (VertexId v : {VertexId::B, VertexId::C})
      if (angle(v) > angle(best) + 1e-12) best = v;
    return best;
  }

  Point2 centroid() const { return (v_[0] + v_[1] + v_[2]) / 3.0; }

  Point2 from_barycentric(double wa, double wb, double wc) const {
    return v_[0] * wa + v_[1] * wb + v_[2] * wc;
  }

 private:
  std::array<Point2, 3> v_;
  std::array<double, 3> angle_{};
};

/// A = (p, q) of the standard analytic form with the given base angles.
inline Point2 vertex_from_angles(double angB, double angC) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (!(angB > 0 && angC > 0)) throw GeometryError("base angles must be positive");
  if (angB > half_pi + tol::kAngle || angC > half_pi + tol::kAngle)
    throw GeometryError("base angle exceeds pi/2");
  const double s = angB + angC;
  if (s < half_pi - tol::kAngle) throw GeometryError("apex angle exceeds pi/2");
  if (s >= std::numbers::pi) throw GeometryError("base angles sum to pi or more");
  const double denom = std::sin(s);
  return {std::cos(angB) * std::sin(angC) / denom, std::sin(angB) * std::sin(angC) / denom};
}

inline Triangle Triangle::from_angles(double angB, double angC) {
  return {vertex_from_angles(angB, angC), {0.0, 0.0}, {1.0, 0.0}};
}

/// Maps t to its standard analytic form: B at the origin, C at (1, 0).
inline Similarity to_standard(const Triangle& t) {
  const Point2 bc = t.C() - t.B();
  Similarity s;
  s.rotation = -std::atan2(bc.y, bc.x);
  s.scale = 1.0 / norm(bc);
  s.translation = -rotated(t.B(), s.rotation) * s.scale;
  return s;
}

inline Triangle apply(const Similarity& s, const Triangle& t) {
  return {s.apply(t.A()), s.apply(t.B()), s.apply(t.C())};
}

/// Standard analytic form of t and the similarity carrying t onto it.
inline std::pair<Triangle, Similarity> standard_form(const Triangle& t) {
  const Similarity s = to_standard(t);
  // Pin B and C exactly so downstream formulas see the canonical base.
  const Point2 a = s.apply(t.A());
  return {Triangle(a, {0.0, 0.0}, {1.0, 0.0}), s};
}

/// Recovers (angle B, angle C) of a standard-form apex.
inline std::pair<double, double> angles_from_vertex(Point2 a) {
  return {std::atan2(a.y, a.x), std::atan2(a.y, 1.0 - a.x)};
}

inline Point2 incenter_standard(Point2 a) {
  const double lb = std::hypot(a.x, a.y);
  const double lc = std::hypot(a.x - 1.0, a.y);
  return {0.5 * (lb - lc + 1.0), a.y / (lb + lc + 1.0)};
}

inline Point2 incenter(const Triangle& t) {
  const auto [st, sim] = standard_form(t);
  return sim.inverse().apply(incenter_standard(st.A()));
}

inline double inradius(const Triangle& t) {
  return t.edge_line(EdgeId::D).distance(incenter(t));
}

/// Where the bisector of the angle at v meets the opposite edge.
inline Point2 foot_of_bisector(const Triangle& t, VertexId v) {
  const Point2 p = t.vertex(v);
  const auto [q0, q1] = endpoints(opposite_edge(v));
  const Point2 x = t.vertex(q0), y = t.vertex(q1);
  // The foot splits the opposite side in ratio |px| : |py|.
  const double wx = distance(p, x), wy = distance(p, y);
  return x + (y - x) * (wx / (wx + wy));
}

inline Point2 altitude_foot(const Triangle& t, VertexId v) {
  return project(t.vertex(v), t.edge_line(opposite_edge(v)));
}

inline Point2 altitude_midpoint(const Triangle& t, VertexId v) {
  return midpoint(t.vertex(v), altitude_foot(t, v));
}

/// Unit direction of the interior angle bisector at v.
inline Point2 bisector_direction(const Triangle& t, VertexId v) {
  return normalized(foot_of_bisector(t, v) - t.vertex(v));
}

}  // namespace trivisit
