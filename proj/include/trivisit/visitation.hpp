#pragma once

// Shortest trajectories that touch two edges (in a set or in a fixed order)
// or all three edges in a fixed order. Every cost is obtained by unfolding
// the triangle across the visited edges, so a bounce path becomes a straight
// segment to a reflected target.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geometry.hpp"
#include "triangle.hpp"

namespace trivisit {

enum class StrategyKind { Bouncing, DegenerateVertexBounce, SuboptVertexAltitude, DirectToVertex, PerpendicularDrop };

inline std::string_view to_string(StrategyKind k) {
  switch (k) {
    case StrategyKind::Bouncing: return "Bouncing";
    case StrategyKind::DegenerateVertexBounce: return "DegenerateVertexBounce";
    case StrategyKind::SuboptVertexAltitude: return "SuboptVertexAltitude";
    case StrategyKind::DirectToVertex: return "DirectToVertex";
    case StrategyKind::PerpendicularDrop: return "PerpendicularDrop";
  }
  return "?";
}

struct VisitOrder {
  std::array<EdgeId, 3> edges{EdgeId::L, EdgeId::R, EdgeId::D};

  EdgeId operator[](int i) const { return edges[i]; }
  bool operator==(const VisitOrder&) const = default;

  std::string name() const { return {to_char(edges[0]), to_char(edges[1]), to_char(edges[2])}; }

  static VisitOrder parse(std::string_view s) {
    if (s.size() != 3) throw std::invalid_argument("visit order needs three letters");
    VisitOrder o;
    for (int i = 0; i < 3; ++i) {
      switch (s[i]) {
        case 'L': o.edges[i] = EdgeId::L; break;
        case 'D': o.edges[i] = EdgeId::D; break;
        case 'R': o.edges[i] = EdgeId::R; break;
        default: throw std::invalid_argument("unknown edge letter in visit order");
      }
    }
    if (o.edges[0] == o.edges[1] || o.edges[1] == o.edges[2] || o.edges[0] == o.edges[2])
      throw std::invalid_argument("visit order repeats an edge");
    return o;
  }
};

inline const std::array<VisitOrder, 6> kAllOrders{
    VisitOrder{{EdgeId::L, EdgeId::R, EdgeId::D}}, VisitOrder{{EdgeId::L, EdgeId::D, EdgeId::R}},
    VisitOrder{{EdgeId::R, EdgeId::L, EdgeId::D}}, VisitOrder{{EdgeId::R, EdgeId::D, EdgeId::L}},
    VisitOrder{{EdgeId::D, EdgeId::L, EdgeId::R}}, VisitOrder{{EdgeId::D, EdgeId::R, EdgeId::L}}};

inline int order_index(const VisitOrder& o) {
  for (int i = 0; i < 6; ++i)
    if (kAllOrders[i] == o) return i;
  throw std::invalid_argument("not a permutation of L, D, R");
}

inline double polyline_length(const std::vector<Point2>& pts) {
  double s = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) s += distance(pts[i - 1], pts[i]);
  return s;
}

struct Trajectory {
  std::vector<Point2> waypoints;
  double cost = 0.0;
  StrategyKind kind = StrategyKind::PerpendicularDrop;
  std::vector<EdgeId> sequence;  // edges in the order they are visited
  std::optional<VisitOrder> order;
  bool tie = false;  // another order reaches the same cost within tolerance

  std::string sequence_name() const {
    std::string s;
    for (EdgeId e : sequence) s += to_char(e);
    return s;
  }
};

inline Trajectory transformed(const Trajectory& tr, const Similarity& s) {
  Trajectory out = tr;
  for (auto& w : out.waypoints) w = s.apply(w);
  out.cost = s.apply_length(tr.cost);
  return out;
}

/// Both lines are perpendicular to the twice-unfolded third edge c'b'. Their
/// normals are oriented so the positive halfspace has positive signed distance.
struct IndicatorHalfspaces {
  Line bounce;        // through c', normal towards b'
  Line subopt;        // through the shared vertex of the first two edges, normal away from b'
  Point2 bounce_ref;  // shared vertex of the first two edges
  Point2 subopt_ref;  // shared vertex of the first and third edges
  Point2 c_unfolded;  // third vertex reflected across the first edge
  Point2 b_unfolded;  // then reflected across the unfolded second edge

  bool bounce_positive(Point2 p, double eps = 0.0) const { return bounce.signed_distance(p) >= -eps; }
  bool subopt_positive(Point2 p, double eps = 0.0) const { return subopt.signed_distance(p) >= -eps; }
};

inline Cone bouncing_subcone(const Triangle& t, VertexId v) {
  constexpr double third = std::numbers::pi / 3;
  Cone cone;
  cone.tip = t.vertex(v);
  cone.bisector = bisector_direction(t, v);
  const double ang = t.angle(v);
  if (ang < third - tol::kAngle) {
    cone.empty = true;
    return cone;
  }
  cone.half_angle = std::abs(ang - third) <= tol::kAngle ? 0.0 : (3.0 * ang - std::numbers::pi) / 2.0;
  return cone;
}

namespace detail {

/// Unfolding data for visiting `first` then `second`, in standard form.
struct TwoEdgeUnfolding {
  EdgeId first{}, second{};
  VertexId shared{};
  Point2 vertex;    // shared vertex
  Point2 far;       // other endpoint of the second edge
  Line first_line;
  Segment reflected;  // second edge reflected across the first, starting at `vertex`

  TwoEdgeUnfolding() = default;
  TwoEdgeUnfolding(const Triangle& t, EdgeId e1, EdgeId e2) : first(e1), second(e2), shared(shared_vertex(e1, e2)) {
    vertex = t.vertex(shared);
    const auto [a, b] = endpoints(e2);
    far = t.vertex(a == shared ? b : a);
    first_line = t.edge_line(e1);
    reflected = Segment(vertex, reflect(far, first_line));
  }

  Trajectory evaluate(Point2 p) const {
    Trajectory tr;
    tr.sequence = {first, second};
    const double s = closest_parameter(p, reflected);
    const Point2 x = reflected.at(s);
    tr.cost = distance(p, x);
    if (s <= 0.0) {
      tr.kind = StrategyKind::DirectToVertex;
      tr.waypoints = {p, vertex};
      return tr;
    }
    Point2 m = p;
    if (auto c = crossing_parameter(p, x, first_line)) m = lerp(p, x, std::clamp(*c, 0.0, 1.0));
    if (s >= 1.0) {
      tr.kind = StrategyKind::DegenerateVertexBounce;
      tr.waypoints = {p, m, far};
    } else {
      tr.kind = StrategyKind::Bouncing;
      tr.waypoints = {p, m, reflect(x, first_line)};
    }
    return tr;
  }
};

/// Unfolding data for an ordered three-edge visit, in standard form.
/// For order [e1, e2, e3]: a = e1∩e2, c = e2∩e3, b = e1∩e3.
struct ThreeEdgeUnfolding {
  VisitOrder order;
  Point2 a, b, c;
  Line first_line;
  Line second_unfolded;  // line(a, c')
  Point2 c1, b1;         // c' and b'
  Line third_unfolded;   // line(c', b')
  Point2 dir;            // unit direction c' -> b'
  Segment third_edge;
  double altitude = 0.0;

  ThreeEdgeUnfolding() = default;
  ThreeEdgeUnfolding(const Triangle& t, const VisitOrder& o) : order(o) {
    a = t.vertex(shared_vertex(o[0], o[1]));
    c = t.vertex(shared_vertex(o[1], o[2]));
    b = t.vertex(shared_vertex(o[0], o[2]));
    first_line = Line::through(a, b);
    c1 = reflect(c, first_line);
    second_unfolded = Line::through(a, c1);
    b1 = reflect(b, second_unfolded);
    third_unfolded = Line::through(c1, b1);
    dir = normalized(b1 - c1);
    third_edge = Segment(b, c);
    altitude = dist_point_segment(a, third_edge);
  }

  // For a non-obtuse triangle `a` never lies beyond c' (it sits on the bounce
  // line exactly when the angle at c is right) and `b` always lies on the
  // far side of `a` from b', so both sides are fixed by `dir` alone.
  double bounce_side(Point2 p) const { return dot(p - c1, dir); }
  double subopt_side(Point2 p) const { return dot(a - p, dir); }

  Trajectory bouncing(Point2 p) const {
    Trajectory tr;
    tr.kind = StrategyKind::Bouncing;
    tr.cost = third_unfolded.distance(p);
    const Point2 x = project(p, third_unfolded);
    Point2 e = p, h1 = p;
    if (auto s = crossing_parameter(p, x, first_line)) e = lerp(p, x, std::clamp(*s, 0.0, 1.0));
    if (auto s = crossing_parameter(p, x, second_unfolded)) h1 = lerp(p, x, std::clamp(*s, 0.0, 1.0));
    const Point2 h = reflect(h1, first_line);
    const Point2 g = reflect(reflect(x, second_unfolded), first_line);
    tr.waypoints = {p, e, h, g};
    return tr;
  }

  Trajectory through_vertex(Point2 p) const {
    Trajectory tr;
    tr.kind = StrategyKind::DegenerateVertexBounce;
    tr.cost = distance(p, c1);
    Point2 j = p;
    if (auto s = crossing_parameter(p, c1, first_line)) j = lerp(p, c1, std::clamp(*s, 0.0, 1.0));
    tr.waypoints = {p, j, c};
    return tr;
  }

  Trajectory via_shared_vertex(Point2 p) const {
    Trajectory tr;
    tr.kind = StrategyKind::SuboptVertexAltitude;
    tr.cost = distance(p, a) + altitude;
    tr.waypoints = {p, a, closest_point(a, third_edge)};
    return tr;
  }

  /// Cost only; the hot path for raster and sweep evaluation.
  double cost(Point2 p) const {
    constexpr double eps = tol::kTie;
    const double sb = bounce_side(p), ss = subopt_side(p);
    if (ss > eps) {
      if (sb > eps) return third_unfolded.distance(p);
      if (sb < -eps) return distance(p, c1);
      return std::min(third_unfolded.distance(p), distance(p, c1));
    }
    const double sub = distance(p, a) + altitude;
    if (ss < -eps) return sub;
    double best = sub;
    if (sb >= -eps) best = std::min(best, third_unfolded.distance(p));
    if (sb <= eps) best = std::min(best, distance(p, c1));
    return best;
  }

  Trajectory evaluate(Point2 p) const {
    constexpr double eps = tol::kTie;
    const double sb = bounce_side(p), ss = subopt_side(p);
    std::optional<Trajectory> best;
    // On an indicator line the candidates agree; equal costs keep the earlier shape.
    auto consider = [&](Trajectory tr) {
      if (!best || tr.cost < best->cost - 1e-12) best = std::move(tr);
    };
    if (ss >= -eps && sb <= eps) consider(through_vertex(p));
    if (ss >= -eps && sb >= -eps) consider(bouncing(p));
    if (ss <= eps) consider(via_shared_vertex(p));
    best->order = order;
    best->sequence = {order[0], order[1], order[2]};
    return *best;
  }
};

}  // namespace detail

/// Precomputed unfoldings of one triangle. Works in standard form internally
/// and maps results back to the caller's frame.
class Visitation {
 public:
  explicit Visitation(const Triangle& t) : original_(t), standard_(standard_form(t).first) {
    to_std_ = standard_form(t).second;
    from_std_ = to_std_.inverse();
    for (int i = 0; i < 6; ++i) three_[i] = detail::ThreeEdgeUnfolding(standard_, kAllOrders[i]);
    for (EdgeId e1 : kEdges)
      for (EdgeId e2 : kEdges)
        if (e1 != e2) two_[pair_index(e1, e2)] = detail::TwoEdgeUnfolding(standard_, e1, e2);
  }

  const Triangle& triangle() const { return original_; }
  const Triangle& standard() const { return standard_; }
  const Similarity& to_standard() const { return to_std_; }
  const Similarity& from_standard() const { return from_std_; }

  Point2 to_std(Point2 p) const { return to_std_.apply(p); }

  void require_inside(Point2 p) const {
    if (!standard_.contains(to_std(p))) throw GeometryError("point outside triangle");
  }

  // Standard-form evaluation. Inputs and outputs are standard coordinates.

  Trajectory std_visit_one(Point2 q, EdgeId e) const {
    Trajectory tr;
    tr.kind = StrategyKind::PerpendicularDrop;
    tr.sequence = {e};
    const Point2 f = closest_point(q, standard_.edge(e));
    tr.waypoints = {q, f};
    tr.cost = distance(q, f);
    return tr;
  }

  Trajectory std_two_ordered(Point2 q, EdgeId first, EdgeId second) const {
    return two_[pair_index(first, second)].evaluate(q);
  }

  double std_two_ordered_cost(Point2 q, EdgeId first, EdgeId second) const {
    return dist_point_segment(q, two_[pair_index(first, second)].reflected);
  }

  Trajectory std_two_set(Point2 q, EdgeId e1, EdgeId e2) const {
    Trajectory t1 = std_two_ordered(q, e1, e2);
    Trajectory t2 = std_two_ordered(q, e2, e1);
    if (std::abs(t1.cost - t2.cost) <= tol::kTie) {
      const bool second_first = standard_.distance_to_edge(q, e2) < standard_.distance_to_edge(q, e1);
      Trajectory& pick = second_first ? t2 : t1;
      pick.tie = true;
      return pick;
    }
    return t1.cost < t2.cost ? t1 : t2;
  }

  double std_two_set_cost(Point2 q, EdgeId e1, EdgeId e2) const {
    return std::min(std_two_ordered_cost(q, e1, e2), std_two_ordered_cost(q, e2, e1));
  }

  Trajectory std_three_ordered(Point2 q, const VisitOrder& o) const { return three_[order_index(o)].evaluate(q); }
  double std_three_ordered_cost(Point2 q, int order_idx) const { return three_[order_idx].cost(q); }

  const detail::ThreeEdgeUnfolding& unfolding(int order_idx) const { return three_[order_idx]; }
  const detail::TwoEdgeUnfolding& unfolding(EdgeId first, EdgeId second) const {
    return two_[pair_index(first, second)];
  }

  // Caller-frame evaluation.

  Trajectory visit_one(Point2 p, EdgeId e) const { return back(std_visit_one(checked(p), e)); }
  Trajectory visit_two_ordered(Point2 p, EdgeId first, EdgeId second) const {
    if (first == second) throw std::invalid_argument("ordered visit needs two distinct edges");
    return back(std_two_ordered(checked(p), first, second));
  }
  Trajectory visit_two_set(Point2 p, EdgeId e1, EdgeId e2) const {
    if (e1 == e2) throw std::invalid_argument("set visit needs two distinct edges");
    return back(std_two_set(checked(p), e1, e2));
  }
  Trajectory visit_three_ordered(Point2 p, const VisitOrder& o) const {
    return back(std_three_ordered(checked(p), o));
  }

  IndicatorHalfspaces indicator_halfspaces(const VisitOrder& o) const {
    const auto& u = three_[order_index(o)];
    IndicatorHalfspaces h;
    h.c_unfolded = from_std_.apply(u.c1);
    h.b_unfolded = from_std_.apply(u.b1);
    const Point2 normal = h.b_unfolded - h.c_unfolded;
    h.bounce = Line::with_normal(h.c_unfolded, normal);
    h.subopt = Line::with_normal(from_std_.apply(u.a), -normal);
    h.bounce_ref = from_std_.apply(u.a);
    h.subopt_ref = from_std_.apply(u.b);
    return h;
  }

 private:
  static int pair_index(EdgeId e1, EdgeId e2) { return static_cast<int>(e1) * 3 + static_cast<int>(e2); }

  Point2 checked(Point2 p) const {
    const Point2 q = to_std(p);
    if (!standard_.contains(q)) throw GeometryError("point outside triangle");
    return q;
  }

  Trajectory back(const Trajectory& tr) const { return transformed(tr, from_std_); }

  Triangle original_;
  Triangle standard_;
  Similarity to_std_, from_std_;
  std::array<detail::ThreeEdgeUnfolding, 6> three_;
  std::array<detail::TwoEdgeUnfolding, 9> two_;
};

inline Trajectory visit_two_ordered(const Triangle& t, Point2 p, EdgeId first, EdgeId second) {
  return Visitation(t).visit_two_ordered(p, first, second);
}

inline Trajectory visit_two_set(const Triangle& t, Point2 p, EdgeId e1, EdgeId e2) {
  return Visitation(t).visit_two_set(p, e1, e2);
}

inline Trajectory visit_three_ordered(const Triangle& t, Point2 p, const VisitOrder& o) {
  return Visitation(t).visit_three_ordered(p, o);
}

inline IndicatorHalfspaces indicator_halfspaces(const Triangle& t, const VisitOrder& o) {
  return Visitation(t).indicator_halfspaces(o);
}

}  // namespace trivisit
