#pragma once

// Makespans for fleets of one, two and three unit-speed robots starting at a
// common point, plus closed forms at the incenter and altitude midpoint.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "geometry.hpp"
#include "triangle.hpp"
#include "visitation.hpp"

namespace trivisit {

struct R3Result {
  double cost = 0.0;
  EdgeId edge = EdgeId::L;
  std::vector<EdgeId> ties;  // every edge within tolerance of the max, including `edge`
  Trajectory trajectory;
};

/// One robot takes `single`, the other visits the remaining pair.
struct R2Partition {
  EdgeId single = EdgeId::L;
  Trajectory single_trajectory;
  Trajectory pair_trajectory;
  double cost = 0.0;  // max of the two legs
};

struct R2Result {
  double cost = 0.0;
  R2Partition best;
  std::vector<R2Partition> optimal;  // all partitions within tolerance
};

struct R1Result {
  double cost = 0.0;
  std::vector<VisitOrder> orders;  // all orders within tolerance of the min
  Trajectory trajectory;           // witness for orders.front()
  std::array<double, 6> order_costs{};
};

struct FleetCostReport {
  R3Result r3;
  R2Result r2;
  R1Result r1;
};

/// Cost evaluators over a precomputed Visitation. The std_* members work on
/// standard-form points and return standard-form costs.
class FleetCosts {
 public:
  explicit FleetCosts(const Triangle& t) : vis_(t) {}
  explicit FleetCosts(Visitation v) : vis_(std::move(v)) {}

  const Visitation& visitation() const { return vis_; }
  const Triangle& standard() const { return vis_.standard(); }

  double std_r3(Point2 q) const {
    double r = 0.0;
    for (EdgeId e : kEdges) r = std::max(r, vis_.standard().distance_to_edge(q, e));
    return r;
  }

  double std_r2(Point2 q) const {
    double best = std::numeric_limits<double>::infinity();
    for (EdgeId single : kEdges) {
      const auto [e1, e2] = incident_edges(opposite_vertex(single));
      const double leg = std::max(vis_.standard().distance_to_edge(q, single), vis_.std_two_set_cost(q, e1, e2));
      best = std::min(best, leg);
    }
    return best;
  }

  double std_r1(Point2 q) const {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 6; ++i) best = std::min(best, vis_.std_three_ordered_cost(q, i));
    return best;
  }

  double std_cost(int robots, Point2 q) const {
    switch (robots) {
      case 1: return std_r1(q);
      case 2: return std_r2(q);
      case 3: return std_r3(q);
    }
    throw std::invalid_argument("fleet size must be 1, 2 or 3");
  }

  R3Result std_r3_report(Point2 q) const {
    R3Result r;
    std::array<double, 3> d{};
    for (EdgeId e : kEdges) d[static_cast<int>(e)] = vis_.standard().distance_to_edge(q, e);
    r.cost = *std::max_element(d.begin(), d.end());
    for (EdgeId e : kEdges)
      if (d[static_cast<int>(e)] >= r.cost - tol::kTie) r.ties.push_back(e);
    r.edge = r.ties.front();
    r.trajectory = vis_.std_visit_one(q, r.edge);
    return r;
  }

  R2Result std_r2_report(Point2 q) const {
    std::vector<R2Partition> parts;
    for (EdgeId single : kEdges) {
      const auto [e1, e2] = incident_edges(opposite_vertex(single));
      R2Partition part;
      part.single = single;
      part.single_trajectory = vis_.std_visit_one(q, single);
      part.pair_trajectory = vis_.std_two_set(q, e1, e2);
      part.cost = std::max(part.single_trajectory.cost, part.pair_trajectory.cost);
      parts.push_back(std::move(part));
    }
    R2Result r;
    r.cost = std::min_element(parts.begin(), parts.end(), [](auto& a, auto& b) { return a.cost < b.cost; })->cost;
    for (auto& part : parts)
      if (part.cost <= r.cost + tol::kTie) r.optimal.push_back(part);
    r.best = r.optimal.front();
    return r;
  }

  R1Result std_r1_report(Point2 q) const {
    R1Result r;
    for (int i = 0; i < 6; ++i) r.order_costs[i] = vis_.std_three_ordered_cost(q, i);
    r.cost = *std::min_element(r.order_costs.begin(), r.order_costs.end());
    for (int i = 0; i < 6; ++i)
      if (r.order_costs[i] <= r.cost + tol::kTie) r.orders.push_back(kAllOrders[i]);
    r.trajectory = vis_.std_three_ordered(q, r.orders.front());
    r.trajectory.tie = r.orders.size() > 1;
    return r;
  }

  FleetCostReport std_report(Point2 q) const { return {std_r3_report(q), std_r2_report(q), std_r1_report(q)}; }

  // Caller-frame versions.

  R3Result r3(Point2 p) const { return back(std_r3_report(checked(p))); }
  R2Result r2(Point2 p) const { return back(std_r2_report(checked(p))); }
  R1Result r1(Point2 p) const { return back(std_r1_report(checked(p))); }
  FleetCostReport report(Point2 p) const {
    const Point2 q = checked(p);
    return {back(std_r3_report(q)), back(std_r2_report(q)), back(std_r1_report(q))};
  }

 private:
  Point2 checked(Point2 p) const {
    const Point2 q = vis_.to_std(p);
    if (!vis_.standard().contains(q)) throw GeometryError("point outside triangle");
    return q;
  }

  R3Result back(R3Result r) const {
    r.cost = vis_.from_standard().apply_length(r.cost);
    r.trajectory = transformed(r.trajectory, vis_.from_standard());
    return r;
  }
  R2Partition back(R2Partition p) const {
    p.cost = vis_.from_standard().apply_length(p.cost);
    p.single_trajectory = transformed(p.single_trajectory, vis_.from_standard());
    p.pair_trajectory = transformed(p.pair_trajectory, vis_.from_standard());
    return p;
  }
  R2Result back(R2Result r) const {
    r.cost = vis_.from_standard().apply_length(r.cost);
    r.best = back(r.best);
    for (auto& p : r.optimal) p = back(p);
    return r;
  }
  R1Result back(R1Result r) const {
    r.cost = vis_.from_standard().apply_length(r.cost);
    for (auto& c : r.order_costs) c = vis_.from_standard().apply_length(c);
    r.trajectory = transformed(r.trajectory, vis_.from_standard());
    return r;
  }

  Visitation vis_;
};

inline R3Result r3(const Triangle& t, Point2 p) { return FleetCosts(t).r3(p); }
inline R2Result r2(const Triangle& t, Point2 p) { return FleetCosts(t).r2(p); }
inline R1Result r1(const Triangle& t, Point2 p) { return FleetCosts(t).r1(p); }
inline FleetCostReport fleet_costs(const Triangle& t, Point2 p) { return FleetCosts(t).report(p); }

/// Two-robot heuristic: one robot drives to the largest-angle vertex, the
/// other drops onto the opposite edge. A diagnostic upper bound on R2.
inline double r2_vertex_heuristic(const Triangle& t, Point2 p) {
  const VertexId v = t.largest_angle_vertex();
  return std::max(distance(p, t.vertex(v)), t.distance_to_edge(p, opposite_edge(v)));
}

inline double r2_incenter_closed(const Triangle& t) {
  return distance(incenter(t), t.vertex(t.largest_angle_vertex()));
}

/// Largest-angle vertex reflected across its opposite edge.
inline Point2 reflected_apex(const Triangle& t) {
  const VertexId v = t.largest_angle_vertex();
  return reflect(t.vertex(v), t.edge_line(opposite_edge(v)));
}

inline double r1_incenter_closed(const Triangle& t) { return distance(incenter(t), reflected_apex(t)); }

/// (R1(I) / R3(I))^2 in terms of the angles, with A the largest.
inline double incenter_ratio13_squared(double angA, double angB, double angC) {
  return 2.0 * (3.0 - 2.0 * std::cos(angA) + 2.0 * std::cos(angB) + 2.0 * std::cos(angC)) / (1.0 - std::cos(angA));
}

/// Midpoint of the altitude from the largest-angle vertex (onto the longest edge).
inline Point2 largest_edge_altitude_midpoint(const Triangle& t) {
  return altitude_midpoint(t, t.largest_angle_vertex());
}

inline double r1_mid_altitude_closed(const Triangle& t) {
  const VertexId v = t.largest_angle_vertex();
  const double a = t.angle(v);
  const double h = t.edge_line(opposite_edge(v)).distance(t.vertex(v));
  return 0.5 * (2.0 - std::cos(2.0 * a)) * h;
}

namespace detail {
inline void require_in(double lo, double x, double hi, const char* what) {
  constexpr double slack = 1e-12;
  if (x < lo - slack || x > hi + slack) throw GeometryError(what);
}
}  // namespace detail

inline void require_domain1(double b, double c) {
  constexpr double pi = std::numbers::pi;
  detail::require_in(0.0, b, 3 * pi / 7, "B outside the h1 domain");
  detail::require_in(std::max(pi / 2 - b, (2 * pi - 3 * b) / 5), c,
                     std::min({2 * pi / 3 - b, pi / 2 - b / 2, pi - 2 * b}), "C outside the h1 domain");
}

inline void require_domain2(double b, double c) {
  constexpr double pi = std::numbers::pi;
  detail::require_in(0.0, b, 3 * pi / 7, "B outside the h2 domain");
  detail::require_in(std::max(pi / 2 - b, (3 * b - pi) / 2), c,
                     std::min({2 * pi / 3 - b, pi / 2 - b / 2, pi - 2 * b}), "C outside the h2 domain");
}

inline double h_denominator(double b, double c) {
  return 2 * std::cos(b + c) + 2 * std::cos(b) + 2 * std::cos(c) + 3;
}

inline double h1(double b, double c) {
  require_domain1(b, c);
  const double k = std::cos((b + c) / 2);
  const double num = -2 * std::cos(b + 2 * c) + 2 * std::cos(c) + 1;
  return k * k * num * num / h_denominator(b, c);
}

inline double h2(double b, double c) {
  require_domain2(b, c);
  const double k = std::cos((b + c) / 2);
  const double num = 2 * std::cos(b - c) + 2 * std::cos(c) + 1;
  return num * num * k * k / h_denominator(b, c);
}

}  // namespace trivisit
