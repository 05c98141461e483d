#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "trivisit/oracle.hpp"
#include "trivisit/visitation.hpp"

using namespace trivisit;
using std::numbers::pi;

namespace {

double angle_to_line(Point2 from, Point2 at, const Line& l) {
  const Point2 v = normalized(from - at);
  return std::asin(std::clamp(std::abs(cross(l.direction(), v)), 0.0, 1.0));
}

bool touches(const Trajectory& tr, const Triangle& t, EdgeId e) {
  for (const auto& w : tr.waypoints)
    if (t.distance_to_edge(w, e) <= 1e-9) return true;
  return false;
}

}  // namespace

TEST(VisitOrder, ParseAndName) {
  EXPECT_EQ(VisitOrder::parse("DLR").name(), "DLR");
  EXPECT_THROW(VisitOrder::parse("LLD"), std::invalid_argument);
  EXPECT_THROW(VisitOrder::parse("LDX"), std::invalid_argument);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(order_index(kAllOrders[i]), i);
}

TEST(Subcone, EquilateralIsRay) {
  for (VertexId v : kVertices) {
    const Cone c = bouncing_subcone(fixtures::equilateral(), v);
    EXPECT_TRUE(c.is_ray());
    EXPECT_FALSE(c.empty);
  }
}

TEST(Subcone, RightAngleCoversWholeAngle) {
  const Cone c = bouncing_subcone(fixtures::right_isosceles(), VertexId::A);
  EXPECT_NEAR(c.half_angle, pi / 4, 1e-12);
  EXPECT_TRUE(c.contains({0.5, 0.25}));
}

TEST(Subcone, SmallAngleIsEmpty) {
  const Cone c = bouncing_subcone(fixtures::right_isosceles(), VertexId::B);
  EXPECT_TRUE(c.empty);
  EXPECT_FALSE(c.is_ray());
}

TEST(TwoOrdered, EquilateralIncenterLR) {
  const Triangle t = fixtures::equilateral();
  const Trajectory tr = visit_two_ordered(t, incenter(t), EdgeId::L, EdgeId::R);
  EXPECT_NEAR(tr.cost, 0.5773502691896258, 1e-8);
  EXPECT_NEAR(tr.cost, oracle_ordered2(t, incenter(t), EdgeId::L, EdgeId::R), 1e-9);
}

TEST(TwoOrdered, StartOnFirstEdge) {
  const Triangle t = fixtures::right_isosceles();
  const Point2 p = t.edge(EdgeId::D).at(0.3);
  const Trajectory tr = visit_two_ordered(t, p, EdgeId::D, EdgeId::R);
  EXPECT_NEAR(tr.cost, t.distance_to_edge(p, EdgeId::R), 1e-12);
  EXPECT_NEAR(distance(tr.waypoints[1], p), 0.0, 1e-12);
}

TEST(TwoOrdered, RightIsoscelesAltitudeMidpointGoesToApex) {
  const Triangle t = fixtures::right_isosceles();
  const Trajectory tr = visit_two_ordered(t, {0.5, 0.25}, EdgeId::L, EdgeId::R);
  EXPECT_NEAR(tr.cost, 0.25, 1e-12);
  EXPECT_EQ(tr.kind, StrategyKind::DirectToVertex);
}

TEST(TwoOrdered, OutsidePointIsRejected) {
  EXPECT_THROW(visit_two_ordered(fixtures::equilateral(), {2, 2}, EdgeId::L, EdgeId::R), GeometryError);
}

TEST(TwoSet, BisectorTie) {
  const Triangle t = fixtures::isosceles_apex(50);
  const Point2 p = lerp(t.B(), foot_of_bisector(t, VertexId::B), 0.4);
  const Visitation vis(t);
  const Trajectory tr = vis.visit_two_set(p, EdgeId::L, EdgeId::D);
  EXPECT_TRUE(tr.tie);
  EXPECT_NEAR(vis.visit_two_ordered(p, EdgeId::L, EdgeId::D).cost,
              vis.visit_two_ordered(p, EdgeId::D, EdgeId::L).cost, 1e-9);
}

TEST(TwoSet, InsideSubconeGoesToVertex) {
  const Triangle t = fixtures::right_isosceles();
  const Point2 p{0.45, 0.3};
  ASSERT_TRUE(bouncing_subcone(t, VertexId::A).contains(p));
  const Trajectory tr = visit_two_set(t, p, EdgeId::L, EdgeId::R);
  EXPECT_NEAR(tr.cost, distance(p, t.A()), 1e-12);
  EXPECT_EQ(tr.kind, StrategyKind::DirectToVertex);
}

TEST(TwoSet, EquilateralMatchesOracle) {
  const Triangle t = fixtures::equilateral();
  const Point2 p{0.25, 0.1};
  const double oracle =
      std::min(oracle_ordered2(t, p, EdgeId::L, EdgeId::D), oracle_ordered2(t, p, EdgeId::D, EdgeId::L));
  EXPECT_NEAR(visit_two_set(t, p, EdgeId::L, EdgeId::D).cost, oracle, 1e-6);
}

TEST(TwoOrdered, MatchesOracleEverywhere) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = fixtures::random_triangle(rng);
    const Point2 p = fixtures::random_point(rng, t);
    const Visitation vis(t);
    for (EdgeId e1 : kEdges)
      for (EdgeId e2 : kEdges) {
        if (e1 == e2) continue;
        ASSERT_NEAR(vis.visit_two_ordered(p, e1, e2).cost, oracle_ordered2(t, p, e1, e2), 1e-8);
      }
  }
}

TEST(TwoOrdered, TrajectoryInvariants) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = fixtures::random_triangle(rng);
    const Point2 p = fixtures::random_point(rng, t);
    const Visitation vis(t);
    for (EdgeId e1 : kEdges)
      for (EdgeId e2 : kEdges) {
        if (e1 == e2) continue;
        const Trajectory tr = vis.visit_two_ordered(p, e1, e2);
        ASSERT_NEAR(polyline_length(tr.waypoints), tr.cost, 1e-12);
        ASSERT_TRUE(touches(tr, t, e1));
        ASSERT_TRUE(touches(tr, t, e2));
        if (tr.kind == StrategyKind::Bouncing && distance(tr.waypoints[0], tr.waypoints[1]) > 1e-6 &&
            distance(tr.waypoints[1], tr.waypoints[2]) > 1e-6) {
          const Line l = t.edge_line(e1);
          ASSERT_NEAR(angle_to_line(tr.waypoints[0], tr.waypoints[1], l),
                      angle_to_line(tr.waypoints[2], tr.waypoints[1], l), 1e-9);
          // Arrival on the second edge is perpendicular.
          ASSERT_NEAR(dot(tr.waypoints[2] - tr.waypoints[1], t.edge_line(e2).direction()), 0.0, 1e-9);
        }
      }
  }
}

TEST(TwoSet, NoMoreThanEitherOrder) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const Triangle t = fixtures::random_triangle(rng);
    const Point2 p = fixtures::random_point(rng, t);
    const Visitation vis(t);
    const Trajectory set = vis.visit_two_set(p, EdgeId::D, EdgeId::R);
    const double a = vis.visit_two_ordered(p, EdgeId::D, EdgeId::R).cost;
    const double b = vis.visit_two_ordered(p, EdgeId::R, EdgeId::D).cost;
    ASSERT_LE(set.cost, std::min(a, b) + 1e-9);
    ASSERT_GE(set.cost, std::min(a, b) - 1e-15);
  }
}

TEST(Indicators, LinesAreParallel) {
  for (const Triangle& t : {fixtures::equilateral(), fixtures::right_isosceles(), fixtures::isosceles_apex(20)}) {
    for (const auto& o : kAllOrders) {
      const IndicatorHalfspaces h = indicator_halfspaces(t, o);
      EXPECT_NEAR(std::abs(cross(h.bounce.normal(), h.subopt.normal())), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(dot(h.bounce.normal(), normalized(h.b_unfolded - h.c_unfolded))), 1.0, 1e-12);
      EXPECT_TRUE(h.bounce_positive(h.bounce_ref, 1e-12));
      EXPECT_TRUE(h.subopt_positive(h.subopt_ref));
    }
  }
}

TEST(Indicators, EquilateralLRD) {
  // C' = reflection of C across AB, B' = reflection of B across AC'.
  const Triangle t = fixtures::equilateral();
  const IndicatorHalfspaces h = indicator_halfspaces(t, VisitOrder::parse("LRD"));
  const Point2 c1 = reflect(t.C(), t.edge_line(EdgeId::L));
  EXPECT_NEAR(distance(h.c_unfolded, c1), 0.0, 1e-12);
  EXPECT_NEAR(distance(h.b_unfolded, reflect(t.B(), Line::through(t.A(), c1))), 0.0, 1e-12);
  EXPECT_TRUE(h.bounce_positive(incenter(t)));
  EXPECT_TRUE(h.subopt_positive(incenter(t)));
}

TEST(Indicators, RightIsoscelesLRD) {
  // The unfolded segment is BC rotated by pi about A.
  const Triangle t = fixtures::right_isosceles();
  const IndicatorHalfspaces h = indicator_halfspaces(t, VisitOrder::parse("LRD"));
  EXPECT_NEAR(distance(h.c_unfolded, t.A() * 2.0 - t.C()), 0.0, 1e-12);
  EXPECT_NEAR(distance(h.b_unfolded, t.A() * 2.0 - t.B()), 0.0, 1e-12);
}

TEST(Indicators, ReferenceVerticesOnPositiveSides) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const Triangle t = fixtures::random_triangle(rng, 1e-3);
    for (const auto& o : kAllOrders) {
      const IndicatorHalfspaces h = indicator_halfspaces(t, o);
      ASSERT_TRUE(h.bounce_positive(h.bounce_ref, 1e-12));
      ASSERT_TRUE(h.subopt_positive(h.subopt_ref));
    }
  }
}

TEST(ThreeOrdered, RightAngleAtCornerVertex) {
  // The right angle sits at the vertex shared by the last two edges.
  const Triangle t = fixtures::right_isosceles();
  const Point2 p{0.5, 0.25};
  for (const char* name : {"DLR", "DRL"}) {
    const VisitOrder o = VisitOrder::parse(name);
    EXPECT_NEAR(visit_three_ordered(t, p, o).cost, 0.75, 1e-12);
    EXPECT_NEAR(visit_three_ordered(t, p, o).cost, oracle_ordered3(t, p, o), 1e-9);
  }
}

TEST(ThreeOrdered, ExactRightAnglesMatchOracle) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.05, pi / 2 - 0.05);
  OracleConfig cfg;
  cfg.resolution = 16;
  for (int i = 0; i < 60; ++i) {
    const double b = u(rng);
    const Triangle t = (i % 3 == 0)   ? Triangle::from_angles(pi / 2, b)
                       : (i % 3 == 1) ? Triangle::from_angles(b, pi / 2)
                                      : Triangle::from_angles(b, pi / 2 - b);
    const Point2 p = fixtures::random_point(rng, t);
    for (const auto& o : kAllOrders)
      ASSERT_NEAR(visit_three_ordered(t, p, o).cost, oracle_ordered3(t, p, o, cfg), 1e-6) << o.name();
  }
}

TEST(ThreeOrdered, EquilateralIncenterDLR) {
  const Triangle t = fixtures::equilateral();
  const Trajectory tr = visit_three_ordered(t, incenter(t), VisitOrder::parse("DLR"));
  EXPECT_NEAR(tr.cost, 1.1547005383792515, 1e-8);
  EXPECT_EQ(tr.kind, StrategyKind::DegenerateVertexBounce);
  EXPECT_NEAR(tr.cost, distance(incenter(t), reflect(t.A(), t.edge_line(EdgeId::D))), 1e-12);
}

TEST(ThreeOrdered, RightIsoscelesLRD) {
  const Trajectory tr = visit_three_ordered(fixtures::right_isosceles(), {0.5, 0.25}, VisitOrder::parse("LRD"));
  EXPECT_NEAR(tr.cost, 0.75, 1e-12);
}

TEST(ThreeOrdered, MatchesOracle) {
  std::mt19937_64 rng(43);
  OracleConfig cfg;
  cfg.resolution = 16;
  for (int i = 0; i < 200; ++i) {
    const Triangle t = fixtures::random_triangle(rng);
    const Point2 p = fixtures::random_point(rng, t);
    const Visitation vis(t);
    for (const auto& o : kAllOrders)
      ASSERT_NEAR(vis.visit_three_ordered(p, o).cost, oracle_ordered3(t, p, o, cfg), 1e-6)
          << o.name() << " i=" << i;
  }
}

TEST(ThreeOrdered, TrajectoryInvariants) {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 2000; ++i) {
    const Triangle t = fixtures::random_triangle(rng);
    const Point2 p = fixtures::random_point(rng, t);
    const Visitation vis(t);
    for (const auto& o : kAllOrders) {
      const Trajectory tr = vis.visit_three_ordered(p, o);
      ASSERT_NEAR(polyline_length(tr.waypoints), tr.cost, 1e-12) << o.name() << " " << to_string(tr.kind);
      for (EdgeId e : kEdges) ASSERT_TRUE(touches(tr, t, e)) << o.name();
      ASSERT_EQ(tr.order, o);
      if (tr.kind == StrategyKind::Bouncing) {
        // Unfolded straight-line identity.
        const auto& u = vis.unfolding(order_index(o));
        ASSERT_NEAR(tr.cost, u.third_unfolded.distance(p), 1e-12);
      }
    }
  }
}

TEST(ThreeOrdered, SimilarityEquivariance) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const Triangle t = fixtures::random_triangle(rng);
    const Point2 p = fixtures::random_point(rng, t);
    const Similarity s = fixtures::random_similarity(rng);
    const Triangle moved = apply(s, t);
    const Visitation a(t), b(moved);
    for (const auto& o : kAllOrders) {
      const Trajectory ta = a.visit_three_ordered(p, o);
      const Trajectory tb = b.visit_three_ordered(s.apply(p), o);
      ASSERT_NEAR(tb.cost, ta.cost * s.scale, 1e-9 * s.scale);
      ASSERT_EQ(ta.kind, tb.kind);
    }
  }
}
