#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "trivisit/triangle.hpp"

using namespace trivisit;
using std::numbers::pi;

TEST(StandardForm, ScaledEquilateral) {
  const Triangle t({1, std::sqrt(3.0)}, {0, 0}, {2, 0});
  const auto [s, sim] = standard_form(t);
  EXPECT_NEAR(s.A().x, 0.5, 1e-12);
  EXPECT_NEAR(s.A().y, 0.8660254037844386, 1e-12);
  EXPECT_NEAR(sim.scale, 0.5, 1e-15);
}

TEST(StandardForm, AlreadyStandardIsIdentity) {
  const Triangle t({0.3, 0.8}, {0, 0}, {1, 0});
  const auto [s, sim] = standard_form(t);
  EXPECT_NEAR(sim.rotation, 0.0, 1e-15);
  EXPECT_NEAR(sim.scale, 1.0, 1e-15);
  EXPECT_NEAR(norm(sim.translation), 0.0, 1e-15);
  EXPECT_NEAR(distance(s.A(), t.A()), 0.0, 1e-15);
}

TEST(StandardForm, RotatedTriangle) {
  // Rotating by -pi/2 after translating B to the origin puts A at (0.5, 1).
  const Triangle t({4, 5.5}, {5, 5}, {5, 6});
  const auto [s, sim] = standard_form(t);
  EXPECT_NEAR(s.A().x, 0.5, 1e-12);
  EXPECT_NEAR(s.A().y, 1.0, 1e-12);
  EXPECT_NEAR(sim.rotation, -pi / 2, 1e-12);
  EXPECT_NEAR(sim.scale, 1.0, 1e-12);
}

TEST(StandardForm, RoundTripRecoversVertices) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Triangle base = fixtures::random_triangle(rng);
    const Triangle t = apply(fixtures::random_similarity(rng), base);
    const auto [s, sim] = standard_form(t);
    const Similarity inv = sim.inverse();
    for (VertexId v : kVertices) ASSERT_NEAR(distance(inv.apply(s.vertex(v)), t.vertex(v)), 0.0, 1e-9);
  }
}

TEST(Triangle, ClockwiseInputIsReoriented) {
  const Triangle t({0.5, 0.5}, {1, 0}, {0, 0});
  EXPECT_GT(t.area(), 0.0);
  EXPECT_EQ(t.B(), (Point2{0, 0}));
  EXPECT_EQ(t.C(), (Point2{1, 0}));
}

TEST(Triangle, RejectsObtuseAndDegenerate) {
  EXPECT_THROW(Triangle({0.5, 0.1}, {0, 0}, {1, 0}), GeometryError);
  EXPECT_THROW(Triangle({0.5, 0}, {0, 0}, {1, 0}), GeometryError);
  EXPECT_NO_THROW(Triangle({0, 1}, {0, 0}, {1, 0}));
}

TEST(VertexFromAngles, Examples) {
  const Point2 eq = vertex_from_angles(pi / 3, pi / 3);
  EXPECT_NEAR(eq.x, 0.5, 1e-12);
  EXPECT_NEAR(eq.y, 0.8660254037844386, 1e-12);
  const Point2 ri = vertex_from_angles(pi / 4, pi / 4);
  EXPECT_NEAR(ri.x, 0.5, 1e-12);
  EXPECT_NEAR(ri.y, 0.5, 1e-12);
  const Point2 r = vertex_from_angles(pi / 2, pi / 4);
  EXPECT_NEAR(r.x, 0.0, 1e-12);
  EXPECT_NEAR(r.y, 1.0, 1e-12);
}

TEST(VertexFromAngles, RejectsInvalidAngles) {
  EXPECT_THROW(vertex_from_angles(0.0, pi / 3), GeometryError);
  EXPECT_THROW(vertex_from_angles(pi / 2 + 0.01, pi / 4), GeometryError);
  EXPECT_THROW(vertex_from_angles(pi / 6, pi / 6), GeometryError);
  EXPECT_NO_THROW(vertex_from_angles(pi / 4, pi / 4));
}

TEST(VertexFromAngles, AngleRecovery) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, pi / 2);
  int checked = 0;
  while (checked < 1000) {
    const double b = u(rng), c = u(rng);
    if (b + c < pi / 2 || b + c > pi - 0.01) continue;
    const auto [rb, rc] = angles_from_vertex(vertex_from_angles(b, c));
    ASSERT_NEAR(rb, b, 1e-9);
    ASSERT_NEAR(rc, c, 1e-9);
    ++checked;
  }
}

TEST(Incenter, Examples) {
  const Point2 ie = incenter(fixtures::equilateral());
  EXPECT_NEAR(ie.x, 0.5, 1e-12);
  EXPECT_NEAR(ie.y, 0.28867513459481287, 1e-12);
  const Point2 ir = incenter(fixtures::right_isosceles());
  EXPECT_NEAR(ir.x, 0.5, 1e-12);
  EXPECT_NEAR(ir.y, 0.5 / (std::sqrt(2.0) + 1.0), 1e-12);
  const Triangle big({1.5, 3 * 0.8660254037844386}, {0, 0}, {3, 0});
  EXPECT_NEAR(distance(incenter(big), ie * 3.0), 0.0, 1e-12);
}

TEST(Incenter, EquidistantFromEdges) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    const Triangle t = apply(fixtures::random_similarity(rng), fixtures::random_triangle(rng));
    const Point2 in = incenter(t);
    const double scale = t.edge_length(EdgeId::D);
    const double dl = t.edge_line(EdgeId::L).distance(in), dd = t.edge_line(EdgeId::D).distance(in),
                 dr = t.edge_line(EdgeId::R).distance(in);
    ASSERT_NEAR(dl / scale, dd / scale, 1e-12);
    ASSERT_NEAR(dr / scale, dd / scale, 1e-12);
  }
}

TEST(FootOfBisector, EquilateralApex) {
  const Point2 k = foot_of_bisector(fixtures::equilateral(), VertexId::A);
  EXPECT_NEAR(k.x, 0.5, 1e-12);
  EXPECT_NEAR(k.y, 0.0, 1e-12);
}

TEST(FootOfBisector, SplitsAngleEvenly) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Triangle t = fixtures::random_triangle(rng);
    for (VertexId v : kVertices) {
      const Point2 f = foot_of_bisector(t, v);
      const auto [e1, e2] = incident_edges(v);
      ASSERT_NEAR(t.edge_line(e1).distance(f), t.edge_line(e2).distance(f), 1e-12);
    }
  }
}

TEST(Triangle, LargestAngleTieBreaksByLabel) {
  EXPECT_EQ(fixtures::equilateral().largest_angle_vertex(), VertexId::A);
  EXPECT_EQ(Triangle::from_angles(pi / 2, pi / 4).largest_angle_vertex(), VertexId::B);
  EXPECT_EQ(Triangle::from_angles(pi / 4, pi / 2).largest_angle_vertex(), VertexId::C);
  EXPECT_EQ(Triangle::from_angles(pi / 4, pi / 4).largest_angle_vertex(), VertexId::A);
}
