#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "trivisit/geometry.hpp"

using namespace trivisit;

TEST(Line, ThroughIsNormalized) {
  const Line l = Line::through({1, 2}, {4, 6});
  EXPECT_NEAR(l.a * l.a + l.b * l.b, 1.0, 1e-12);
  EXPECT_NEAR(l.signed_distance({1, 2}), 0.0, 1e-12);
  EXPECT_NEAR(l.signed_distance({4, 6}), 0.0, 1e-12);
  EXPECT_THROW(Line::through({1, 1}, {1, 1}), GeometryError);
}

TEST(Reflect, AcrossXAxis) {
  const Point2 r = reflect(Point2{0.3, 0.4}, Line::through({0, 0}, {1, 0}));
  EXPECT_NEAR(r.x, 0.3, 1e-15);
  EXPECT_NEAR(r.y, -0.4, 1e-15);
}

TEST(Reflect, IsAnInvolution) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const Line l = Line::through({u(rng), u(rng)}, {u(rng), u(rng)});
    const Point2 p{u(rng), u(rng)};
    const Point2 back = reflect(reflect(p, l), l);
    ASSERT_NEAR(back.x, p.x, 1e-12);
    ASSERT_NEAR(back.y, p.y, 1e-12);
  }
}

TEST(Project, LandsOnLine) {
  const Line l = Line::through({0, 1}, {1, 2});
  const Point2 f = project({3, 0}, l);
  EXPECT_NEAR(l.signed_distance(f), 0.0, 1e-14);
  EXPECT_NEAR(dot(Point2{3, 0} - f, l.direction()), 0.0, 1e-14);
}

TEST(DistPointSegment, ClampsToEndpoints) {
  const Segment s({0, 0}, {1, 0});
  EXPECT_DOUBLE_EQ(dist_point_segment({0.5, 0.5}, s), 0.5);
  EXPECT_DOUBLE_EQ(dist_point_segment({2, 0}, s), 1.0);
  EXPECT_DOUBLE_EQ(dist_point_segment({-3, 4}, s), 5.0);
  EXPECT_THROW(Segment({1, 1}, {1, 1}), GeometryError);
}

TEST(Intersect, ParallelLinesHaveNoIntersection) {
  EXPECT_FALSE(intersect(Line::through({0, 0}, {1, 0}), Line::through({0, 1}, {1, 1})));
  const auto x = intersect(Line::through({0, 0}, {1, 1}), Line::through({0, 1}, {1, 0}));
  ASSERT_TRUE(x);
  EXPECT_NEAR(x->x, 0.5, 1e-15);
  EXPECT_NEAR(x->y, 0.5, 1e-15);
}

TEST(Similarity, InverseComposesToIdentity) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const Similarity s = fixtures::random_similarity(rng);
    const Similarity id = s.compose(s.inverse());
    const Point2 p{u(rng), u(rng)};
    const Point2 q = id.apply(p);
    ASSERT_NEAR(q.x, p.x, 1e-12);
    ASSERT_NEAR(q.y, p.y, 1e-12);
    ASSERT_NEAR(id.scale, 1.0, 1e-12);
  }
}

TEST(Cone, RayAndEmptyAreDistinct) {
  Cone ray{{0, 0}, {1, 0}, 0.0, false};
  EXPECT_TRUE(ray.is_ray());
  EXPECT_TRUE(ray.contains({2, 0}));
  EXPECT_FALSE(ray.contains({2, 0.1}));
  Cone empty{{0, 0}, {1, 0}, 0.0, true};
  EXPECT_FALSE(empty.is_ray());
  EXPECT_FALSE(empty.contains({2, 0}));
}

TEST(Parabola, PointsAreEquidistant) {
  const Parabola par({0.3, 0.7}, Line::through({0, 0}, {1, 0.2}));
  for (double u = -2; u <= 2; u += 0.25) {
    const Point2 x = par.at(u);
    ASSERT_NEAR(distance(x, par.focus), par.directrix.distance(x), 1e-12);
    ASSERT_NEAR(par.parameter_of(x), u, 1e-12);
  }
  EXPECT_THROW(Parabola({0.5, 0}, Line::through({0, 0}, {1, 0})), GeometryError);
}
