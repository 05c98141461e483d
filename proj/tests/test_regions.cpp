#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_support.hpp"
#include "trivisit/region_probes.hpp"
#include "trivisit/regions.hpp"

using namespace trivisit;
using std::numbers::pi;

namespace {

double chain_link_gap(const SeparatorChain& c) {
  double worst = 0.0;
  for (std::size_t i = 1; i < c.pieces.size(); ++i)
    worst = std::max(worst, distance(c.pieces[i - 1].end(), c.pieces[i].start()));
  return worst;
}

std::vector<SeparatorChain> all_separators(const Triangle& t, RegionMode mode) {
  auto chains = region_separators(t, mode);
  if (mode == RegionMode::R2) chains.push_back(r2_separator(t));
  return chains;
}

}  // namespace

TEST(R3Regions, BisectorFeetAndClassification) {
  const Triangle t = fixtures::equilateral();
  const R3Regions r = r3_regions(t);
  EXPECT_NEAR(distance(r.K, {0.5, 0.0}), 0.0, 1e-12);
  EXPECT_NEAR(distance(r.I, incenter(t)), 0.0, 1e-12);
  EXPECT_EQ(r.classify(r.I).size(), 3u);
  EXPECT_EQ(r.classify({0.5, 0.7}), std::vector<EdgeId>{EdgeId::D});
}

TEST(SeparatorPoint, EquilateralLiesOnMidline) {
  const Triangle t = fixtures::equilateral();
  const Point2 f = bisector_separator_point(t, VertexId::B);
  EXPECT_NEAR(distance(f, {0.375, std::sqrt(3.0) / 8}), 0.0, 1e-12);
}

TEST(SeparatorPoint, BetweenVertexAndIncenter) {
  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    const Triangle t = fixtures::random_triangle(rng, 0.05);
    const Point2 I = incenter(t);
    for (VertexId v : kVertices) {
      const Point2 f = bisector_separator_point(t, v);
      const Point2 pv = t.vertex(v);
      EXPECT_NEAR(distance(pv, f) + distance(f, I), distance(pv, I), 1e-9);
    }
  }
}

TEST(R2Separator, HexagonIsClosedAndBalanced) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const Triangle t = fixtures::random_triangle(rng, 0.05);
    const SeparatorChain hex = r2_separator(t);
    ASSERT_GE(hex.pieces.size(), 6u);
    EXPECT_LT(chain_link_gap(hex), 1e-9);
    EXPECT_LT(distance(hex.back(), hex.front()), 1e-9);
    EXPECT_LT(r2_separator_gap(FleetCosts(t), hex), 1e-8);
  }
}

TEST(R2Separator, ParabolaOnlyAboveSixtyDegrees) {
  auto arcs = [](const SeparatorChain& c) {
    return std::count_if(c.pieces.begin(), c.pieces.end(),
                         [](const CurvePiece& p) { return p.kind == CurvePiece::Kind::Parabola; });
  };
  EXPECT_EQ(arcs(r2_separator(fixtures::equilateral())), 0);
  EXPECT_EQ(arcs(r2_separator(fixtures::right_isosceles())), 1);
  EXPECT_EQ(arcs(r2_separator(fixtures::isosceles_apex(10))), 2);
}

TEST(LrdRldLocus, EquilateralIsTheAltitude) {
  const Triangle t = fixtures::equilateral();
  const SeparatorChain c = r1_lrd_rld_locus(t);
  ASSERT_FALSE(c.pieces.empty());
  EXPECT_NEAR(distance(c.front(), t.A()), 0.0, 1e-9);
  EXPECT_NEAR(distance(c.back(), {0.5, 0.0}), 0.0, 1e-9);
  for (const Point2& p : c.sample(32)) EXPECT_NEAR(p.x, 0.5, 1e-9);
}

TEST(LrdRldLocus, RightAngleGivesWholeAltitude) {
  const Triangle t = fixtures::right_isosceles();
  const SeparatorChain c = r1_lrd_rld_locus(t);
  ASSERT_FALSE(c.pieces.empty());
  EXPECT_NEAR(distance(c.front(), t.A()), 0.0, 1e-9);
  EXPECT_NEAR(distance(c.back(), {0.5, 0.0}), 0.0, 1e-9);
  for (const Point2& p : c.sample(32)) EXPECT_NEAR(p.x, 0.5, 1e-9);
}

TEST(LrdRldLocus, EqualCostsAlongRandomChains) {
  std::mt19937_64 rng(5);
  for (int n = 0; n < 60; ++n) {
    const Triangle t = fixtures::random_triangle(rng, 0.05);
    const VertexId v = t.largest_angle_vertex();
    const auto [e1, e2] = incident_edges(v);
    const VisitOrder o1{{e1, e2, opposite_edge(v)}}, o2{{e2, e1, opposite_edge(v)}};
    const Visitation vis(t);
    const SeparatorChain c = r1_lrd_rld_locus(t);
    ASSERT_FALSE(c.pieces.empty());
    EXPECT_NEAR(distance(c.front(), t.vertex(v)), 0.0, 1e-9);
    EXPECT_LT(chain_link_gap(c), 1e-9);
    for (const Point2& p : c.sample(16)) {
      const Point2 q = vis.to_std(p);
      EXPECT_NEAR(vis.std_three_ordered_cost(q, order_index(o1)), vis.std_three_ordered_cost(q, order_index(o2)),
                  1e-8);
    }
  }
}

TEST(Separators, CostsAgreeAlongChains) {
  std::mt19937_64 rng(3);
  std::vector<Triangle> ts{fixtures::equilateral(), fixtures::right_isosceles(), fixtures::isosceles_apex(10)};
  for (int n = 0; n < 20; ++n) ts.push_back(fixtures::random_triangle(rng, 0.05));
  for (const Triangle& t : ts) {
    const FleetCosts fc(t);
    for (RegionMode mode : {RegionMode::R1, RegionMode::R2, RegionMode::R3})
      for (const auto& c : region_separators(t, mode)) {
        EXPECT_LT(separator_gap(fc, c, mode), 1e-8) << c.label;
        EXPECT_LT(chain_link_gap(c), 1e-7) << c.label;
      }
  }
}

TEST(Separators, SimilarityInvariant) {
  std::mt19937_64 rng(8);
  const Triangle t = fixtures::random_triangle(rng, 0.1);
  const Similarity s = fixtures::random_similarity(rng);
  const auto base = region_separators(t, RegionMode::R1);
  const auto moved = region_separators(apply(s, t), RegionMode::R1);
  ASSERT_EQ(base.size(), moved.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    EXPECT_EQ(base[i].label, moved[i].label);
    ASSERT_EQ(base[i].pieces.size(), moved[i].pieces.size());
    for (std::size_t k = 0; k < base[i].pieces.size(); ++k)
      EXPECT_NEAR(distance(s.apply(base[i].pieces[k].at(0.5)), moved[i].pieces[k].at(0.5)), 0.0, 1e-7 * s.scale);
  }
}

TEST(Raster, CellCountAndLookup) {
  const Triangle t = fixtures::right_isosceles();
  const RegionMap map = raster_region_map(t, 32, RegionMode::R3);
  EXPECT_EQ(map.cells.size(), 32u * 32u);
  for (const auto& cell : map.cells) {
    const RegionCell& found = map.cell_at(cell.center);
    EXPECT_EQ(found.i, cell.i);
    EXPECT_EQ(found.j, cell.j);
  }
  EXPECT_THROW(map.cell_at({2.0, 2.0}), GeometryError);
  EXPECT_THROW(raster_region_map(t, 4, RegionMode::R1), std::invalid_argument);
}

TEST(Raster, GoldenProbes) {
  for (const auto& gc : golden_region_cases()) {
    const FleetCosts fc(gc.triangle);
    for (RegionMode mode : {RegionMode::R1, RegionMode::R2, RegionMode::R3}) {
      const RegionMap map = raster_region_map(gc.triangle, 128, mode);
      for (const auto& probe : gc.probes) {
        if (probe.mode != mode) continue;
        EXPECT_EQ(classify_point(fc, probe.point, mode).str(), probe.label) << gc.name;
        EXPECT_EQ(map.cell_at(probe.point).label.str(), probe.label) << gc.name;
      }
    }
  }
}

TEST(Raster, MirrorSymmetryOfIsosceles) {
  for (const Triangle& t : {fixtures::equilateral(), fixtures::right_isosceles(), fixtures::isosceles_apex(10)})
    for (RegionMode mode : {RegionMode::R1, RegionMode::R2, RegionMode::R3}) {
      const int n = 48;
      const RegionMap map = raster_region_map(t, n, mode);
      for (const auto& cell : map.cells) {
        const int row = 2 * (n - cell.i) - 1;
        const RegionCell& twin = map.cells[map.cell_index(cell.i, row - 1 - cell.j)];
        EXPECT_EQ(mirrored(cell.label).str(), twin.label.str()) << cell.i << "," << cell.j;
      }
    }
}

TEST(Raster, TieCellsLieOnSeparators) {
  for (const auto& gc : golden_region_cases())
    for (RegionMode mode : {RegionMode::R1, RegionMode::R2, RegionMode::R3}) {
      const int n = 96;
      const RegionMap map = raster_region_map(gc.triangle, n, mode);
      const auto chains = all_separators(gc.triangle, mode);
      double longest = 0.0;
      for (EdgeId e : kEdges) longest = std::max(longest, gc.triangle.edge_length(e));
      const double cell = longest / n;
      int ties = 0;
      for (const auto& c : map.cells) {
        if (!c.label.tie()) continue;
        ++ties;
        double d = std::numeric_limits<double>::infinity();
        for (const auto& ch : chains) d = std::min(d, distance_to_chain(ch, c.center));
        EXPECT_LE(d, 2 * cell) << gc.name << " " << to_string(mode) << " " << c.label.str();
      }
      if (mode != RegionMode::R1 || gc.name != "right isosceles") {
        EXPECT_GT(ties, 0) << gc.name;
      }
    }
}

TEST(Raster, LabelChangesLieOnSeparators) {
  for (const auto& gc : golden_region_cases())
    for (RegionMode mode : {RegionMode::R1, RegionMode::R2, RegionMode::R3}) {
      const int n = 64;
      const RegionMap map = raster_region_map(gc.triangle, n, mode);
      const auto chains = all_separators(gc.triangle, mode);
      double longest = 0.0;
      for (EdgeId e : kEdges) longest = std::max(longest, gc.triangle.edge_length(e));
      const double cell = longest / n;
      for (std::size_t k = 1; k < map.cells.size(); ++k) {
        const auto& a = map.cells[k - 1];
        const auto& b = map.cells[k];
        if (a.i != b.i || a.label.str() == b.label.str()) continue;
        double d = std::numeric_limits<double>::infinity();
        for (const auto& ch : chains) d = std::min(d, distance_to_chain(ch, midpoint(a.center, b.center)));
        EXPECT_LE(d, 2 * cell) << gc.name << " " << to_string(mode) << " " << a.label.str() << " | "
                               << b.label.str();
      }
    }
}

TEST(Labels, MirroredSwapsEdgesAndVertices) {
  CellLabel l{{"A", "DLR|LDR"}};
  EXPECT_EQ(mirrored(l).str(), "A;DRL|RDL");
  EXPECT_TRUE(l.has("LDR"));
  EXPECT_FALSE(l.has("LD"));
}
