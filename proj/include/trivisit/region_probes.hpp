#pragma once

// Golden region probes for three reference triangles, given in standard
// form: interior points of known subregions with their expected labels.

#include <numbers>
#include <string>
#include <vector>

#include "regions.hpp"

namespace trivisit {

struct RegionProbe {
  Point2 point;
  RegionMode mode;
  std::string label;
};

struct GoldenRegionCase {
  std::string name;
  Triangle triangle;
  std::vector<RegionProbe> probes;
};

inline GoldenRegionCase equilateral_region_case() {
  const Triangle t = Triangle::from_angles(std::numbers::pi / 3, std::numbers::pi / 3);
  const Point2 A = t.A(), B = t.B(), C = t.C(), I = incenter(t);
  const Point2 K = foot_of_bisector(t, VertexId::A), L = foot_of_bisector(t, VertexId::B),
               M = foot_of_bisector(t, VertexId::C);
  auto mid3 = [](Point2 a, Point2 b, Point2 c) { return (a + b + c) / 3.0; };
  using enum RegionMode;
  return {"equilateral",
          t,
          {
              // Six sectors cut out by the bisectors.
              {mid3(A, M, I), R1, "LRD"},
              {mid3(A, L, I), R1, "RLD"},
              {mid3(B, M, I), R1, "LDR"},
              {mid3(B, K, I), R1, "DLR"},
              {mid3(C, K, I), R1, "DRL"},
              {mid3(C, L, I), R1, "RDL"},
              {{0.48, 0.80}, R1, "LRD"},
              {{0.52, 0.80}, R1, "RLD"},
              // Corner triangles take one edge; the inner kites take a pair.
              {mid3(A, M, L), R2, "D"},
              {mid3(B, K, M), R2, "R"},
              {mid3(C, L, K), R2, "L"},
              {{0.45, 0.36}, R2, "LR"},
              {{0.55, 0.36}, R2, "RL"},
              {{0.33, 0.30}, R2, "LD"},
              {{0.44, 0.15}, R2, "DL"},
              {{0.56, 0.15}, R2, "DR"},
              {{0.67, 0.30}, R2, "RD"},
              {{0.50, 0.60}, R3, "D"},
              {{0.25, 0.15}, R3, "R"},
              {{0.75, 0.15}, R3, "L"},
          }};
}

inline GoldenRegionCase right_isosceles_region_case() {
  const Triangle t = Triangle::from_angles(std::numbers::pi / 4, std::numbers::pi / 4);
  using enum RegionMode;
  return {"right isosceles",
          t,
          {
              {{0.42, 0.38}, R1, "LRD"},
              {{0.58, 0.38}, R1, "RLD"},
              {{0.203, 0.177}, R1, "LDR"},
              {{0.797, 0.177}, R1, "RDL"},
              {{0.50, 0.10}, R1, "DLR|DRL"},
              {{0.20, 0.05}, R1, "DLR|DRL"},
              {{0.80, 0.05}, R1, "DLR|DRL"},
              // Below the parabola with focus A and directrix BC.
              {{0.50, 0.17}, R2, "A"},
              {{0.40, 0.22}, R2, "A"},
              {{0.60, 0.22}, R2, "A"},
              {{0.50, 0.35}, R2, "D"},
              {{0.50, 0.45}, R2, "D"},
              {{0.339, 0.197}, R2, "LD"},
              {{0.661, 0.197}, R2, "RD"},
              {{0.43, 0.10}, R2, "DL"},
              {{0.57, 0.10}, R2, "DR"},
              {{0.287, 0.11}, R2, "R"},
              {{0.713, 0.11}, R2, "L"},
              {{0.50, 0.35}, R3, "D"},
              {{0.30, 0.10}, R3, "R"},
          }};
}

/// Isosceles with a 10 degree apex at A.
inline GoldenRegionCase thin_isosceles_region_case() {
  const double base = (180.0 - 10.0) / 2.0 * std::numbers::pi / 180.0;
  const Triangle t = Triangle::from_angles(base, base);
  using enum RegionMode;
  return {"thin isosceles",
          t,
          {
              {{0.444, 4.586}, R1, "LRD"},
              {{0.556, 4.586}, R1, "RLD"},
              {{0.47, 5.20}, R1, "LRD"},
              {{0.53, 5.20}, R1, "RLD"},
              // One robot path serves both orders: AB first, then through C.
              {{0.35, 2.00}, R1, "LDR|LRD"},
              {{0.65, 2.00}, R1, "RDL|RLD"},
              {{0.45, 1.00}, R1, "LDR|LRD"},
              {{0.55, 1.00}, R1, "RDL|RLD"},
              {{0.45, 3.50}, R1, "LDR|LRD"},
              {{0.55, 3.50}, R1, "RDL|RLD"},
              {{0.169, 0.044}, R1, "LDR"},
              {{0.831, 0.044}, R1, "RDL"},
              {{0.10, 0.05}, R1, "LDR"},
              {{0.90, 0.05}, R1, "RDL"},
              {{0.333, 0.0146}, R1, "DLR"},
              {{0.667, 0.0146}, R1, "DRL"},
              {{0.30, 0.01}, R1, "DLR"},
              {{0.50, 2.00}, R3, "D"},
              {{0.30, 0.30}, R3, "R"},
              {{0.70, 0.30}, R3, "L"},
          }};
}

inline std::vector<GoldenRegionCase> golden_region_cases() {
  return {equilateral_region_case(), right_isosceles_region_case(), thin_isosceles_region_case()};
}

}  // namespace trivisit
