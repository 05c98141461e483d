#pragma once

// The acceptance suite shared by the acceptance binary and `trivisit verify`.

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fleet_costs.hpp"
#include "oracle.hpp"
#include "region_probes.hpp"
#include "regions.hpp"
#include "tradeoffs.hpp"

namespace trivisit::acceptance {

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

using std::numbers::pi;

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

/// Non-obtuse triangle with every angle >= min_angle, in a random pose.
inline Triangle random_triangle(std::mt19937_64& rng, double min_angle = 0.01) {
  std::uniform_real_distribution<double> u(min_angle, pi / 2), ang(-pi, pi), sc(0.2, 5.0), tr(-10, 10);
  for (;;) {
    const double b = u(rng), c = u(rng), a = pi - b - c;
    if (a < min_angle || a > pi / 2) continue;
    Similarity s;
    s.rotation = ang(rng);
    s.scale = sc(rng);
    s.translation = {tr(rng), tr(rng)};
    return apply(s, Triangle::from_angles(b, c));
  }
}

/// Interior point, kept a little away from the boundary.
inline Point2 random_point(std::mt19937_64& rng, const Triangle& t) {
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  const double a = u(rng), b = u(rng), c = u(rng), s = a + b + c;
  return t.from_barycentric(a / s, b / s, c / s);
}

struct Check {
  bool ok = true;
  std::ostringstream msg;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) msg << "; ";
      else msg.str("");
      ok = false;
      msg << what;
    }
  }
  void note(const std::string& s) {
    if (ok) msg << (msg.tellp() > 0 ? "; " : "") << s;
  }
};

inline Check c1() {
  Check c;
  const Triangle t = Triangle::from_angles(pi / 3, pi / 3);
  const double r = ratio_at(t, incenter(t), 1, 3);
  c.expect(std::abs(r - 4.0) <= 1e-9, "R1/R3 = " + fmt(r));
  c.note("R1/R3 = " + fmt(r));
  return c;
}

inline Check c2() {
  Check c;
  const Triangle t = Triangle::from_angles(pi / 3, pi / 3);
  const double r = ratio_at(t, incenter(t), 2, 3);
  c.expect(std::abs(r - 2.0) <= 1e-9, "R2/R3 = " + fmt(r));
  c.note("R2/R3 = " + fmt(r));
  return c;
}

inline Check c3() {
  Check c;
  const Triangle t = Triangle::from_angles(pi / 3, pi / 3);
  const RatioReport r = max_ratio(t, 1, 2);
  double d = 1e300;
  for (VertexId v : kVertices) d = std::min(d, distance(r.argmax, altitude_midpoint(t, v)));
  c.expect(std::abs(r.ratio - 2.5) <= 1e-6, "max ratio " + fmt(r.ratio));
  c.expect(d <= 1e-4, "argmax " + fmt(d) + " from an altitude midpoint");
  c.note("max " + fmt(r.ratio) + ", argmax " + fmt(d) + " from altitude midpoint");
  return c;
}

inline Check c4() {
  Check c;
  const Triangle t = Triangle::from_angles(pi / 4, pi / 4);
  const Point2 p = altitude_midpoint(t, VertexId::A);
  const FleetCosts fc(t);
  const double r1v = fc.r1(p).cost, r2v = fc.r2(p).cost;
  c.expect(std::abs(r1v - 0.75) <= 1e-9, "R1 = " + fmt(r1v));
  c.expect(std::abs(r2v - 0.25) <= 1e-9, "R2 = " + fmt(r2v));
  c.expect(std::abs(r1v / r2v - 3.0) <= 1e-9, "ratio " + fmt(r1v / r2v));
  c.note("R1 = " + fmt(r1v) + ", R2 = " + fmt(r2v) + ", ratio " + fmt(r1v / r2v));
  return c;
}

inline Check c5() {
  Check c;
  const Triangle t = Triangle::from_angles(pi / 4, pi / 4);
  const RatioReport r = max_ratio(t, 2, 3);
  const double d = distance(r.argmax, incenter(t));
  c.expect(std::abs(r.ratio - std::numbers::sqrt2) <= 1e-6, "max ratio " + fmt(r.ratio));
  c.expect(d <= 1e-4, "argmax " + fmt(d) + " from the incenter");
  c.note("max " + fmt(r.ratio) + ", argmax " + fmt(d) + " from incenter");
  return c;
}

inline Check c6() {
  Check c;
  const Triangle t = Triangle::from_angles(pi / 4, pi / 4);
  const double r = ratio_at(t, incenter(t), 1, 3);
  c.expect(std::abs(r - (2.0 + std::numbers::sqrt2)) <= 1e-9, "R1/R3 = " + fmt(r));
  c.note("R1/R3 = " + fmt(r));
  return c;
}

inline Check c7() {
  Check c;
  double prev = 1e300;
  std::ostringstream vals;
  for (double apex : {8.0, 4.0, 2.0, 1.0, 0.5}) {
    const double base = deg2rad((180.0 - apex) / 2);
    const double v = max_ratio(Triangle::from_angles(base, base), 1, 3).ratio;
    vals << (apex == 8.0 ? "" : ", ") << fmt(v);
    c.expect(v < prev, "not decreasing at apex " + fmt(apex));
    c.expect(v > std::sqrt(10.0), "below sqrt(10) at apex " + fmt(apex));
    if (apex == 0.5) c.expect(v < 3.25, "0.5 degree value " + fmt(v) + " not below 3.25");
    prev = v;
  }
  c.note(vals.str());
  return c;
}

inline Check c8_9(bool witnesses) {
  Check c;
  std::mt19937_64 rng(20240601);
  double w13 = 0, w23 = 0, w12 = 0, f13 = 1e300, f23 = 1e300, f12 = 1e300;
  int chain = 0;
  for (int k = 0; k < 10000; ++k) {
    const Triangle t = random_triangle(rng);
    const FleetCosts fc(t);
    // Drawn in both modes so the two criteria see the same triangles.
    const Point2 q = fc.visitation().to_std(random_point(rng, t));
    if (!witnesses) {
      const double a = fc.std_r1(q), b = fc.std_r2(q), d = fc.std_r3(q);
      w13 = std::max(w13, a / d);
      w23 = std::max(w23, b / d);
      w12 = std::max(w12, a / b);
      if (!(d <= b + 1e-12 && b <= a + 1e-12)) ++chain;
    } else {
      const Point2 i = fc.visitation().to_std(incenter(t));
      const Point2 m = fc.visitation().to_std(largest_edge_altitude_midpoint(t));
      f13 = std::min(f13, fc.std_r1(i) / fc.std_r3(i));
      f23 = std::min(f23, fc.std_r2(i) / fc.std_r3(i));
      f12 = std::min(f12, fc.std_r1(m) / fc.std_r2(m));
    }
  }
  if (!witnesses) {
    c.expect(w13 <= 4 + 1e-9, "R1/R3 reached " + fmt(w13));
    c.expect(w23 <= 2 + 1e-9, "R2/R3 reached " + fmt(w23));
    c.expect(w12 <= 3 + 1e-9, "R1/R2 reached " + fmt(w12));
    c.expect(chain == 0, std::to_string(chain) + " chain violations");
    c.note("max R1/R3 " + fmt(w13) + ", R2/R3 " + fmt(w23) + ", R1/R2 " + fmt(w12));
  } else {
    c.expect(f13 >= std::sqrt(10.0) - 1e-9, "R1(I)/R3(I) fell to " + fmt(f13));
    c.expect(f23 >= std::numbers::sqrt2 - 1e-9, "R2(I)/R3(I) fell to " + fmt(f23));
    c.expect(f12 >= 2.5 - 1e-9, "R1(T)/R2(T) fell to " + fmt(f12));
    c.note("min R1(I)/R3(I) " + fmt(f13) + ", R2(I)/R3(I) " + fmt(f23) + ", R1(T)/R2(T) " + fmt(f12));
  }
  return c;
}

inline Check c10() {
  Check c;
  std::mt19937_64 rng(7);
  double worst = 0;
  for (int k = 0; k < 1000; ++k) {
    const Triangle t = random_triangle(rng, 0.02);
    const Point2 p = random_point(rng, t);
    const Visitation vis(t);
    double o1 = 1e300;
    for (const auto& o : kAllOrders) {
      const double orc = oracle_ordered3(t, p, o);
      o1 = std::min(o1, orc);
      worst = std::max(worst, std::abs(vis.visit_three_ordered(p, o).cost - orc));
    }
    const FleetCosts fc(vis);
    worst = std::max(worst, std::abs(fc.r1(p).cost - o1));
    worst = std::max(worst, std::abs(fc.r2(p).cost - oracle_r2(t, p)));
    worst = std::max(worst, std::abs(fc.r3(p).cost - oracle_r3(t, p)));
  }
  c.expect(worst <= 1e-6, "worst deviation " + fmt(worst));
  c.note("worst deviation " + fmt(worst));
  return c;
}

inline Check c11() {
  Check c;
  const double a = h1(pi / 3, pi / 3), b = h1(3 * pi / 7, pi / 7);
  c.expect(std::abs(a - 1.0) <= 1e-12, "h1(pi/3, pi/3) = " + fmt(a));
  c.expect(std::abs(b - 1.32715) <= 5e-5, "h1(3pi/7, pi/7) = " + fmt(b));
  c.note("h1(pi/3, pi/3) = " + fmt(a) + ", h1(3pi/7, pi/7) = " + fmt(b));
  return c;
}

inline Check c12() {
  Check c;
  int probes = 0;
  double gap = 0;
  for (const auto& gc : golden_region_cases()) {
    const FleetCosts fc(gc.triangle);
    int count = 0;
    for (RegionMode mode : {RegionMode::R1, RegionMode::R2, RegionMode::R3}) {
      const RegionMap map = raster_region_map(gc.triangle, 256, mode);
      for (const auto& p : gc.probes) {
        if (p.mode != mode) continue;
        ++count;
        const std::string got = map.cell_at(p.point).label.str();
        const std::string exact = classify_point(fc, p.point, mode).str();
        c.expect(got == p.label && exact == p.label,
                 gc.name + " " + std::string(to_string(mode)) + " probe expected " + p.label + ", raster " + got +
                     ", point " + exact);
      }
      for (const auto& ch : region_separators(gc.triangle, mode)) gap = std::max(gap, separator_gap(fc, ch, mode));
      if (mode == RegionMode::R2) gap = std::max(gap, r2_separator_gap(fc, r2_separator(gc.triangle)));
    }
    c.expect(count == 20, gc.name + " has " + std::to_string(count) + " probes");
    probes += count;
  }
  c.expect(gap <= 1e-8, "separator gap " + fmt(gap));
  c.note(std::to_string(probes) + " probes, separator gap " + fmt(gap));
  return c;
}

inline Check c13() {
  Check c;
  struct Target {
    int n, m;
    double sup, inf;
    const char* sup_shape;
    bool approached;  // inf is a limit of thin triangles rather than attained
  };
  const Target targets[] = {{1, 3, 4.0, std::sqrt(10.0), "equilateral", true},
                            {2, 3, 2.0, std::numbers::sqrt2, "equilateral", false},
                            {1, 2, 3.0, 2.5, "right isosceles", false}};
  for (const auto& tg : targets) {
    const std::string pair = "(" + std::to_string(tg.n) + "," + std::to_string(tg.m) + ")";
    double prev_inf = 1e300;
    std::ostringstream infs;
    for (double step : {15.0, 5.0, 1.0}) {
      SweepConfig cfg;
      cfg.step_deg = step;
      const SweepResult r = sweep_triangles(tg.n, tg.m, cfg);
      infs << (step == 15.0 ? "" : " -> ") << fmt(r.inf.value);
      c.expect(r.inf.value <= prev_inf, pair + " inf rose at step " + fmt(step));
      c.expect(r.inf.value >= tg.inf - 1e-9, pair + " inf " + fmt(r.inf.value) + " below the limit");
      prev_inf = r.inf.value;
      if (step != 1.0) continue;
      c.expect(std::abs(r.sup.value - tg.sup) <= 1e-3, pair + " sup " + fmt(r.sup.value));
      c.expect(r.sup.shape == tg.sup_shape, pair + " sup at " + r.sup.shape);
      if (tg.approached) {
        c.expect(r.trend.decreasing && r.inf.value > tg.inf, pair + " inf trend is not a strict approach");
      } else {
        c.expect(std::abs(r.inf.value - tg.inf) <= 1e-6, pair + " inf " + fmt(r.inf.value));
      }
      c.note(pair + " sup " + fmt(r.sup.value) + " at " + r.sup.shape + ", inf " + infs.str());
    }
  }
  return c;
}

}  // namespace detail

struct Criterion {
  int id;
  std::string name;
  std::function<detail::Check()> run;
};

inline std::vector<Criterion> criteria() {
  using namespace detail;
  return {
      {1, "equilateral incenter R1/R3 = 4", c1},
      {2, "equilateral incenter R2/R3 = 2", c2},
      {3, "equilateral max R1/R2 = 5/2 at an altitude midpoint", c3},
      {4, "right isosceles altitude midpoint R1 = 0.75, R2 = 0.25", c4},
      {5, "right isosceles max R2/R3 = sqrt 2 at the incenter", c5},
      {6, "right isosceles incenter R1/R3 = 2 + sqrt 2", c6},
      {7, "thin isosceles R1/R3 trend toward sqrt 10", c7},
      {8, "universal bounds on 10000 random pairs", [] { return c8_9(false); }},
      {9, "witness floors on 10000 random triangles", [] { return c8_9(true); }},
      {10, "closed forms match the oracle on 1000 instances", c10},
      {11, "h1 reference values", c11},
      {12, "region golden probes and separator gaps", c12},
      {13, "sweep summaries at 15, 5 and 1 degree steps", c13},
  };
}

/// Runs every criterion; `on_result` sees each result as soon as it is known.
inline std::vector<Result> run_all(const std::function<void(const Result&)>& on_result = {}) {
  std::vector<Result> out;
  for (const auto& cr : criteria()) {
    Result r{cr.id, cr.name, false, "", 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      detail::Check c = cr.run();
      r.pass = c.ok;
      r.detail = c.msg.str();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace trivisit::acceptance
