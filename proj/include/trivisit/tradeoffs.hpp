#pragma once

// Worst-case fleet-size ratios R_n / R_m over starting points, and sweeps of
// that maximum over triangle space.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "fleet_costs.hpp"

namespace trivisit {

inline void require_pair(int n, int m) {
  if (n < 1 || m > 3 || n >= m) throw std::invalid_argument("fleet pair must satisfy 1 <= n < m <= 3");
}

/// R_n(p) / R_m(p), caller frame.
inline double ratio_at(const Triangle& t, Point2 p, int n, int m) {
  require_pair(n, m);
  const FleetCosts fc(t);
  fc.visitation().require_inside(p);
  const Point2 q = fc.visitation().to_std(p);
  return fc.std_cost(n, q) / fc.std_cost(m, q);
}

/// Robot trajectories realizing R_k at a standard-form point.
inline std::vector<Trajectory> fleet_witness(const FleetCosts& fc, int robots, Point2 q) {
  switch (robots) {
    case 1: return {fc.std_r1_report(q).trajectory};
    case 2: {
      const R2Partition best = fc.std_r2_report(q).best;
      return {best.single_trajectory, best.pair_trajectory};
    }
    case 3: {
      std::vector<Trajectory> out;
      for (EdgeId e : kEdges) out.push_back(fc.visitation().std_visit_one(q, e));
      return out;
    }
  }
  throw std::invalid_argument("fleet size must be 1, 2 or 3");
}

struct RatioConfig {
  int grid = 256;          // barycentric subdivisions per side
  int starts = 6;          // best grid points refined besides the seeds
  double min_step = 1e-10;
  int max_iterations = 20000;
};

inline constexpr double kPlateauTie = 1e-12;

struct RatioReport {
  int n = 1, m = 2;
  double ratio = 0.0;  // largest value seen; Rn / Rm at argmax is within kPlateauTie
  Point2 argmax;        // standard form
  double rn = 0.0, rm = 0.0;
  std::vector<Trajectory> witness_n, witness_m;
  int grid = 0;
  int refinement_steps = 0;  // accepted pattern moves plus step halvings
  double final_step = 0.0;
  std::string seed;  // where the winning refinement started
};

namespace detail {

struct RatioEval {
  const FleetCosts& fc;
  int n, m;
  double operator()(Point2 q) const { return fc.std_cost(n, q) / fc.std_cost(m, q); }
};

struct Candidate {
  Point2 q;
  double value;
  std::string seed;
};

/// Compass search with diagonals; steps stay inside the closed triangle.
inline Candidate pattern_search(const RatioEval& f, const Triangle& t, Candidate c, double step,
                                const RatioConfig& cfg, int& steps) {
  constexpr double h = std::numbers::sqrt2 / 2;
  static const Point2 dirs[8] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {h, h}, {-h, -h}, {h, -h}, {-h, h}};
  for (int it = 0; it < cfg.max_iterations && step >= cfg.min_step; ++it) {
    Candidate best = c;
    for (const Point2& d : dirs) {
      const Point2 q = c.q + d * step;
      if (!t.contains(q, 0.0)) continue;
      const double v = f(q);
      if (v > best.value) best = {q, v, c.seed};
    }
    ++steps;
    if (best.value > c.value) c = best;
    else step *= 0.5;
  }
  return c;
}

}  // namespace detail

/// Interior seeds: incenter and the three altitude midpoints.
inline std::vector<std::pair<std::string, Point2>> ratio_seeds(const Triangle& s) {
  return {{"incenter", incenter(s)},
          {"altitude midpoint A", altitude_midpoint(s, VertexId::A)},
          {"altitude midpoint B", altitude_midpoint(s, VertexId::B)},
          {"altitude midpoint C", altitude_midpoint(s, VertexId::C)}};
}

inline RatioReport max_ratio(const FleetCosts& fc, int n, int m, const RatioConfig& cfg = {}) {
  require_pair(n, m);
  if (cfg.grid < 2) throw std::invalid_argument("grid must be at least 2");
  const Triangle& s = fc.standard();
  const detail::RatioEval f{fc, n, m};
  const int N = cfg.grid;

  std::vector<detail::Candidate> grid;
  grid.reserve(static_cast<std::size_t>(N + 1) * (N + 2) / 2);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j) {
      const int k = N - i - j;
      if (i == N || j == N || k == N) continue;
      const Point2 q = s.from_barycentric(double(i) / N, double(j) / N, double(k) / N);
      grid.push_back({q, f(q), "grid"});
    }
  const std::size_t keep = std::min<std::size_t>(cfg.starts, grid.size());
  std::partial_sort(grid.begin(), grid.begin() + keep, grid.end(),
                    [](const auto& a, const auto& b) { return a.value > b.value; });

  std::vector<detail::Candidate> starts;
  for (const auto& [name, q] : ratio_seeds(s)) starts.push_back({q, f(q), name});
  starts.insert(starts.end(), grid.begin(), grid.begin() + keep);

  double longest = 0.0;
  for (EdgeId e : kEdges) longest = std::max(longest, s.edge_length(e));
  const double step0 = longest / N;

  RatioReport r;
  r.n = n;
  r.m = m;
  r.grid = N;
  detail::Candidate best{{}, -1.0, ""};
  for (const auto& c0 : starts) {
    const detail::Candidate c = detail::pattern_search(f, s, c0, step0, cfg, r.refinement_steps);
    if (c.value > best.value) best = c;
  }
  // The grid maximum itself is a sampled value the result must dominate.
  for (std::size_t i = 0; i < keep; ++i)
    if (grid[i].value > best.value) best = grid[i];

  // Maxima are often attained on a whole segment; report a seed when it lies on it.
  r.ratio = best.value;
  for (std::size_t i = 0; i < 4; ++i)
    if (starts[i].value >= best.value - kPlateauTie) {
      best = starts[i];
      break;
    }
  r.argmax = best.q;
  r.seed = best.seed;
  r.rn = fc.std_cost(n, best.q);
  r.rm = fc.std_cost(m, best.q);
  r.final_step = cfg.min_step;
  r.witness_n = fleet_witness(fc, n, best.q);
  r.witness_m = fleet_witness(fc, m, best.q);
  return r;
}

inline RatioReport max_ratio(const Triangle& t, int n, int m, const RatioConfig& cfg = {}) {
  return max_ratio(FleetCosts(t), n, m, cfg);
}

// Sweeps over (angle B, angle C) with |BC| = 1.

struct SweepConfig {
  double step_deg = 1.0;
  double eps_apex_deg = 0.5;
  RatioConfig ratio{.grid = 32};
  int threads = -1;  // -1 reads TRIVISIT_THREADS, 0 means hardware concurrency
};

struct SweepCell {
  double b_deg = 0.0, c_deg = 0.0;
  double a_deg() const { return 180.0 - b_deg - c_deg; }
  double min_angle() const { return std::min({a_deg(), b_deg, c_deg}); }
  RatioReport report;
};

struct Extremum {
  std::size_t cell = 0;
  double value = 0.0;
  std::string shape;
  int ties = 0;                     // cells within kExtremumTie of the value, this one included
  std::vector<std::string> shapes;  // distinct shapes among them
};

inline constexpr double kExtremumTie = 1e-9;

struct InfTrend {
  std::vector<double> min_angle_deg;  // smallest angle allowed, coarse to fine
  std::vector<double> values;         // inf over cells with at least that smallest angle
  bool decreasing = false;            // strictly, so the inf is approached rather than attained
};

struct SweepResult {
  int n = 1, m = 2;
  SweepConfig config;
  std::vector<SweepCell> cells;
  Extremum inf, sup;
  InfTrend trend;
};

/// Lower ranks are preferred when several cells share an extremum.
inline int shape_rank(const std::string& shape) {
  static const char* order[] = {"equilateral", "right isosceles", "isosceles", "thin isosceles", "right", "thin right"};
  for (int i = 0; i < 6; ++i)
    if (shape == order[i]) return i;
  return 6;
}

/// Coarse shape name from angles in degrees.
inline std::string describe_shape(double a, double b, double c, double tol = 1e-6) {
  std::array<double, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  const bool isosceles = v[1] - v[0] < tol || v[2] - v[1] < tol;
  const bool right = std::abs(v[2] - 90.0) < tol;
  if (v[2] - v[0] < tol) return "equilateral";
  if (right && isosceles) return "right isosceles";
  std::string s = v[0] <= 5.0 + tol ? "thin " : "";
  if (isosceles) return s + "isosceles";
  if (right) return s + "right";
  return s + "scalene";
}

inline int sweep_threads(int requested) {
  if (requested < 0) {
    const char* env = std::getenv("TRIVISIT_THREADS");
    requested = env ? std::atoi(env) : 0;
  }
  if (requested <= 0) requested = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return requested;
}

/// Angle pairs of the sweep grid: multiples of the step with every angle in
/// (eps_apex, 90].
inline std::vector<std::pair<double, double>> sweep_grid(double step_deg, double eps_apex_deg) {
  if (!(step_deg > 0)) throw std::invalid_argument("step must be positive");
  if (!(eps_apex_deg >= 0)) throw std::invalid_argument("eps_apex must be non-negative");
  const double slack = 1e-9;
  std::vector<std::pair<double, double>> out;
  const int kmax = static_cast<int>(std::floor(90.0 / step_deg + slack));
  for (int i = 1; i <= kmax; ++i)
    for (int j = 1; j <= kmax; ++j) {
      const double b = i * step_deg, c = j * step_deg, a = 180.0 - b - c;
      if (b <= eps_apex_deg || c <= eps_apex_deg || a <= eps_apex_deg + slack || a > 90.0 + slack) continue;
      out.emplace_back(b, c);
    }
  return out;
}

inline SweepResult sweep_triangles(int n, int m, const SweepConfig& cfg = {}) {
  require_pair(n, m);
  SweepResult res;
  res.n = n;
  res.m = m;
  res.config = cfg;
  const auto grid = sweep_grid(cfg.step_deg, cfg.eps_apex_deg);
  res.cells.resize(grid.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      const auto [b, c] = grid[i];
      SweepCell& cell = res.cells[i];
      cell.b_deg = b;
      cell.c_deg = c;
      cell.report = max_ratio(Triangle::from_angles(deg2rad(b), deg2rad(c)), n, m, cfg.ratio);
    }
  };
  const int threads = std::min<int>(sweep_threads(cfg.threads), std::max<std::size_t>(1, grid.size()));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (res.cells.empty()) return res;

  // Sequential reduction in grid order, so the result does not depend on scheduling.
  double lo = res.cells[0].report.ratio, hi = lo;
  for (const auto& c : res.cells) {
    lo = std::min(lo, c.report.ratio);
    hi = std::max(hi, c.report.ratio);
  }
  auto extremum = [&](double target) {
    Extremum e;
    e.value = target;
    int best_rank = 1 << 30;
    for (std::size_t i = 0; i < res.cells.size(); ++i) {
      const SweepCell& c = res.cells[i];
      if (std::abs(c.report.ratio - target) > kExtremumTie) continue;
      const std::string shape = describe_shape(c.a_deg(), c.b_deg, c.c_deg);
      ++e.ties;
      if (std::find(e.shapes.begin(), e.shapes.end(), shape) == e.shapes.end()) e.shapes.push_back(shape);
      if (shape_rank(shape) < best_rank) {
        best_rank = shape_rank(shape);
        e.cell = i;
        e.shape = shape;
      }
    }
    return e;
  };
  res.inf = extremum(lo);
  res.sup = extremum(hi);

  std::vector<double> levels;
  for (const auto& c : res.cells) levels.push_back(c.min_angle());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end(), [](double x, double y) { return y - x < 1e-9; }),
               levels.end());
  const std::size_t count = std::min<std::size_t>(3, levels.size());
  for (std::size_t k = count; k-- > 0;) {
    const double lvl = levels[k];
    double v = std::numeric_limits<double>::infinity();
    for (const auto& c : res.cells)
      if (c.min_angle() >= lvl - 1e-9) v = std::min(v, c.report.ratio);
    res.trend.min_angle_deg.push_back(lvl);
    res.trend.values.push_back(v);
  }
  res.trend.decreasing = res.trend.values.size() > 1;
  for (std::size_t k = 1; k < res.trend.values.size(); ++k)
    if (!(res.trend.values[k] < res.trend.values[k - 1] - kExtremumTie)) res.trend.decreasing = false;
  return res;
}

}  // namespace trivisit
