#pragma once

// Brute-force minimization over bounce points. Used to certify the unfolding
// formulas; it never calls into visitation or fleet_costs.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "geometry.hpp"
#include "triangle.hpp"
#include "visitation.hpp"

namespace trivisit {

struct OracleConfig {
  int resolution = 64;
  double tolerance = 1e-10;
  int max_iterations = 200;

  void validate() const {
    if (resolution < 8) throw std::invalid_argument("oracle resolution must be at least 8");
    if (!(tolerance > 0)) throw std::invalid_argument("oracle tolerance must be positive");
    if (max_iterations < 1) throw std::invalid_argument("oracle needs at least one iteration");
  }
};

class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct Minimum1D {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search on [lo, hi] for a unimodal function.
inline Minimum1D golden_section(const std::function<double(double)>& f, double lo, double hi, double tol,
                                int max_iter) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  Minimum1D best{c, fc};
  if (fd < best.value) best = {d, fd};
  // Endpoints matter when the minimum sits on the boundary of a kinked function.
  for (double x : {lo, hi, 0.5 * (a + b)}) {
    const double v = f(x);
    if (v < best.value) best = {x, v};
  }
  return best;
}

}  // namespace detail

/// f(t1, t2) = |p - X1(t1)| + |X1(t1) - X2(t2)| + d(X2(t2), e3).
inline double ordered3_objective(const Triangle& t, Point2 p, const VisitOrder& o, double t1, double t2) {
  const Point2 x1 = t.edge(o[0]).at(t1);
  const Point2 x2 = t.edge(o[1]).at(t2);
  return distance(p, x1) + distance(x1, x2) + dist_point_segment(x2, t.edge(o[2]));
}

/// Nested golden-section: the inner search over t2 yields a convex function
/// of t1 (partial minimization preserves joint convexity).
inline double oracle_ordered3(const Triangle& t, Point2 p, const VisitOrder& o, const OracleConfig& cfg = {}) {
  cfg.validate();
  auto inner = [&](double t1) {
    return detail::golden_section([&](double t2) { return ordered3_objective(t, p, o, t1, t2); }, 0.0, 1.0,
                                  cfg.tolerance, cfg.max_iterations)
        .value;
  };
  double best = detail::golden_section(inner, 0.0, 1.0, cfg.tolerance, cfg.max_iterations).value;
  // Coarse grid as a guard against a non-unimodal slip.
  const int n = cfg.resolution;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      best = std::min(best, ordered3_objective(t, p, o, static_cast<double>(i) / n, static_cast<double>(j) / n));
  return best;
}

/// min over t of |p - X1(t)| + d(X1(t), e2).
inline double oracle_ordered2(const Triangle& t, Point2 p, EdgeId first, EdgeId second,
                              const OracleConfig& cfg = {}) {
  cfg.validate();
  const Segment s1 = t.edge(first), s2 = t.edge(second);
  auto f = [&](double u) {
    const Point2 x = s1.at(u);
    return distance(p, x) + dist_point_segment(x, s2);
  };
  double best = detail::golden_section(f, 0.0, 1.0, cfg.tolerance, cfg.max_iterations).value;
  for (int i = 0; i <= cfg.resolution; ++i) best = std::min(best, f(static_cast<double>(i) / cfg.resolution));
  return best;
}

inline double oracle_r3(const Triangle& t, Point2 p) {
  double r = 0.0;
  for (EdgeId e : kEdges) r = std::max(r, dist_point_segment(p, t.edge(e)));
  return r;
}

inline double oracle_r2(const Triangle& t, Point2 p, const OracleConfig& cfg = {}) {
  double best = std::numeric_limits<double>::infinity();
  for (EdgeId single : kEdges) {
    const auto [e1, e2] = incident_edges(opposite_vertex(single));
    const double pair =
        std::min(oracle_ordered2(t, p, e1, e2, cfg), oracle_ordered2(t, p, e2, e1, cfg));
    best = std::min(best, std::max(dist_point_segment(p, t.edge(single)), pair));
  }
  return best;
}

inline double oracle_r1(const Triangle& t, Point2 p, const OracleConfig& cfg = {}) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& o : kAllOrders) best = std::min(best, oracle_ordered3(t, p, o, cfg));
  return best;
}

/// Throws OracleMismatch naming the instance when |closed - oracle| > tol.
inline void require_agreement(const std::string& what, const Triangle& t, Point2 p, double closed,
                              double oracle, double tol = 1e-6) {
  if (std::abs(closed - oracle) <= tol) return;
  std::ostringstream os;
  os.precision(17);
  os << what << ": closed form " << closed << " vs oracle " << oracle << " for A=(" << t.A().x << ","
     << t.A().y << ") B=(" << t.B().x << "," << t.B().y << ") C=(" << t.C().x << "," << t.C().y
     << ") P=(" << p.x << "," << p.y << ")";
  throw OracleMismatch(os.str());
}

}  // namespace trivisit
