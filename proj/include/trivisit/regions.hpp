#pragma once

// Region subdivisions of a triangle by optimal strategy.
//
// Every strategy cost is locally one of two shapes: the distance to a line,
// or the distance to a point plus a constant. Separators are therefore
// pieces of lines, parabolas and hyperbola branches. They are traced by
// sampling each equal-cost curve and clipping it to where both cost terms are
// realized by optimal strategies. Raster maps classify cell centroids
// directly from trajectories, independently of the traced curves.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fleet_costs.hpp"
#include "geometry.hpp"
#include "triangle.hpp"
#include "visitation.hpp"

namespace trivisit {

// ---------------------------------------------------------------------------
// Cost terms and equal-cost curves

struct CostTerm {
  enum class Kind { Line, Point };
  Kind kind = Kind::Point;
  Line line;
  Point2 center;
  double offset = 0.0;

  static CostTerm to_line(const Line& l) { return {Kind::Line, l, {}, 0.0}; }
  static CostTerm to_point(Point2 c, double off = 0.0) { return {Kind::Point, {}, c, off}; }

  double value(Point2 p) const { return kind == Kind::Line ? line.distance(p) : distance(p, center) + offset; }

  bool same(const CostTerm& o, double eps = 1e-12) const {
    if (kind != o.kind) return false;
    if (kind == Kind::Point) return distance(center, o.center) <= eps && std::abs(offset - o.offset) <= eps;
    const double s = dot(line.normal(), o.line.normal()) >= 0 ? 1.0 : -1.0;
    return std::abs(line.a - s * o.line.a) <= eps && std::abs(line.b - s * o.line.b) <= eps &&
           std::abs(line.c - s * o.line.c) <= eps;
  }
};

/// A separator piece: a segment, or an arc of the focal conic
/// r(θ) = k / (1 + e·cos(θ - axis)) around `focus` for θ in [theta0, theta1].
struct CurvePiece {
  enum class Kind { Segment, Parabola, Hyperbola };
  Kind kind = Kind::Segment;
  Point2 p0, p1;
  Point2 focus;
  double k = 0.0, e = 1.0, axis = 0.0, theta0 = 0.0, theta1 = 0.0;

  Point2 at(double s) const {
    if (kind == Kind::Segment) return lerp(p0, p1, s);
    const double th = theta0 + (theta1 - theta0) * s;
    const double r = k / (1.0 + e * std::cos(th - axis));
    return focus + Point2{std::cos(th), std::sin(th)} * r;
  }
  Point2 start() const { return at(0.0); }
  Point2 end() const { return at(1.0); }

  CurvePiece reversed() const {
    CurvePiece r = *this;
    std::swap(r.p0, r.p1);
    std::swap(r.theta0, r.theta1);
    return r;
  }

  CurvePiece mapped(const Similarity& s) const {
    CurvePiece r = *this;
    r.p0 = s.apply(p0);
    r.p1 = s.apply(p1);
    r.focus = s.apply(focus);
    r.k = s.apply_length(k);
    r.axis = axis + s.rotation;
    r.theta0 = theta0 + s.rotation;
    r.theta1 = theta1 + s.rotation;
    return r;
  }
};

inline std::string_view to_string(CurvePiece::Kind k) {
  switch (k) {
    case CurvePiece::Kind::Segment: return "segment";
    case CurvePiece::Kind::Parabola: return "parabola";
    case CurvePiece::Kind::Hyperbola: return "hyperbola";
  }
  return "?";
}

struct SeparatorChain {
  std::vector<CurvePiece> pieces;
  std::string side_a, side_b;  // classes on either side
  std::string label;           // "side_a / side_b"

  std::vector<Point2> sample(int per_piece) const {
    std::vector<Point2> pts;
    for (const auto& piece : pieces)
      for (int i = 0; i <= per_piece; ++i) pts.push_back(piece.at(static_cast<double>(i) / per_piece));
    return pts;
  }

  SeparatorChain mapped(const Similarity& s) const {
    SeparatorChain c = *this;
    for (auto& p : c.pieces) p = p.mapped(s);
    return c;
  }

  Point2 front() const { return pieces.front().start(); }
  Point2 back() const { return pieces.back().end(); }
};

namespace detail {

/// An unbounded equal-cost curve parametrized over [lo, hi].
struct CandidateCurve {
  CurvePiece::Kind kind = CurvePiece::Kind::Segment;
  Point2 origin, dir;                     // segment: origin + s * dir
  Point2 focus;                           // conic: θ = s
  double k = 0.0, e = 1.0, axis = 0.0;
  double lo = 0.0, hi = 0.0;

  Point2 at(double s) const {
    if (kind == CurvePiece::Kind::Segment) return origin + dir * s;
    const double r = k / (1.0 + e * std::cos(s - axis));
    return focus + Point2{std::cos(s), std::sin(s)} * r;
  }

  CurvePiece piece(double s0, double s1) const {
    CurvePiece p;
    p.kind = kind;
    if (kind == CurvePiece::Kind::Segment) {
      p.p0 = at(s0);
      p.p1 = at(s1);
    } else {
      p.focus = focus;
      p.k = k;
      p.e = e;
      p.axis = axis;
      p.theta0 = s0;
      p.theta1 = s1;
    }
    return p;
  }
};

inline std::optional<CandidateCurve> line_curve(const Line& l, const Triangle& t) {
  // Clip the line to the triangle's closed halfplanes, with a little margin.
  const Point2 o = l.some_point(), d = l.direction();
  double lo = -1e9, hi = 1e9;
  for (EdgeId e : kEdges) {
    const auto [a, b] = endpoints(e);
    const Point2 va = t.vertex(a), n = perp(normalized(t.vertex(b) - va));  // inward for CCW
    const double c0 = dot(o - va, n) + 1e-9, c1 = dot(d, n);
    if (std::abs(c1) < 1e-15) {
      if (c0 < 0) return std::nullopt;
      continue;
    }
    const double s = -c0 / c1;
    if (c1 > 0) lo = std::max(lo, s);
    else hi = std::min(hi, s);
  }
  if (hi - lo <= 1e-12) return std::nullopt;
  CandidateCurve c;
  c.kind = CurvePiece::Kind::Segment;
  c.origin = o;
  c.dir = d;
  c.lo = lo;
  c.hi = hi;
  return c;
}

/// Restricts θ to the directions under which the triangle is seen from `focus`.
inline std::pair<double, double> view_range(const Triangle& t, Point2 focus, double axis, double half_width) {
  double lo = axis - half_width, hi = axis + half_width;
  if (t.contains(focus, 1e-9)) return {lo, hi};
  // The triangle is convex, so from an outside focus it spans less than pi.
  const double ref = std::atan2(t.centroid().y - focus.y, t.centroid().x - focus.x);
  double vmin = 1e9, vmax = -1e9;
  for (VertexId v : kVertices) {
    const Point2 d = t.vertex(v) - focus;
    double a = std::atan2(d.y, d.x);
    while (a - ref > std::numbers::pi) a -= 2 * std::numbers::pi;
    while (a - ref < -std::numbers::pi) a += 2 * std::numbers::pi;
    vmin = std::min(vmin, a);
    vmax = std::max(vmax, a);
  }
  // Shift the view interval next to the conic's interval before intersecting.
  const double two_pi = 2 * std::numbers::pi;
  while (vmin - axis > std::numbers::pi) { vmin -= two_pi; vmax -= two_pi; }
  while (vmin - axis < -std::numbers::pi) { vmin += two_pi; vmax += two_pi; }
  lo = std::max(lo, vmin - 1e-9);
  hi = std::min(hi, vmax + 1e-9);
  return {lo, hi};
}

inline std::optional<CandidateCurve> conic_curve(const Triangle& t, Point2 focus, double k, double e, double axis) {
  CandidateCurve c;
  c.kind = e <= 1.0 + 1e-15 ? CurvePiece::Kind::Parabola : CurvePiece::Kind::Hyperbola;
  c.focus = focus;
  c.k = k;
  c.e = e;
  c.axis = axis;
  const double half = e <= 1.0 ? std::numbers::pi : std::acos(-1.0 / e);
  auto [lo, hi] = view_range(t, focus, axis, half * (1.0 - 1e-9));
  if (hi - lo <= 1e-12) return std::nullopt;
  c.lo = lo;
  c.hi = hi;
  return c;
}

/// Curves on which two cost terms are equal, clipped roughly to the triangle.
inline std::vector<CandidateCurve> equal_cost_curves(const CostTerm& u, const CostTerm& v, const Triangle& t) {
  std::vector<CandidateCurve> out;
  auto push = [&](std::optional<CandidateCurve> c) {
    if (c) out.push_back(*c);
  };
  using K = CostTerm::Kind;
  if (u.kind == K::Line && v.kind == K::Line) {
    // |a1| = |a2| splits into the two angle bisectors.
    for (double s : {1.0, -1.0}) {
      const Point2 n{u.line.a - s * v.line.a, u.line.b - s * v.line.b};
      if (norm(n) < 1e-12) continue;
      const double c = u.line.c - s * v.line.c;
      const double len = norm(n);
      push(line_curve(Line{n.x / len, n.y / len, c / len}, t));
    }
    return out;
  }
  if (u.kind == K::Line || v.kind == K::Line) {
    const CostTerm& ln = u.kind == K::Line ? u : v;
    const CostTerm& pt = u.kind == K::Line ? v : u;
    // sigma * a(P) = |P - X| + h: a parabola with the directrix moved by h.
    for (double sigma : {1.0, -1.0}) {
      const Point2 n = ln.line.normal() * sigma;
      const double k = sigma * ln.line.signed_distance(pt.center) - pt.offset;
      const Point2 toward = -n;
      if (std::abs(k) <= 1e-12) {
        // Focus on the directrix: the parabola degenerates to a ray.
        push(line_curve(Line::with_normal(pt.center, perp(n)), t));
        continue;
      }
      if (k < 0) continue;
      push(conic_curve(t, pt.center, k, 1.0, std::atan2(toward.y, toward.x)));
    }
    return out;
  }
  // |P - X1| + h1 = |P - X2| + h2.
  const double dh = u.offset - v.offset;
  const double dist = distance(u.center, v.center);
  if (dist <= 1e-12) return out;
  if (std::abs(dh) <= 1e-14) {
    push(line_curve(Line::with_normal(midpoint(u.center, v.center), v.center - u.center), t));
    return out;
  }
  // Branch nearer the focus with the larger offset: |P - F2| - |P - F1| = h.
  const Point2 f1 = dh > 0 ? u.center : v.center;
  const Point2 f2 = dh > 0 ? v.center : u.center;
  const double h = std::abs(dh);
  if (dist <= h + 1e-14) return out;
  const Point2 w = f2 - f1;
  push(conic_curve(t, f1, (dist * dist - h * h) / (2 * h), dist / h, std::atan2(w.y, w.x)));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Strategy models: which cost terms are realized by optimal strategies

enum class RegionMode { R1, R2, R3 };

inline std::string_view to_string(RegionMode m) {
  switch (m) {
    case RegionMode::R1: return "r1";
    case RegionMode::R2: return "r2";
    case RegionMode::R3: return "r3";
  }
  return "?";
}

inline RegionMode parse_region_mode(std::string_view s) {
  if (s == "r1" || s == "R1") return RegionMode::R1;
  if (s == "r2" || s == "R2") return RegionMode::R2;
  if (s == "r3" || s == "R3") return RegionMode::R3;
  throw std::invalid_argument("region mode must be r1, r2 or r3");
}

struct ActiveTerm {
  int strategy = 0;
  int term = 0;
};

/// Cost-term bookkeeping over a standard-form triangle.
class TermModel {
 public:
  /// R1 over the given orders (all six by default), R2 or R3.
  TermModel(const Triangle& standard, RegionMode mode, std::vector<int> orders = {0, 1, 2, 3, 4, 5})
      : t_(standard), mode_(mode), orders_(std::move(orders)) {
    switch (mode_) {
      case RegionMode::R1: build_r1(); break;
      case RegionMode::R2: build_r2(); break;
      case RegionMode::R3: build_r3(); break;
    }
  }

  const Triangle& triangle() const { return t_; }
  RegionMode mode() const { return mode_; }
  const std::vector<int>& orders() const { return orders_; }
  const std::vector<CostTerm>& terms() const { return terms_; }
  const std::string& strategy_name(int s) const { return names_[s]; }
  int strategy_count() const { return static_cast<int>(names_.size()); }

  /// Strategies that may realize a term anywhere.
  const std::set<int>& strategies_of(int term) const { return owners_[term]; }

  /// (strategy, term) pairs that are optimal at q. Costs within `tol` of the
  /// optimum count as optimal; unfolding cases within `eps` of an indicator line
  /// contribute every candidate that attains the strategy's cost.
  std::vector<ActiveTerm> active(Point2 q, double tol = 1e-10, double eps = 1e-9) const {
    std::vector<ActiveTerm> out;
    switch (mode_) {
      case RegionMode::R1: active_r1(q, tol, eps, out); break;
      case RegionMode::R2: active_r2(q, tol, out); break;
      case RegionMode::R3: active_r3(q, tol, out); break;
    }
    return out;
  }

 private:
  int add_term(const CostTerm& c, int strategy) {
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].same(c)) {
        owners_[i].insert(strategy);
        return static_cast<int>(i);
      }
    terms_.push_back(c);
    owners_.push_back({strategy});
    return static_cast<int>(terms_.size()) - 1;
  }

  void build_r1() {
    for (int s = 0; s < static_cast<int>(orders_.size()); ++s) {
      const detail::ThreeEdgeUnfolding u(t_, kAllOrders[orders_[s]]);
      names_.push_back(kAllOrders[orders_[s]].name());
      unf_.push_back(u);
      r1_terms_.push_back({add_term(CostTerm::to_line(u.third_unfolded), s), add_term(CostTerm::to_point(u.c1), s),
                           add_term(CostTerm::to_point(u.a, u.altitude), s)});
    }
  }

  void active_r1(Point2 q, double tol, double eps, std::vector<ActiveTerm>& out) const {
    const int n = static_cast<int>(orders_.size());
    std::vector<std::array<double, 3>> val(n);
    std::vector<std::array<bool, 3>> ok(n);
    std::vector<double> cost(n);
    double best = 1e300;
    for (int s = 0; s < n; ++s) {
      const auto& u = unf_[s];
      const double sb = u.bounce_side(q), ss = u.subopt_side(q);
      ok[s] = {ss >= -eps && sb >= -eps, ss >= -eps && sb <= eps, ss <= eps};
      val[s] = {u.third_unfolded.distance(q), distance(q, u.c1), distance(q, u.a) + u.altitude};
      cost[s] = 1e300;
      for (int c = 0; c < 3; ++c)
        if (ok[s][c]) cost[s] = std::min(cost[s], val[s][c]);
      best = std::min(best, cost[s]);
    }
    for (int s = 0; s < n; ++s) {
      if (cost[s] > best + tol) continue;
      for (int c = 0; c < 3; ++c)
        if (ok[s][c] && val[s][c] <= cost[s] + tol) out.push_back({s, r1_terms_[s][c]});
    }
  }

  void build_r2() {
    for (EdgeId single : kEdges) {
      const auto [e1, e2] = incident_edges(opposite_vertex(single));
      const int base = static_cast<int>(names_.size());
      names_.push_back(std::string(1, to_char(single)));
      names_.push_back(std::string{to_char(e1), to_char(e2)});
      names_.push_back(std::string{to_char(e2), to_char(e1)});
      PairTerms p;
      p.single = single;
      p.single_term = add_term(CostTerm::to_line(t_.edge_line(single)), base);
      int k = 0;
      for (auto [f, g] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
        const detail::TwoEdgeUnfolding u(t_, f, g);
        p.pair[k] = u;
        p.vertex_term[k] = add_term(CostTerm::to_point(u.vertex), base + 1 + k);
        p.far_term[k] = add_term(CostTerm::to_point(u.reflected.q), base + 1 + k);
        p.line_term[k] = add_term(CostTerm::to_line(u.reflected.line()), base + 1 + k);
        ++k;
      }
      r2_.push_back(p);
    }
  }

  void active_r2(Point2 q, double tol, std::vector<ActiveTerm>& out) const {
    std::array<double, 3> value{};
    std::array<double, 3> single{};
    std::array<std::array<double, 2>, 3> pair{};
    for (int k = 0; k < 3; ++k) {
      single[k] = t_.distance_to_edge(q, r2_[k].single);
      for (int o = 0; o < 2; ++o) pair[k][o] = dist_point_segment(q, r2_[k].pair[o].reflected);
      value[k] = std::max(single[k], std::min(pair[k][0], pair[k][1]));
    }
    const double best = *std::min_element(value.begin(), value.end());
    for (int k = 0; k < 3; ++k) {
      if (value[k] > best + tol) continue;
      const int base = 3 * k;
      if (single[k] >= value[k] - tol) out.push_back({base, r2_[k].single_term});
      const double pmin = std::min(pair[k][0], pair[k][1]);
      for (int o = 0; o < 2; ++o) {
        if (pair[k][o] > pmin + tol || pair[k][o] < value[k] - tol) continue;
        const auto& u = r2_[k].pair[o];
        const double s = dot(q - u.reflected.p, u.reflected.q - u.reflected.p) /
                         dot(u.reflected.q - u.reflected.p, u.reflected.q - u.reflected.p);
        if (distance(q, u.vertex) <= pair[k][o] + tol) out.push_back({base + 1 + o, r2_[k].vertex_term[o]});
        if (distance(q, u.reflected.q) <= pair[k][o] + tol) out.push_back({base + 1 + o, r2_[k].far_term[o]});
        if (s >= -1e-9 && s <= 1 + 1e-9) out.push_back({base + 1 + o, r2_[k].line_term[o]});
      }
    }
  }

  void build_r3() {
    for (EdgeId e : kEdges) {
      names_.push_back(std::string(1, to_char(e)));
      add_term(CostTerm::to_line(t_.edge_line(e)), static_cast<int>(e));
    }
  }

  void active_r3(Point2 q, double tol, std::vector<ActiveTerm>& out) const {
    std::array<double, 3> d{};
    for (EdgeId e : kEdges) d[static_cast<int>(e)] = t_.distance_to_edge(q, e);
    const double best = *std::max_element(d.begin(), d.end());
    for (int e = 0; e < 3; ++e)
      if (d[e] >= best - tol) out.push_back({e, e});
  }

  struct PairTerms {
    EdgeId single = EdgeId::L;
    int single_term = 0;
    std::array<detail::TwoEdgeUnfolding, 2> pair;
    std::array<int, 2> vertex_term{}, far_term{}, line_term{};
  };

  Triangle t_;
  RegionMode mode_;
  std::vector<int> orders_;
  std::vector<CostTerm> terms_;
  std::vector<std::set<int>> owners_;
  std::vector<std::string> names_;
  std::vector<detail::ThreeEdgeUnfolding> unf_;
  std::vector<std::array<int, 3>> r1_terms_;
  std::vector<PairTerms> r2_;
};

// ---------------------------------------------------------------------------
// Point classification

/// One class of optimal strategies sharing a trajectory, e.g. "DLR|DRL".
struct CellLabel {
  std::vector<std::string> classes;  // sorted

  bool tie() const { return classes.size() >= 2; }
  std::string str() const {
    std::string s;
    for (const auto& c : classes) s += (s.empty() ? "" : ";") + c;
    return s;
  }
  bool has(const std::string& name) const {
    for (const auto& c : classes) {
      std::size_t pos = 0;
      while (pos <= c.size()) {
        const std::size_t bar = c.find('|', pos);
        const std::string part = c.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        if (part == name) return true;
        if (bar == std::string::npos) break;
        pos = bar + 1;
      }
    }
    return false;
  }
};

namespace detail {

inline std::vector<Point2> simplified(const std::vector<Point2>& pts) {
  std::vector<Point2> out;
  for (const auto& p : pts)
    if (out.empty() || distance(out.back(), p) > 1e-9) out.push_back(p);
  return out;
}

inline bool same_path(const Trajectory& a, const Trajectory& b, double tol = 1e-9) {
  const auto pa = simplified(a.waypoints), pb = simplified(b.waypoints);
  if (pa.size() != pb.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (distance(pa[i], pb[i]) > tol) return false;
  return true;
}

/// Groups named trajectories by identical paths.
inline CellLabel group_trajectories(const std::vector<std::pair<std::string, Trajectory>>& items) {
  std::vector<std::pair<std::set<std::string>, Trajectory>> groups;
  for (const auto& [name, tr] : items) {
    bool placed = false;
    for (auto& g : groups)
      if (same_path(g.second, tr)) {
        g.first.insert(name);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({{name}, tr});
  }
  CellLabel label;
  for (const auto& g : groups) {
    std::string s;
    for (const auto& n : g.first) s += (s.empty() ? "" : "|") + n;
    label.classes.push_back(s);
  }
  std::sort(label.classes.begin(), label.classes.end());
  label.classes.erase(std::unique(label.classes.begin(), label.classes.end()), label.classes.end());
  return label;
}

/// A pair path that collapses onto a vertex is named by the vertex.
inline std::string r2_pair_name(const Trajectory& tr, const Triangle& t) {
  const auto pts = simplified(tr.waypoints);
  if (pts.size() == 2)
    for (VertexId v : kVertices)
      if (distance(pts.back(), t.vertex(v)) <= 1e-9) return std::string(1, to_char(v));
  return tr.sequence_name();
}

}  // namespace detail

/// Label of a standard-form point under the given mode.
/// R1 considers only `orders` (indices into kAllOrders), all six by default.
inline CellLabel classify_point(const FleetCosts& fc, Point2 q, RegionMode mode,
                                const std::vector<int>& orders = {0, 1, 2, 3, 4, 5}, double tie = tol::kTie) {
  const Visitation& vis = fc.visitation();
  const Triangle& st = vis.standard();
  std::vector<std::pair<std::string, Trajectory>> items;
  switch (mode) {
    case RegionMode::R1: {
      double best = 1e300;
      for (int i : orders) best = std::min(best, vis.std_three_ordered_cost(q, i));
      for (int i : orders)
        if (vis.std_three_ordered_cost(q, i) <= best + tie)
          items.push_back({kAllOrders[i].name(), vis.std_three_ordered(q, kAllOrders[i])});
      break;
    }
    case RegionMode::R2: {
      const R2Result r = fc.std_r2_report(q);
      for (const auto& part : r.optimal) {
        if (part.cost > r.cost + tie) continue;
        if (part.single_trajectory.cost >= part.cost - tie)
          items.push_back({std::string(1, to_char(part.single)), part.single_trajectory});
        const auto [e1, e2] = incident_edges(opposite_vertex(part.single));
        for (auto [f, g] : {std::pair{e1, e2}, std::pair{e2, e1}}) {
          const Trajectory tr = vis.std_two_ordered(q, f, g);
          if (tr.cost <= part.pair_trajectory.cost + tie && tr.cost >= part.cost - tie)
            items.push_back({detail::r2_pair_name(tr, st), tr});
        }
      }
      break;
    }
    case RegionMode::R3: {
      const R3Result r = fc.std_r3_report(q);
      for (EdgeId e : r.ties) items.push_back({std::string(1, to_char(e)), vis.std_visit_one(q, e)});
      break;
    }
  }
  return detail::group_trajectories(items);
}

/// Standard-frame cost of one named strategy: an order (R1), an edge, an
/// ordered edge pair or a vertex (R2), or an edge (R3).
inline double strategy_cost(const FleetCosts& fc, Point2 q, RegionMode mode, std::string_view name) {
  const Visitation& vis = fc.visitation();
  const Triangle& st = vis.standard();
  auto edge = [](char c) {
    switch (c) {
      case 'L': return EdgeId::L;
      case 'D': return EdgeId::D;
      case 'R': return EdgeId::R;
    }
    throw std::invalid_argument("unknown strategy name");
  };
  if (mode == RegionMode::R1) return vis.std_three_ordered_cost(q, order_index(VisitOrder::parse(name)));
  if (name.size() == 2) return vis.std_two_ordered_cost(q, edge(name[0]), edge(name[1]));
  if (name.size() != 1) throw std::invalid_argument("unknown strategy name");
  switch (name[0]) {
    case 'A': return distance(q, st.A());
    case 'B': return distance(q, st.B());
    case 'C': return distance(q, st.C());
  }
  return st.distance_to_edge(q, edge(name[0]));
}

namespace detail {

/// Whether terms i and j are both realized at q by two different optimal strategies.
inline bool separates(const TermModel& m, Point2 q, int i, int j) {
  if (!m.triangle().contains(q, 1e-12)) return false;
  const auto act = m.active(q, 1e-12, 1e-12);
  for (const auto& x : act) {
    if (x.term != i) continue;
    for (const auto& y : act)
      if (y.term == j && y.strategy != x.strategy) return true;
  }
  return false;
}

/// Classes on both sides of a piece at parameter s, or nothing on the
/// triangle boundary or where both sides agree.
inline std::optional<std::pair<std::string, std::string>> sides_at(const TermModel& m, const FleetCosts& fc,
                                                                   const CurvePiece& piece, double s) {
  const Triangle& t = m.triangle();
  const Point2 mid = piece.at(s);
  for (EdgeId e : kEdges)
    if (t.distance_to_edge(mid, e) <= 1e-9) return std::nullopt;
  const Point2 tangent = piece.at(s + 1e-6) - piece.at(s - 1e-6);
  if (norm(tangent) <= 1e-15) return std::nullopt;
  // Some separators are tangential, where costs part only quadratically,
  // while short pieces near junctions need small offsets. Accept the first
  // offset whose classes on both sides are all optimal on the curve itself.
  const Point2 n = perp(normalized(tangent));
  double opt = fc.std_cost(m.mode() == RegionMode::R1 ? 1 : m.mode() == RegionMode::R2 ? 2 : 3, mid);
  if (m.mode() == RegionMode::R1) {
    opt = std::numeric_limits<double>::infinity();
    for (int i : m.orders()) opt = std::min(opt, fc.visitation().std_three_ordered_cost(mid, i));
  }
  auto optimal_here = [&](const CellLabel& label) {
    for (const auto& cls : label.classes) {
      std::size_t pos = 0;
      for (;;) {
        const std::size_t bar = cls.find('|', pos);
        const std::string name = cls.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        if (std::abs(strategy_cost(fc, mid, m.mode(), name) - opt) > 1e-9) return false;
        if (bar == std::string::npos) break;
        pos = bar + 1;
      }
    }
    return true;
  };
  for (double h : {1e-5, 1e-6, 1e-7, 1e-4}) {
    const Point2 off = n * h;
    if (!t.contains(mid + off, 0.0) || !t.contains(mid - off, 0.0)) continue;
    const CellLabel la = classify_point(fc, mid + off, m.mode(), m.orders(), 1e-13);
    const CellLabel lb = classify_point(fc, mid - off, m.mode(), m.orders(), 1e-13);
    std::string a = la.str(), b = lb.str();
    if (a == b || !optimal_here(la) || !optimal_here(lb)) continue;
    if (b < a) std::swap(a, b);
    return std::pair{a, b};
  }
  return std::nullopt;
}

struct LabelledPiece {
  CurvePiece piece;
  std::string side_a, side_b;
};

/// Splits a piece where the classes on its sides change. Slivers and pieces
/// along the triangle boundary are dropped.
inline std::vector<LabelledPiece> label_piece(const TermModel& m, const FleetCosts& fc, const CurvePiece& piece,
                                              double min_length) {
  std::vector<LabelledPiece> out;
  if (distance(piece.start(), piece.end()) <= min_length && distance(piece.start(), piece.at(0.5)) <= min_length)
    return out;
  constexpr int kSamples = 9;
  std::vector<std::pair<double, std::pair<std::string, std::string>>> known;
  for (int k = 0; k < kSamples; ++k) {
    const double s = (k + 0.5) / kSamples;
    if (auto sd = sides_at(m, fc, piece, s)) known.push_back({s, *sd});
  }
  if (known.empty()) return out;
  double from = 0.0;
  for (std::size_t k = 0; k < known.size(); ++k) {
    double to = 1.0;
    if (k + 1 < known.size()) {
      if (known[k + 1].second == known[k].second) continue;
      double lo = known[k].first, hi = known[k + 1].first;
      for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto sd = sides_at(m, fc, piece, mid);
        (sd && *sd == known[k].second ? lo : hi) = mid;
      }
      to = 0.5 * (lo + hi);
    }
    CurvePiece sub = piece;
    if (piece.kind == CurvePiece::Kind::Segment) {
      sub.p0 = piece.at(from);
      sub.p1 = piece.at(to);
    } else {
      sub.theta0 = piece.theta0 + (piece.theta1 - piece.theta0) * from;
      sub.theta1 = piece.theta0 + (piece.theta1 - piece.theta0) * to;
    }
    if (distance(sub.start(), sub.end()) > min_length)
      out.push_back({sub, known[k].second.first, known[k].second.second});
    from = to;
  }
  return out;
}

inline bool duplicate(const std::vector<CurvePiece>& kept, const CurvePiece& p, double tol = 1e-7) {
  for (const auto& k : kept) {
    const bool fwd = distance(k.start(), p.start()) <= tol && distance(k.end(), p.end()) <= tol;
    const bool rev = distance(k.start(), p.end()) <= tol && distance(k.end(), p.start()) <= tol;
    if ((fwd || rev) && distance(k.at(0.5), p.at(0.5)) <= tol) return true;
  }
  return false;
}

/// Joins pieces that share endpoints into chains.
inline std::vector<SeparatorChain> join_pieces(std::vector<CurvePiece> pieces, const std::string& side_a,
                                               const std::string& side_b, double tol = 1e-7) {
  std::vector<SeparatorChain> chains;
  std::vector<bool> used(pieces.size(), false);
  for (std::size_t s = 0; s < pieces.size(); ++s) {
    if (used[s]) continue;
    used[s] = true;
    SeparatorChain c{{pieces[s]}, side_a, side_b, side_a + " / " + side_b};
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (used[i]) continue;
        const CurvePiece& p = pieces[i];
        if (distance(c.back(), p.start()) <= tol) c.pieces.push_back(p);
        else if (distance(c.back(), p.end()) <= tol) c.pieces.push_back(p.reversed());
        else if (distance(c.front(), p.end()) <= tol) c.pieces.insert(c.pieces.begin(), p);
        else if (distance(c.front(), p.start()) <= tol) c.pieces.insert(c.pieces.begin(), p.reversed());
        else continue;
        used[i] = true;
        grew = true;
      }
    }
    chains.push_back(std::move(c));
  }
  return chains;
}

}  // namespace detail

struct TraceConfig {
  int samples = 2048;    // per candidate curve
  int bisections = 60;   // endpoint refinement steps
  double min_length = 1e-4;
};

/// All separators of a model, in the model's (standard-form) frame.
inline std::vector<SeparatorChain> trace_separators(const TermModel& m, const TraceConfig& cfg = {}) {
  const auto& terms = m.terms();
  const Triangle& t = m.triangle();
  const FleetCosts fc(t);
  std::map<std::string, std::vector<CurvePiece>> by_label;
  std::vector<std::string> label_order;
  std::vector<CurvePiece> kept;
  for (int i = 0; i < static_cast<int>(terms.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(terms.size()); ++j) {
      const auto& si = m.strategies_of(i);
      const auto& sj = m.strategies_of(j);
      if (si.size() == 1 && sj.size() == 1 && *si.begin() == *sj.begin()) continue;
      for (const auto& curve : detail::equal_cost_curves(terms[i], terms[j], t)) {
        const int n = cfg.samples;
        auto param = [&](int s) { return curve.lo + (curve.hi - curve.lo) * s / n; };
        auto valid = [&](double s) { return detail::separates(m, curve.at(s), i, j); };
        std::vector<bool> ok(n + 1);
        for (int s = 0; s <= n; ++s) ok[s] = valid(param(s));
        for (int s = 0; s <= n;) {
          if (!ok[s]) {
            ++s;
            continue;
          }
          int e = s;
          while (e + 1 <= n && ok[e + 1]) ++e;
          // Refine both ends between the last invalid and first valid sample.
          double a = param(s), b = param(e);
          if (s > 0) {
            double lo = param(s - 1), hi = a;
            for (int it = 0; it < cfg.bisections; ++it) {
              const double mid = 0.5 * (lo + hi);
              (valid(mid) ? hi : lo) = mid;
            }
            a = hi;
          }
          if (e < n) {
            double lo = b, hi = param(e + 1);
            for (int it = 0; it < cfg.bisections; ++it) {
              const double mid = 0.5 * (lo + hi);
              (valid(mid) ? lo : hi) = mid;
            }
            b = lo;
          }
          const CurvePiece piece = curve.piece(a, b);
          for (auto& lp : detail::label_piece(m, fc, piece, cfg.min_length)) {
            if (detail::duplicate(kept, lp.piece)) continue;
            const std::string label = lp.side_a + " / " + lp.side_b;
            if (!by_label.count(label)) label_order.push_back(label);
            by_label[label].push_back(lp.piece);
            kept.push_back(lp.piece);
          }
          s = e + 1;
        }
      }
    }
  }
  std::vector<SeparatorChain> out;
  for (const auto& label : label_order) {
    const auto cut = label.find(" / ");
    for (auto& c : detail::join_pieces(by_label[label], label.substr(0, cut), label.substr(cut + 3)))
      out.push_back(std::move(c));
  }
  return out;
}

/// Separators of the chosen mode, in the caller's frame.
inline std::vector<SeparatorChain> region_separators(const Triangle& t, RegionMode mode, const TraceConfig& cfg = {}) {
  const auto [st, sim] = standard_form(t);
  const Similarity back = sim.inverse();
  std::vector<SeparatorChain> out;
  for (const auto& c : trace_separators(TermModel(st, mode), cfg)) out.push_back(c.mapped(back));
  return out;
}

// ---------------------------------------------------------------------------
// Closed constructions from bisectors and unfoldings

struct R3Regions {
  Point2 K, L, M;  // bisector feet on BC, CA, AB
  Point2 I;
  Triangle triangle;

  /// Edges farthest from p (several on a bisector).
  std::vector<EdgeId> classify(Point2 p, double tol = tol::kTie) const {
    std::array<double, 3> d{};
    for (EdgeId e : kEdges) d[static_cast<int>(e)] = triangle.distance_to_edge(p, e);
    const double best = *std::max_element(d.begin(), d.end());
    std::vector<EdgeId> out;
    for (EdgeId e : kEdges)
      if (d[static_cast<int>(e)] >= best - tol * triangle.edge_length(EdgeId::D)) out.push_back(e);
    return out;
  }
};

inline R3Regions r3_regions(const Triangle& t) {
  return {foot_of_bisector(t, VertexId::A), foot_of_bisector(t, VertexId::B), foot_of_bisector(t, VertexId::C),
          incenter(t), t};
}

/// Point on the bisector of `v` where the extreme rays of the cones at the
/// two adjacent bisector feet meet.
inline Point2 bisector_separator_point(const Triangle& t, VertexId v) {
  const Point2 pv = t.vertex(v);
  const Line bis = Line::with_normal(pv, perp(bisector_direction(t, v)));
  std::vector<Point2> hits;
  std::vector<Line> rays;
  for (EdgeId e : {incident_edges(v).first, incident_edges(v).second}) {
    const VertexId w = opposite_vertex(e);
    const Point2 foot = foot_of_bisector(t, w);
    const Point2 toward = normalized(pv - foot);
    const double turn = std::numbers::pi / 2 - t.angle(w) / 2;
    Point2 d = rotated(toward, turn);
    if (!t.contains(foot + d * 1e-6, 0.0)) d = rotated(toward, -turn);
    rays.push_back(Line::with_normal(foot, perp(d)));
    if (auto x = intersect(rays.back(), bis)) hits.push_back(*x);
  }
  if (auto x = intersect(rays[0], rays[1])) return *x;
  if (hits.empty()) throw GeometryError("separator rays are parallel to the bisector");
  // Collinear rays (equilateral case): both meet the bisector at one point.
  return hits.front();
}

/// Hexagon through the bisector feet and separator points, with the part
/// inside each bouncing subcone (angles above pi/3) replaced by the parabola
/// with focus at the vertex and the opposite edge as directrix.
inline SeparatorChain r2_separator(const Triangle& t) {
  SeparatorChain chain;
  chain.side_a = "single edge";
  chain.side_b = "edge pair";
  chain.label = "single edge / edge pair";
  auto segment = [&](Point2 a, Point2 b) {
    if (distance(a, b) <= 1e-12) return;
    CurvePiece p;
    p.kind = CurvePiece::Kind::Segment;
    p.p0 = a;
    p.p1 = b;
    chain.pieces.push_back(p);
  };
  // Walk M -> F_B -> K -> F_C -> L -> F_A -> M.
  for (VertexId v : {VertexId::B, VertexId::C, VertexId::A}) {
    const auto [e1, e2] = incident_edges(v);
    // Feet on the incident edges, in counter-clockwise walking order.
    Point2 f_in = foot_of_bisector(t, opposite_vertex(e1));
    Point2 f_out = foot_of_bisector(t, opposite_vertex(e2));
    if (v == VertexId::A) std::swap(f_in, f_out);
    const Point2 sep = bisector_separator_point(t, v);
    const Cone cone = bouncing_subcone(t, v);
    if (cone.empty || cone.is_ray()) {
      segment(f_in, sep);
      segment(sep, f_out);
      continue;
    }
    // Where each hexagon side enters the subcone.
    auto entry = [&](Point2 outside, Point2 inside) {
      if (cone.contains(outside, 1e-12)) return outside;
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (cone.contains(lerp(outside, inside, mid), 0.0) ? hi : lo) = mid;
      }
      return lerp(outside, inside, hi);
    };
    const Point2 x1 = entry(f_in, sep), x2 = entry(f_out, sep);
    segment(f_in, x1);
    const Point2 pv = t.vertex(v);
    const Line directrix = t.edge_line(opposite_edge(v));
    const Point2 toward = project(pv, directrix) - pv;
    CurvePiece arc;
    arc.kind = CurvePiece::Kind::Parabola;
    arc.focus = pv;
    arc.k = directrix.distance(pv);
    arc.e = 1.0;
    arc.axis = std::atan2(toward.y, toward.x);
    const Point2 d1 = x1 - pv, d2 = x2 - pv;
    arc.theta0 = std::atan2(d1.y, d1.x);
    arc.theta1 = arc.theta0 + std::atan2(cross(d1, d2), dot(d1, d2));
    chain.pieces.push_back(arc);
    segment(x2, f_out);
  }
  return chain;
}

/// Locus where the two orders that start with the edges at `v` (in either
/// order) and finish on the opposite edge cost the same. Defaults to the
/// largest-angle vertex. Pieces run from the vertex outwards.
inline std::vector<SeparatorChain> swap_first_two_locus(const Triangle& t, VertexId v, const TraceConfig& cfg = {}) {
  const auto [e1, e2] = incident_edges(v);
  const EdgeId opp = opposite_edge(v);
  const int o1 = order_index(VisitOrder{{e1, e2, opp}});
  const int o2 = order_index(VisitOrder{{e2, e1, opp}});
  const auto [st, sim] = standard_form(t);
  const Similarity back = sim.inverse();
  auto chains = trace_separators(TermModel(st, RegionMode::R1, {o1, o2}), cfg);
  const Point2 pv = st.vertex(v);
  for (auto& c : chains) {
    if (distance(c.back(), pv) < distance(c.front(), pv)) {
      std::reverse(c.pieces.begin(), c.pieces.end());
      for (auto& p : c.pieces) p = p.reversed();
    }
    c = c.mapped(back);
  }
  std::sort(chains.begin(), chains.end(), [&](const SeparatorChain& a, const SeparatorChain& b) {
    return distance(a.front(), t.vertex(v)) < distance(b.front(), t.vertex(v));
  });
  return chains;
}

/// LRD / RLD equal-cost locus, relabelled so the largest angle plays A.
inline SeparatorChain r1_lrd_rld_locus(const Triangle& t, const TraceConfig& cfg = {}) {
  auto chains = swap_first_two_locus(t, t.largest_angle_vertex(), cfg);
  if (chains.empty()) return {};
  return chains.front();
}

// ---------------------------------------------------------------------------
// Checks

inline double distance_to_chain(const SeparatorChain& chain, Point2 p, int per_piece = 256) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& piece : chain.pieces) {
    Point2 prev = piece.start();
    for (int i = 1; i <= per_piece; ++i) {
      const Point2 cur = piece.at(static_cast<double>(i) / per_piece);
      if (distance(prev, cur) > 0) best = std::min(best, dist_point_segment(p, Segment(prev, cur)));
      else best = std::min(best, distance(p, cur));
      prev = cur;
    }
  }
  return best;
}

/// Largest difference, over chain samples, between the optimum and the cost
/// of a representative strategy from each side. Caller-frame units.
inline double separator_gap(const FleetCosts& fc, const SeparatorChain& chain, RegionMode mode, int per_piece = 64) {
  auto representative = [](const std::string& side) {
    return side.substr(0, side.find_first_of(";|"));
  };
  const std::string a = representative(chain.side_a), b = representative(chain.side_b);
  const double scale = fc.visitation().from_standard().scale;
  double worst = 0.0;
  for (const Point2& p : chain.sample(per_piece)) {
    const Point2 q = fc.visitation().to_std(p);
    const double opt = fc.std_cost(mode == RegionMode::R1 ? 1 : mode == RegionMode::R2 ? 2 : 3, q);
    worst = std::max({worst, std::abs(strategy_cost(fc, q, mode, a) - opt) * scale,
                      std::abs(strategy_cost(fc, q, mode, b) - opt) * scale});
  }
  return worst;
}

/// For the mixed hexagon: largest |d(P, opposite edge) - d(P, incident pair)|
/// with both equal to R2(P), over chain samples. Caller-frame units.
inline double r2_separator_gap(const FleetCosts& fc, const SeparatorChain& chain, int per_piece = 64) {
  const double scale = fc.visitation().from_standard().scale;
  const Triangle& st = fc.standard();
  double worst = 0.0;
  for (const Point2& p : chain.sample(per_piece)) {
    const Point2 q = fc.visitation().to_std(p);
    const double opt = fc.std_r2(q);
    double best = std::numeric_limits<double>::infinity();
    for (VertexId v : kVertices) {
      const auto [e1, e2] = incident_edges(v);
      const double single = st.distance_to_edge(q, opposite_edge(v));
      const double pair = fc.visitation().std_two_set_cost(q, e1, e2);
      best = std::min(best, std::max({std::abs(single - pair), std::abs(single - opt), std::abs(pair - opt)}));
    }
    worst = std::max(worst, best * scale);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Raster classification

struct RegionCell {
  int i = 0, j = 0;
  Point2 center;  // caller frame
  CellLabel label;
  std::array<Point2, 3> corners{};  // caller frame
};

struct RegionMap {
  Triangle triangle;
  int n = 0;
  RegionMode mode = RegionMode::R1;
  std::vector<RegionCell> cells;

  /// Cell containing p (closed triangle); throws when p is outside.
  const RegionCell& cell_at(Point2 p) const;
  int cell_index(int i, int j) const;
};

inline int RegionMap::cell_index(int i, int j) const {
  // Rows hold 2(n - i) - 1 cells.
  int idx = 0;
  for (int r = 0; r < i; ++r) idx += 2 * (n - r) - 1;
  return idx + j;
}

inline const RegionCell& RegionMap::cell_at(Point2 p) const {
  const auto [st, sim] = standard_form(triangle);
  const Point2 q = sim.apply(p);
  if (!st.contains(q)) throw GeometryError("point outside triangle");
  // Barycentric weights: a towards A, c towards C.
  const double wa = q.y / st.A().y;
  const Point2 along = q - st.A() * wa;  // lies on BC scaled by (1 - wa)
  const double wc = along.x;
  const double a = std::clamp(wa * n, 0.0, n - 1e-9);
  const double c = std::clamp(wc * n, 0.0, n - 1e-9);
  const int i = std::min(static_cast<int>(a), n - 1);
  const int max_m = n - i - 1;
  int m = std::min(static_cast<int>(c), max_m);
  const double fa = a - i, fc = c - m;
  int j = 2 * m;
  if (fa + fc > 1.0 && m < max_m) j = 2 * m + 1;
  if (fa + fc > 1.0 && m == max_m) j = 2 * m;  // clamp on the CA edge
  return cells[cell_index(i, j)];
}

/// Barycentric raster of n^2 sub-triangles, labelled at their centroids.
inline RegionMap raster_region_map(const Triangle& t, int n, RegionMode mode) {
  if (n < 16) throw std::invalid_argument("raster resolution must be at least 16");
  const FleetCosts fc(t);
  const Triangle& st = fc.standard();
  const Similarity& back = fc.visitation().from_standard();
  RegionMap map{t, n, mode, {}};
  map.cells.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const int row = 2 * (n - i) - 1;
    for (int j = 0; j < row; ++j) {
      const int m = j / 2;
      double wa, wc;
      if (j % 2 == 0) {
        wa = (i + 1.0 / 3.0) / n;
        wc = (m + 1.0 / 3.0) / n;
      } else {
        wa = (i + 2.0 / 3.0) / n;
        wc = (m + 2.0 / 3.0) / n;
      }
      const Point2 q = st.from_barycentric(wa, 1.0 - wa - wc, wc);
      auto lattice = [&](int a, int c) {
        return back.apply(st.from_barycentric(static_cast<double>(a) / n, static_cast<double>(n - a - c) / n,
                                              static_cast<double>(c) / n));
      };
      std::array<Point2, 3> corners;
      if (j % 2 == 0) corners = {lattice(i, m), lattice(i, m + 1), lattice(i + 1, m)};
      else corners = {lattice(i + 1, m), lattice(i + 1, m + 1), lattice(i, m + 1)};
      map.cells.push_back({i, j, back.apply(q), classify_point(fc, q, mode), corners});
    }
  }
  return map;
}

/// Label with edges L and R swapped and vertices B and C swapped, for the
/// mirror image of an isosceles triangle.
inline CellLabel mirrored(const CellLabel& label) {
  CellLabel out;
  for (const auto& cls : label.classes) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    for (;;) {
      const std::size_t bar = cls.find('|', pos);
      std::string part = cls.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
      for (char& ch : part) {
        if (ch == 'L') ch = 'R';
        else if (ch == 'R') ch = 'L';
        else if (ch == 'B') ch = 'C';
        else if (ch == 'C') ch = 'B';
      }
      parts.push_back(part);
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : "|") + p;
    out.classes.push_back(s);
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

}  // namespace trivisit
