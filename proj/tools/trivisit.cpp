// trivisit: fleet visitation costs, region maps, ratio maximization and sweeps.
//
// Exit codes: 0 ok, 1 usage, 2 invalid geometry, 3 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trivisit/acceptance.hpp"
#include "trivisit/fleet_costs.hpp"
#include "trivisit/oracle.hpp"
#include "trivisit/region_io.hpp"
#include "trivisit/regions.hpp"
#include "trivisit/tradeoffs.hpp"

using json = nlohmann::ordered_json;
using namespace trivisit;

namespace {

constexpr int kUsage = 1, kGeometry = 2, kVerify = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& s, std::size_t count, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": not a number: '" + item + "'");
    }
  }
  if (out.size() != count) throw UsageError(std::string(flag) + " expects " + std::to_string(count) + " numbers");
  return out;
}

struct TriangleArgs {
  std::string angles, vertices;

  void add(CLI::App* app) {
    auto* a = app->add_option("--angles", angles, "angles at B and C in degrees; standard form");
    auto* v = app->add_option("--vertices", vertices, "x1,y1,x2,y2,x3,y3 for A, B, C");
    a->excludes(v);
  }

  Triangle resolve() const {
    if (!angles.empty()) {
      const auto d = parse_list(angles, 2, "--angles");
      return Triangle::from_angles(deg2rad(d[0]), deg2rad(d[1]));
    }
    if (!vertices.empty()) {
      const auto d = parse_list(vertices, 6, "--vertices");
      return {{d[0], d[1]}, {d[2], d[3]}, {d[4], d[5]}};
    }
    throw UsageError("one of --angles or --vertices is required");
  }

  json echo() const {
    json j;
    if (!angles.empty()) j["angles_deg"] = parse_list(angles, 2, "--angles");
    else j["vertices"] = parse_list(vertices, 6, "--vertices");
    return j;
  }
};

json pt(Point2 p) { return json::array({p.x, p.y}); }

json tri(const Triangle& t) { return json::array({pt(t.A()), pt(t.B()), pt(t.C())}); }

json edge_list(const std::vector<EdgeId>& es) {
  std::string s;
  for (EdgeId e : es) s += to_char(e);
  return s;
}

json trajectory(const Trajectory& tr) {
  json j;
  j["kind"] = std::string(to_string(tr.kind));
  j["sequence"] = tr.sequence_name();
  j["cost"] = tr.cost;
  if (tr.order) j["order"] = tr.order->name();
  j["tie"] = tr.tie;
  json w = json::array();
  for (Point2 p : tr.waypoints) w.push_back(pt(p));
  j["waypoints"] = w;
  return j;
}

json trajectories(const std::vector<Trajectory>& trs) {
  json j = json::array();
  for (const auto& tr : trs) j.push_back(trajectory(tr));
  return j;
}

json partition(const R2Partition& p) {
  return {{"single", std::string(1, to_char(p.single))},
          {"cost", p.cost},
          {"single_trajectory", trajectory(p.single_trajectory)},
          {"pair_trajectory", trajectory(p.pair_trajectory)}};
}

json ratio_report(const RatioReport& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"ratio", r.ratio},
          {"argmax", pt(r.argmax)},
          {"rn", r.rn},
          {"rm", r.rm},
          {"seed", r.seed},
          {"convergence", {{"grid", r.grid}, {"refinement_steps", r.refinement_steps}, {"min_step", r.final_step}}},
          {"witness_n", trajectories(r.witness_n)},
          {"witness_m", trajectories(r.witness_m)}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json header(const char* command) { return {{"schema", "trivisit/1"}, {"command", command}}; }

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  return os;
}

std::string with_extension(const std::string& path, const std::string& ext) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ext;
  return path.substr(0, dot) + ext;
}

void require_fleet(int n, int m) {
  if (n < 1 || n > 3 || m < 1 || m > 3 || n >= m) throw UsageError("--n and --m must satisfy 1 <= n < m <= 3");
}

// Commands.

int cmd_eval(const TriangleArgs& ta, const std::string& point, bool oracle) {
  const Triangle t = ta.resolve();
  const auto pv = parse_list(point, 2, "--point");
  const Point2 p{pv[0], pv[1]};
  const FleetCosts fc(t);
  const FleetCostReport r = fc.report(p);

  json j = header("eval");
  j["input"] = ta.echo();
  j["input"]["point"] = pt(p);
  j["triangle"] = tri(t);
  j["standard"] = {{"A", pt(fc.standard().A())}, {"point", pt(fc.visitation().to_std(p))}};
  json r1 = {{"cost", r.r1.cost}};
  json orders = json::array();
  for (const auto& o : r.r1.orders) orders.push_back(o.name());
  r1["best_orders"] = orders;
  json oc;
  for (int i = 0; i < 6; ++i) oc[kAllOrders[i].name()] = fc.visitation().visit_three_ordered(p, kAllOrders[i]).cost;
  r1["order_costs"] = oc;
  r1["trajectory"] = trajectory(r.r1.trajectory);
  json r2 = {{"cost", r.r2.cost}, {"best", partition(r.r2.best)}};
  json opt = json::array();
  for (const auto& part : r.r2.optimal) opt.push_back(std::string(1, to_char(part.single)));
  r2["optimal_singles"] = opt;
  json r3 = {{"cost", r.r3.cost},
             {"edge", std::string(1, to_char(r.r3.edge))},
             {"ties", edge_list(r.r3.ties)},
             {"trajectory", trajectory(r.r3.trajectory)}};
  j["r1"] = r1;
  j["r2"] = r2;
  j["r3"] = r3;
  if (oracle) {
    const double o1 = oracle_r1(t, p), o2 = oracle_r2(t, p), o3 = oracle_r3(t, p);
    j["oracle"] = {{"r1", o1},
                   {"r2", o2},
                   {"r3", o3},
                   {"delta_r1", r.r1.cost - o1},
                   {"delta_r2", r.r2.cost - o2},
                   {"delta_r3", r.r3.cost - o3}};
  }
  emit(j);
  return 0;
}

int cmd_regions(const TriangleArgs& ta, const std::string& mode_name, int grid, const std::string& out, bool as_json) {
  const Triangle t = ta.resolve();
  RegionMode mode;
  try {
    mode = parse_region_mode(mode_name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (grid < 16) throw UsageError("--grid must be at least 16");
  const RegionMap map = raster_region_map(t, grid, mode);
  auto chains = region_separators(t, mode);
  if (mode == RegionMode::R2) chains.push_back(r2_separator(t));

  const std::string svg_path = out.empty() ? "regions.svg" : out;
  const std::string csv_path = with_extension(svg_path, ".csv");
  {
    auto os = open_out(svg_path);
    write_svg(os, map, chains);
  }
  {
    auto os = open_out(csv_path);
    write_csv(os, map);
  }
  if (as_json) {
    json j = header("regions");
    j["input"] = ta.echo();
    j["mode"] = std::string(to_string(mode));
    j["grid"] = grid;
    j["svg"] = svg_path;
    j["csv"] = csv_path;
    std::vector<std::string> labels;
    int ties = 0;
    for (const auto& c : map.cells) {
      if (c.label.tie()) ++ties;
      else if (std::find(labels.begin(), labels.end(), c.label.str()) == labels.end()) labels.push_back(c.label.str());
    }
    std::sort(labels.begin(), labels.end());
    j["labels"] = labels;
    j["tie_cells"] = ties;
    json cj = json::array();
    for (const auto& ch : chains)
      cj.push_back({{"label", ch.label}, {"pieces", ch.pieces.size()}, {"from", pt(ch.front())}, {"to", pt(ch.back())}});
    j["separators"] = cj;
    emit(j);
  } else {
    std::cout << "wrote " << svg_path << " and " << csv_path << '\n';
  }
  return 0;
}

int cmd_ratio(const TriangleArgs& ta, int n, int m, int grid) {
  require_fleet(n, m);
  if (grid < 2) throw UsageError("--grid must be at least 2");
  const Triangle t = ta.resolve();
  const RatioReport r = max_ratio(t, n, m, {.grid = grid});
  json j = header("ratio");
  j["input"] = ta.echo();
  j["triangle"] = tri(t);
  j["standard_A"] = pt(standard_form(t).first.A());
  j["report"] = ratio_report(r);
  emit(j);
  return 0;
}

json extremum(const SweepResult& r, const Extremum& e) {
  const SweepCell& c = r.cells[e.cell];
  return {{"value", e.value},
          {"B_deg", c.b_deg},
          {"C_deg", c.c_deg},
          {"A_deg", c.a_deg()},
          {"shape", e.shape},
          {"argmax", pt(c.report.argmax)},
          {"tied_cells", e.ties},
          {"tied_shapes", e.shapes}};
}

int cmd_sweep(int n, int m, double step, double eps_apex, int grid, const std::string& out) {
  require_fleet(n, m);
  if (!(step > 0)) throw UsageError("--step must be positive");
  if (!(eps_apex >= 0)) throw UsageError("--eps-apex must be non-negative");
  if (grid < 2) throw UsageError("--grid must be at least 2");
  SweepConfig cfg;
  cfg.step_deg = step;
  cfg.eps_apex_deg = eps_apex;
  cfg.ratio.grid = grid;
  const SweepResult r = sweep_triangles(n, m, cfg);
  if (r.cells.empty()) throw UsageError("the sweep grid is empty");

  if (!out.empty()) {
    auto os = open_out(out);
    os << "B_deg,C_deg,ratio,argmax_x,argmax_y,Rn,Rm\n" << std::setprecision(17);
    for (const auto& c : r.cells)
      os << c.b_deg << ',' << c.c_deg << ',' << c.report.ratio << ',' << c.report.argmax.x << ','
         << c.report.argmax.y << ',' << c.report.rn << ',' << c.report.rm << '\n';
  }
  json j = header("sweep");
  j["n"] = n;
  j["m"] = m;
  j["step_deg"] = step;
  j["eps_apex_deg"] = eps_apex;
  j["grid"] = grid;
  j["cells"] = r.cells.size();
  if (!out.empty()) j["csv"] = out;
  j["sup"] = extremum(r, r.sup);
  j["inf"] = extremum(r, r.inf);
  j["inf_trend"] = {{"min_angle_deg", r.trend.min_angle_deg},
                    {"values", r.trend.values},
                    {"direction", r.trend.decreasing ? "decreasing" : "flat"},
                    {"status", r.trend.decreasing ? "approached within eps_apex" : "attained"}};
  emit(j);
  return 0;
}

int cmd_verify(bool as_json) {
  int failed = 0;
  json rows = json::array();
  acceptance::run_all([&](const acceptance::Result& r) {
    if (!r.pass) ++failed;
    if (as_json) {
      rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    } else {
      std::printf("%-4s %2d  %s: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
      std::fflush(stdout);
    }
  });
  if (as_json) {
    json j = header("verify");
    j["criteria"] = rows;
    j["failed"] = failed;
    emit(j);
  } else {
    std::printf("%d of %zu criteria failed\n", failed, acceptance::criteria().size());
  }
  return failed == 0 ? 0 : kVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fleet visitation costs in non-obtuse triangles"};
  app.require_subcommand(1);

  TriangleArgs ta;
  std::string point, mode = "r1", out;
  int n = 1, m = 3, grid = 0;
  double step = 1.0, eps_apex = 0.5;
  bool oracle = false, as_json = false;

  auto* eval = app.add_subcommand("eval", "costs and witness trajectories at a start point (JSON)");
  ta.add(eval);
  eval->add_option("--point", point, "start point x,y")->required();
  eval->add_flag("--oracle", oracle, "add numerical oracle costs and deltas");
  eval->add_flag("--json", as_json, "JSON output (always on)");

  TriangleArgs ta_regions;
  auto* regions = app.add_subcommand("regions", "raster region map as SVG plus CSV");
  ta_regions.add(regions);
  regions->add_option("--mode", mode, "r1, r2 or r3");
  regions->add_option("--grid", grid, "raster subdivisions per side (default 512)");
  regions->add_option("--out", out, "SVG path; the CSV goes next to it");
  regions->add_flag("--json", as_json, "print a JSON summary");

  TriangleArgs ta_ratio;
  auto* ratio = app.add_subcommand("ratio", "maximize R_n / R_m over start points (JSON)");
  ta_ratio.add(ratio);
  ratio->add_option("--n", n, "numerator fleet size");
  ratio->add_option("--m", m, "denominator fleet size");
  ratio->add_option("--grid", grid, "barycentric grid per side (default 256)");
  ratio->add_flag("--json", as_json, "JSON output (always on)");

  auto* sweep = app.add_subcommand("sweep", "max ratio over a grid of angles B, C (JSON summary)");
  sweep->add_option("--n", n, "numerator fleet size");
  sweep->add_option("--m", m, "denominator fleet size");
  sweep->add_option("--step", step, "angle step in degrees");
  sweep->add_option("--eps-apex", eps_apex, "smallest allowed angle in degrees");
  sweep->add_option("--grid", grid, "barycentric grid per triangle (default 32)");
  sweep->add_option("--out", out, "CSV path");
  sweep->add_flag("--json", as_json, "JSON output (always on)");

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*eval) return cmd_eval(ta, point, oracle);
    if (*regions) return cmd_regions(ta_regions, mode, grid ? grid : 512, out, as_json);
    if (*ratio) return cmd_ratio(ta_ratio, n, m, grid ? grid : 256);
    if (*sweep) return cmd_sweep(n, m, step, eps_apex, grid ? grid : 32, out);
    if (*verify) return cmd_verify(as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGeometry;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
