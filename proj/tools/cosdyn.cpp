// cosdyn: command line front end.
//
// Exit codes: 0 ok, 2 bad input or violated precondition, 3 a numerical
// certificate failed.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cosdyn/export.hpp"

using namespace cosdyn;

namespace {

constexpr int kExitPrecondition = 2;
constexpr int kExitCertification = 3;

Complex parse_complex(const std::string& text, const char* what) {
  std::istringstream is(text);
  double re = 0, im = 0;
  char comma = 0;
  if (!(is >> re)) throw PreconditionError(std::string("bad complex for ") + what + ": " + text);
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw PreconditionError(std::string("bad complex for ") + what + ": " + text);
  }
  return {re, im};
}

struct Opts {
  std::string a, b, u, v;
  std::string address;
  int depth = 4;
  std::string viewport;
  std::string px = "400x400";
  std::string out, json;
  int max_iter = 500;
  double tol = 1e-8;

  double theta = 1.0 / 3.0;
  double level = 0.5;
  std::string cycle;
  double ellipse_M = 3.0;
  std::string box_y;
  std::string point;
  long critical = 1;
  int time = 4;
  double t_lo = 1.0, t_hi = 20.0;
  int samples = 200;
  long k0 = -1;
  double M = 3.0;
  std::string range = "0.05,2";
  int n = 40;
  std::vector<double> eps{0.2, 0.1, 0.05, 0.02};
};

CosineMap make_map(const Opts& o) {
  const bool ab = !o.a.empty() || !o.b.empty();
  const bool uv = !o.u.empty() || !o.v.empty();
  if (ab == uv) throw PreconditionError("give either --a/--b or --u/--v");
  if (ab) {
    if (o.a.empty() || o.b.empty()) throw PreconditionError("--a and --b go together");
    return CosineMap::from_coefficients(parse_complex(o.a, "--a"), parse_complex(o.b, "--b"));
  }
  if (o.u.empty() || o.v.empty()) throw PreconditionError("--u and --v go together");
  return CosineMap::from_normal_form(parse_complex(o.u, "--u"), parse_complex(o.v, "--v"));
}

Viewport make_viewport(const Opts& o, const CosineMap& m, double default_width) {
  Viewport vp{m.u(), default_width, 400, 400};
  if (!o.viewport.empty()) {
    double cx = 0, cy = 0, w = 0;
    if (std::sscanf(o.viewport.c_str(), "%lf,%lf,%lf", &cx, &cy, &w) != 3)
      throw PreconditionError("--viewport wants cx,cy,w");
    vp.center = {cx, cy};
    vp.width = w;
  }
  if (std::sscanf(o.px.c_str(), "%dx%d", &vp.px_w, &vp.px_h) != 2) throw PreconditionError("--px wants WxH");
  vp.validate();
  return vp;
}

void emit_json(const Opts& o, const Json& j) {
  if (o.json.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream os(o.json);
  if (!os) throw PreconditionError("cannot open " + o.json);
  os << j.dump(2) << '\n';
}

Address need_address(const Opts& o) {
  if (o.address.empty()) throw PreconditionError("--address is required");
  return Address::parse(o.address);
}

// Charts of all attracting cycles; the first is the one the graph lives in,
// chosen by --cycle when given.
std::vector<BasinChart> attractor_charts(const Opts& o, const CosineMap& m) {
  std::vector<BasinChart> charts;
  for (const auto& a : find_attractors(m, o.max_iter))
    for (const Complex& z : a.cycle) {
      charts.push_back(BasinChart::build(m, z, static_cast<int>(a.cycle.size())));
      break;
    }
  if (charts.empty()) throw PreconditionError("no attracting cycle found for the critical values");
  if (!o.cycle.empty()) {
    const Complex want = parse_complex(o.cycle, "--cycle");
    std::optional<BasinChart> best;
    double dmin = INFINITY;
    for (const auto& a : find_attractors(m, o.max_iter))
      for (const Complex& z : a.cycle)
        if (std::abs(z - want) < dmin) {
          dmin = std::abs(z - want);
          best = BasinChart::build(m, z, static_cast<int>(a.cycle.size()));
        }
    charts.insert(charts.begin(), *best);
  }
  return charts;
}

struct PuzzleSetup {
  std::vector<BasinChart> charts;
  Ellipse E;
  TruncationBox box;
  PuzzleGraph graph;
};

PuzzleSetup make_puzzle_setup(const Opts& o, const CosineMap& m) {
  auto charts = attractor_charts(o, m);
  Ellipse E{m.v(), o.ellipse_M};
  double y_lo = -kTwoPi + 0.5, y_hi = kTwoPi - 0.5;
  if (!o.box_y.empty() && std::sscanf(o.box_y.c_str(), "%lf,%lf", &y_lo, &y_hi) != 2)
    throw PreconditionError("--box-y wants lo,hi");
  TruncationBox box{m.u(), o.ellipse_M, y_lo, y_hi};
  box_in_ellipse_margin(box, E);
  auto graph = build_graph(m, charts.front(), o.theta, need_address(o), o.level, E);
  return {std::move(charts), E, box, std::move(graph)};
}

int cmd_render(const Opts& o) {
  const auto m = make_map(o);
  const auto vp = make_viewport(o, m, 8.0);
  RenderOptions ro;
  ro.max_iter = o.max_iter;
  Image img = render_julia(m, vp, ro);
  if (!o.address.empty()) {
    const Ray r = trace_ray(m, Address::parse(o.address), o.t_lo, o.t_hi, {o.samples, Spacing::linear, 20000});
    Polyline pts;
    for (const auto& s : r.samples) pts.push_back(s.z);
    overlay(img, vp, pts, overlay_color(static_cast<int>(ArcTag::dynamic_ray)));
  }
  write_ppm(o.out.empty() ? std::string("julia.ppm") : o.out, img);
  return 0;
}

int cmd_trace_ray(const Opts& o) {
  const auto m = make_map(o);
  const Address s = need_address(o);
  const Ray r = trace_ray(m, s, o.t_lo, o.t_hi, {o.samples, Spacing::linear, 20000});
  // functional equation against the shifted ray
  std::vector<double> fts;
  for (const auto& smp : r.samples) fts.push_back(potential_forward(smp.t));
  const Ray img = trace_ray_at(m, s.shift(), fts);
  // relative to |g|: far out the samples are of size e^t
  double worst = 0;
  for (std::size_t i = 0; i < img.samples.size(); ++i)
    worst = std::max(worst, std::abs(m(r.samples[i].z) - img.samples[i].z) / std::max(1.0, std::abs(img.samples[i].z)));
  Json j = to_json(r);
  j["functional_equation_error"] = worst;
  emit_json(o, j);
  return (worst <= o.tol && img.samples.size() == r.samples.size()) ? 0 : kExitCertification;
}

int cmd_land(const Opts& o) {
  const auto m = make_map(o);
  const LandingResult l = land_ray(m, need_address(o), o.t_lo);
  emit_json(o, to_json(l));
  return l.status == LandingStatus::landed ? 0 : kExitCertification;
}

int cmd_graph(const Opts& o) {
  const auto m = make_map(o);
  const auto setup = make_puzzle_setup(o, m);
  emit_json(o, to_json(setup.graph));
  return 0;
}

int cmd_puzzle(const Opts& o) {
  const auto m = make_map(o);
  auto setup = make_puzzle_setup(o, m);
  Puzzle P(m, setup.graph, setup.E, setup.box, setup.charts);
  P.build_to_depth(o.depth);
  Json j{{"type", "puzzle"}, {"map", to_json(m)}, {"depth", o.depth}, {"graph", to_json(setup.graph)}};
  j["pieces"] = Json::array();
  for (int d = 0; d <= o.depth; ++d)
    for (const auto& p : P.pieces(d)) j["pieces"].push_back(to_json(p));
  emit_json(o, j);
  if (!o.out.empty()) {
    const auto vp = make_viewport(o, m, 8.0);
    Image img = render_julia(m, vp, {o.max_iter, 50.0, 1e-4});
    for (const auto& p : P.pieces(o.depth)) overlay(img, vp, p.polygon, overlay_color(4), true);
    for (const auto& a : setup.graph.arcs) overlay(img, vp, a.points, overlay_color(static_cast<int>(a.tag)), a.closed);
    write_ppm(o.out, img);
  }
  return 0;
}

Complex tableau_point(const Opts& o, const CosineMap& m) {
  return o.point.empty() ? m.critical_point(o.critical) : parse_complex(o.point, "--point");
}

int cmd_tableau(const Opts& o) {
  const auto m = make_map(o);
  auto setup = make_puzzle_setup(o, m);
  Puzzle P(m, setup.graph, setup.E, setup.box, setup.charts);
  const Tableau t = tableau(P, tableau_point(o, m), o.depth, o.time);
  if (o.out.empty()) {
    std::cout << t.to_csv();
  } else {
    std::ofstream os(o.out);
    if (!os) throw PreconditionError("cannot open " + o.out);
    os << t.to_csv();
  }
  return 0;
}

int cmd_renorm_tableau(const Opts& o) {
  const auto m = make_map(o);
  auto setup = make_puzzle_setup(o, m);
  Puzzle P(m, setup.graph, setup.E, setup.box, setup.charts);
  const Complex c = tableau_point(o, m);
  const Tableau t = tableau(P, c, o.depth, o.time);
  const RenormCandidate rc = detect_renormalization(P, t);
  Json j = to_json(rc);
  if (rc.status == RenormStatus::found) j["returns"] = returns_in_domain(m, rc, c, 100);
  j["tableau"] = t.to_csv();
  emit_json(o, j);
  return rc.status == RenormStatus::found ? 0 : kExitCertification;
}

int cmd_renorm_escape(const Opts& o) {
  const auto m = make_map(o);
  const EscapeCandidate c = renorm_domain(m, o.k0, o.M);
  emit_json(o, to_json(c));
  if (!o.out.empty()) {
    const auto vp = make_viewport(o, m, 2.4 * c.E.major_axis() / 2.0);
    Image img = render_julia(m, vp, {o.max_iter, 50.0, 1e-4});
    overlay(img, vp, c.R, overlay_color(4), true);
    overlay(img, vp, c.E.boundary(2000), overlay_color(3), true);
    for (const auto& s : c.v_slits) overlay(img, vp, s.points, overlay_color(1));
    write_ppm(o.out, img);
  }
  return c.certified() ? 0 : kExitCertification;
}

int cmd_diameters(const Opts& o) {
  const auto m = make_map(o);
  const auto vp = make_viewport(o, m, 8.0);
  const ClassMap cm = classify_pixels(m, vp, {o.max_iter, 50.0, 1e-4});
  emit_json(o, to_json(component_diameters(m, cm, o.eps)));
  if (!o.out.empty()) write_ppm(o.out, colorize(cm));
  return 0;
}

int cmd_scan(const Opts& o) {
  double lo = 0, hi = 0;
  if (std::sscanf(o.range.c_str(), "%lf,%lf", &lo, &hi) != 2 || !(lo < hi)) throw PreconditionError("--range wants lo,hi");
  if (o.n < 1) throw PreconditionError("--n must be positive");
  const auto rows = scan_slice(lo, hi, o.n, o.max_iter);
  Json j{{"type", "scan"}, {"slice", "u = v = c"}, {"rows", Json::array()}, {"hits", Json::array()}};
  for (const auto& r : rows) {
    j["rows"].push_back(to_json(r));
    if (r.plus == OrbitKind::attracted && r.minus == OrbitKind::escaping) j["hits"].push_back(r.c);
  }
  emit_json(o, j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cosine family dynamics: rays, basins, puzzles, renormalization"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command line flags win");
  // "re,im" values stay whole; list values in a config file use [a|b]
  app.get_config_formatter_base()->arrayDelimiter('|');
  Opts o;

  app.add_option("--a", o.a, "coefficient a as re,im");
  app.add_option("--b", o.b, "coefficient b as re,im");
  app.add_option("--u", o.u, "normal form u as re,im");
  app.add_option("--v", o.v, "normal form v as re,im");
  app.add_option("--address", o.address, "address, e.g. \"[(1,0)];[(0,0)]\"");
  app.add_option("--depth", o.depth, "puzzle depth");
  app.add_option("--viewport", o.viewport, "cx,cy,w");
  app.add_option("--px", o.px, "WxH");
  app.add_option("--out", o.out, "image (PPM) or CSV output");
  app.add_option("--json", o.json, "JSON output file (stdout otherwise)");
  app.add_option("--max-iter", o.max_iter, "iteration budget");
  app.add_option("--tol", o.tol, "tolerance for certificates");
  app.add_option("--theta", o.theta, "internal angle of the graph");
  app.add_option("--level", o.level, "equipotential level");
  app.add_option("--cycle", o.cycle, "cycle point selecting the graph's basin");
  app.add_option("--ellipse-M", o.ellipse_M, "truncation half width M");
  app.add_option("--box-y", o.box_y, "truncation box Im range lo,hi relative to u");
  app.add_option("--point", o.point, "tableau base point re,im");
  app.add_option("--critical", o.critical, "tableau base point u_k");
  app.add_option("--time", o.time, "tableau columns");
  app.add_option("--t-lo", o.t_lo, "lowest potential");
  app.add_option("--t-hi", o.t_hi, "highest potential");
  app.add_option("--samples", o.samples, "ray samples");
  app.add_option("--k0", o.k0, "strip index");
  app.add_option("--M", o.M, "truncation width of R_M");
  app.add_option("--range", o.range, "scan range lo,hi");
  app.add_option("--n", o.n, "scan samples");
  app.add_option("--eps", o.eps, "diameter thresholds");

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Opts&);
  };
  const Sub subs[] = {
      {"render", "escape-time picture (PPM)", cmd_render},
      {"trace-ray", "sample a dynamic ray", cmd_trace_ray},
      {"land", "landing point of a periodic ray", cmd_land},
      {"graph", "internal ray + dynamic ray + equipotential graph", cmd_graph},
      {"puzzle", "puzzle pieces to --depth", cmd_puzzle},
      {"tableau", "tableau as CSV", cmd_tableau},
      {"renorm-tableau", "renormalization from the critical tableau", cmd_renorm_tableau},
      {"renorm-escape", "quadratic-like restriction when -v escapes", cmd_renorm_escape},
      {"diameters", "Fatou component diameters", cmd_diameters},
      {"scan", "scan u = v = c for v attracted, -v escaping", cmd_scan},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> cmds;
  for (const Sub& s : subs) cmds.push_back({app.add_subcommand(s.name, s.help), &s});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitPrecondition;
  }
  try {
    for (const auto& [sub, s] : cmds)
      if (sub->parsed()) return s->run(o);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const CertificationError& e) {
    std::cerr << "certification failed: " << e.what() << '\n';
    return kExitCertification;
  }
  return 0;
}
