// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "cosdyn/orbit.hpp"
#include "cosdyn/puzzle.hpp"
#include "cosdyn/render.hpp"
#include "cosdyn/renorm_escape.hpp"

using namespace cosdyn;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Real Newton on v cosh(x - u) = x, independent of the complex code.
double real_fixed_point(double u, double v, double x) {
  for (int i = 0; i < 100; ++i) {
    const double g = v * std::cosh(x - u) - x, dg = v * std::sinh(x - u) - 1;
    const double step = g / dg;
    x -= step;
    if (std::abs(step) < 1e-15 * (1 + std::abs(x))) break;
  }
  return x;
}

const Complex kCStar(-0.9716352659878172, 0.44747240814902356);

Verdict functional_equation() {
  const auto t0 = Clock::now();
  const CosineMap maps[] = {CosineMap::from_normal_form(0.0, 1.0), CosineMap::from_normal_form(0.0, 0.5),
                            CosineMap::from_normal_form(kCStar, kCStar)};
  const char* addresses[] = {"[];[(0,1)]", "[];[(0,0) (0,1)]", "[];[(1,0) (0,1)]", "[];[(0,-1) (1,1)]",
                             "[];[(1,2) (0,0) (0,-1)]"};
  std::vector<double> ts, images;
  for (int i = 0; i < 100; ++i) ts.push_back(6.0 - 4.0 * i / 99);
  for (double t : ts) images.push_back(potential_forward(t));
  double worst = 0;
  int missing = 0;
  for (const auto& m : maps)
    for (const char* text : addresses) {
      const Address s = Address::parse(text);
      const Ray g = trace_ray_at(m, s, ts);
      const Ray h = trace_ray_at(m, s.shift(), images);
      if (g.samples.size() != ts.size() || h.samples.size() != ts.size()) {
        ++missing;
        continue;
      }
      for (std::size_t i = 0; i < ts.size(); ++i) worst = std::max(worst, std::abs(m(g.samples[i].z) - h.samples[i].z));
    }
  const double secs = seconds_since(t0);
  return {missing == 0 && worst < 1e-8 && secs < 5.0,
          fmt("15 rays x 100 points, max error %.2e (< 1e-8), %d incomplete, %.2f s (< 5 s)", worst, missing, secs)};
}

Verdict ray_asymptotics() {
  const CosineMap maps[] = {CosineMap::from_normal_form(0.0, 1.0), CosineMap::from_normal_form(kCStar, kCStar)};
  const char* addresses[] = {"[];[(0,1)]", "[];[(0,0) (0,2)]", "[];[(0,-1) (0,1)]"};
  double lo = INFINITY, hi = 0;
  for (const auto& m : maps)
    for (const char* text : addresses) {
      const Address s = Address::parse(text);
      std::vector<double> ts;
      for (int t = 14; t >= 8; --t) ts.push_back(t);
      const Ray g = trace_ray_at(m, s, ts);
      if (g.samples.size() != ts.size()) return {false, fmt("ray %s incomplete", text)};
      std::vector<double> err;
      for (const RaySample& p : g.samples) {
        const Complex model = p.t - std::log(m.a()) + Complex(0, kTwoPi * static_cast<double>(s.front().k));
        err.push_back(std::abs(p.z - model));
      }
      // err is ordered by decreasing t: ratio err(t+1)/err(t)
      for (std::size_t i = 0; i + 1 < err.size(); ++i) {
        const double r = err[i] / err[i + 1];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
    }
  const double e = std::exp(-1.0);
  return {lo >= 0.75 * e && hi <= 1.25 * e,
          fmt("decay per unit t in [%.4f, %.4f], allowed [%.4f, %.4f]", lo, hi, 0.75 * e, 1.25 * e)};
}

Verdict landing() {
  const auto m = CosineMap::from_normal_form(0.0, 0.5);
  const double oracle = real_fixed_point(0.0, 0.5, 2.5);
  const LandingResult l = land_ray(m, Address::parse("[];[(0,0)]"));
  if (!l.landing) return {false, "ray ((0,0)) did not land"};
  const double err = std::abs(l.landing->point - oracle);
  const double mod = std::abs(l.landing->multiplier);
  return {err < 1e-6 && mod > 1.0,
          fmt("(u,v)=(0,0.5): landing %.12f vs Newton %.12f, error %.1e (< 1e-6), |multiplier| %.4f (> 1)",
              l.landing->point.real(), oracle, err, mod)};
}

Address random_address(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 2), plen(1, 3), j(0, 1), k(-2, 2);
  std::vector<Entry> pre, per;
  for (int i = len(rng); i > 0; --i) pre.push_back({j(rng), k(rng)});
  for (int i = plen(rng); i > 0; --i) per.push_back({j(rng), k(rng)});
  return Address(pre, per);
}

double height_at(const CosineMap& m, const Address& s, double x) {
  std::vector<double> ts;
  for (int i = 0; i <= 500; ++i) ts.push_back(60.0 - 0.1 * i);
  const Ray r = trace_ray_at(m, s, ts);
  for (std::size_t i = 1; i < r.samples.size(); ++i) {
    const double a = std::abs((r.samples[i - 1].z - m.u()).real()), b = std::abs((r.samples[i].z - m.u()).real());
    if ((a - x) * (b - x) <= 0) {
      const double f = (x - a) / (b - a);
      return (r.samples[i - 1].z + f * (r.samples[i].z - r.samples[i - 1].z)).imag();
    }
  }
  return NAN;
}

Verdict order() {
  std::mt19937 rng(2024);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const Address a = random_address(rng), b = random_address(rng), c = random_address(rng);
    const auto ab = addr_compare(a, b), ba = addr_compare(b, a), bc = addr_compare(b, c), ac = addr_compare(a, c);
    if ((ab == 0) != (a == b)) ++violations;                       // totality and identity
    if ((ab < 0) != (ba > 0)) ++violations;                        // antisymmetry
    if (ab < 0 && bc < 0 && !(ac < 0)) ++violations;               // transitivity
    if (ab == 0 && bc == 0 && !(ac == 0)) ++violations;
  }
  const auto m = CosineMap::from_normal_form(kCStar, kCStar);
  std::uniform_int_distribution<int> j(0, 1), k(-1, 1);
  int agree = 0, pairs = 0;
  while (pairs < 10) {
    const int side = j(rng);
    const Address s = Address::periodic({{side, k(rng)}, {j(rng), k(rng)}});
    const Address t = Address::periodic({{side, k(rng)}, {j(rng), k(rng)}});
    if (s == t) continue;
    const double hs = height_at(m, s, 30.0), ht = height_at(m, t, 30.0);
    ++pairs;
    if (!std::isfinite(hs) || !std::isfinite(ht)) continue;
    const bool less = addr_compare(s, t) < 0;
    const bool below = hs < ht;
    agree += less == (side == 0 ? below : !below);
  }
  return {violations == 0 && agree == pairs,
          fmt("%d order-axiom violations in 1e4 triples; %d/%d ray pairs ordered as at |Re z| = 30", violations, agree,
              pairs)};
}

Verdict inverse_branch() {
  const CosineMap maps[] = {CosineMap::from_normal_form(0.0, 1.0), CosineMap::from_normal_form(0.0, 0.5),
                            CosineMap::from_normal_form(kCStar, kCStar)};
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> x(-4, 4), y(-10, 10);
  int tried = 0, failures = 0;
  double worst = 0;
  while (tried < 1000) {
    const auto& m = maps[tried % 3];
    const Complex z = m.u() + Complex(x(rng), y(rng));
    const StripLocation loc = m.strip_index(z);
    if (loc.status != StripStatus::ok) continue;
    ++tried;
    const Complex w = m(z);
    const Preimage p = m.inverse_branch(w, loc.index);
    const StripLocation back = m.strip_index(p.z);
    const double err = std::abs(m(p.z) - w);
    worst = std::max(worst, err);
    if (p.status != BranchStatus::ok || back.status != StripStatus::ok || !(back.index == loc.index) || !(err < 1e-10))
      ++failures;
  }
  return {failures == 0, fmt("1000 points, max |f(inv(f z)) - f z| %.2e (< 1e-10), %d certification failures", worst,
                             failures)};
}

// Distance from z to the polygon when outside, 0 inside.
double outside_distance(const Polyline& poly, Complex z) {
  return winding_number(poly, z) != 0 ? 0.0 : distance_to_polyline(z, poly, true);
}

Verdict puzzle_markov() {
  const auto t0 = Clock::now();
  const auto m = CosineMap::from_normal_form(kCStar, kCStar);
  const auto fixed = BasinChart::build(m, kCStar, 1), two = BasinChart::build(m, m.critical_point(1), 2);
  const Ellipse E{m.v(), 3.0};
  const TruncationBox R{m.u(), 3.0, -2 * kPi + 0.5, 2 * kPi - 0.5};
  const PuzzleOptions opts;
  const auto graph = build_graph(m, fixed, 1.0 / 3, Address::parse("[];[(0,0) (0,1)]"), 0.5, E);
  Puzzle P(m, graph, E, R, {fixed, two}, opts);
  const int depth = 5;
  P.build_to_depth(depth);
  int nesting = 0, markov = 0, pieces = 0;
  double worst_nest = 0, worst_map = 0;
  for (int d = 1; d <= depth; ++d)
    for (const PuzzlePiece& q : P.pieces(d)) {
      ++pieces;
      const Polyline& parent = P.piece(d - 1, q.parent).polygon;
      double nest = 0;
      for (Complex z : q.polygon) nest = std::max(nest, outside_distance(parent, z));
      worst_nest = std::max(worst_nest, nest);
      if (nest > opts.max_segment) ++nesting;

      const Polyline& image = P.piece(d - 1, q.image).polygon;
      double off = 0;
      for (Complex z : q.polygon) off = std::max(off, outside_distance(image, m(z)));
      worst_map = std::max(worst_map, off);
      int hits = 0;
      for (const PuzzlePiece& r : P.pieces(d - 1)) hits += winding_number(r.polygon, m(q.interior)) != 0;
      if (off > 1e-5 || hits != 1) ++markov;
    }
  std::string counts;
  for (int d = 0; d <= depth; ++d) counts += std::to_string(P.pieces(d).size()) + (d < depth ? "," : "");
  return {pieces > 0 && nesting == 0 && markov == 0,
          fmt("c*, depth %d, pieces per depth %s: %d nesting violations (worst %.1e, sample tol %.0e), %d Markov "
              "violations (worst image offset %.1e, tol 1e-5), %.1f s",
              depth, counts.c_str(), nesting, worst_nest, opts.max_segment, markov, worst_map, seconds_since(t0))};
}

Verdict ellipse_formula() {
  double worst = 0;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (double M : {1.0, 2.0, 3.0}) {
    const Complex v = std::polar(2.0, ang(rng)), u(0.3, -0.7);
    const auto m = CosineMap::from_normal_form(u, v);
    const double major = std::abs(v) * (std::exp(M) + std::exp(-M));
    for (int i = 0; i < 400; ++i) {
      const double y = -kPi + kTwoPi * i / 400;
      for (double side : {-1.0, 1.0}) {
        const Complex w = m(u + Complex(side * M, y));
        worst = std::max(worst, std::abs(std::abs(w - v) + std::abs(w + v) - major));
      }
    }
  }
  const Ellipse e{Complex(2, 0), 1.0};
  const bool spot = std::abs(e.major_axis() - 6.1723) < 5e-5 && std::abs(e.minor_axis() - 4.7008) < 5e-5;
  return {worst < 1e-9 && spot, fmt("max focal-sum deviation %.2e (< 1e-9); M=1 |v|=2: major %.4f, minor %.4f", worst,
                                    e.major_axis(), e.minor_axis())};
}

// Real orbit oracle for u = v = c: +-v real, iterate x -> c cosh(x - c).
std::pair<bool, bool> real_orbit_oracle(double c) {
  double x = c;
  bool attracted = false;
  for (int i = 0; i < 2000; ++i) {
    const double nx = c * std::cosh(x - c);
    if (std::abs(nx - x) < 1e-13) {
      attracted = true;
      break;
    }
    x = nx;
  }
  double y = -c;
  bool escaping = false;
  for (int i = 0; i < 50; ++i) {
    if (std::abs(y - c) > 600) {
      escaping = true;
      break;
    }
    y = c * std::cosh(y - c);
  }
  return {attracted, escaping};
}

Verdict renorm_escape() {
  const auto t0 = Clock::now();
  const auto rows = scan_slice(0.5, 1.5, 41);
  // centre of the longest run of hits
  std::size_t best_lo = 0, best_len = 0;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].plus == OrbitKind::attracted && rows[j].minus == OrbitKind::escaping) ++j;
    if (j - i > best_len) best_len = j - i, best_lo = i;
    i = std::max(j, i + 1);
  }
  if (best_len == 0) return {false, "scan found no parameter with v attracted and -v escaping"};
  const double c = rows[best_lo + best_len / 2].c;
  const auto m = CosineMap::from_normal_form(c, c);
  const bool oracle_a = classify_critical_orbit(m, CriticalValue::plus).kind == OrbitKind::attracted &&
                        classify_critical_orbit(m, CriticalValue::minus).kind == OrbitKind::escaping;
  const auto [att, esc] = real_orbit_oracle(c);
  if (!(oracle_a && att && esc)) return {false, fmt("scan hit c=%.4f not confirmed by the oracles", c)};
  const double m_min = minimal_ellipse_M(m, -1);
  const double M = std::max(3.0, m_min + 0.5);
  const EscapeCandidate cand = renorm_domain(m, -1, M);
  int good_targets = 0;
  for (std::size_t i = 0; i < cand.targets.size(); ++i)
    good_targets += cand.preimage_counts[i] == 2 && cand.winding_counts[i] == 2;
  bool exit_ok = cand.N >= 1;
  if (exit_ok) {
    const auto orb = orbit(m, -m.v(), cand.N - 1);
    exit_ok = static_cast<int>(orb.size()) == cand.N && winding_number(cand.R, orb.back()) != 0;
  }
  const double secs = seconds_since(t0);
  return {cand.certified() && cand.margin > 0 && good_targets == 50 && cand.targets.size() == 50 && exit_ok &&
              secs < 30.0,
          fmt("scan hit u=v=%.4f (run of %zu), M=%.2f: margin %.3f, degree 2 on %d/50 targets, N=%d with "
              "f^(N-1)(-v) in R_M: %s, %.1f s (< 30 s)",
              c, best_len, M, cand.margin, good_targets, cand.N, exit_ok ? "yes" : "no", secs)};
}

// Parameter on u = v = c with the 2-cycle {u_1, -v}: f_c(-c) = c + pi i,
// i.e. c cosh(2c) = c + pi i. Coarse grid, then Newton.
std::optional<Complex> find_period_doubling_parameter() {
  const auto g = [](Complex c) { return c * std::cosh(2.0 * c) - c - Complex(0, kPi); };
  Complex best;
  double best_val = INFINITY;
  for (double x = -2.0; x <= 0.0; x += 0.05)
    for (double y = 0.0; y <= 1.0; y += 0.05)
      if (const double val = std::abs(g({x, y})); val < best_val) best_val = val, best = {x, y};
  Complex c = best;
  for (int i = 0; i < 60; ++i) {
    const Complex dg = std::cosh(2.0 * c) + 2.0 * c * std::sinh(2.0 * c) - 1.0;
    const Complex step = g(c) / dg;
    c -= step;
    if (std::abs(step) < 1e-15) break;
  }
  if (!(std::abs(g(c)) < 1e-12)) return std::nullopt;
  return c;
}

Verdict tableau_renormalization() {
  const auto t0 = Clock::now();
  const auto c = find_period_doubling_parameter();
  if (!c) return {false, "no period-doubling parameter found"};
  const auto m = CosineMap::from_normal_form(*c, *c);
  const auto fixed = BasinChart::build(m, m.v(), 1), two = BasinChart::build(m, m.critical_point(1), 2);
  const Ellipse E{m.v(), 3.0};
  const TruncationBox R{m.u(), 3.0, -2 * kPi + 0.5, 2 * kPi - 0.5};
  const auto graph = build_graph(m, fixed, 1.0 / 3, Address::parse("[];[(0,0) (0,1)]"), 0.5, E);
  Puzzle P(m, graph, E, R, {fixed, two});
  const Complex crit = m.critical_point(1);
  const int depth = 8;
  const Tableau tab = tableau(P, crit, depth, 4);
  bool periodic = !tab.collision;
  for (int n = 0; n <= depth && periodic; ++n) periodic = tab.critical[n][0] && tab.critical[n][2];
  const RenormCandidate rc = detect_renormalization(P, tab);
  const int returns = rc.status == RenormStatus::found ? returns_in_domain(m, rc, crit, 100) : 0;
  const bool degree2 = rc.degree_winding == 2 && rc.degree_count == 2;
  return {periodic && rc.status == RenormStatus::found && degree2 && returns == 100,
          fmt("c=%.10f%+.10fi, critical column periodic to depth %d: %s; candidate period %d, degree %d/%d, %d/100 "
              "returns, margin %.3g, %.1f s",
              c->real(), c->imag(), depth, periodic ? "yes" : "no", rc.period, rc.degree_winding, rc.degree_count,
              returns, rc.margin, seconds_since(t0))};
}

Verdict diameter_decay() {
  const auto m = CosineMap::from_normal_form(kCStar, kCStar);
  const Viewport lo{m.u(), 8.0, 400, 400}, hi{m.u(), 8.0, 800, 800};
  const DiameterReport a = component_diameters(m, classify_pixels(m, lo));
  const DiameterReport b = component_diameters(m, classify_pixels(m, hi));
  const auto idx = std::find(a.eps.begin(), a.eps.end(), 0.05) - a.eps.begin();
  const double na = a.count_above[idx], nb = b.count_above[idx];
  const double change = std::abs(nb - na) / std::max(na, 1.0);

  // medians per preperiod over resolved components, classes of >= 5 only
  std::map<int, std::vector<double>> by;
  for (const Component& c : b.components)
    if (c.preperiod >= 0 && !c.resolution_limited) by[c.preperiod].push_back(c.diameter);
  std::vector<std::pair<int, double>> med;
  for (auto& [p, ds] : by) {
    if (ds.size() < 5) continue;
    std::sort(ds.begin(), ds.end());
    const std::size_t n = ds.size();
    med.push_back({p, n % 2 ? ds[n / 2] : 0.5 * (ds[n / 2 - 1] + ds[n / 2])});
  }
  const double tol = hi.pixel_size();
  int rises = 0;
  std::string seq;
  for (std::size_t i = 0; i < med.size(); ++i) {
    seq += fmt("%s%d:%.4f", i ? " " : "", med[i].first, med[i].second);
    if (i > 0 && med[i].second > med[i - 1].second + tol) ++rises;
  }
  return {change < 0.10 && rises == 0 && med.size() >= 3,
          fmt("count above 0.05: %g at 400 px, %g at 800 px (change %.1f%%, < 10%%); medians by preperiod [%s], %d "
              "rises beyond one pixel (%.3f)",
              na, nb, 100 * change, seq.c_str(), rises, tol)};
}

}  // namespace

int main() {
  const std::vector<std::function<Verdict()>> criteria = {
      functional_equation, ray_asymptotics, landing,         order,           inverse_branch,
      puzzle_markov,       ellipse_formula, renorm_escape,   tableau_renormalization, diameter_decay};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += !v.pass;
    std::printf("criterion %zu: %s  %s\n", i + 1, v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
