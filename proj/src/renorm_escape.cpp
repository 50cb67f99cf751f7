#include "cosdyn/renorm_escape.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace cosdyn {

namespace {

// Potentials from t_hi down to t_crash, uniform far out and geometric in
// the offset near the crash.
std::vector<double> crash_grid(double t_crash, double t_hi, int samples) {
  std::vector<double> ts;
  const double knee = t_crash + 0.1;
  for (int i = 0; i < samples; ++i) ts.push_back(t_hi + (knee - t_hi) * i / samples);
  for (int i = 0; i <= 36; ++i) ts.push_back(t_crash + 0.1 * std::pow(1e-8, i / 36.0));
  return ts;
}

Complex sample_at(const CosineMap& m, const Address& s, double t) {
  const double ts[] = {t};
  const Ray r = trace_ray_at(m, s, ts);
  if (r.samples.empty()) return Complex(INFINITY, INFINITY);
  return r.samples[0].z;
}

Address address_of_minus_v(const CosineMap& m, double& t_v) {
  const auto cls = classify_critical_orbit(m, CriticalValue::minus);
  if (cls.kind != OrbitKind::escaping) throw PreconditionError("-v does not escape");
  const auto s = escaping_address(m, -m.v());
  const auto t = escaping_potential(m, -m.v());
  if (!s || !t) throw PreconditionError("-v escapes but its ray address could not be read off");
  t_v = *t;
  return *s;
}

std::vector<Polyline> inside_runs(const Polyline& pts, const Ellipse& E) {
  std::vector<Polyline> runs;
  Polyline cur;
  for (const Complex& z : pts) {
    if (E.contains(z)) {
      cur.push_back(z);
    } else if (!cur.empty()) {
      runs.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) runs.push_back(std::move(cur));
  return runs;
}

}  // namespace

CriticalRayPair critical_ray_pair(const CosineMap& m, const Address& s, long k, double t_hi, int samples) {
  double t_v = 0;
  {
    // s must be the ray through -v
    const Address own = address_of_minus_v(m, t_v);
    if (!(own == s)) throw PreconditionError("address is not the ray through -v: " + own.to_string());
  }
  CriticalRayPair pair;
  pair.k = k;
  pair.critical = m.critical_point(2 * k + 1);
  pair.t_crash = std::log1p(t_v);

  // choose the k' of each side whose ray ends at u_{2k+1}
  Address best[2] = {s, s};
  for (int j = 0; j < 2; ++j) {
    double dmin = INFINITY;
    for (long kk = k - 3; kk <= k + 3; ++kk) {
      const Address cand = s.prepend({j, kk});
      const double d = std::abs(sample_at(m, cand, pair.t_crash + 1e-8) - pair.critical);
      if (d < dmin) {
        dmin = d;
        best[j] = cand;
      }
    }
    if (!(dmin < 1e-2)) {
      std::ostringstream os;
      os << "no preimage ray of g_s crashes on u_" << 2 * k + 1 << " (closest " << dmin << ")";
      throw CertificationError(os.str());
    }
  }
  const auto ts = crash_grid(pair.t_crash, t_hi, samples);
  pair.right = trace_ray_at(m, best[0], ts);
  pair.left = trace_ray_at(m, best[1], ts);
  if (pair.right.samples.size() != ts.size() || pair.left.samples.size() != ts.size())
    throw CertificationError("critical ray pair stopped before the crash");
  return pair;
}

Polyline joined_curve(const CriticalRayPair& pair) {
  Polyline out;
  for (const auto& smp : pair.left.samples) out.push_back(smp.z);
  out.push_back(pair.critical);
  for (auto it = pair.right.samples.rbegin(); it != pair.right.samples.rend(); ++it) out.push_back(it->z);
  return out;
}

Polyline clip_joined(const CosineMap& m, const Polyline& joined, Complex center, double x) {
  const auto re = [&](Complex z) { return (z - m.u()).real(); };
  // the critical point sits in the middle
  std::size_t mid = joined.size() / 2;
  double best = INFINITY;
  for (std::size_t i = 0; i < joined.size(); ++i)
    if (std::abs(joined[i] - center) < best) best = std::abs(joined[i] - center), mid = i;
  if (std::abs(re(joined[mid])) > x) throw PreconditionError("truncation width below the critical point");

  std::size_t hi = mid;
  while (hi + 1 < joined.size() && std::abs(re(joined[hi + 1])) <= x) ++hi;
  std::size_t lo = mid;
  while (lo > 0 && std::abs(re(joined[lo - 1])) <= x) --lo;
  if (hi + 1 == joined.size() || lo == 0) throw CertificationError("critical ray pair too short for the truncation");

  const auto cut = [&](Complex a, Complex b) {
    const double ra = re(a), rb = re(b);
    const double target = rb > 0 ? x : -x;
    return a + (b - a) * ((target - ra) / (rb - ra));
  };
  Polyline out;
  out.push_back(cut(joined[lo], joined[lo - 1]));
  for (std::size_t i = lo; i <= hi; ++i) out.push_back(joined[i]);
  out.push_back(cut(joined[hi], joined[hi + 1]));
  return out;
}

namespace {

Strip strip_from(const CosineMap& m, long k, const Polyline& lower_joined, const Polyline& upper_joined, double x) {
  Strip st;
  st.k = k;
  st.lower = clip_joined(m, lower_joined, m.critical_point(2 * k + 1), x);
  st.upper = clip_joined(m, upper_joined, m.critical_point(2 * k + 3), x);
  st.polygon = st.lower;
  st.polygon.insert(st.polygon.end(), st.upper.rbegin(), st.upper.rend());
  const Box b = bounding_box(st.polygon);
  st.im_lo = b.y0;
  st.im_hi = b.y1;
  // u_{2k+1} and u_{2k+3} are boundary vertices
  for (long j = 2 * k - 2; j <= 2 * k + 6; ++j)
    if (j != 2 * k + 1 && j != 2 * k + 3 && winding_number(st.polygon, m.critical_point(j)) != 0)
      st.critical.push_back(j);
  return st;
}

}  // namespace

Strip build_strip(const CosineMap& m, const Address& s, long k, double half_width, double t_hi) {
  const auto lo = critical_ray_pair(m, s, k, std::max(t_hi, half_width + 10.0));
  // g_{s_{k+1}} = g_{s_k} + 2 pi i, so the upper boundary is a translate
  Polyline up = joined_curve(lo);
  for (Complex& z : up) z += Complex(0, kTwoPi);
  return strip_from(m, k, joined_curve(lo), up, half_width);
}

bool EscapeCandidate::in_U(Complex z, double tol) const {
  if (winding_number(R, z) == 0) return false;
  for (const auto& sl : u_slits)
    if (distance_to_polyline(z, sl.points, false) <= tol) return false;
  return true;
}

bool EscapeCandidate::in_V(Complex z, double tol) const {
  if (!E.contains(z)) return false;
  for (const auto& sl : v_slits)
    if (distance_to_polyline(z, sl.points, false) <= tol) return false;
  return true;
}

namespace {

bool inside_ellipse(const Polyline& R, const Ellipse& E) {
  for (const Complex& z : R)
    if (!(E.depth(z) > 0)) return false;
  return true;
}

struct Joined {
  Address s = Address::periodic({{0, 0}});
  double t_v = 0;
  Polyline lower;
  Polyline upper;
};

Joined joined_pair(const CosineMap& m, long k0, double t_hi) {
  Joined j;
  j.s = address_of_minus_v(m, j.t_v);
  const auto pair = critical_ray_pair(m, j.s, k0, t_hi);
  j.lower = joined_curve(pair);
  j.upper = j.lower;
  for (Complex& z : j.upper) z += Complex(0, kTwoPi);
  return j;
}

double minimal_M_from(const CosineMap& m, long k0, const Joined& j, double m_max) {
  for (double M = 0.25; M <= m_max + 1e-12; M += 0.25) {
    try {
      const Strip st = strip_from(m, k0, j.lower, j.upper, M);
      if (inside_ellipse(st.polygon, Ellipse{m.v(), M})) return M;
    } catch (const std::exception&) {
    }
  }
  return 0.0;
}

}  // namespace

double minimal_ellipse_M(const CosineMap& m, long k0, double m_max) {
  return minimal_M_from(m, k0, joined_pair(m, k0, m_max + 10.0), m_max);
}

EscapeCandidate renorm_domain(const CosineMap& m, long k0, double M, const EscapeOptions& opts) {
  if (!(M > 0)) throw PreconditionError("M must be positive");
  const Joined jp = joined_pair(m, k0, std::max(opts.t_hi, M + 10.0));

  EscapeCandidate cand;
  cand.k0 = k0;
  cand.M = M;
  cand.c = m.critical_point(2 * k0 + 2);
  cand.s = jp.s;
  cand.E = Ellipse{m.v(), M};
  const Strip st = strip_from(m, k0, jp.lower, jp.upper, M);
  if (st.critical.size() != 1 || st.critical[0] != 2 * k0 + 2)
    throw CertificationError("strip does not contain exactly the critical point u_{2k0+2}");
  cand.R = resample(st.polygon, opts.max_segment, true);
  if (!inside_ellipse(cand.R, cand.E)) {
    const double est = minimal_M_from(m, k0, jp, 20.0);
    std::ostringstream os;
    os << "M too small: R_M is not inside E_M; increase M";
    if (est > 0) os << " (smallest sufficient M on a 0.25 grid: " << est << ")";
    throw PreconditionError(os.str());
  }

  // exit time of -v
  Complex z = -m.v();
  int n = 0;
  while (winding_number(cand.R, z) != 0) {
    if (++n > opts.budget) throw CertificationError("-v never leaves R_M within the iteration budget");
    z = m(z);
  }
  cand.N = n;

  // slits: g_{shift^j s} inside the ellipse
  const double t_top = M + 10.0;
  for (int j = 0; j <= cand.N; ++j) {
    const Address sj = jp.s.shift(static_cast<std::size_t>(j));
    TraceOptions to;
    to.samples = 600;
    to.spacing = Spacing::geometric;
    // below t ~ 1e-2 each sample costs ~1/t pullbacks; the slit stops there
    const Ray r = trace_ray(m, sj, 1e-2, t_top, to);
    Polyline pts;
    for (const auto& smp : r.samples) pts.push_back(smp.z);
    for (auto& run : inside_runs(pts, cand.E)) {
      Slit sl{j, std::move(run)};
      bool meets_R = false;
      for (const Complex& p : sl.points) meets_R = meets_R || winding_number(cand.R, p) != 0;
      if (j < cand.N && meets_R) cand.u_slits.push_back(sl);
      if (j >= 1 || cand.N == 0) cand.v_slits.push_back(sl);
    }
  }

  // degree on sampled targets
  std::mt19937 rng(opts.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Polyline image;
  image.reserve(cand.R.size());
  for (const Complex& p : cand.R) image.push_back(m(p));
  int guard = 0;
  while (static_cast<int>(cand.targets.size()) < opts.targets && guard++ < 100000) {
    const double r = 0.95 * std::sqrt(unit(rng));
    const double th = kTwoPi * unit(rng);
    const Complex w = m.v() * Complex(r * std::cosh(M) * std::cos(th), r * std::sinh(M) * std::sin(th));
    bool near_slit = distance_to_polyline(w, image, true) < 0.05;
    for (const auto& sl : cand.v_slits) near_slit = near_slit || distance_to_polyline(w, sl.points, false) < 0.05;
    if (near_slit) continue;
    cand.targets.push_back(w);
  }
  cand.degree = -1;
  for (const Complex& w : cand.targets) {
    int count = 0;
    for (const Complex& p : m.preimages_in_band(w, st.im_lo - 1.0, st.im_hi + 1.0))
      if (cand.in_U(p)) ++count;
    cand.preimage_counts.push_back(count);
    cand.winding_counts.push_back(winding_number(image, w));
    if (cand.degree == -1) cand.degree = count;
    if (count != cand.degree || cand.winding_counts.back() != count) cand.degree = 0;
  }
  if (cand.degree < 0) cand.degree = 0;

  cand.margin = polyline_distance(cand.R, true, cand.E.boundary(4000), true);

  Complex c = cand.c;
  for (cand.returns = 0; cand.returns < 100; ++cand.returns) {
    c = m(c);
    if (!cand.in_U(c)) break;
  }
  return cand;
}

std::vector<ScanRow> scan_slice(double lo, double hi, int n, int max_iter) {
  std::vector<ScanRow> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    const double c = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    ScanRow row{c, OrbitKind::bounded_unresolved, OrbitKind::bounded_unresolved};
    if (c != 0.0) {
      const auto m = CosineMap::from_normal_form(c, c);
      row.plus = classify_critical_orbit(m, CriticalValue::plus, max_iter).kind;
      row.minus = classify_critical_orbit(m, CriticalValue::minus, max_iter).kind;
    }
    rows[static_cast<std::size_t>(i)] = row;
  }
  return rows;
}

}  // namespace cosdyn
