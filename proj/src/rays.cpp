#include "cosdyn/rays.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cosdyn/orbit.hpp"

namespace cosdyn {

namespace {

// Potential above which the strip branch is trusted without continuation.
constexpr double kFarPotential = 6.0;
// Levels are seeded once the potential exceeds this value.
constexpr double kSeedLevel = kOverflowRe;
constexpr double kAmbiguity = 0.3;
constexpr double kCrash = 1e-9;

Complex seed_from_entries(const CosineMap& m, Entry e0, Entry e1, double t) {
  const double turn = e1.j == 1 ? kPi : 0.0;
  const double k = static_cast<double>(e0.k);
  if (e0.j == 0) return t - std::log(m.a()) + (kTwoPi * k - turn) * kI;
  return -t + std::log(m.b()) + (kTwoPi * k + turn) * kI;
}

// Pullback chain for one address with continuation references per level.
class Tracer {
 public:
  Tracer(const CosineMap& m, const Address& s, int max_levels) : m_(m), s_(s), max_levels_(max_levels) {}

  enum class Outcome { ok, ambiguous, crashed, too_deep };

  struct Point {
    Complex z;
    int depth = 0;
  };

  // Evaluate g_s(t); on success the per-level references are updated.
  Outcome eval(double t, Point& out) {
    potentials_.clear();
    potentials_.push_back(t);
    while (potentials_.back() <= kSeedLevel) {
      if (static_cast<int>(potentials_.size()) > max_levels_) return Outcome::too_deep;
      potentials_.push_back(potential_forward(potentials_.back()));
    }
    const std::size_t top = potentials_.size() - 1;
    entry_cache(top + 1);
    Complex z = seed_from_entries(m_, entries_[top], entries_[top + 1], potentials_[top]);
    scratch_.assign(top, Complex{});
    for (std::size_t lvl = top; lvl-- > 0;) {
      const Complex w = z;
      const Complex q = w / m_.v();
      if (std::abs(q - 1.0) < kCrash || std::abs(q + 1.0) < kCrash) return Outcome::crashed;
      if (potentials_[lvl] >= kFarPotential || lvl >= refs_.size() || !has_ref_[lvl]) {
        z = m_.inverse_branch(w, entries_[lvl]).z;
      } else {
        const NearestPreimage np = m_.nearest_preimage(w, refs_[lvl]);
        if (np.distance > kAmbiguity * np.runner_up) return Outcome::ambiguous;
        z = np.z;
      }
      scratch_[lvl] = z;
    }
    if (refs_.size() < top) {
      refs_.resize(top);
      has_ref_.resize(top, 0);
    }
    for (std::size_t lvl = 0; lvl < top; ++lvl) {
      refs_[lvl] = scratch_[lvl];
      has_ref_[lvl] = 1;
    }
    out = {top == 0 ? z : scratch_[0], static_cast<int>(top)};
    return Outcome::ok;
  }

  // Move from the last evaluated potential down to t, bisecting when the
  // continuation step is ambiguous.
  Outcome step_to(double t_from, double t, Point& out, int depth = 0) {
    const Outcome o = eval(t, out);
    if (o != Outcome::ambiguous) return o;
    if (depth > 40 || t_from - t < 1e-14 * (1.0 + t)) return Outcome::crashed;
    const double mid = 0.5 * (t_from + t);
    Point tmp;
    const Outcome om = step_to(t_from, mid, tmp, depth + 1);
    if (om != Outcome::ok) return om;
    return step_to(mid, t, out, depth + 1);
  }

 private:
  void entry_cache(std::size_t upto) {
    while (entries_.size() <= upto) entries_.push_back(s_.entry(entries_.size()));
  }

  const CosineMap& m_;
  Address s_;
  int max_levels_;
  std::vector<Entry> entries_;
  std::vector<double> potentials_;
  std::vector<Complex> scratch_;
  std::vector<Complex> refs_;
  std::vector<char> has_ref_;
};

constexpr double kWarmStart = 30.0;

}  // namespace

Complex asymptotic_seed(const CosineMap& m, const Address& s, double t) {
  if (t < kSeedThreshold) throw PreconditionError("asymptotic seed needs t >= 25; pull back instead");
  return seed_from_entries(m, s.entry(0), s.entry(1), t);
}

Ray trace_ray_at(const CosineMap& m, const Address& s, std::span<const double> ts, int max_levels) {
  Ray ray{s, {}, 0.0, false, std::nullopt};
  if (ts.empty()) return ray;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (!(ts[i] < ts[i - 1])) throw PreconditionError("ray potentials must be strictly decreasing");
  if (!(ts.back() > 0)) throw PreconditionError("ray potentials must be positive");

  Tracer tracer(m, s, max_levels);
  Tracer::Point p;
  double last = std::max(kWarmStart, ts.front());
  if (tracer.eval(last, p) != Tracer::Outcome::ok) throw CertificationError("ray seed failed");
  // walk down from the warm start in modest steps
  while (last > ts.front()) {
    const double next = std::max(ts.front(), last - 2.0);
    const auto o = tracer.step_to(last, next, p);
    if (o != Tracer::Outcome::ok) {
      ray.crashed = o == Tracer::Outcome::crashed;
      ray.t_min = last;
      return ray;
    }
    last = next;
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto o = (i == 0 && last == ts[0]) ? tracer.eval(ts[0], p) : tracer.step_to(last, ts[i], p);
    if (o != Tracer::Outcome::ok) {
      ray.crashed = o == Tracer::Outcome::crashed;
      break;
    }
    ray.samples.push_back({ts[i], p.z, p.depth});
    last = ts[i];
  }
  ray.t_min = ray.samples.empty() ? ts.front() : ray.samples.back().t;
  return ray;
}

Ray trace_ray(const CosineMap& m, const Address& s, double t_lo, double t_hi, const TraceOptions& opts) {
  if (!(t_lo < t_hi)) throw PreconditionError("trace_ray needs t_lo < t_hi");
  if (opts.samples < 2) throw PreconditionError("trace_ray needs at least two samples");
  if (opts.spacing == Spacing::geometric && !(t_lo > 0)) throw PreconditionError("geometric spacing needs t_lo > 0");
  std::vector<double> ts(static_cast<std::size_t>(opts.samples));
  for (int i = 0; i < opts.samples; ++i) {
    const double f = static_cast<double>(i) / (opts.samples - 1);
    ts[i] = opts.spacing == Spacing::linear ? t_hi + (t_lo - t_hi) * f : t_hi * std::pow(t_lo / t_hi, f);
  }
  ts.back() = t_lo;
  return trace_ray_at(m, s, ts, opts.max_levels);
}

LandingResult land_ray(const CosineMap& m, const Address& s, double t_start) {
  if (!s.is_periodic()) throw PreconditionError("land_ray needs a purely periodic address");
  const int p = static_cast<int>(s.period().size());
  LandingResult result;
  result.ray.address = s;

  Tracer tracer(m, s, 20000);
  Tracer::Point pt;
  double last = std::max(kWarmStart, t_start);
  if (tracer.eval(last, pt) != Tracer::Outcome::ok) return result;
  while (last > t_start) {
    const double next = std::max(t_start, last - 2.0);
    if (tracer.step_to(last, next, pt) != Tracer::Outcome::ok) return result;
    last = next;
  }
  double t = t_start;
  std::vector<Complex> zs;
  for (int k = 0; k < 2000; ++k) {
    const auto o = tracer.step_to(last, t, pt);
    if (o != Tracer::Outcome::ok) {
      result.ray.crashed = o == Tracer::Outcome::crashed;
      break;
    }
    result.ray.samples.push_back({t, pt.z, pt.depth});
    zs.push_back(pt.z);
    last = t;
    const std::size_t n = zs.size();
    if (n >= 8 && std::abs(zs[n - 1] - zs[n - 2]) < 1e-13 * (1.0 + std::abs(zs[n - 1]))) break;
    for (int i = 0; i < p; ++i) t = potential_backward(t);
  }
  result.ray.t_min = result.ray.samples.empty() ? t_start : result.ray.samples.back().t;
  const std::size_t n = zs.size();
  if (n < 8) return result;

  // the approach is geometric with ratio 1/lambda: the tail differences shrink
  const double d_last = std::abs(zs[n - 1] - zs[n - 2]);
  const double d_early = std::abs(zs[n - 7] - zs[n - 8]);
  if (!(d_last <= d_early) && d_last > 1e-12) return result;
  Complex guess = zs[n - 1];
  const Complex d1 = zs[n - 2] - zs[n - 3];
  const Complex d2 = zs[n - 1] - zs[n - 2];
  if (std::abs(d2 - d1) > 1e-300 && std::abs(d2) > 1e-14) guess = zs[n - 1] - d2 * d2 / (d2 - d1);

  const PeriodicPoint pp = newton_periodic(m, guess, p);
  if (!pp.converged || std::abs(pp.z - zs[n - 1]) > 1e-4) return result;

  const double mod = std::abs(pp.multiplier);
  LandingClass cls;
  if (mod > 1.0 + 1e-6) {
    cls = LandingClass::repelling;
  } else {
    bool root_of_unity = false;
    for (int q = 1; q <= 24 && !root_of_unity; ++q) root_of_unity = std::abs(std::pow(pp.multiplier, q) - 1.0) < 1e-6 * q;
    if (!root_of_unity) throw CertificationError("ray landed at a non-repelling, non-parabolic periodic point");
    cls = LandingClass::parabolic;
  }
  result.status = LandingStatus::landed;
  result.landing = Landing{pp.z, pp.multiplier, cls};
  result.ray.landing = result.landing;
  return result;
}

std::optional<PreimagePair> preimage_ray_addresses(const CosineMap& m, const Address& s, Complex marker, int window) {
  const LandingResult lr = land_ray(m, s);
  if (lr.status != LandingStatus::landed) return std::nullopt;
  const Complex alpha = lr.landing->point;
  const double t_deep = lr.ray.samples.back().t;
  const double t_pre = potential_backward(t_deep);

  const long kc = std::lround((marker - m.u()).imag() / kTwoPi);
  PreimagePair out{s, s, 0.0, 0.0, alpha};
  double best[2] = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (int j = 0; j <= 1; ++j) {
    for (long k = kc - window; k <= kc + window; ++k) {
      const Address cand = s.prepend({j, k});
      const double ts[] = {t_pre};
      const Ray r = trace_ray_at(m, cand, ts);
      if (r.samples.empty()) continue;
      const Complex landing = m.nearest_preimage(alpha, r.samples.back().z).z;
      const double d = std::abs(landing - marker);
      if (d < best[j]) {
        best[j] = d;
        (j == 0 ? out.right : out.left) = cand;
        (j == 0 ? out.right_landing : out.left_landing) = landing;
      }
    }
  }
  if (!std::isfinite(best[0]) || !std::isfinite(best[1])) return std::nullopt;
  return out;
}

namespace {

// First orbit index whose point is deep in the far field, with the orbit.
std::optional<std::vector<Complex>> far_orbit(const CosineMap& m, Complex z, int max_iter) {
  constexpr double kFar = 60.0;
  std::vector<Complex> orb{z};
  for (int i = 0; i < max_iter; ++i) {
    if (std::abs((orb.back() - m.u()).real()) > kFar) return orb;
    const MapValue fz = m.eval(orb.back());
    if (fz.escaped) return std::nullopt;
    orb.push_back(fz.value);
  }
  return std::nullopt;
}

}  // namespace

std::optional<double> escaping_potential(const CosineMap& m, Complex z, int max_iter) {
  const auto orb = far_orbit(m, z, max_iter);
  if (!orb) return std::nullopt;
  const Complex w = orb->back();
  double t = (w - m.u()).real() > 0 ? w.real() + std::log(std::abs(m.a())) : -w.real() + std::log(std::abs(m.b()));
  for (std::size_t i = 1; i < orb->size(); ++i) t = potential_backward(t);
  return t;
}

std::optional<Address> escaping_address(const CosineMap& m, Complex z, int max_iter) {
  const auto orb = far_orbit(m, z, max_iter);
  if (!orb) return std::nullopt;
  std::vector<Entry> pre;
  for (const Complex w : *orb) pre.push_back(m.strip_index(w).index);
  const Complex last = orb->back();
  // direction of the next image: a e^z on the right, b e^{-z} on the left
  const double phase = (last - m.u()).real() > 0 ? std::arg(m.a()) + last.imag() : std::arg(m.b()) - last.imag();
  // beyond the far field only the direction is known; close off with the
  // straight ray in that direction
  if (std::cos(phase) < 0) return Address(std::move(pre), {{1, 0}});
  return Address(std::move(pre), {{0, 0}});
}

}  // namespace cosdyn
