#include "cosdyn/basins.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "cosdyn/orbit.hpp"

namespace cosdyn {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kMaxCyclePeriod = 16;

bool root_of_unity(Complex lambda, double tol) {
  for (int q = 1; q <= 24; ++q)
    if (std::abs(std::pow(lambda, q) - 1.0) < tol * q) return true;
  return false;
}

}  // namespace

OrbitClass classify_critical_orbit(const CosineMap& m, CriticalValue which, int max_iter) {
  if (max_iter < 1) throw PreconditionError("max_iter must be at least 1");
  OrbitClass out;
  std::vector<Complex> orb{which == CriticalValue::plus ? m.v() : -m.v()};
  int streak = 0;
  double prev_re = std::abs((orb[0] - m.u()).real());
  for (int n = 1; n <= max_iter; ++n) {
    const MapValue fz = m.eval(orb.back());
    if (fz.escaped) {
      out.kind = OrbitKind::escaping;
      out.escape = EscapeCertificate{n - 1, std::abs((orb.back() - m.u()).real()), true};
      return out;
    }
    orb.push_back(fz.value);
    const double re = std::abs((fz.value - m.u()).real());
    streak = (re > kEscapeRe && re > prev_re) ? streak + 1 : 0;
    prev_re = re;
    if (streak == 3) {
      out.kind = OrbitKind::escaping;
      out.escape = EscapeCertificate{n - 2, std::abs((orb[n - 2] - m.u()).real()), false};
      return out;
    }
  }

  // look for an attracting cycle near the end of the orbit
  const Complex seed = orb.back();
  for (int p = 1; p <= kMaxCyclePeriod; ++p) {
    const PeriodicPoint pp = newton_periodic(m, seed, p);
    if (!pp.converged || std::abs(pp.z - seed) > 1.0) continue;
    const double mod = std::abs(pp.multiplier);
    if (mod >= 1.0) {
      if (mod < 1.0 + 1e-4 && root_of_unity(pp.multiplier, 1e-4)) out.parabolic = true;
      continue;
    }
    if (mod > 1.0 - 1e-4 && root_of_unity(pp.multiplier, 1e-4)) {
      out.parabolic = true;
      continue;
    }
    std::optional<BasinChart> chart;
    try {
      chart = BasinChart::build(m, pp.z, p);
    } catch (const CertificationError&) {
      continue;
    }
    Complex z = orb.back();
    const int budget = 10 * std::max(1, p) * 100;
    for (int i = 0; i < budget; ++i) {
      if (std::abs(z - chart->center()) < chart->radius()) {
        out.kind = OrbitKind::attracted;
        out.multiplier = pp.multiplier;
        out.cycle = orbit(m, pp.z, p - 1);
        return out;
      }
      const MapValue fz = m.eval(z);
      if (fz.escaped) break;
      z = fz.value;
    }
  }
  out.orbit = std::move(orb);
  return out;
}

Cycle find_cycle(const CosineMap& m, Complex seed, int p) {
  if (p < 1) throw PreconditionError("cycle period must be at least 1");
  Cycle out;
  const PeriodicPoint pp = newton_periodic(m, seed, p, 100, 1e-13);
  if (!pp.converged || pp.residual >= 1e-10) return out;
  out.status = CycleStatus::found;
  out.points = orbit(m, pp.z, p - 1);
  out.multiplier = pp.multiplier;
  out.residual = pp.residual;
  return out;
}

Complex multiplier_fd(const CosineMap& m, Complex z, int p, double h) {
  const Jet a = iterate_jet(m, z + h, p);
  const Jet b = iterate_jet(m, z - h, p);
  return (a.value - b.value) / (2.0 * h);
}

// ---------------------------------------------------------------------------
// Local power series of F = f^p at a cycle point, used where F(z) - z_a is too
// small to evaluate accurately by direct iteration.

namespace {

constexpr int kSeriesDegree = 40;
using Series = std::vector<Complex>;  // coefficient n at index n, index 0 unused

Series multiply(const Series& a, const Series& b) {
  Series out(kSeriesDegree + 1, 0.0);
  for (int i = 1; i <= kSeriesDegree; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 1; i + j <= kSeriesDegree; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// f(z + s(h)) - f(z)
Series compose_f(const CosineMap& m, Complex z, const Series& s) {
  const Complex zeta = z - m.u();
  const Complex ep = 0.5 * m.v() * std::exp(zeta);
  const Complex em = 0.5 * m.v() * std::exp(-zeta);
  Series out(kSeriesDegree + 1, 0.0);
  Series power = s;
  double fact = 1.0;
  for (int n = 1; n <= kSeriesDegree; ++n) {
    fact *= n;
    const Complex d = (ep + (n % 2 == 0 ? em : -em)) / fact;
    for (int i = 1; i <= kSeriesDegree; ++i) out[i] += d * power[i];
    if (n < kSeriesDegree) power = multiply(power, s);
  }
  return out;
}

Complex eval_series(const Series& a, Complex h) {
  Complex acc = 0.0;
  for (int n = kSeriesDegree; n >= 1; --n) acc = (acc + a[n]) * h;
  return acc;
}

double series_radius(const Series& a) {
  double r = std::numeric_limits<double>::infinity();
  for (int n = kSeriesDegree / 2; n <= kSeriesDegree; ++n) {
    const double mag = std::abs(a[n]);
    if (mag > 0) r = std::min(r, std::pow(mag, -1.0 / n));
  }
  return r;
}

struct LocalData {
  Series coeffs;
  double h_max;
};

LocalData local_series(const CosineMap& m, Complex za, int p) {
  Series s(kSeriesDegree + 1, 0.0);
  s[1] = 1.0;
  Complex z = za;
  for (int i = 0; i < p; ++i) {
    s = compose_f(m, z, s);
    z = m(z);
  }
  return {s, std::min(1.0, 0.25 * series_radius(s))};
}

}  // namespace

Complex BasinChart::F(Complex z) const {
  const Jet j = iterate_jet(m_, z, p_);
  return j.escaped ? Complex(kNaN, kNaN) : j.value;
}

namespace {

// Advances h = z - z_a under F with relative accuracy near the center.
class LocalStepper {
 public:
  LocalStepper(const CosineMap& m, Complex za, int p, const LocalData& ld) : m_(m), za_(za), p_(p), ld_(ld) {}
  bool step(Complex& h) const {
    if (std::abs(h) < ld_.h_max) {
      h = eval_series(ld_.coeffs, h);
      return true;
    }
    const Jet j = iterate_jet(m_, za_ + h, p_);
    if (j.escaped) return false;
    h = j.value - za_;
    return std::isfinite(h.real()) && std::isfinite(h.imag());
  }

 private:
  const CosineMap& m_;
  Complex za_;
  int p_;
  const LocalData& ld_;
};

}  // namespace

Complex BasinChart::phi(Complex z) const {
  const LocalData ld{series_, series_h_};
  const LocalStepper stepper(m_, za_, p_, ld);

  Complex h = z - za_;
  if (mode_ == ChartMode::koenigs) {
    int n = 0;
    while (std::abs(h) > 1e-12) {
      if (n > 100000 || !stepper.step(h)) return {kNaN, kNaN};
      ++n;
      if (std::abs(h) > 1e6) return {kNaN, kNaN};
    }
    const Complex b = c2_ / (lambda_ - lambda_ * lambda_);
    return std::pow(lambda_, -n) * (h + b * h * h);
  }

  // Böttcher: W_k = c (F^k z - z_a), phi = W_0 prod (W_{k+1} / W_k^2)^{2^{-k-1}}
  Complex w = c2_ * h;
  if (w == 0.0) return 0.0;
  Complex acc = w;
  double scale = 0.5;
  for (int k = 0; k < 200; ++k) {
    if (!stepper.step(h)) return {kNaN, kNaN};
    const Complex w1 = c2_ * h;
    if (w1 == 0.0 || std::abs(w1) < 1e-280) break;
    const Complex ratio = w1 / (w * w);
    const Complex eps = ratio - 1.0;
    if (std::abs(eps) > 0.9) return {kNaN, kNaN};
    acc *= std::exp(scale * std::log(ratio));
    if (std::abs(eps) * scale < 1e-18) break;
    scale *= 0.5;
    w = w1;
  }
  return acc;
}

double BasinChart::level(Complex z) const {
  // F^n(z) into the chart, then undo the n steps on |phi|
  int n = 0;
  while (!(std::abs(z - za_) < 0.5 * r_)) {
    if (++n > 100000) return kNaN;
    z = F(z);
    if (!std::isfinite(z.real())) return kNaN;
  }
  const double l = std::abs(phi(z));
  if (mode_ == ChartMode::koenigs) return l / std::pow(std::abs(lambda_), n);
  return std::pow(l, std::ldexp(1.0, -n));
}

double BasinChart::conjugacy_residual(Complex z) const {
  const Complex pz = phi(z);
  const Complex pfz = phi(F(z));
  const Complex expected = mode_ == ChartMode::koenigs ? lambda_ * pz : pz * pz;
  const double r = std::abs(pfz - expected);
  return std::isfinite(r) ? r : std::numeric_limits<double>::infinity();
}

double BasinChart::residual(int samples) const {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const Complex z = za_ + std::polar(r_, kTwoPi * i / samples);
    worst = std::max(worst, conjugacy_residual(z));
  }
  return worst;
}

BasinChart BasinChart::build(const CosineMap& m, Complex cycle_point, int period) {
  if (period < 1) throw PreconditionError("chart period must be at least 1");
  BasinChart c(m);
  const PeriodicPoint pp = newton_periodic(m, cycle_point, period, 100, 1e-14);
  if (!pp.converged) throw CertificationError("chart center is not a periodic point");
  c.za_ = pp.z;
  c.p_ = period;
  const LocalData ld = local_series(m, c.za_, period);
  c.lambda_ = ld.coeffs[1];
  if (std::abs(c.lambda_) >= 1.0) throw CertificationError("cycle is not attracting");
  c.mode_ = std::abs(c.lambda_) < 1e-8 ? ChartMode::boettcher : ChartMode::koenigs;
  if (c.mode_ == ChartMode::boettcher) c.lambda_ = 0.0;
  c.c2_ = ld.coeffs[2];
  c.series_ = ld.coeffs;
  if (c.mode_ == ChartMode::boettcher) c.series_[1] = 0.0;
  c.series_h_ = ld.h_max;
  if (c.mode_ == ChartMode::boettcher && std::abs(c.c2_) < 1e-12)
    throw CertificationError("superattracting cycle of local degree above 2");

  double r = 1.0;
  for (int attempt = 0; attempt < 50; ++attempt, r *= 0.5) {
    c.r_ = r;
    bool ok = true;
    Polyline img;
    double rho = std::numeric_limits<double>::infinity();
    constexpr int kSamples = 64;
    for (int i = 0; i < kSamples && ok; ++i) {
      const Complex z = c.za_ + std::polar(r, kTwoPi * i / kSamples);
      const Complex fz = c.F(z);
      if (!(std::abs(fz - c.za_) < r)) ok = false;
      if (ok && !(c.conjugacy_residual(z) < 1e-9)) ok = false;
      const Complex w = c.phi(z);
      if (!std::isfinite(w.real())) ok = false;
      img.push_back(w);
      rho = std::min(rho, std::abs(w));
    }
    if (!ok || winding_number(img, 0.0) != 1) continue;
    c.rho0_ = 0.9 * rho;
    if (c.mode_ == ChartMode::boettcher && c.rho0_ >= 1.0) continue;
    return c;
  }
  throw CertificationError("no chart radius with conjugacy residual below 1e-9");
}

std::optional<Complex> BasinChart::phi_inverse(Complex w, Complex guess) const {
  Complex z = guess;
  const double h = 1e-7 * std::max(r_, 1e-6);
  Complex e = phi(z) - w;
  if (!std::isfinite(e.real())) return std::nullopt;
  for (int it = 0; it < 80; ++it) {
    if (std::abs(e) < 1e-14 * (1.0 + std::abs(w))) return z;
    const Complex d = (phi(z + h) - phi(z - h)) / (2.0 * h);
    if (!std::isfinite(d.real()) || d == 0.0) return std::nullopt;
    Complex step = e / d;
    bool improved = false;
    for (int half = 0; half < 30; ++half, step *= 0.5) {
      const Complex zt = z - step;
      const Complex et = phi(zt) - w;
      if (std::isfinite(et.real()) && std::abs(et) < std::abs(e)) {
        z = zt;
        e = et;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (std::abs(e) < 1e-11 * (1.0 + std::abs(w))) return z;
  return std::nullopt;
}

namespace {

// Solves F(z) = w near guess. nullopt when Newton wanders to a different
// preimage than the linear prediction suggests.
std::optional<Complex> pullback(const CosineMap& m, int p, Complex w, Complex guess) {
  const Jet g = iterate_jet(m, guess, p);
  if (g.escaped) return std::nullopt;
  if (std::abs(g.derivative) < 1e-300) throw CertificationError("critical point on basin curve");
  const Complex predicted = guess + (w - g.value) / g.derivative;
  Complex z = guess;
  Jet j = g;
  double err = std::abs(j.value - w);
  for (int it = 0; it < 60 && err >= 1e-13 * (1.0 + std::abs(w)); ++it) {
    if (std::abs(j.derivative) < 1e-300) return std::nullopt;
    Complex step = (j.value - w) / j.derivative;
    bool improved = false;
    for (int half = 0; half < 30; ++half, step *= 0.5) {
      const Jet t = iterate_jet(m, z - step, p);
      if (!t.escaped && std::abs(t.value - w) < err) {
        z -= step;
        j = t;
        err = std::abs(t.value - w);
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  if (err >= 1e-11 * (1.0 + std::abs(w))) return std::nullopt;
  if (std::abs(z - predicted) > 0.5 * std::abs(predicted - guess) + 1e-9 * (1.0 + std::abs(z))) return std::nullopt;
  // a vanishing derivative at the solution means the curve meets a critical point
  if (std::abs(j.derivative) < 1e-9 * (1.0 + std::abs(w))) throw CertificationError("critical point on basin curve");
  return z;
}

}  // namespace

std::optional<Complex> BasinChart::point(double theta, double rho, Complex guess) const {
  if (mode_ == ChartMode::boettcher && !(rho < 1.0)) return std::nullopt;
  if (rho <= rho0_) return phi_inverse(std::polar(rho, kTwoPi * theta), guess);
  if (mode_ == ChartMode::koenigs && std::abs(lambda_) == 0.0) return std::nullopt;
  // forward image in internal coordinates
  double theta1, rho1;
  if (mode_ == ChartMode::boettcher) {
    theta1 = std::fmod(2.0 * theta, 1.0);
    rho1 = rho * rho;
  } else {
    theta1 = std::fmod(theta + std::arg(lambda_) / kTwoPi + 1.0, 1.0);
    rho1 = rho * std::abs(lambda_);
  }
  const Complex fguess = F(guess);
  if (!std::isfinite(fguess.real())) return std::nullopt;
  const auto w = point(theta1, rho1, fguess);
  if (!w) return std::nullopt;
  return pullback(m_, p_, *w, guess);
}

namespace {

// Walks a parametrized family of chart points, refining steps that fail the
// continuation check.
BasinCurve march(const std::function<std::optional<Complex>(double, Complex)>& at, const std::vector<double>& params,
                 Complex start, Polyline seed_points) {
  BasinCurve out;
  out.points = std::move(seed_points);
  Complex prev = start;
  double prev_param = params.front();
  for (std::size_t i = 0; i < params.size(); ++i) {
    std::vector<double> stack{params[i]};
    int refinements = 0;
    while (!stack.empty()) {
      const double target = stack.back();
      const auto z = at(target, prev);
      if (z) {
        prev = *z;
        prev_param = target;
        stack.pop_back();
        continue;
      }
      if (++refinements > 400 || std::abs(target - prev_param) < 1e-12) {
        out.status = CurveStatus::truncated;
        return out;
      }
      stack.push_back(0.5 * (prev_param + target));
    }
    out.points.push_back(prev);
  }
  return out;
}

}  // namespace

namespace {

// A critical point of F near z at the same internal level as z.
bool critical_point_at_level(const BasinChart& chart, Complex z) {
  const CosineMap& m = chart.map();
  const double lz = chart.level(z);
  if (!std::isfinite(lz)) return false;
  Complex w = z;
  for (int j = 0; j < chart.period(); ++j) {
    const double k = std::round((w - m.u()).imag() / kPi);
    const Complex crit = m.critical_point(static_cast<long>(k));
    // pull the critical point back along the j steps of the orbit of z
    Complex c = z;
    bool ok = true;
    for (int it = 0; it < 50 && j > 0; ++it) {
      const Jet jt = iterate_jet(m, c, j);
      if (jt.escaped || std::abs(jt.derivative) < 1e-300) {
        ok = false;
        break;
      }
      const Complex step = (jt.value - crit) / jt.derivative;
      c -= step;
      if (std::abs(step) < 1e-14 * (1.0 + std::abs(c))) break;
    }
    if (!ok) continue;
    if (j == 0) c = crit;
    if (std::abs(c - z) < 0.5) {
      const double lc = chart.level(c);
      if (std::isfinite(lc) && std::abs(lc - lz) < 0.15 * lc) return true;
    }
    w = m(w);
  }
  return false;
}

}  // namespace

BasinCurve internal_ray(const BasinChart& chart, double theta, int n_samples, double rho_max) {
  if (n_samples < 2) throw PreconditionError("internal ray needs at least two samples");
  if (chart.mode() == ChartMode::boettcher && !(rho_max < 1.0)) throw PreconditionError("rho_max must be below 1");
  theta -= std::floor(theta);
  const double rho_start = 0.5 * chart.phi_radius();
  if (!(rho_max > rho_start)) throw PreconditionError("rho_max inside the chart core");
  const Complex w0 = std::polar(rho_start, kTwoPi * theta);
  const Complex guess0 = chart.mode() == ChartMode::boettcher
                             ? chart.center() + w0 / (chart.phi(chart.center() + 1e-6) / 1e-6)
                             : chart.center() + w0;
  const auto z0 = chart.phi_inverse(w0, guess0);
  if (!z0) throw CertificationError("chart inverse failed at the ray root");

  // parameter: log of the Green-like potential s = -log rho (Böttcher) or log rho (Kœnigs)
  std::vector<double> params;
  const bool bt = chart.mode() == ChartMode::boettcher;
  const double a = bt ? std::log(-std::log(rho_start)) : std::log(rho_start);
  const double b = bt ? std::log(-std::log(rho_max)) : std::log(rho_max);
  for (int i = 1; i < n_samples; ++i) params.push_back(a + (b - a) * i / (n_samples - 1));
  auto at = [&](double prm, Complex guess) {
    const double rho = bt ? std::exp(-std::exp(prm)) : std::exp(prm);
    return chart.point(theta, rho, guess);
  };
  BasinCurve c = march(at, params, *z0, {chart.center(), *z0});
  if (c.status == CurveStatus::truncated && critical_point_at_level(chart, c.points.back()))
    throw CertificationError("internal ray runs into a critical point");
  return c;
}

BasinCurve equipotential(const BasinChart& chart, double level, int n_samples) {
  if (n_samples < 8) throw PreconditionError("equipotential needs at least eight samples");
  if (!(level > 0)) throw PreconditionError("equipotential level must be positive");
  if (chart.mode() == ChartMode::boettcher && !(level < 1.0)) throw PreconditionError("level must be below 1");
  // start on an internal ray; shift the angle if that ray is obstructed
  for (const double theta0 : {0.0, 0.123456789, 0.3141592653, 0.7071067812}) {
    Complex start;
    try {
      if (level <= chart.phi_radius()) {
        const auto z = chart.phi_inverse(std::polar(level, kTwoPi * theta0), chart.center());
        if (!z) continue;
        start = *z;
      } else {
        const BasinCurve ray = internal_ray(chart, theta0, 64, level);
        if (ray.status != CurveStatus::complete) continue;
        start = ray.points.back();
      }
      std::vector<double> params;
      for (int i = 1; i < n_samples; ++i) params.push_back(theta0 + static_cast<double>(i) / n_samples);
      auto at = [&](double th, Complex guess) { return chart.point(th - std::floor(th), level, guess); };
      BasinCurve c = march(at, params, start, {start});
      if (c.status == CurveStatus::complete) {
        // closing check: one more step must return to the start
        const auto back = at(theta0 + 1.0, c.points.back());
        if (!back || std::abs(*back - start) > 1e-6 * (1.0 + std::abs(start))) c.status = CurveStatus::truncated;
      }
      return c;
    } catch (const CertificationError&) {
      continue;
    }
  }
  throw CertificationError("every starting ray for the equipotential is obstructed");
}

}  // namespace cosdyn
