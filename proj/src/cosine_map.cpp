#include "cosdyn/cosine_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cosdyn {

namespace {

constexpr double kNearCritical = 1e-8;
constexpr double kSlitTol = 1e-13;

// x mod 2pi in [0, 2pi)
double positive_mod(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

bool on_negative_imaginary_axis(Complex v) {
  return std::abs(v.real()) <= 1e-14 * std::abs(v) && v.imag() < 0;
}

}  // namespace

std::string to_string(const StripIndex& s) {
  return "(" + std::to_string(s.j) + "," + std::to_string(s.k) + ")";
}

NormalForm normalize(Complex a, Complex b) {
  if (a == 0.0 || b == 0.0) throw PreconditionError("cosine map needs a != 0 and b != 0");
  if (!std::isfinite(std::abs(a)) || !std::isfinite(std::abs(b)))
    throw PreconditionError("cosine map coefficients must be finite");
  Complex u = 0.5 * std::log(b / a);
  Complex v = 2.0 * a * std::exp(u);
  // The slit from v runs upward; it must not pass through -v.
  if (on_negative_imaginary_axis(v)) {
    u += (u.imag() > 0 ? -kPi : kPi) * kI;
    v = -v;
  }
  return {u, v};
}

CosineMap CosineMap::from_coefficients(Complex a, Complex b) {
  const NormalForm nf = normalize(a, b);
  return CosineMap(a, b, nf.u, nf.v);
}

CosineMap CosineMap::from_normal_form(Complex u, Complex v) {
  if (v == 0.0) throw PreconditionError("critical value v must be nonzero");
  if (!std::isfinite(std::abs(u)) || !std::isfinite(std::abs(v)))
    throw PreconditionError("normal form parameters must be finite");
  const Complex a = 0.5 * v * std::exp(-u);
  const Complex b = 0.5 * v * std::exp(u);
  if (u.imag() > -kPi && u.imag() <= kPi && !on_negative_imaginary_axis(v)) return CosineMap(a, b, u, v);
  return from_coefficients(a, b);
}

CosineMap::CosineMap(Complex a, Complex b, Complex u, Complex v)
    : a_(a), b_(b), u_(u), v_(v), half_v_(0.5 * v) {
  // Slit direction in q = w / v coordinates: w-direction +i, i.e. pi/2 - arg v.
  const double psi = 0.5 * kPi - std::arg(v_);
  slit_cos_ = std::cos(psi);
  slit_sin_ = std::sin(psi);
  // Label strips so the asymptotic ray formulas with principal logarithms land
  // in the strip of the same index.
  const double far = 50.0;
  right_offset_ = right_strip(far - std::log(a_) - u_);
  left_offset_ = left_strip(-far + std::log(b_) - u_);
}

double CosineMap::boundary_height(double x) const {
  if (x <= 0) return 0.0;
  const double th = std::tanh(x);
  const double ch = std::cosh(x);
  const double delta = std::atan2(slit_sin_, slit_cos_ * th);
  const double rn = std::sqrt(slit_cos_ * slit_cos_ * th * th + slit_sin_ * slit_sin_);
  if (rn == 0.0) return delta;
  const double ratio = std::clamp(slit_sin_ / (ch * rn), -1.0, 1.0);
  return delta - std::asin(ratio);
}

long CosineMap::right_strip(Complex zeta) const {
  return static_cast<long>(std::floor((zeta.imag() - boundary_height(zeta.real())) / kTwoPi));
}

long CosineMap::left_strip(Complex zeta) const {
  return static_cast<long>(std::floor((zeta.imag() + boundary_height(-zeta.real())) / kTwoPi)) + 1;
}

MapValue CosineMap::eval(Complex z) const {
  const Complex zeta = z - u_;
  if (std::abs(zeta.real()) > kOverflowRe || !std::isfinite(zeta.real()) || !std::isfinite(zeta.imag())) {
    // Direction of the dominant exponential term.
    const double sgn = zeta.real() >= 0 ? 1.0 : -1.0;
    const double phase = std::arg(half_v_) + sgn * zeta.imag();
    return {std::polar(1e300, std::isfinite(phase) ? phase : 0.0), true};
  }
  return {(*this)(z), false};
}

Complex CosineMap::principal_zeta(Complex w) const {
  const Complex q = w / v_;
  Complex r;
  if (std::abs(q) > 1e150) {
    r = 2.0 * q;
  } else {
    // take the root of larger modulus; q + sqrt(q^2 - 1) cancels when Re q < 0
    const Complex root = std::sqrt(q * q - 1.0);
    r = std::abs(q + root) >= std::abs(q - root) ? q + root : q - root;
  }
  Complex zeta = std::log(r);
  if (zeta.real() < 0) zeta = -zeta;
  return zeta;
}

Preimage CosineMap::inverse_branch(Complex w, StripIndex s) const {
  const Complex q = w / v_;
  BranchStatus status = BranchStatus::ok;
  if (std::abs(q - 1.0) < kNearCritical || std::abs(q + 1.0) < kNearCritical) status = BranchStatus::near_critical;

  const Complex zeta0 = principal_zeta(w);
  const double x = zeta0.real();
  if (status == BranchStatus::ok && x < kSlitTol) status = BranchStatus::on_slit;

  double y;
  double base;
  if (s.j == 0) {
    const long kk = s.k + right_offset_;
    base = kTwoPi * static_cast<double>(kk) + boundary_height(x);
    y = base + positive_mod(zeta0.imag() - base);
  } else {
    const long kk = s.k + left_offset_;
    base = kTwoPi * static_cast<double>(kk - 1) - boundary_height(x);
    y = base + positive_mod(-zeta0.imag() - base);
  }
  if (status == BranchStatus::ok) {
    const double off = y - base;
    if (off < kSlitTol * (1.0 + std::abs(y)) || kTwoPi - off < kSlitTol * (1.0 + std::abs(y)))
      status = BranchStatus::on_slit;
  }
  const double re = s.j == 0 ? x : -x;
  return {u_ + Complex(re, y), status};
}

NearestPreimage CosineMap::nearest_preimage(Complex w, Complex reference) const {
  const Complex zeta0 = principal_zeta(w);
  const Complex target = reference - u_;
  std::array<Complex, 4> cands;
  int n = 0;
  for (const Complex c : {zeta0, -zeta0}) {
    const double shift = std::round((target.imag() - c.imag()) / kTwoPi);
    const Complex base = c + shift * kTwoPi * kI;
    cands[n++] = base;
    // the neighbouring translate can be the runner-up
    cands[n++] = base + (target.imag() > base.imag() ? kTwoPi : -kTwoPi) * kI;
  }
  double best = std::numeric_limits<double>::infinity();
  double second = best;
  Complex best_z;
  for (const Complex c : cands) {
    const double d = std::abs(c - target);
    if (d < best) {
      second = best;
      best = d;
      best_z = c;
    } else if (d < second) {
      second = d;
    }
  }
  return {u_ + best_z, best, second};
}

std::vector<Complex> CosineMap::preimages_in_band(Complex w, double im_lo, double im_hi) const {
  std::vector<Complex> out;
  const Complex zeta0 = principal_zeta(w);
  for (const Complex c : {zeta0, -zeta0}) {
    if (c == zeta0 && c == -zeta0) continue;  // zeta0 == 0 counted once below
    const Complex base = u_ + c;
    const double n_lo = std::ceil((im_lo - base.imag()) / kTwoPi);
    const double n_hi = std::floor((im_hi - base.imag()) / kTwoPi);
    for (double n = n_lo; n <= n_hi; n += 1.0) out.push_back(base + n * kTwoPi * kI);
  }
  if (zeta0 == 0.0) {
    const double n_lo = std::ceil((im_lo - u_.imag()) / kTwoPi);
    const double n_hi = std::floor((im_hi - u_.imag()) / kTwoPi);
    for (double n = n_lo; n <= n_hi; n += 1.0) out.push_back(u_ + n * kTwoPi * kI);
  }
  return out;
}

StripLocation CosineMap::strip_index(Complex z) const {
  const Complex zeta = z - u_;
  const double tol = 1e-12 * (1.0 + std::abs(zeta));
  StripLocation loc;
  if (std::abs(zeta.real()) < tol) {
    loc.status = StripStatus::boundary;
    loc.index = {zeta.real() >= 0 ? 0 : 1, 0};
    return loc;
  }
  double rel;
  if (zeta.real() > 0) {
    rel = (zeta.imag() - boundary_height(zeta.real())) / kTwoPi;
    loc.index = {0, right_strip(zeta) - right_offset_};
  } else {
    rel = (zeta.imag() + boundary_height(-zeta.real())) / kTwoPi;
    loc.index = {1, left_strip(zeta) - left_offset_};
  }
  const double frac = rel - std::floor(rel);
  if (frac < tol || 1.0 - frac < tol) loc.status = StripStatus::boundary;
  return loc;
}

}  // namespace cosdyn
