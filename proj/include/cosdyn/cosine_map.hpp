#pragma once

// The cosine family f(z) = a e^z + b e^{-z} in its normal form
// f(z) = (v/2)(e^{z-u} + e^{-(z-u)}), with critical points u + k*pi*i and
// critical values +v / -v.

#include <array>
#include <compare>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosdyn {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// |Re(z - u)| above which e^{z-u} is treated as overflowed.
inline constexpr double kOverflowRe = 700.0;

// Bad input: zero coefficients, violated preconditions. CLI exit code 2.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical certificate could not be established. CLI exit code 3.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index of the half strip P_{j,k}: j = 0 right of u, j = 1 left of u.
struct StripIndex {
  int j = 0;
  long k = 0;
  friend auto operator<=>(const StripIndex&, const StripIndex&) = default;
};

std::string to_string(const StripIndex& s);

enum class BranchStatus { ok, near_critical, on_slit };

struct Preimage {
  Complex z;
  BranchStatus status = BranchStatus::ok;
};

enum class StripStatus { ok, boundary };

struct StripLocation {
  StripIndex index;
  StripStatus status = StripStatus::ok;
};

// Result of a checked evaluation. When |Re(z - u)| exceeds kOverflowRe the
// value is saturated to a finite number of modulus 1e300 and `escaped` is set.
struct MapValue {
  Complex value;
  bool escaped = false;
};

// Preimage of w closest to a reference point, with the distance to the
// runner-up so continuation code can detect ambiguous steps.
struct NearestPreimage {
  Complex z;
  double distance = 0.0;
  double runner_up = 0.0;
};

struct NormalForm {
  Complex u;
  Complex v;
};

// (a, b) -> (u, v). Throws PreconditionError on a zero coefficient.
NormalForm normalize(Complex a, Complex b);

class CosineMap {
 public:
  static CosineMap from_coefficients(Complex a, Complex b);
  // Keeps (u, v) as given when Im u lies in (-pi, pi] and v is not on the
  // negative imaginary axis (the slit from v runs upward and must miss -v);
  // otherwise relabels to an equivalent normal form.
  static CosineMap from_normal_form(Complex u, Complex v);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex u() const { return u_; }
  Complex v() const { return v_; }

  // u_k = u + k*pi*i; f(u_k) = (-1)^k v.
  Complex critical_point(long k) const { return u_ + static_cast<double>(k) * kPi * kI; }

  // Unchecked evaluation; callers keep |Re(z - u)| below kOverflowRe.
  Complex operator()(Complex z) const {
    const Complex e = std::exp(z - u_);
    return half_v_ * (e + 1.0 / e);
  }
  Complex derivative(Complex z) const {
    const Complex e = std::exp(z - u_);
    return half_v_ * (e - 1.0 / e);
  }
  Complex second_derivative(Complex z) const { return (*this)(z); }

  MapValue eval(Complex z) const;

  // The unique z in P_{j,k} with f(z) = w.
  Preimage inverse_branch(Complex w, StripIndex s) const;

  // zeta with Re zeta >= 0 and cosh(zeta) = w / v; every preimage of w is
  // u +/- zeta + 2*pi*i*n.
  Complex principal_zeta(Complex w) const;

  NearestPreimage nearest_preimage(Complex w, Complex reference) const;

  // All preimages of w with Im z in [im_lo, im_hi].
  std::vector<Complex> preimages_in_band(Complex w, double im_lo, double im_hi) const;

  StripLocation strip_index(Complex z) const;

  // Im(z - u) of the right-hand boundary curve of P_{0,*} leaving u_0,
  // as a function of x = Re(z - u) >= 0.
  double boundary_height(double x) const;

 private:
  CosineMap(Complex a, Complex b, Complex u, Complex v);

  long right_strip(Complex zeta) const;
  long left_strip(Complex zeta) const;

  Complex a_, b_, u_, v_;
  Complex half_v_;
  double slit_cos_ = 0.0;
  double slit_sin_ = 0.0;
  long right_offset_ = 0;
  long left_offset_ = 0;
};

}  // namespace cosdyn
