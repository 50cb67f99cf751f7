#pragma once

// Critical orbits, attracting cycles and the chart structure of their basins.

#include <optional>
#include <vector>

#include "cosdyn/geometry.hpp"

namespace cosdyn {

inline constexpr double kEscapeRe = 50.0;

enum class OrbitKind { escaping, attracted, bounded_unresolved };
enum class CriticalValue { plus, minus };  // +v or -v

struct EscapeCertificate {
  int index;    // first n of three consecutive growth steps
  double re;    // |Re(f^n - u)| there
  bool saturated = false;  // the orbit overflowed before the count finished
};

struct OrbitClass {
  OrbitKind kind = OrbitKind::bounded_unresolved;
  std::vector<Complex> cycle;
  std::optional<Complex> multiplier;
  std::optional<EscapeCertificate> escape;
  std::vector<Complex> orbit;  // the full orbit when unresolved
  bool parabolic = false;       // a cycle with multiplier near a root of unity was seen
};

OrbitClass classify_critical_orbit(const CosineMap& m, CriticalValue which, int max_iter = 1000);

enum class CycleStatus { found, not_found };

struct Cycle {
  CycleStatus status = CycleStatus::not_found;
  std::vector<Complex> points;  // z, f(z), ..., f^{p-1}(z)
  Complex multiplier;
  double residual = 0.0;
};

Cycle find_cycle(const CosineMap& m, Complex seed, int p);

// Central difference of f^p at z.
Complex multiplier_fd(const CosineMap& m, Complex z, int p, double h = 1e-5);

enum class ChartMode { koenigs, boettcher };

// Linearizing (Kœnigs) or Böttcher coordinate near an attracting cycle point,
// normalized so that phi(z) ~ z - z_a (Kœnigs) or ~ c (z - z_a) with
// F(z) - z_a ~ c (z - z_a)^2 (Böttcher). F = f^period.
class BasinChart {
 public:
  static BasinChart build(const CosineMap& m, Complex cycle_point, int period);

  const CosineMap& map() const { return m_; }
  Complex center() const { return za_; }
  int period() const { return p_; }
  Complex multiplier() const { return lambda_; }
  ChartMode mode() const { return mode_; }
  double radius() const { return r_; }
  // |phi| below which phi^{-1} lands inside the chart disk
  double phi_radius() const { return rho0_; }

  Complex phi(Complex z) const;
  std::optional<Complex> phi_inverse(Complex w, Complex guess) const;

  // |phi| of an arbitrary basin point, read off its orbit; NaN outside the basin
  double level(Complex z) const;

  // max over the chart circle of the conjugacy residual
  double residual(int samples = 64) const;

  // Point of internal coordinate rho e^{2 pi i theta}, continued from
  // `guess` through pullbacks when rho is outside the chart.
  std::optional<Complex> point(double theta, double rho, Complex guess) const;

 private:
  BasinChart(const CosineMap& m) : m_(m) {}
  Complex F(Complex z) const;
  double conjugacy_residual(Complex z) const;

  CosineMap m_;
  Complex za_;
  int p_ = 1;
  Complex lambda_;
  ChartMode mode_ = ChartMode::koenigs;
  Complex c2_;  // F''(z_a) / 2
  double r_ = 0.0;
  double rho0_ = 0.0;
  std::vector<Complex> series_;  // Taylor coefficients of F(z_a + h) - z_a
  double series_h_ = 0.0;        // |h| below which the series is used
};

enum class CurveStatus { complete, truncated };

struct BasinCurve {
  Polyline points;
  CurveStatus status = CurveStatus::complete;
};

// Samples from the cycle point out to internal radius rho_max.
// Throws CertificationError when the ray runs into a critical point.
BasinCurve internal_ray(const BasinChart& chart, double theta, int n_samples, double rho_max = 0.99);

// Closed curve |phi| = level, continued around the basin.
BasinCurve equipotential(const BasinChart& chart, double level, int n_samples);

}  // namespace cosdyn
