#pragma once

// Dynamic rays g_s: (t_s, oo) -> I(f) with f(g_s(t)) = g_{shift s}(F(t)),
// F(t) = e^t - 1.

#include <optional>
#include <span>
#include <vector>

#include "cosdyn/address.hpp"

namespace cosdyn {

// Smallest potential at which the asymptotic formula is accepted as a seed.
inline constexpr double kSeedThreshold = 25.0;

inline double potential_forward(double t) { return std::expm1(t); }   // F
inline double potential_backward(double t) { return std::log1p(t); } // F^{-1}

// t - Log a + 2 k0 pi i (j0 = 0) or -t + Log b + 2 k0 pi i (j0 = 1). When the
// second entry lies in the left half plane the image points towards -oo and
// the seed is rotated by pi within the same strip.
Complex asymptotic_seed(const CosineMap& m, const Address& s, double t);

struct RaySample {
  double t;
  Complex z;
  int depth;  // number of pullbacks from the seed level
};

enum class LandingClass { repelling, parabolic };

struct Landing {
  Complex point;
  Complex multiplier;
  LandingClass classification;
};

struct Ray {
  Address address = Address::periodic({{0, 0}});
  std::vector<RaySample> samples;  // decreasing t
  double t_min = 0.0;
  bool crashed = false;  // a pullback met a critical value
  std::optional<Landing> landing;
};

enum class Spacing { linear, geometric };

struct TraceOptions {
  int samples = 200;
  Spacing spacing = Spacing::linear;
  int max_levels = 20000;
};

// Samples of g_s on a grid from t_hi down to t_lo.
Ray trace_ray(const CosineMap& m, const Address& s, double t_lo, double t_hi, const TraceOptions& opts = {});

// Samples of g_s at the given strictly decreasing potentials. Stops early if
// the ray crashes on a critical point.
Ray trace_ray_at(const CosineMap& m, const Address& s, std::span<const double> ts, int max_levels = 20000);

enum class LandingStatus { landed, no_landing_detected };

struct LandingResult {
  LandingStatus status = LandingStatus::no_landing_detected;
  std::optional<Landing> landing;
  Ray ray;  // the approach sequence t_{k+1} = F^{-p}(t_k)
};

// s must be purely periodic. Throws CertificationError when the refined
// landing point is attracting.
LandingResult land_ray(const CosineMap& m, const Address& s, double t_start = 1.0);

struct PreimagePair {
  Address right;  // ((0,k'), s)
  Address left;   // ((1,k''), s)
  Complex right_landing;
  Complex left_landing;
  Complex alpha;  // landing point of g_s
};

// Preimage rays of g_s landing on the boundary of the preimage component
// marked by `marker`. Returns nullopt when g_s has no detectable landing.
std::optional<PreimagePair> preimage_ray_addresses(const CosineMap& m, const Address& s, Complex marker,
                                                   int window = 3);

// Potential of an escaping point on a ray with address `s`, read off its
// forward orbit.
std::optional<double> escaping_potential(const CosineMap& m, Complex z, int max_iter = 200);

// Itinerary of an escaping point: strip indices along the orbit until the
// orbit is deep in the right or left far field, then closed off periodically.
std::optional<Address> escaping_address(const CosineMap& m, Complex z, int max_iter = 200);

}  // namespace cosdyn
