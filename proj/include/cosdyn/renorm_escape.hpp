#pragma once

// Quadratic-like restriction of f when -v escapes along a ray g_s: strips cut
// out by the preimages of g_s through the odd critical points, truncated at
// |Re(z - u)| < M and mapped into the ellipse E_M.

#include <vector>

#include "cosdyn/basins.hpp"
#include "cosdyn/ellipse.hpp"
#include "cosdyn/rays.hpp"

namespace cosdyn {

struct CriticalRayPair {
  long k = 0;
  Complex critical;  // u_{2k+1}
  Ray right;         // address ((0,k'), s)
  Ray left;          // address ((1,k''), s)
  double t_crash = 0.0;
};

// The two preimage rays of g_s crashing on u_{2k+1}, sampled at the same
// potentials from t_hi down to just above the crash.
CriticalRayPair critical_ray_pair(const CosineMap& m, const Address& s, long k, double t_hi = 40.0, int samples = 400);

// left ray (far end first), u_{2k+1}, right ray (far end last)
Polyline joined_curve(const CriticalRayPair& pair);

// Portion of a joined curve with |Re(z - u)| <= x, cut at the first crossing
// on each side. Throws CertificationError when the curve never gets that far.
Polyline clip_joined(const CosineMap& m, const Polyline& joined, Complex center, double x);

struct Strip {
  long k = 0;
  Polyline lower, upper;   // clipped joined curves at u_{2k+1}, u_{2k+3}
  Polyline polygon;        // lower left to right, then upper right to left
  std::vector<long> critical;  // j with u_j inside
  double im_lo = 0.0, im_hi = 0.0;
};

// S_k truncated to |Re(z - u)| < half_width.
Strip build_strip(const CosineMap& m, const Address& s, long k, double half_width, double t_hi = 40.0);

struct Slit {
  int j;  // the curve f^j(g_s)
  Polyline points;  // samples inside the ellipse
};

struct EscapeCandidate {
  long k0 = 0;
  double M = 0.0;
  Complex c;  // u_{2k0+2}
  int period = 1;
  Address s = Address::periodic({{0, 0}});  // address of -v
  Ellipse E{1.0, 1.0};
  Polyline R;  // boundary of R_M
  int N = 0;   // exit time of -v from R_M
  std::vector<Slit> u_slits;  // f^j(g_s), j < N, meeting R_M
  std::vector<Slit> v_slits;  // f^j(g_s), j <= N, meeting E_M
  std::vector<Complex> targets;
  std::vector<int> preimage_counts;  // per target, preimages in U_M
  std::vector<int> winding_counts;   // per target, winding of f(boundary R_M)
  int degree = 0;   // common count, 0 when the targets disagree
  double margin = 0.0;  // distance from the boundary of R_M to the ellipse
  int returns = 0;  // iterations of c staying in U_M, up to 100

  bool in_U(Complex z, double tol = 1e-9) const;
  bool in_V(Complex z, double tol = 1e-9) const;
  bool certified() const { return degree == 2 && margin > 0.0; }
};

struct EscapeOptions {
  int targets = 50;
  int budget = 10000;
  double t_hi = 40.0;
  double max_segment = 2e-3;  // of the R_M boundary for the winding count
  unsigned seed = 1;
};

// Throws PreconditionError when -v does not escape or R_M is not inside E_M
// (with an estimate of the smallest M that works), CertificationError when
// the exit time exceeds the budget.
EscapeCandidate renorm_domain(const CosineMap& m, long k0, double M, const EscapeOptions& opts = {});

// Smallest M on a 0.25 grid, at most m_max, with R_M inside E_M; 0 if none.
double minimal_ellipse_M(const CosineMap& m, long k0, double m_max = 20.0);

struct ScanRow {
  double c;  // u = v = c
  OrbitKind plus, minus;
};

// The real slice u = v = c. On u = 0 the map is even and +-v share a fate,
// so the slice through u = v is used instead.
std::vector<ScanRow> scan_slice(double lo, double hi, int n, int max_iter = 1000);

}  // namespace cosdyn
