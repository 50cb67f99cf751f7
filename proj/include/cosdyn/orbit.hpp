#pragma once

// Iteration helpers shared by the ray and basin code.

#include <vector>

#include "cosdyn/cosine_map.hpp"

namespace cosdyn {

struct Jet {
  Complex value;
  Complex derivative;
  bool escaped = false;
};

// f^n(z) and (f^n)'(z); stops early and sets `escaped` on overflow.
Jet iterate_jet(const CosineMap& m, Complex z, int n);

// z, f(z), ..., f^n(z); shorter when the orbit overflows.
std::vector<Complex> orbit(const CosineMap& m, Complex z, int n);

struct PeriodicPoint {
  Complex z;
  Complex multiplier;  // (f^p)'(z)
  double residual = 0.0;
  bool converged = false;
};

// Damped Newton on f^p(z) - z = 0.
PeriodicPoint newton_periodic(const CosineMap& m, Complex seed, int p, int max_iter = 50, double tol = 1e-12);

}  // namespace cosdyn
