#include "cosdyn/orbit.hpp"

#include <cmath>

namespace cosdyn {

Jet iterate_jet(const CosineMap& m, Complex z, int n) {
  Jet j{z, 1.0, false};
  for (int i = 0; i < n; ++i) {
    if (std::abs((j.value - m.u()).real()) > kOverflowRe) {
      j.escaped = true;
      return j;
    }
    j.derivative *= m.derivative(j.value);
    j.value = m(j.value);
  }
  return j;
}

std::vector<Complex> orbit(const CosineMap& m, Complex z, int n) {
  std::vector<Complex> out{z};
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    const MapValue fz = m.eval(out.back());
    if (fz.escaped) break;
    out.push_back(fz.value);
  }
  return out;
}

PeriodicPoint newton_periodic(const CosineMap& m, Complex seed, int p, int max_iter, double tol) {
  if (p < 1) throw PreconditionError("period must be at least 1");
  PeriodicPoint out{seed, 0.0, 0.0, false};
  Complex z = seed;
  Jet jet = iterate_jet(m, z, p);
  if (jet.escaped) return out;
  double res = std::abs(jet.value - z);
  for (int it = 0; it < max_iter; ++it) {
    const double scale = 1.0 + std::abs(z);
    if (res < tol * scale) break;
    const Complex denom = jet.derivative - 1.0;
    if (denom == 0.0) break;
    Complex step = (jet.value - z) / denom;
    bool improved = false;
    for (int half = 0; half < 40 && !improved; ++half, step *= 0.5) {
      const Complex trial = z - step;
      const Jet tj = iterate_jet(m, trial, p);
      if (tj.escaped) continue;
      const double tr = std::abs(tj.value - trial);
      if (tr < res) {
        z = trial;
        jet = tj;
        res = tr;
        improved = true;
      }
    }
    if (!improved) break;
  }
  out.z = z;
  out.multiplier = jet.derivative;
  out.residual = res;
  out.converged = res < std::max(tol, 1e-10) * (1.0 + std::abs(z)) && !jet.escaped;
  return out;
}

}  // namespace cosdyn
