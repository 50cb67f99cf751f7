#pragma once

#include <random>

#include "cosdyn/cosine_map.hpp"

namespace fixtures {

using cosdyn::Complex;

// u = v = c*: c* is a superattracting fixed point, the critical point u_1
// lies on a superattracting 2-cycle {u_1, -c*}.
inline const Complex kCStar(-0.9716352659878172, 0.44747240814902356);

inline cosdyn::CosineMap cstar() { return cosdyn::CosineMap::from_normal_form(kCStar, kCStar); }
inline cosdyn::CosineMap cosh_map() { return cosdyn::CosineMap::from_normal_form(0.0, 1.0); }
inline cosdyn::CosineMap half_cosh() { return cosdyn::CosineMap::from_normal_form(0.0, 0.5); }
// v = 1 superattracting, -v = -1 escapes
inline cosdyn::CosineMap unit_escape() { return cosdyn::CosineMap::from_normal_form(1.0, 1.0); }

inline Complex random_point(std::mt19937& rng, double re, double im) {
  std::uniform_real_distribution<double> x(-re, re), y(-im, im);
  return {x(rng), y(rng)};
}

}  // namespace fixtures
