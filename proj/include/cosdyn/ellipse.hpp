#pragma once

// f maps the vertical line Re(z - u) = +-M onto the ellipse with foci +-v,
// semi-axes |v| cosh M and |v| sinh M.

#include <cmath>

#include "cosdyn/geometry.hpp"

namespace cosdyn {

struct Ellipse {
  Complex v;
  double M;

  double major_axis() const { return std::abs(v) * (std::exp(M) + std::exp(-M)); }
  double minor_axis() const { return std::abs(v) * (std::exp(M) - std::exp(-M)); }
  bool contains(Complex z) const { return std::abs(z - v) + std::abs(z + v) < major_axis(); }
  // positive inside; the focal-sum deficit, a proxy for distance to the boundary
  double depth(Complex z) const { return 0.5 * (major_axis() - std::abs(z - v) - std::abs(z + v)); }
  Complex at(double y) const { return v * Complex(std::cosh(M) * std::cos(y), std::sinh(M) * std::sin(y)); }

  Polyline boundary(int n) const {
    Polyline out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(at(2.0 * 3.14159265358979323846 * i / n));
    return out;
  }
};

// {z : |Re(z - u)| <= M, y_lo <= Im(z - u) <= y_hi}
struct TruncationBox {
  Complex u;
  double M;
  double y_lo, y_hi;

  bool contains(Complex z) const {
    const Complex d = z - u;
    return std::abs(d.real()) <= M && d.imag() >= y_lo && d.imag() <= y_hi;
  }
  Polyline boundary(int per_side) const {
    Polyline out;
    const Complex c[4] = {u + Complex(-M, y_lo), u + Complex(M, y_lo), u + Complex(M, y_hi), u + Complex(-M, y_hi)};
    for (int s = 0; s < 4; ++s)
      for (int i = 0; i < per_side; ++i) out.push_back(c[s] + (c[(s + 1) % 4] - c[s]) * (double(i) / per_side));
    return out;
  }
};

}  // namespace cosdyn
