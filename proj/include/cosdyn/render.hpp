#pragma once

// Escape-time pictures of J(f), polyline overlays and component statistics
// of the Fatou set.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cosdyn/geometry.hpp"

namespace cosdyn {

struct Viewport {
  Complex center;
  double width = 1.0;
  int px_w = 1, px_h = 1;

  double pixel_size() const { return width / px_w; }
  double height() const { return pixel_size() * px_h; }
  // offset of the pixel centre from `center`; exactly antisymmetric under
  // (i, j) -> (px_w - 1 - i, px_h - 1 - j)
  Complex offset(int i, int j) const {
    return Complex((i + 0.5 - 0.5 * px_w) * pixel_size(), (0.5 * px_h - j - 0.5) * pixel_size());
  }
  Complex pixel(int i, int j) const { return center + offset(i, j); }
  // nearest pixel; false when outside
  bool to_pixel(Complex z, int& i, int& j) const;
  void validate() const;  // PreconditionError on non-positive sizes
};

enum class PixelKind : std::uint8_t { escaping, attracted, unresolved };

struct RenderOptions {
  int max_iter = 500;
  double escape_re = 50.0;
  double capture = 1e-4;  // attracted once this close to a cycle point
};

struct Attractor {
  std::vector<Complex> cycle;
  Complex multiplier;
};

// The attracting cycles reached by the two critical values.
std::vector<Attractor> find_attractors(const CosineMap& m, int max_iter = 1000);

struct ClassMap {
  Viewport vp;
  std::vector<PixelKind> kind;     // row-major
  std::vector<std::uint16_t> iter;  // escape or capture iteration
  std::vector<std::int16_t> cycle;  // attractor id, -1 otherwise
  std::vector<Attractor> attractors;

  std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * vp.px_w + i; }
};

// Orbits run in zeta = z - u with f(z) - u = v cosh(zeta) - u, so a viewport
// centred at u classifies z and 2u - z identically.
ClassMap classify_pixels(const CosineMap& m, const Viewport& vp, const RenderOptions& opts = {});
ClassMap classify_pixels_serial(const CosineMap& m, const Viewport& vp, const RenderOptions& opts = {});

struct Rgb {
  std::uint8_t r, g, b;
  bool operator==(const Rgb&) const = default;
};

struct Image {
  int w = 0, h = 0;
  std::vector<Rgb> px;

  Rgb& at(int i, int j) { return px[static_cast<std::size_t>(j) * w + i]; }
  const Rgb& at(int i, int j) const { return px[static_cast<std::size_t>(j) * w + i]; }
  bool operator==(const Image&) const = default;
};

inline constexpr int kColorMapVersion = 1;

Image colorize(const ClassMap& cm);

Image render_julia(const CosineMap& m, const Viewport& vp, const RenderOptions& opts = {});

void write_ppm(std::ostream& os, const Image& img);
void write_ppm(const std::string& path, const Image& img);
Image read_ppm(std::istream& is);

// Per-tag colors for overlays.
Rgb overlay_color(int tag);

// Draws the polyline; parts outside the viewport are clipped.
void overlay(Image& img, const Viewport& vp, std::span<const Complex> line, Rgb color, bool closed = false);

// Chordal distance on the Riemann sphere,
// 2|z - w| / sqrt((1 + |z|^2)(1 + |w|^2)).
double chordal(Complex z, Complex w);

struct Component {
  int id;
  int cycle;   // attractor id
  int pixels;
  double diameter;  // chordal, over boundary pixel centres
  int preperiod;    // -1 when not resolved
  bool touches_edge;
  bool resolution_limited;  // fewer than 5 pixels
};

struct DiameterReport {
  std::vector<Component> components;
  std::vector<double> eps;
  std::vector<int> count_above;  // per eps
  std::vector<std::pair<int, double>> median_by_preperiod;
};

DiameterReport component_diameters(const CosineMap& m, const ClassMap& cm, std::vector<double> eps = {0.2, 0.1, 0.05, 0.02},
                                   int max_preperiod = 64);

}  // namespace cosdyn
