#include "cosdyn/render.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <map>
#include <queue>

#include "cosdyn/basins.hpp"
#include "cosdyn/orbit.hpp"

namespace cosdyn {

bool Viewport::to_pixel(Complex z, int& i, int& j) const {
  const Complex d = z - center;
  const double fi = d.real() / pixel_size() + 0.5 * px_w - 0.5;
  const double fj = 0.5 * px_h - 0.5 - d.imag() / pixel_size();
  i = static_cast<int>(std::lround(fi));
  j = static_cast<int>(std::lround(fj));
  return i >= 0 && j >= 0 && i < px_w && j < px_h;
}

void Viewport::validate() const {
  if (!(width > 0)) throw PreconditionError("viewport width must be positive");
  if (px_w <= 0 || px_h <= 0) throw PreconditionError("pixel dimensions must be positive");
}

std::vector<Attractor> find_attractors(const CosineMap& m, int max_iter) {
  std::vector<Attractor> out;
  for (CriticalValue cv : {CriticalValue::plus, CriticalValue::minus}) {
    const OrbitClass oc = classify_critical_orbit(m, cv, max_iter);
    if (oc.kind != OrbitKind::attracted) continue;
    bool seen = false;
    for (const auto& a : out)
      for (const Complex& z : a.cycle) seen = seen || std::abs(z - oc.cycle[0]) < 1e-8;
    if (!seen) out.push_back({oc.cycle, *oc.multiplier});
  }
  return out;
}

namespace {

struct Kernel {
  Complex u, v;
  double escape_re;
  int max_iter;
  std::vector<Complex> targets;  // cycle points in zeta
  std::vector<double> radii;
  std::vector<int> owner;

  void classify(Complex zeta, PixelKind& kind, std::uint16_t& it, std::int16_t& cyc) const {
    for (int n = 0; n <= max_iter; ++n) {
      if (std::abs(zeta.real()) > escape_re) {
        kind = PixelKind::escaping;
        it = static_cast<std::uint16_t>(std::min(n, 65535));
        cyc = -1;
        return;
      }
      // no capture test on the pixel itself, so z and 2u - z share every count
      for (std::size_t c = 0; n > 0 && c < targets.size(); ++c) {
        if (std::abs(zeta - targets[c]) < radii[c]) {
          kind = PixelKind::attracted;
          it = static_cast<std::uint16_t>(std::min(n, 65535));
          cyc = static_cast<std::int16_t>(owner[c]);
          return;
        }
      }
      zeta = v * std::cosh(zeta) - u;
    }
    kind = PixelKind::unresolved;
    it = static_cast<std::uint16_t>(std::min(max_iter, 65535));
    cyc = -1;
  }
};

Kernel make_kernel(const CosineMap& m, const std::vector<Attractor>& atts, const RenderOptions& opts) {
  if (opts.escape_re < kEscapeRe) throw PreconditionError("escape_re must be at least 50");
  if (opts.max_iter < 1) throw PreconditionError("max_iter must be at least 1");
  Kernel k{m.u(), m.v(), opts.escape_re, opts.max_iter, {}, {}, {}};
  for (std::size_t a = 0; a < atts.size(); ++a) {
    const int p = static_cast<int>(atts[a].cycle.size());
    for (const Complex& z : atts[a].cycle) {
      double r = opts.capture;
      try {
        r = std::max(r, 0.5 * BasinChart::build(m, z, p).radius());
      } catch (const CertificationError&) {
      }
      k.targets.push_back(z - m.u());
      k.radii.push_back(r);
      k.owner.push_back(static_cast<int>(a));
    }
  }
  return k;
}

ClassMap blank(const CosineMap& m, const Viewport& vp) {
  vp.validate();
  ClassMap cm;
  cm.vp = vp;
  const std::size_t n = static_cast<std::size_t>(vp.px_w) * vp.px_h;
  cm.kind.assign(n, PixelKind::unresolved);
  cm.iter.assign(n, 0);
  cm.cycle.assign(n, -1);
  cm.attractors = find_attractors(m);
  return cm;
}

}  // namespace

ClassMap classify_pixels(const CosineMap& m, const Viewport& vp, const RenderOptions& opts) {
  ClassMap cm = blank(m, vp);
  const Kernel k = make_kernel(m, cm.attractors, opts);
  const Complex base = vp.center - m.u();
#pragma omp parallel for schedule(dynamic)
  for (int j = 0; j < vp.px_h; ++j)
    for (int i = 0; i < vp.px_w; ++i) {
      const std::size_t idx = cm.index(i, j);
      k.classify(base + vp.offset(i, j), cm.kind[idx], cm.iter[idx], cm.cycle[idx]);
    }
  return cm;
}

ClassMap classify_pixels_serial(const CosineMap& m, const Viewport& vp, const RenderOptions& opts) {
  ClassMap cm = blank(m, vp);
  const Kernel k = make_kernel(m, cm.attractors, opts);
  const Complex base = vp.center - m.u();
  for (int j = 0; j < vp.px_h; ++j)
    for (int i = 0; i < vp.px_w; ++i) {
      const std::size_t idx = cm.index(i, j);
      k.classify(base + vp.offset(i, j), cm.kind[idx], cm.iter[idx], cm.cycle[idx]);
    }
  return cm;
}

namespace {

// color map version 1
constexpr Rgb kBasin[] = {{40, 90, 200}, {220, 140, 30}, {60, 170, 80}, {170, 60, 170}, {200, 60, 60}, {60, 170, 170}};
constexpr Rgb kUnresolved{12, 12, 16};

Rgb escape_color(int n) {
  // bright near J, fading with the escape time
  const int s = std::max(0, 255 - 18 * n);
  return {static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(std::min(255, s + 20))};
}

}  // namespace

Image colorize(const ClassMap& cm) {
  Image img{cm.vp.px_w, cm.vp.px_h, {}};
  img.px.resize(cm.kind.size());
  for (std::size_t idx = 0; idx < cm.kind.size(); ++idx) {
    switch (cm.kind[idx]) {
      case PixelKind::escaping:
        img.px[idx] = escape_color(cm.iter[idx]);
        break;
      case PixelKind::attracted: {
        const Rgb c = kBasin[static_cast<std::size_t>(cm.cycle[idx]) % std::size(kBasin)];
        // darker bands by capture time
        const int shade = 100 - 6 * (cm.iter[idx] % 8);
        img.px[idx] = {static_cast<std::uint8_t>(c.r * shade / 100), static_cast<std::uint8_t>(c.g * shade / 100),
                       static_cast<std::uint8_t>(c.b * shade / 100)};
        break;
      }
      case PixelKind::unresolved:
        img.px[idx] = kUnresolved;
        break;
    }
  }
  return img;
}

Image render_julia(const CosineMap& m, const Viewport& vp, const RenderOptions& opts) {
  return colorize(classify_pixels(m, vp, opts));
}

void write_ppm(std::ostream& os, const Image& img) {
  os << "P6\n" << img.w << ' ' << img.h << "\n255\n";
  os.write(reinterpret_cast<const char*>(img.px.data()), static_cast<std::streamsize>(img.px.size() * 3));
}

void write_ppm(const std::string& path, const Image& img) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw PreconditionError("cannot open " + path);
  write_ppm(os, img);
}

Image read_ppm(std::istream& is) {
  std::string magic;
  int w = 0, h = 0, maxv = 0;
  is >> magic >> w >> h >> maxv;
  if (magic != "P6" || w <= 0 || h <= 0 || maxv != 255) throw PreconditionError("not an 8-bit P6 image");
  is.get();
  Image img{w, h, std::vector<Rgb>(static_cast<std::size_t>(w) * h)};
  is.read(reinterpret_cast<char*>(img.px.data()), static_cast<std::streamsize>(img.px.size() * 3));
  if (!is) throw PreconditionError("truncated P6 image");
  return img;
}

Rgb overlay_color(int tag) {
  static constexpr Rgb kTags[] = {{255, 230, 0}, {255, 40, 40}, {0, 230, 255}, {255, 255, 255}, {0, 255, 90}};
  return kTags[static_cast<std::size_t>(std::max(tag, 0)) % std::size(kTags)];
}

void overlay(Image& img, const Viewport& vp, std::span<const Complex> line, Rgb color, bool closed) {
  if (line.empty()) return;
  const double step = 0.5 * vp.pixel_size();
  const std::size_t n = line.size();
  const std::size_t segs = closed ? n : n - 1;
  const auto plot = [&](Complex z) {
    int i, j;
    if (vp.to_pixel(z, i, j) && i < img.w && j < img.h) img.at(i, j) = color;
  };
  if (n == 1) plot(line[0]);
  for (std::size_t s = 0; s < segs; ++s) {
    const Complex a = line[s], b = line[(s + 1) % n];
    const int k = std::min(1 << 20, static_cast<int>(std::ceil(std::abs(b - a) / step)) + 1);
    for (int t = 0; t <= k; ++t) plot(a + (b - a) * (double(t) / k));
  }
}

double chordal(Complex z, Complex w) {
  return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

DiameterReport component_diameters(const CosineMap& m, const ClassMap& cm, std::vector<double> eps, int max_preperiod) {
  const Viewport& vp = cm.vp;
  const int W = vp.px_w, H = vp.px_h;
  std::vector<int> label(cm.kind.size(), -1);
  DiameterReport rep;
  std::vector<std::vector<int>> members;

  for (int j0 = 0; j0 < H; ++j0)
    for (int i0 = 0; i0 < W; ++i0) {
      const std::size_t s = cm.index(i0, j0);
      if (cm.kind[s] != PixelKind::attracted || label[s] != -1) continue;
      const int id = static_cast<int>(members.size());
      members.emplace_back();
      std::queue<std::pair<int, int>> q;
      q.push({i0, j0});
      label[s] = id;
      while (!q.empty()) {
        const auto [i, j] = q.front();
        q.pop();
        members.back().push_back(static_cast<int>(cm.index(i, j)));
        const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
        for (int d = 0; d < 4; ++d) {
          const int ni = i + di[d], nj = j + dj[d];
          if (ni < 0 || nj < 0 || ni >= W || nj >= H) continue;
          const std::size_t t = cm.index(ni, nj);
          if (label[t] == -1 && cm.kind[t] == PixelKind::attracted && cm.cycle[t] == cm.cycle[s]) {
            label[t] = id;
            q.push({ni, nj});
          }
        }
      }
    }

  // components holding a cycle point are the immediate basin
  std::vector<char> immediate(members.size(), 0);
  for (const auto& a : cm.attractors)
    for (const Complex& z : a.cycle) {
      int i, j;
      if (vp.to_pixel(z, i, j) && label[cm.index(i, j)] >= 0) immediate[static_cast<std::size_t>(label[cm.index(i, j)])] = 1;
    }

  const auto pixel_of = [&](int idx) { return vp.pixel(idx % W, idx / W); };
  for (std::size_t c = 0; c < members.size(); ++c) {
    const auto& mem = members[c];
    Component comp{static_cast<int>(c), cm.cycle[static_cast<std::size_t>(mem[0])], static_cast<int>(mem.size()), 0.0, -1,
                   false, mem.size() < 5};
    std::vector<Complex> border;
    for (int idx : mem) {
      const int i = idx % W, j = idx / W;
      bool edge = false;
      if (i == 0 || j == 0 || i == W - 1 || j == H - 1) {
        comp.touches_edge = true;
        edge = true;
      } else {
        edge = label[static_cast<std::size_t>(idx - 1)] != static_cast<int>(c) ||
               label[static_cast<std::size_t>(idx + 1)] != static_cast<int>(c) ||
               label[static_cast<std::size_t>(idx - W)] != static_cast<int>(c) ||
               label[static_cast<std::size_t>(idx + W)] != static_cast<int>(c);
      }
      if (edge) border.push_back(pixel_of(idx));
    }
    const std::size_t stride = std::max<std::size_t>(1, border.size() / 1500);
    for (std::size_t a = 0; a < border.size(); a += stride)
      for (std::size_t b = a + stride; b < border.size(); b += stride)
        comp.diameter = std::max(comp.diameter, chordal(border[a], border[b]));

    // preperiod: first iterate of a member pixel that lands in an immediate component
    if (immediate[c]) {
      comp.preperiod = 0;
    } else {
      const Complex rep = pixel_of(mem[mem.size() / 2]);
      Complex z = rep;
      for (int n = 1; n <= max_preperiod; ++n) {
        const MapValue fz = m.eval(z);
        if (fz.escaped) break;
        z = fz.value;
        int i, j;
        if (vp.to_pixel(z, i, j)) {
          const int l = label[cm.index(i, j)];
          if (l >= 0 && immediate[static_cast<std::size_t>(l)]) {
            comp.preperiod = n;
            break;
          }
        }
      }
    }
    rep.components.push_back(comp);
  }

  rep.eps = eps;
  for (double e : eps) {
    int count = 0;
    for (const auto& c : rep.components) count += c.diameter > e ? 1 : 0;
    rep.count_above.push_back(count);
  }
  std::map<int, std::vector<double>> by;
  for (const auto& c : rep.components)
    if (c.preperiod >= 0 && !c.resolution_limited) by[c.preperiod].push_back(c.diameter);
  for (auto& [p, ds] : by) {
    std::sort(ds.begin(), ds.end());
    const std::size_t n = ds.size();
    rep.median_by_preperiod.push_back({p, n % 2 ? ds[n / 2] : 0.5 * (ds[n / 2 - 1] + ds[n / 2])});
  }
  return rep;
}

}  // namespace cosdyn
