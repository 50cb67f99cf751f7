#include "cosdyn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace cosdyn {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

struct Segment {
  Complex a, b;
  int curve;
};

// Pairs of segment indices whose bounding boxes share a grid cell.
std::vector<std::pair<std::size_t, std::size_t>> candidate_pairs(const std::vector<Segment>& segs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (segs.size() < 2) return out;
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0, total = 0;
  for (const auto& s : segs) {
    x0 = std::min({x0, s.a.real(), s.b.real()});
    x1 = std::max({x1, s.a.real(), s.b.real()});
    y0 = std::min({y0, s.a.imag(), s.b.imag()});
    y1 = std::max({y1, s.a.imag(), s.b.imag()});
    total += std::abs(s.b - s.a);
  }
  const double extent = std::max(x1 - x0, y1 - y0);
  double cell = std::max(2.0 * total / static_cast<double>(segs.size()), extent / 512.0);
  if (!(cell > 0)) cell = 1.0;
  const long nx = static_cast<long>((x1 - x0) / cell) + 1;
  std::unordered_map<long, std::vector<std::size_t>> grid;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    const long cx0 = static_cast<long>((std::min(s.a.real(), s.b.real()) - x0) / cell);
    const long cx1 = static_cast<long>((std::max(s.a.real(), s.b.real()) - x0) / cell);
    const long cy0 = static_cast<long>((std::min(s.a.imag(), s.b.imag()) - y0) / cell);
    const long cy1 = static_cast<long>((std::max(s.a.imag(), s.b.imag()) - y0) / cell);
    for (long cx = cx0; cx <= cx1; ++cx)
      for (long cy = cy0; cy <= cy1; ++cy) grid[cy * nx + cx].push_back(i);
  }
  for (auto& [key, ids] : grid)
    for (std::size_t p = 0; p < ids.size(); ++p)
      for (std::size_t q = p + 1; q < ids.size(); ++q) out.emplace_back(std::min(ids[p], ids[q]), std::max(ids[p], ids[q]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Segment> segments_of(std::span<const Complex> line, bool closed, int curve) {
  std::vector<Segment> out;
  const std::size_t n = line.size();
  if (n < 2) return out;
  const std::size_t m = closed ? n : n - 1;
  for (std::size_t i = 0; i < m; ++i) out.push_back({line[i], line[(i + 1) % n], curve});
  return out;
}

}  // namespace

Box bounding_box(std::span<const Complex> pts) {
  Box b{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
        -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Complex z : pts) {
    b.x0 = std::min(b.x0, z.real());
    b.x1 = std::max(b.x1, z.real());
    b.y0 = std::min(b.y0, z.imag());
    b.y1 = std::max(b.y1, z.imag());
  }
  return b;
}

int winding_number(std::span<const Complex> polygon, Complex z) {
  // Sunday's crossing rule
  int wn = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = polygon[i];
    const Complex b = polygon[(i + 1) % n];
    if (a.imag() <= z.imag()) {
      if (b.imag() > z.imag() && cross(b - a, z - a) > 0) ++wn;
    } else {
      if (b.imag() <= z.imag() && cross(b - a, z - a) < 0) --wn;
    }
  }
  return wn;
}

double signed_area(std::span<const Complex> polygon) {
  double s = 0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) s += cross(polygon[i], polygon[(i + 1) % n]);
  return 0.5 * s;
}

double distance_to_segment(Complex z, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0) return std::abs(z - a);
  const double t = std::clamp(((z - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + t * d));
}

double distance_to_polyline(Complex z, std::span<const Complex> line, bool closed) {
  const std::size_t n = line.size();
  if (n == 0) return std::numeric_limits<double>::infinity();
  if (n == 1) return std::abs(z - line[0]);
  double best = std::numeric_limits<double>::infinity();
  const std::size_t m = closed ? n : n - 1;
  for (std::size_t i = 0; i < m; ++i) best = std::min(best, distance_to_segment(z, line[i], line[(i + 1) % n]));
  return best;
}

double directed_hausdorff(std::span<const Complex> a, std::span<const Complex> b, bool b_closed) {
  double worst = 0;
  for (const Complex z : a) worst = std::max(worst, distance_to_polyline(z, b, b_closed));
  return worst;
}

double hausdorff(std::span<const Complex> a, std::span<const Complex> b, bool closed) {
  return std::max(directed_hausdorff(a, b, closed), directed_hausdorff(b, a, closed));
}

double polyline_distance(std::span<const Complex> a, bool a_closed, std::span<const Complex> b, bool b_closed) {
  auto sa = segments_of(a, a_closed, 0);
  auto sb = segments_of(b, b_closed, 1);
  double best = std::numeric_limits<double>::infinity();
  if (sa.empty() || sb.empty()) {
    for (const Complex z : a) best = std::min(best, distance_to_polyline(z, b, b_closed));
    for (const Complex z : b) best = std::min(best, distance_to_polyline(z, a, a_closed));
    return best;
  }
  for (const auto& s : sa)
    for (const auto& t : sb) {
      if (intersect_segments(s.a, s.b, t.a, t.b)) return 0.0;
      best = std::min({best, distance_to_segment(s.a, t.a, t.b), distance_to_segment(s.b, t.a, t.b),
                       distance_to_segment(t.a, s.a, s.b), distance_to_segment(t.b, s.a, s.b)});
    }
  return best;
}

double diameter(std::span<const Complex> pts) {
  double best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, std::abs(pts[i] - pts[j]));
  return best;
}

std::optional<SegmentHit> intersect_segments(Complex a, Complex b, Complex c, Complex d) {
  const Complex r = b - a;
  const Complex s = d - c;
  const double denom = cross(r, s);
  if (denom == 0) return std::nullopt;
  const double t = cross(c - a, s) / denom;
  const double u = cross(c - a, r) / denom;
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return SegmentHit{t, u, a + t * r};
}

std::optional<Complex> interior_point(std::span<const Complex> polygon) {
  if (polygon.size() < 3) return std::nullopt;
  const Box box = bounding_box(polygon);
  if (!(box.height() > 0)) return std::nullopt;
  std::optional<Complex> best;
  double best_width = 0.0;
  std::vector<double> xs;
  for (const double frac : {0.5, 0.31, 0.69, 0.17, 0.83, 0.43, 0.57}) {
    const double y = box.y0 + frac * box.height();
    xs.clear();
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Complex a = polygon[i];
      const Complex b = polygon[(i + 1) % n];
      if ((a.imag() <= y) != (b.imag() <= y)) {
        const double t = (y - a.imag()) / (b.imag() - a.imag());
        xs.push_back(a.real() + t * (b.real() - a.real()));
      }
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
      const double w = xs[i + 1] - xs[i];
      if (w > best_width) {
        const Complex mid(0.5 * (xs[i] + xs[i + 1]), y);
        if (winding_number(polygon, mid) == 0) continue;
        best_width = w;
        best = mid;
      }
    }
  }
  return best;
}

bool is_simple(std::span<const Complex> polygon) {
  auto segs = segments_of(polygon, true, 0);
  const std::size_t n = segs.size();
  for (const auto& [i, j] : candidate_pairs(segs)) {
    if (j == i + 1 || (i == 0 && j == n - 1)) continue;
    if (intersect_segments(segs[i].a, segs[i].b, segs[j].a, segs[j].b)) return false;
  }
  return true;
}

Polyline resample(std::span<const Complex> line, double max_len, bool closed) {
  Polyline out;
  const std::size_t n = line.size();
  if (n == 0) return out;
  const std::size_t m = closed ? n : n - 1;
  for (std::size_t i = 0; i < m; ++i) {
    const Complex a = line[i];
    const Complex b = line[(i + 1) % n];
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / max_len)));
    for (int p = 0; p < pieces; ++p) out.push_back(a + (b - a) * (static_cast<double>(p) / pieces));
  }
  if (!closed) out.push_back(line[n - 1]);
  return out;
}

bool Region::contains(Complex z) const {
  if (winding_number(outer, z) == 0) return false;
  for (const auto& h : holes)
    if (winding_number(h, z) != 0) return false;
  return true;
}

double Region::boundary_distance(Complex z) const {
  double d = distance_to_polyline(z, outer, true);
  for (const auto& h : holes) d = std::min(d, distance_to_polyline(z, h, true));
  return d;
}

double Region::area() const {
  double a = std::abs(signed_area(outer));
  for (const auto& h : holes) a -= std::abs(signed_area(h));
  return a;
}

Arrangement::Arrangement(std::vector<Curve> curves, double snap_tol) {
  std::vector<Segment> segs;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    auto s = segments_of(curves[c].points, curves[c].closed, static_cast<int>(c));
    for (auto& seg : s)
      if (std::abs(seg.b - seg.a) > 0) segs.push_back(seg);
  }

  // split parameters per segment
  std::vector<std::vector<double>> splits(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) splits[i] = {0.0, 1.0};
  for (const auto& [i, j] : candidate_pairs(segs)) {
    const auto& s = segs[i];
    const auto& t = segs[j];
    if (auto hit = intersect_segments(s.a, s.b, t.a, t.b)) {
      splits[i].push_back(hit->s);
      splits[j].push_back(hit->t);
    }
    // endpoints resting on the other segment (T junctions, near misses)
    auto touch = [&](std::size_t into, Complex p) {
      const auto& g = segs[into];
      if (distance_to_segment(p, g.a, g.b) <= snap_tol) {
        const Complex d = g.b - g.a;
        splits[into].push_back(std::clamp(((p - g.a) * std::conj(d)).real() / std::norm(d), 0.0, 1.0));
      }
    };
    touch(i, t.a);
    touch(i, t.b);
    touch(j, s.a);
    touch(j, s.b);
  }

  // snapped vertices
  std::vector<Complex> verts;
  std::unordered_map<long long, std::vector<int>> vgrid;
  const double cell = std::max(snap_tol, 1e-300) * 4.0;
  auto key = [&](long long gx, long long gy) { return gx * 73856093LL ^ gy * 19349663LL; };
  auto vertex_id = [&](Complex p) -> int {
    const long long gx = static_cast<long long>(std::floor(p.real() / cell));
    const long long gy = static_cast<long long>(std::floor(p.imag() / cell));
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = vgrid.find(key(gx + dx, gy + dy));
        if (it == vgrid.end()) continue;
        for (int id : it->second)
          if (std::abs(verts[id] - p) <= snap_tol) return id;
      }
    verts.push_back(p);
    vgrid[key(gx, gy)].push_back(static_cast<int>(verts.size() - 1));
    return static_cast<int>(verts.size() - 1);
  };

  struct Edge {
    int a, b, tag;
  };
  std::vector<Edge> edges;
  std::unordered_set<long long> seen;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto& sp = splits[i];
    std::sort(sp.begin(), sp.end());
    int prev = -1;
    for (double t : sp) {
      const int id = vertex_id(segs[i].a + t * (segs[i].b - segs[i].a));
      if (prev >= 0 && id != prev) {
        const long long k = static_cast<long long>(std::min(prev, id)) * 4000000000LL + std::max(prev, id);
        if (seen.insert(k).second) edges.push_back({prev, id, curves[segs[i].curve].tag});
      }
      prev = id;
    }
  }

  // half edges: 2e = a->b, 2e+1 = b->a
  const std::size_t nh = edges.size() * 2;
  std::vector<int> origin(nh), dest(nh), tag(nh);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    origin[2 * e] = edges[e].a;
    dest[2 * e] = edges[e].b;
    origin[2 * e + 1] = edges[e].b;
    dest[2 * e + 1] = edges[e].a;
    tag[2 * e] = tag[2 * e + 1] = edges[e].tag;
  }
  std::vector<std::vector<int>> out(verts.size());
  for (std::size_t h = 0; h < nh; ++h) out[origin[h]].push_back(static_cast<int>(h));
  std::vector<int> pos(nh);
  for (auto& list : out) {
    std::sort(list.begin(), list.end(), [&](int p, int q) {
      const Complex dp = verts[dest[p]] - verts[origin[p]];
      const Complex dq = verts[dest[q]] - verts[origin[q]];
      return std::arg(dp) < std::arg(dq);
    });
    for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = static_cast<int>(i);
  }
  auto next = [&](int h) {
    const int twin = h ^ 1;
    const auto& list = out[dest[h]];
    const int deg = static_cast<int>(list.size());
    return list[(pos[twin] - 1 + deg) % deg];
  };

  // connected components of the vertex graph
  std::vector<int> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) parent[find(e.a)] = find(e.b);

  struct Cycle {
    Polyline pts;
    std::vector<int> tags;
    double area;
    int component;
  };
  std::vector<Cycle> ccw, cw;
  std::vector<char> used(nh, 0);
  for (std::size_t h0 = 0; h0 < nh; ++h0) {
    if (used[h0]) continue;
    Cycle c;
    int h = static_cast<int>(h0);
    while (!used[h]) {
      used[h] = 1;
      c.pts.push_back(verts[origin[h]]);
      c.tags.push_back(tag[h]);
      h = next(h);
    }
    c.area = signed_area(c.pts);
    c.component = find(origin[h0]);
    (c.area > 0 ? ccw : cw).push_back(std::move(c));
  }

  std::sort(ccw.begin(), ccw.end(), [](const Cycle& p, const Cycle& q) { return p.area < q.area; });
  for (const auto& c : ccw) {
    faces_.push_back({c.pts, {}});
    face_tags_.push_back(c.tags);
  }
  // each clockwise cycle bounds a component from outside; it is a hole of the
  // smallest face of another component around it
  for (const auto& c : cw) {
    if (c.pts.size() < 2) continue;
    const Complex a = c.pts[0], b = c.pts[1];
    const Complex probe = 0.5 * (a + b) + (b - a) * kI * (std::max(snap_tol, 1e-9 * std::abs(b - a)) * 4.0 / std::abs(b - a));
    for (std::size_t f = 0; f < ccw.size(); ++f) {
      if (ccw[f].component == c.component) continue;
      if (winding_number(ccw[f].pts, probe) != 0) {
        faces_[f].holes.push_back(c.pts);
        break;
      }
    }
  }
}

std::optional<std::size_t> Arrangement::locate(Complex z) const {
  for (std::size_t f = 0; f < faces_.size(); ++f)
    if (faces_[f].contains(z)) return f;
  return std::nullopt;
}

}  // namespace cosdyn
