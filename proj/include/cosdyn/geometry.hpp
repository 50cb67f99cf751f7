#pragma once

// Planar polylines: winding numbers, distances, and face extraction for an
// arrangement of curves.

#include <optional>
#include <span>
#include <vector>

#include "cosdyn/cosine_map.hpp"

namespace cosdyn {

using Polyline = std::vector<Complex>;

struct Box {
  double x0, y0, x1, y1;
  bool contains(Complex z) const { return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1; }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

Box bounding_box(std::span<const Complex> pts);

// Winding number of the closed polygon (last vertex joins the first) around z.
int winding_number(std::span<const Complex> polygon, Complex z);

double signed_area(std::span<const Complex> polygon);

double distance_to_segment(Complex z, Complex a, Complex b);
double distance_to_polyline(Complex z, std::span<const Complex> line, bool closed);

// max over vertices of a of the distance to the polyline b
double directed_hausdorff(std::span<const Complex> a, std::span<const Complex> b, bool b_closed);
double hausdorff(std::span<const Complex> a, std::span<const Complex> b, bool closed);

// Minimum distance between the two vertex-and-segment sets.
double polyline_distance(std::span<const Complex> a, bool a_closed, std::span<const Complex> b, bool b_closed);

double diameter(std::span<const Complex> pts);

// Proper or touching intersection of segments [a,b] and [c,d]; returns the
// parameter along [a,b] and [c,d] when they meet at a single point.
struct SegmentHit {
  double s, t;
  Complex point;
};
std::optional<SegmentHit> intersect_segments(Complex a, Complex b, Complex c, Complex d);

// A point well inside the closed polygon: midpoint of the widest inside
// interval over a few horizontal scanlines. nullopt for degenerate polygons.
std::optional<Complex> interior_point(std::span<const Complex> polygon);

// True when no two non-adjacent edges of the closed polygon intersect.
bool is_simple(std::span<const Complex> polygon);

// Inserts vertices so no segment is longer than max_len.
Polyline resample(std::span<const Complex> line, double max_len, bool closed);

// Bounded region with holes. Membership: inside the outer loop and outside
// every hole.
struct Region {
  Polyline outer;
  std::vector<Polyline> holes;

  bool contains(Complex z) const;
  // distance from z to the nearest boundary loop
  double boundary_distance(Complex z) const;
  double area() const;
};

// Faces of the planar subdivision induced by a set of polylines. Curves are
// split at mutual intersections; endpoints closer than snap_tol are merged.
class Arrangement {
 public:
  struct Curve {
    Polyline points;
    bool closed = false;
    int tag = 0;
  };

  Arrangement(std::vector<Curve> curves, double snap_tol);

  const std::vector<Region>& faces() const { return faces_; }
  // tag of the curve each face-boundary vertex came from, parallel to faces()[i].outer
  const std::vector<std::vector<int>>& face_tags() const { return face_tags_; }

  // index of the bounded face containing z, or nullopt
  std::optional<std::size_t> locate(Complex z) const;

 private:
  std::vector<Region> faces_;
  std::vector<std::vector<int>> face_tags_;
};

}  // namespace cosdyn
