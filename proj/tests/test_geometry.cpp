#include <doctest.h>

#include "cosdyn/geometry.hpp"

using namespace cosdyn;

namespace {

Polyline square(double s, Complex c = 0) {
  return {c + Complex(-s, -s), c + Complex(s, -s), c + Complex(s, s), c + Complex(-s, s)};
}

Polyline circle(Complex c, double r, int n) {
  Polyline out;
  for (int i = 0; i < n; ++i) out.push_back(c + std::polar(r, kTwoPi * i / n));
  return out;
}

}  // namespace

TEST_CASE("winding numbers and area") {
  const Polyline sq = square(1);
  CHECK(winding_number(sq, 0.0) == 1);
  CHECK(winding_number(sq, Complex(2, 0)) == 0);
  Polyline rev(sq.rbegin(), sq.rend());
  CHECK(winding_number(rev, 0.0) == -1);
  CHECK(signed_area(sq) == doctest::Approx(4.0));
  CHECK(signed_area(rev) == doctest::Approx(-4.0));
}

TEST_CASE("distances") {
  CHECK(distance_to_segment(Complex(0, 1), -1.0, 1.0) == doctest::Approx(1.0));
  CHECK(distance_to_segment(Complex(3, 0), -1.0, 1.0) == doctest::Approx(2.0));
  CHECK(distance_to_polyline(0.0, square(1), true) == doctest::Approx(1.0));
  CHECK(hausdorff(square(1), square(1, Complex(0.5, 0)), true) == doctest::Approx(0.5));
  CHECK(polyline_distance(square(1), true, square(1, 5.0), true) == doctest::Approx(3.0));
  CHECK(diameter(square(1)) == doctest::Approx(2 * std::sqrt(2.0)));
}

TEST_CASE("segment intersection") {
  const auto hit = intersect_segments(Complex(-1, 0), Complex(1, 0), Complex(0, -1), Complex(0, 1));
  REQUIRE(hit);
  CHECK(std::abs(hit->point) < 1e-15);
  CHECK(!intersect_segments(Complex(-1, 0), Complex(1, 0), Complex(-1, 1), Complex(1, 1)));
}

TEST_CASE("interior point of a non-convex polygon") {
  const Polyline l = {0.0, 3.0, Complex(3, 1), Complex(1, 1), Complex(1, 3), Complex(0, 3)};
  const auto p = interior_point(l);
  REQUIRE(p);
  CHECK(winding_number(l, *p) != 0);
  CHECK(distance_to_polyline(*p, l, true) > 1e-3);
}

TEST_CASE("simplicity") {
  CHECK(is_simple(square(1)));
  const Polyline bowtie = {Complex(-1, -1), Complex(1, 1), Complex(1, -1), Complex(-1, 1)};
  CHECK(!is_simple(bowtie));
}

TEST_CASE("resample bounds the segment length") {
  const Polyline r = resample(square(1), 0.1, true);
  for (std::size_t i = 0; i < r.size(); ++i) CHECK(std::abs(r[(i + 1) % r.size()] - r[i]) <= 0.1 + 1e-12);
  CHECK(hausdorff(r, square(1), true) < 1e-12);
}

TEST_CASE("region with a hole") {
  Region r{square(2), {square(1)}};
  CHECK(r.contains(Complex(1.5, 0)));
  CHECK(!r.contains(0.0));
  CHECK(!r.contains(Complex(3, 0)));
  CHECK(r.area() == doctest::Approx(12.0));
  CHECK(r.boundary_distance(Complex(1.5, 0)) == doctest::Approx(0.5));
}

TEST_CASE("arrangement of two overlapping circles has three bounded faces") {
  Arrangement arr({{circle(-0.5, 1, 400), true, 0}, {circle(0.5, 1, 400), true, 1}}, 1e-10);
  CHECK(arr.faces().size() == 3);
  const auto a = arr.locate(Complex(-1.2, 0)), b = arr.locate(0.0), c = arr.locate(Complex(1.2, 0));
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(c);
  CHECK(*a != *b);
  CHECK(*b != *c);
  CHECK(!arr.locate(Complex(5, 0)));
}
