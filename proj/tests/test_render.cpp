#include <doctest.h>

#include <sstream>

#include "cosdyn/render.hpp"
#include "fixtures.hpp"

using namespace cosdyn;

TEST_CASE("viewport geometry") {
  const Viewport vp{Complex(1, 2), 4.0, 40, 20};
  CHECK(vp.pixel_size() == 0.1);
  CHECK(vp.height() == doctest::Approx(2.0));
  CHECK(vp.offset(0, 0) == -vp.offset(39, 19));
  int i, j;
  REQUIRE(vp.to_pixel(vp.pixel(7, 3), i, j));
  CHECK(i == 7);
  CHECK(j == 3);
  CHECK(!vp.to_pixel(Complex(10, 0), i, j));
  CHECK_THROWS_AS((Viewport{0.0, 0.0, 10, 10}.validate()), PreconditionError);
  CHECK_THROWS_AS((Viewport{0.0, 1.0, 0, 10}.validate()), PreconditionError);
}

TEST_CASE("serial and parallel classification agree") {
  const auto m = fixtures::cstar();
  const Viewport vp{m.u(), 8.0, 80, 60};
  const ClassMap a = classify_pixels(m, vp), b = classify_pixels_serial(m, vp);
  CHECK(a.kind == b.kind);
  CHECK(a.iter == b.iter);
  CHECK(a.cycle == b.cycle);
  CHECK(a.attractors.size() == 2);
}

TEST_CASE("picture is symmetric about u") {
  const auto m = fixtures::half_cosh();
  const Viewport vp{m.u(), 6.0, 61, 41};
  const ClassMap cm = classify_pixels(m, vp);
  for (int j = 0; j < vp.px_h; ++j)
    for (int i = 0; i < vp.px_w; ++i) CHECK(cm.kind[cm.index(i, j)] == cm.kind[cm.index(vp.px_w - 1 - i, vp.px_h - 1 - j)]);
}

TEST_CASE("known points are classified") {
  const auto m = fixtures::half_cosh();
  const Viewport vp{0.0, 8.0, 81, 81};
  const ClassMap cm = classify_pixels(m, vp);
  int i, j;
  REQUIRE(vp.to_pixel(0.0, i, j));
  CHECK(cm.kind[cm.index(i, j)] == PixelKind::attracted);
  REQUIRE(vp.to_pixel(Complex(3.9, 0), i, j));
  CHECK(cm.kind[cm.index(i, j)] == PixelKind::escaping);
}

TEST_CASE("PPM round trip") {
  const Image img = render_julia(fixtures::cstar(), Viewport{0.0, 4.0, 17, 9});
  std::stringstream ss;
  write_ppm(ss, img);
  CHECK(ss.str().rfind("P6\n17 9\n255\n", 0) == 0);
  CHECK(read_ppm(ss) == img);
}

TEST_CASE("overlay draws inside the viewport only") {
  const Viewport vp{0.0, 2.0, 20, 20};
  Image img{20, 20, std::vector<Rgb>(400, Rgb{0, 0, 0})};
  const std::vector<Complex> line = {Complex(-5, 0), Complex(5, 0)};
  overlay(img, vp, line, Rgb{255, 0, 0});
  int lit = 0;
  for (const Rgb& p : img.px) lit += p == Rgb{255, 0, 0};
  CHECK(lit >= 20);
  CHECK(lit <= 60);
  CHECK(!(overlay_color(0) == overlay_color(1)));
}

TEST_CASE("chordal metric") {
  CHECK(chordal(0.0, 0.0) == 0.0);
  CHECK(chordal(0.0, 1.0) == doctest::Approx(std::sqrt(2.0)));
  CHECK(chordal(1e300, 2e300) < 1e-299);
  CHECK(chordal(Complex(1, 1), Complex(-3, 2)) == doctest::Approx(chordal(Complex(-3, 2), Complex(1, 1))));
}

TEST_CASE("Fatou components at c*") {
  const auto m = fixtures::cstar();
  const ClassMap cm = classify_pixels(m, Viewport{m.u(), 8.0, 200, 200});
  const DiameterReport r = component_diameters(m, cm);
  REQUIRE(r.eps.size() == 4);
  for (std::size_t i = 1; i < r.eps.size(); ++i) CHECK(r.count_above[i] >= r.count_above[i - 1]);
  int immediate = 0;
  for (const Component& c : r.components) {
    immediate += c.preperiod == 0;
    CHECK(c.diameter <= 2.0);
  }
  CHECK(immediate >= 3);
}
