#include <doctest.h>

#include "cosdyn/puzzle.hpp"
#include "fixtures.hpp"

using namespace cosdyn;

namespace {

struct CStarPuzzle {
  CosineMap m = fixtures::cstar();
  BasinChart fixed = BasinChart::build(m, fixtures::kCStar, 1);
  BasinChart two = BasinChart::build(m, m.critical_point(1), 2);
  Ellipse E{m.v(), 3.0};
  TruncationBox R{m.u(), 3.0, -2 * kPi + 0.5, 2 * kPi - 0.5};
  PuzzleGraph graph = build_graph(m, fixed, 1.0 / 3, Address::parse("[];[(0,0) (0,1)]"), 0.5, E);
  Puzzle puzzle{m, graph, E, R, {fixed, two}};
};

}  // namespace

TEST_CASE("graph of the 1/3 ray pair") {
  CStarPuzzle p;
  CHECK(p.graph.period == 2);
  REQUIRE(p.graph.landing_points.size() == 2);
  CHECK(std::abs(p.graph.landing_points[0] - Complex(0.81294244, -0.44758930)) < 1e-6);
  CHECK(std::abs(p.graph.landing_points[1] - Complex(-0.85053250, 3.05156707)) < 1e-6);
  bool has[4] = {};
  for (const Arc& a : p.graph.arcs) has[static_cast<int>(a.tag)] = true;
  CHECK(has[0]);
  CHECK(has[1]);
  CHECK(has[2]);
}

TEST_CASE("mismatched angle and address is rejected") {
  const auto m = fixtures::cstar();
  const BasinChart chart = BasinChart::build(m, fixtures::kCStar, 1);
  CHECK_THROWS_AS(build_graph(m, chart, 0.0, Address::parse("[];[(0,0) (0,1)]"), 0.5, Ellipse{m.v(), 3.0}),
                  CertificationError);
}

TEST_CASE("pieces nest and map onto pieces") {
  CStarPuzzle p;
  p.puzzle.build_to_depth(2);
  CHECK(!p.puzzle.pieces(0).empty());
  for (int d = 1; d <= 2; ++d)
    for (const PuzzlePiece& q : p.puzzle.pieces(d)) {
      REQUIRE(q.parent >= 0);
      REQUIRE(q.image >= 0);
      const PuzzlePiece& parent = p.puzzle.piece(d - 1, q.parent);
      CHECK(winding_number(parent.polygon, q.interior) != 0);
      const PuzzlePiece& image = p.puzzle.piece(d - 1, q.image);
      CHECK(winding_number(image.polygon, p.m(q.interior)) != 0);
      CHECK(q.degree == (q.critical.empty() ? 1 : 2));
    }
}

TEST_CASE("tableau at the critical point") {
  CStarPuzzle p;
  const Complex c = p.m.critical_point(1);
  const Tableau t = tableau(p.puzzle, c, 3, 4);
  CHECK(!t.collision);
  REQUIRE(t.ids.size() == 4);
  for (int n = 0; n <= 3; ++n) {
    CHECK(t.ids[n][0] >= 0);
    CHECK(t.critical[n][0]);
  }
  // u_1 has period 2: column 2 repeats column 0
  for (int n = 0; n <= 3; ++n) CHECK(t.critical[n][2] == t.critical[n][0]);
  const std::string csv = t.to_csv();
  CHECK(csv.find('\n') != std::string::npos);
}

TEST_CASE("box inside the ellipse") {
  const auto m = fixtures::cstar();
  CHECK(box_in_ellipse_margin(TruncationBox{m.u(), 3.0, -2, 2}, Ellipse{m.v(), 3.0}) > 0);
  CHECK_THROWS_AS(box_in_ellipse_margin(TruncationBox{m.u(), 3.0, -2, 2}, Ellipse{m.v(), 1.0}), PreconditionError);
}
