#include <doctest.h>

#include "cosdyn/export.hpp"
#include "fixtures.hpp"

using namespace cosdyn;

TEST_CASE("complex numbers are pairs") {
  const Json j = to_json(Complex(1.5, -2));
  REQUIRE(j.is_array());
  CHECK(j[0] == 1.5);
  CHECK(j[1] == -2.0);
}

TEST_CASE("map record") {
  const Json j = to_json(fixtures::cstar());
  CHECK(j.contains("u"));
  CHECK(j.contains("v"));
  CHECK(Json::parse(j.dump()) == j);
}

TEST_CASE("landing record") {
  const LandingResult l = land_ray(fixtures::half_cosh(), Address::parse("[];[(0,0)]"));
  const Json j = to_json(l);
  CHECK(j.dump().find("landed") != std::string::npos);
  CHECK(Json::parse(j.dump()) == j);
}

TEST_CASE("orbit kinds") {
  CHECK(to_string(OrbitKind::escaping) == "escaping");
  CHECK(to_string(OrbitKind::attracted) == "attracted");
  const Json j = to_json(ScanRow{1.0, OrbitKind::attracted, OrbitKind::escaping});
  CHECK(j["minus"] == "escaping");
}
