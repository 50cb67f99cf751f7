#include <doctest.h>

#include <random>

#include "cosdyn/address.hpp"

using namespace cosdyn;

namespace {

Address random_address(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 2), plen(1, 3), j(0, 1), k(-2, 2);
  std::vector<Entry> pre, per;
  for (int i = len(rng); i > 0; --i) pre.push_back({j(rng), k(rng)});
  for (int i = plen(rng); i > 0; --i) per.push_back({j(rng), k(rng)});
  return Address(pre, per);
}

}  // namespace

TEST_CASE("parse and print round trip") {
  for (const char* text : {"[];[(0,0)]", "[(1,-2)];[(0,0) (1,3)]", "[(0,1) (0,2)];[(1,0)]"}) {
    const Address a = Address::parse(text);
    CHECK(Address::parse(a.to_string()) == a);
  }
  CHECK(Address::parse("[];[(0,1)]").to_string() == "[];[(0,1)]");
}

TEST_CASE("canonical form") {
  CHECK(Address::parse("[];[(0,1) (0,1)]") == Address::parse("[];[(0,1)]"));
  CHECK(Address::parse("[(0,0)];[(0,0)]") == Address::parse("[];[(0,0)]"));
  CHECK(Address::parse("[(1,0)];[(0,1) (1,0)]") == Address::parse("[];[(1,0) (0,1)]"));
  CHECK(Address::parse("[(1,0)];[(0,0)]").preperiod().size() == 1);
}

TEST_CASE("bad text is a precondition error") {
  CHECK_THROWS_AS(Address::parse("(0,0)"), PreconditionError);
  CHECK_THROWS_AS(Address::parse("[];[]"), PreconditionError);
  CHECK_THROWS_AS(Address::parse("[];[(2,0)]"), PreconditionError);
  CHECK_THROWS_AS(Address::parse("[];[(0,x)]"), PreconditionError);
}

TEST_CASE("shift, prepend, entries") {
  const Address a = Address::parse("[(1,2)];[(0,0) (0,1)]");
  CHECK(a.entry(0) == Entry{1, 2});
  CHECK(a.entry(1) == Entry{0, 0});
  CHECK(a.entry(4) == Entry{0, 1});
  CHECK(a.shift() == Address::parse("[];[(0,0) (0,1)]"));
  CHECK(a.shift(2) == Address::parse("[];[(0,1) (0,0)]"));
  CHECK(a.shift().prepend({1, 2}) == a);
  CHECK(a.with_first_translated(3).front() == Entry{1, 5});
}

TEST_CASE("entry order") {
  CHECK(entry_less({1, 5}, {0, -5}));
  CHECK(!entry_less({0, -5}, {1, 5}));
  CHECK(entry_less({0, 1}, {0, 2}));
  CHECK(entry_less({1, 2}, {1, 1}));
  CHECK(!entry_less({0, 1}, {0, 1}));
}

TEST_CASE("lexicographic order is a total order") {
  std::mt19937 rng(7);
  for (int i = 0; i < 3000; ++i) {
    const Address a = random_address(rng), b = random_address(rng), c = random_address(rng);
    const auto ab = addr_compare(a, b), ba = addr_compare(b, a);
    CHECK((ab == 0) == (a == b));
    CHECK((ab < 0) == (ba > 0));
    if (ab < 0 && addr_compare(b, c) < 0) CHECK(addr_compare(a, c) < 0);
  }
}

TEST_CASE("distance is an ultrametric") {
  std::mt19937 rng(8);
  for (int i = 0; i < 2000; ++i) {
    const Address a = random_address(rng), b = random_address(rng), c = random_address(rng);
    CHECK(addr_distance(a, a) == 0.0);
    CHECK(addr_distance(a, b) == addr_distance(b, a));
    CHECK(addr_distance(a, c) <= std::max(addr_distance(a, b), addr_distance(b, c)));
  }
  CHECK(addr_distance(Address::parse("[];[(0,0)]"), Address::parse("[(0,0) (0,0)];[(0,1)]")) == 0.25);
}
