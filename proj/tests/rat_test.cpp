#include "polyvol/rat.hpp"

#include <map>
#include <random>

#include "doctest.h"
#include "polyvol/errors.hpp"

using polyvol::Rat;

TEST_CASE("construction canonicalizes") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, 4) == Rat(-1, 2));
  CHECK(Rat(1, -2) == Rat(-1, 2));  // denominator made positive
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(1, -2).den() == 2);
  CHECK(Rat(6, 3).str() == "2");
  CHECK_THROWS_AS(Rat(1, 0), polyvol::Error);
}

TEST_CASE("arithmetic is exact and path independent") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(-a == Rat(-1, 3));
  CHECK_THROWS_AS(a / Rat(0), polyvol::Error);

  // same value through different construction paths compares equal
  std::mt19937 rng(7);
  for (int it = 0; it < 500; ++it) {
    long p = long(rng() % 41) - 20, q = long(rng() % 9) + 1;
    long r = long(rng() % 41) - 20, s = long(rng() % 9) + 1;
    Rat direct(p * s + r * q, q * s);
    CHECK(Rat(p, q) + Rat(r, s) == direct);
  }
}

TEST_CASE("ordering is total and strict") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1, 2) < Rat(-1, 3));
  CHECK(Rat(0) <= Rat(0));
  CHECK(Rat(7, 2) > Rat(3));
  CHECK(Rat(2, 6).sign() == 1);
  CHECK(Rat(-5).sign() == -1);
  CHECK(Rat(0).is_zero());
  CHECK(Rat(-7, 3).abs() == Rat(7, 3));
}

TEST_CASE("parsing accepts p, -p and p/q only") {
  CHECK(Rat::parse("5")->num() == 5);
  CHECK(*Rat::parse("-5") == Rat(-5));
  CHECK(*Rat::parse("3/6") == Rat(1, 2));
  CHECK(*Rat::parse("-3/6") == Rat(-1, 2));
  CHECK(!Rat::parse(""));
  CHECK(!Rat::parse("1/0"));
  CHECK(!Rat::parse("0/0"));
  CHECK(!Rat::parse("1/-2"));
  CHECK(!Rat::parse("1.5"));
  CHECK(!Rat::parse("a"));
  CHECK(!Rat::parse("1/"));
  CHECK(!Rat::parse("/2"));
  CHECK(!Rat::parse("1 /2"));
}

TEST_CASE("printing is p/q in lowest terms or a bare integer") {
  CHECK(Rat(1, 2880).str() == "1/2880");
  CHECK(Rat(-4, 8).str() == "-1/2");
  CHECK(Rat(0).str() == "0");
  CHECK(Rat(42).str() == "42");
  // round trip
  for (const char* s : {"17/35", "-2880", "0", "1/1000000007"})
    CHECK(Rat::parse(s)->str() == s);
}
