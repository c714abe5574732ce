#include "doctest.h"
#include "vdh/cantor.hpp"

using namespace vdh;

TEST_SUITE_BEGIN("cantor");

TEST_CASE("normalization: primitive period") {
  CantorPoint c(2, "", "1010");
  CHECK(c.period() == "10");
  CHECK(c.prefix().empty());
  CHECK(format_point(c) == "(10)");
  CantorPoint d(2, "", "0101");
  CHECK(format_point(d) == "(01)");
}

TEST_CASE("normalization: prefix absorption") {
  // 0(10) reads 0101010... = (01) repeated.
  CantorPoint c(2, "0", "10");
  CHECK(format_point(c) == "(01)");
  // 1(0) cannot absorb.
  CantorPoint d(2, "1", "0");
  CHECK(format_point(d) == "1(0)");
  // 00(0) collapses entirely.
  CantorPoint e(2, "00", "0");
  CHECK(format_point(e) == "(0)");
}

TEST_CASE("digits") {
  CantorPoint c(2, "1", "10");
  // 1 101010...
  CHECK(c.digit(0) == 1);
  CHECK(c.digit(1) == 1);
  CHECK(c.digit(2) == 0);
  CHECK(c.digit(3) == 1);
  CHECK(c.digit(100) == (100 % 2 == 1 ? 1 : 0));
}

TEST_CASE("normal form is canonical for equal streams") {
  // Denormalized variants of the same stream agree after normalization.
  CantorPoint a(2, "011", "0101");
  CantorPoint b(2, "0", "1101");
  for (std::size_t i = 0; i < 24; ++i) REQUIRE(a.digit(i) == b.digit(i));
  CHECK(a == b);
}

TEST_CASE("parse and format") {
  CHECK(format_point(parse_point("0(10)", 2)) == "(01)");
  CHECK(format_point(parse_point("(0)", 2)) == "(0)");
  CHECK(format_point(parse_point("21(02)", 3)) == "21(02)");
  CHECK_THROWS_AS(parse_point("0(2)", 2), Error);   // digit out of range
  CHECK_THROWS_AS(parse_point("01", 2), Error);     // no period
  CHECK_THROWS_AS(parse_point("0()", 2), Error);    // empty period
  CHECK_THROWS_AS(parse_point("0(1)x", 2), Error);  // trailing junk
}

TEST_SUITE_END();
