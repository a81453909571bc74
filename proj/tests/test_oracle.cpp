#include <doctest.h>

#include "hexgrid.hpp"
#include "oracle.hpp"

using namespace htp;

// Reference counts produced by this enumerator and frozen here; the solver
// suite checks its own counts against the same numbers.
constexpr unsigned long long kTriangular2Count34 = 23328;
constexpr unsigned long long kTriangular2Count42 = 1140480;
constexpr unsigned long long kTriangular2Count50 = 23328;

TEST_CASE("single hexagon: 720 permutations at 21, none elsewhere") {
  const Shape d1 = build_shape(ShapeFamily::Diamond, 1);
  CHECK(oracle_count(d1, 21) == 720);
  CHECK(oracle_count(d1, 22) == 0);
  unsigned long long total = 0;
  for (int m = 18; m <= 24; ++m) total += oracle_count(d1, m);
  CHECK(total == 720);
}

TEST_CASE("first witness on the single hexagon is the identity assignment") {
  const Shape d1 = build_shape(ShapeFamily::Diamond, 1);
  const auto witness = oracle_find(d1, 21);
  REQUIRE(witness.has_value());
  CHECK(witness->values == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("triangular-2 counts match the frozen reference values") {
  const Shape t2 = build_shape(ShapeFamily::Triangular, 2);
  CHECK(oracle_count(t2, 34) == kTriangular2Count34);
  CHECK(oracle_count(t2, 42) == kTriangular2Count42);
  CHECK(oracle_count(t2, 50) == kTriangular2Count50);
}

TEST_CASE("solution counts are complement-symmetric") {
  const Shape t2 = build_shape(ShapeFamily::Triangular, 2);
  // 6n+6 = 84 for the 13-vertex shape.
  CHECK(oracle_count(t2, 35) == oracle_count(t2, 49));
  CHECK(kTriangular2Count34 == kTriangular2Count50);
}

TEST_CASE("diamond-2 witnesses at the proven minimum, none below it") {
  const Shape d2 = build_shape(ShapeFamily::Diamond, 2);
  const auto witness = oracle_find(d2, 40);
  REQUIRE(witness.has_value());
  const VerifyResult check = verify_solution(d2, *witness);
  REQUIRE(check.ok());
  CHECK(*check.magic == 40);

  CHECK_FALSE(oracle_find(d2, 39).has_value());
}

TEST_CASE("oracle refuses shapes beyond its guard") {
  const Shape t3 = build_shape(ShapeFamily::Triangular, 3);
  CHECK(t3.vertex_count() > kOracleMaxVertices);
  CHECK_THROWS_AS(oracle_count(t3, 80), UnsupportedShapeError);
  CHECK_THROWS_AS(oracle_find(t3, 80), UnsupportedShapeError);
}
