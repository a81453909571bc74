#include <doctest.h>

#include "bounds.hpp"

using namespace htp;

namespace {

struct TableRow {
  ShapeFamily family;
  int order;
  int lower;
  int upper;
  BoundKind kind;
};

const TableRow kBoundsTable[] = {
    {ShapeFamily::Diamond, 1, 21, 21, BoundKind::ExactFormula},
    {ShapeFamily::Diamond, 2, 40, 62, BoundKind::ExactFormula},
    {ShapeFamily::Diamond, 3, 77, 109, BoundKind::Literature},
    {ShapeFamily::Triangular, 2, 34, 50, BoundKind::ExactFormula},
    {ShapeFamily::Triangular, 3, 57, 81, BoundKind::ExactFormula},
    {ShapeFamily::Triangular, 4, 83, 121, BoundKind::ExactFormula},
    {ShapeFamily::Hexagonal, 1, 21, 21, BoundKind::ExactFormula},
    {ShapeFamily::Hexagonal, 2, 65, 85, BoundKind::ExactFormula},
    {ShapeFamily::Hexagonal, 3, 140, 190, BoundKind::ExactFormula},
    {ShapeFamily::Star, 2, 129, 129, BoundKind::ExactFormula},
};

}  // namespace

TEST_CASE("average magic constant is 3n+3") {
  CHECK(average_magic(6) == 21);
  CHECK(average_magic(16) == 51);
  CHECK(average_magic(42) == 129);
  CHECK_THROWS_AS(average_magic(5), std::invalid_argument);
}

TEST_CASE("complement magic is 6n+6-M and an involution") {
  CHECK(complement_magic(62, 16) == 40);
  CHECK(complement_magic(93, 30) == 93);
  CHECK(complement_magic(77, 30) == 109);
  for (int m = 20; m <= 170; ++m) CHECK(complement_magic(complement_magic(m, 30), 30) == m);
}

TEST_CASE("bounds table matches the derivations exactly") {
  for (const TableRow& row : kBoundsTable) {
    CAPTURE(family_name(row.family));
    CAPTURE(row.order);
    const auto [bounds, report] = bounds_for(row.family, row.order);
    CHECK(bounds.lower == row.lower);
    CHECK(bounds.upper == row.upper);
    CHECK(bounds.kind == row.kind);
  }
}

TEST_CASE("bounds are complement-symmetric with the average at the midpoint") {
  for (const TableRow& row : kBoundsTable) {
    const auto [bounds, report] = bounds_for(row.family, row.order);
    const long long n = expected_vertex_count(row.family, row.order);
    CHECK(bounds.lower + bounds.upper == 6 * n + 6);
    CHECK(bounds.lower + bounds.upper == 2 * average_magic(n));
  }
}

TEST_CASE("orders without a specific derivation fall back to the trivial range") {
  const auto [d4, d4_report] = bounds_for(ShapeFamily::Diamond, 4);
  CHECK(d4.kind == BoundKind::Trivial);
  CHECK(d4.lower == 21);
  CHECK(d4.upper == 6 * 48 - 15);

  const auto [t1, t1_report] = bounds_for(ShapeFamily::Triangular, 1);
  CHECK(t1.kind == BoundKind::Trivial);
  CHECK(t1.lower == 21);
  CHECK(t1.upper == 21);

  const auto [h4, h4_report] = bounds_for(ShapeFamily::Hexagonal, 4);
  CHECK(h4.lower + h4.upper == 6 * 96 + 6);
}

TEST_CASE("hand-built cover certificates validate") {
  const Shape d2 = build_shape(ShapeFamily::Diamond, 2);
  CoverCertificate cert;
  cert.name = "manual-disjoint-pair";
  cert.hex_mult.assign(d2.hexagon_count(), 0);
  cert.hex_mult[d2.center_index({0, 0})] = 1;
  cert.hex_mult[d2.center_index({1, 1})] = 1;
  cert.vtx_mult.assign(d2.vertex_count(), 0);
  cert.target.assign(d2.vertex_count(), 1);
  std::vector<char> covered(d2.vertex_count(), 0);
  for (const HexCoord& c : {HexCoord{0, 0}, HexCoord{1, 1}})
    for (int v : d2.hexagons[d2.center_index(c)]) covered[v] = 1;
  int outside = 0;
  for (int v = 0; v < d2.vertex_count(); ++v)
    if (!covered[v]) {
      cert.vtx_mult[v] = 1;
      ++outside;
    }
  CHECK(outside == 4);
  CHECK(check_cover_certificate(d2, cert).valid);

  const Shape star = build_shape(ShapeFamily::Star, 2);
  CoverCertificate star_cert;
  star_cert.name = "manual-star-cover";
  star_cert.hex_mult.assign(star.hexagon_count(), 0);
  star_cert.hex_mult[star.center_index({0, 0})] = 1;
  for (const HexCoord& tip : {HexCoord{1, 1}, HexCoord{-1, 2}, HexCoord{-2, 1},
                              HexCoord{-1, -1}, HexCoord{1, -2}, HexCoord{2, -1}})
    star_cert.hex_mult[star.center_index(tip)] = 1;
  star_cert.vtx_mult.assign(star.vertex_count(), 0);
  star_cert.target.assign(star.vertex_count(), 1);
  CHECK(check_cover_certificate(star, star_cert).valid);

  CoverCertificate zero;
  zero.name = "all-zero";
  zero.hex_mult.assign(star.hexagon_count(), 0);
  zero.vtx_mult.assign(star.vertex_count(), 0);
  zero.target.assign(star.vertex_count(), 0);
  CHECK(check_cover_certificate(star, zero).valid);
}

TEST_CASE("certificates with mismatched index ranges are rejected") {
  const Shape d1 = build_shape(ShapeFamily::Diamond, 1);
  CoverCertificate cert;
  cert.hex_mult.assign(2, 0);  // shape has one hexagon
  cert.vtx_mult.assign(6, 0);
  cert.target.assign(6, 0);
  CHECK_THROWS_AS(check_cover_certificate(d1, cert), std::invalid_argument);
}

TEST_CASE("every derivation certificate validates and any +1 perturbation fails") {
  for (const TableRow& row : kBoundsTable) {
    CAPTURE(family_name(row.family));
    CAPTURE(row.order);
    const Shape shape = build_shape(row.family, row.order);
    const auto [bounds, report] = bounds_for(row.family, row.order);
    if (row.kind != BoundKind::Trivial) CHECK(!report.certificates.empty());
    for (const CoverCertificate& cert : report.certificates) {
      CAPTURE(cert.name);
      CHECK(check_cover_certificate(shape, cert).valid);
      for (size_t h = 0; h < cert.hex_mult.size(); ++h) {
        CoverCertificate corrupt = cert;
        corrupt.hex_mult[h] += 1;
        const CertificateCheck check = check_cover_certificate(shape, corrupt);
        CHECK_FALSE(check.valid);
        CHECK(check.failing_vertex >= 0);
      }
      for (size_t v = 0; v < cert.vtx_mult.size(); ++v) {
        CoverCertificate corrupt = cert;
        corrupt.vtx_mult[v] += 1;
        CHECK_FALSE(check_cover_certificate(shape, corrupt).valid);
      }
    }
  }
}

TEST_CASE("diamond-3 endpoint refutation reproduces the counting argument") {
  const Diamond3Refutation top = refute_diamond3_extreme(110);
  CHECK(top.refuted_magic == 110);
  CHECK(top.f_sum == 25);
  CHECK(top.f_d_max == 15);
  CHECK(top.t_max == 59);
  CHECK(top.td_max == 344);
  CHECK(top.bound_8m == 868);
  CHECK(top.refuted);
  CHECK(top.t_size == 2);
  CHECK(top.d_size == 14);
  CHECK(top.s_size == 14);

  const Diamond3Refutation mirror = refute_diamond3_extreme(76);
  CHECK(mirror.requested_magic == 76);
  CHECK(mirror.refuted_magic == 110);
  CHECK(mirror.refuted);

  const Diamond3Refutation inside = refute_diamond3_extreme(109);
  CHECK(inside.f_sum == 29);
  CHECK(inside.bound_8m == 872);
  CHECK_FALSE(inside.refuted);

  CHECK_THROWS_AS(refute_diamond3_extreme(112), std::domain_error);
  CHECK_THROWS_AS(refute_diamond3_extreme(50), std::domain_error);
}

TEST_CASE("derivations expose the structural group sizes") {
  const auto [d2_bounds, d2] = bounds_for(ShapeFamily::Diamond, 2);
  CHECK(d2.quantity("shared_pair_size") == 2);
  CHECK(d2.quantity("outside_size") == 4);
  CHECK(d2.quantity("shared_pair_max") == 31);
  CHECK(d2.quantity("top_six_max") == 81);

  const auto [t2_bounds, t2] = bounds_for(ShapeFamily::Triangular, 2);
  CHECK(t2.quantity("triple_size") == 1);
  CHECK(t2.quantity("double_size") == 3);
  CHECK(t2.quantity("single_size") == 9);

  const auto [t3_bounds, t3] = bounds_for(ShapeFamily::Triangular, 3);
  CHECK(t3.quantity("outside_size") == 4);
  CHECK(t3.quantity("outside_min") == 10);

  const auto [t4_bounds, t4] = bounds_for(ShapeFamily::Triangular, 4);
  CHECK(t4.quantity("outer_triple_size") == 3);
  CHECK(t4.quantity("covered_double_size") == 6);
  CHECK(t4.quantity("identity_rhs_max") == 1458);
  CHECK(t4.quantity("upper_exact") == Rational(1458, 12));

  const auto [h2_bounds, h2] = bounds_for(ShapeFamily::Hexagonal, 2);
  CHECK(h2.quantity("spoke_size") == 6);
  CHECK(h2.quantity("spoke_max") == 129);
  CHECK(h2.quantity("upper_exact") == Rational(429, 5));

  const auto [h3_bounds, h3] = bounds_for(ShapeFamily::Hexagonal, 3);
  CHECK(h3.quantity("straight_miss_size") == 12);
  CHECK(h3.quantity("staggered_miss_size") == 12);
  CHECK(h3.quantity("overlap_size") == 24);
  CHECK(h3.quantity("miss_min") == 300);

  const auto [star_bounds, star] = bounds_for(ShapeFamily::Star, 2);
  CHECK(star.quantity("forced_magic") == 129);
}

TEST_CASE("identity-derived uppers carry erratum warnings") {
  const auto [t3_bounds, t3] = bounds_for(ShapeFamily::Triangular, 3);
  REQUIRE(t3.warnings.size() == 1);
  CHECK(t3.warnings[0].find("71") != std::string::npos);

  const auto [t4_bounds, t4] = bounds_for(ShapeFamily::Triangular, 4);
  REQUIRE(t4.warnings.size() == 1);
  CHECK(t4.warnings[0].find("122") != std::string::npos);

  const auto [d2_bounds, d2] = bounds_for(ShapeFamily::Diamond, 2);
  CHECK(d2.warnings.empty());
}

TEST_CASE("bounds_for is pure") {
  const auto [b1, r1] = bounds_for(ShapeFamily::Hexagonal, 3);
  const auto [b2, r2] = bounds_for(ShapeFamily::Hexagonal, 3);
  CHECK(b1.lower == b2.lower);
  CHECK(b1.upper == b2.upper);
  CHECK(r1.quantities == r2.quantities);
  CHECK(r1.chain == r2.chain);
  CHECK(r1.warnings == r2.warnings);
}

TEST_CASE("report rendering starts with 'lower upper kind'") {
  const auto [bounds, report] = bounds_for(ShapeFamily::Star, 2);
  const std::string text = format_bounds_report(bounds, report);
  CHECK(text.rfind("129 129 exact-formula\n", 0) == 0);

  const auto [d3_bounds, d3_report] = bounds_for(ShapeFamily::Diamond, 3);
  const std::string d3_text = format_bounds_report(d3_bounds, d3_report);
  CHECK(d3_text.rfind("77 109 literature\n", 0) == 0);
}
