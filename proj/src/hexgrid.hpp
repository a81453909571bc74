// Hexagon-lattice shapes for the hexagonal tortoise puzzle (jisuguimundo):
// the four shape families as deduplicated corner/hexagon incidence graphs,
// plus assignment verification and the value-complement transform.
//
// Hexagons are pointy-top and addressed by axial coordinates (q, r).
// Every lattice corner is the unique top (N) corner of one hexagon or the
// unique bottom (S) corner of one hexagon, so a corner has the exact
// integer identity (q, r, N|S) and deduplication needs no floating point.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace htp {

// A (family, order) pair with no defined shape.
struct UnsupportedShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ShapeFamily { Diamond, Triangular, Hexagonal, Star };

const char* family_name(ShapeFamily family);
std::optional<ShapeFamily> family_from_name(std::string_view name);

struct HexCoord {
  int q = 0;
  int r = 0;
  friend bool operator==(const HexCoord&, const HexCoord&) = default;
};

// The six axial neighbor offsets; two hexagons share corners iff their
// center difference is one of these.
inline constexpr std::array<HexCoord, 6> kNeighborOffsets = {
    HexCoord{+1, 0}, HexCoord{-1, 0}, HexCoord{0, +1},
    HexCoord{0, -1}, HexCoord{+1, -1}, HexCoord{-1, +1}};

int axial_distance(HexCoord a, HexCoord b);

enum class CornerClass : std::uint8_t { N = 0, S = 1 };

struct VertexKey {
  int q = 0;
  int r = 0;
  CornerClass cls = CornerClass::N;
  friend bool operator==(const VertexKey&, const VertexKey&) = default;
};

// Canonical orders: vertices ascending by (r, q, cls) with N before S,
// hexagons ascending by center (r, q). Serialization depends on these.
bool canonical_less(const VertexKey& a, const VertexKey& b);
bool canonical_less(const HexCoord& a, const HexCoord& b);

// The six corners of the hexagon centered at (q, r), in fixed order:
// own top, own bottom, NE, NW, SE, SW.
std::array<VertexKey, 6> hexagon_corners(HexCoord center);

// The up-to-three hexagon centers whose corner set contains v (fewer may
// exist in a finite shape).
std::array<HexCoord, 3> vertex_hexagon_candidates(const VertexKey& v);

bool family_order_supported(ShapeFamily family, int order);

// Closed-form counts: Diamond 2n^2+4n, Triangular n^2+4n+1, Hexagonal 6n^2,
// Star(2) 42. Throws UnsupportedShapeError on an unsupported pair.
long long expected_vertex_count(ShapeFamily family, int order);
long long expected_hexagon_count(ShapeFamily family, int order);

// Immutable incidence structure. Safe to share read-only across threads.
struct Shape {
  ShapeFamily family = ShapeFamily::Diamond;
  int order = 0;
  std::vector<VertexKey> vertices;            // canonical order
  std::vector<HexCoord> centers;              // canonical order
  std::vector<std::array<int, 6>> hexagons;   // vertex indices, corner order
  std::vector<int> membership;                // containing-hexagon count, 1..3
  std::vector<std::vector<int>> hexagons_of_vertex;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int hexagon_count() const { return static_cast<int>(hexagons.size()); }
  // Sum of 1..n for n vertices.
  long long value_total() const {
    long long n = vertex_count();
    return n * (n + 1) / 2;
  }
  int vertex_index(const VertexKey& v) const;  // -1 if absent
  int center_index(const HexCoord& c) const;   // -1 if absent
};

Shape build_shape(ShapeFamily family, int order);

// A candidate or verified solution: values[i] is the number at canonical
// vertex i of the (family, order) shape.
struct Assignment {
  ShapeFamily family = ShapeFamily::Diamond;
  int order = 0;
  std::vector<int> values;
};

struct VerifyResult {
  std::optional<int> magic;  // set iff violations is empty
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

bool is_permutation(const std::vector<int>& values);

// Succeeds iff values are a permutation of 1..n and every hexagon sums to
// the same constant; collects every violation otherwise.
VerifyResult verify_solution(const Shape& shape, const Assignment& assignment);

// Replaces each value v by n+1-v; a solution with magic M maps to one with
// magic 6n+6-M. Involution. Throws std::invalid_argument unless the input
// is a permutation of 1..n.
Assignment complement_solution(const Assignment& assignment);

}  // namespace htp
