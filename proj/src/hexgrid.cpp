#include "hexgrid.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <tuple>

namespace htp {

const char* family_name(ShapeFamily family) {
  switch (family) {
    case ShapeFamily::Diamond: return "diamond";
    case ShapeFamily::Triangular: return "triangular";
    case ShapeFamily::Hexagonal: return "hexagonal";
    case ShapeFamily::Star: return "star";
  }
  return "?";
}

std::optional<ShapeFamily> family_from_name(std::string_view name) {
  if (name == "diamond") return ShapeFamily::Diamond;
  if (name == "triangular") return ShapeFamily::Triangular;
  if (name == "hexagonal") return ShapeFamily::Hexagonal;
  if (name == "star") return ShapeFamily::Star;
  return std::nullopt;
}

int axial_distance(HexCoord a, HexCoord b) {
  const int dq = a.q - b.q;
  const int dr = a.r - b.r;
  return (std::abs(dq) + std::abs(dr) + std::abs(dq + dr)) / 2;
}

bool canonical_less(const VertexKey& a, const VertexKey& b) {
  return std::tie(a.r, a.q, a.cls) < std::tie(b.r, b.q, b.cls);
}

bool canonical_less(const HexCoord& a, const HexCoord& b) {
  return std::tie(a.r, a.q) < std::tie(b.r, b.q);
}

std::array<VertexKey, 6> hexagon_corners(HexCoord center) {
  const int q = center.q;
  const int r = center.r;
  return {VertexKey{q, r, CornerClass::N},
          VertexKey{q, r, CornerClass::S},
          VertexKey{q + 1, r - 1, CornerClass::S},
          VertexKey{q, r - 1, CornerClass::S},
          VertexKey{q, r + 1, CornerClass::N},
          VertexKey{q - 1, r + 1, CornerClass::N}};
}

std::array<HexCoord, 3> vertex_hexagon_candidates(const VertexKey& v) {
  if (v.cls == CornerClass::N) {
    return {HexCoord{v.q, v.r}, HexCoord{v.q, v.r - 1}, HexCoord{v.q + 1, v.r - 1}};
  }
  return {HexCoord{v.q, v.r}, HexCoord{v.q - 1, v.r + 1}, HexCoord{v.q, v.r + 1}};
}

bool family_order_supported(ShapeFamily family, int order) {
  if (family == ShapeFamily::Star) return order == 2;
  return order >= 1;
}

namespace {

[[noreturn]] void throw_unsupported(ShapeFamily family, int order) {
  std::ostringstream msg;
  if (family == ShapeFamily::Star && order != 2) {
    msg << "star shape is defined only for order 2 (got " << order << ")";
  } else {
    msg << family_name(family) << " shape requires order >= 1 (got " << order << ")";
  }
  throw UnsupportedShapeError(msg.str());
}

std::vector<HexCoord> family_centers(ShapeFamily family, int order) {
  std::vector<HexCoord> centers;
  switch (family) {
    case ShapeFamily::Diamond:
      for (int r = 0; r < order; ++r)
        for (int q = 0; q < order; ++q) centers.push_back({q, r});
      break;
    case ShapeFamily::Triangular:
      for (int r = 0; r < order; ++r)
        for (int q = 0; q + r <= order - 1; ++q) centers.push_back({q, r});
      break;
    case ShapeFamily::Hexagonal: {
      const int m = order - 1;
      for (int r = -m; r <= m; ++r)
        for (int q = std::max(-m, -r - m); q <= std::min(m, -r + m); ++q)
          centers.push_back({q, r});
      break;
    }
    case ShapeFamily::Star: {
      centers.push_back({0, 0});
      for (const HexCoord& d : kNeighborOffsets) centers.push_back({d.q, d.r});
      // The six tip hexagons sit at distance 2, nestled between
      // consecutive ring hexagons.
      for (const HexCoord& tip : {HexCoord{1, 1}, HexCoord{-1, 2}, HexCoord{-2, 1},
                                  HexCoord{-1, -1}, HexCoord{1, -2}, HexCoord{2, -1}})
        centers.push_back(tip);
      std::sort(centers.begin(), centers.end(),
                [](const HexCoord& a, const HexCoord& b) { return canonical_less(a, b); });
      break;
    }
  }
  return centers;
}

}  // namespace

long long expected_vertex_count(ShapeFamily family, int order) {
  if (!family_order_supported(family, order)) throw_unsupported(family, order);
  const long long n = order;
  switch (family) {
    case ShapeFamily::Diamond: return 2 * n * n + 4 * n;
    case ShapeFamily::Triangular: return n * n + 4 * n + 1;
    case ShapeFamily::Hexagonal: return 6 * n * n;
    case ShapeFamily::Star: return 42;
  }
  return 0;
}

long long expected_hexagon_count(ShapeFamily family, int order) {
  if (!family_order_supported(family, order)) throw_unsupported(family, order);
  const long long n = order;
  switch (family) {
    case ShapeFamily::Diamond: return n * n;
    case ShapeFamily::Triangular: return n * (n + 1) / 2;
    case ShapeFamily::Hexagonal: return 3 * n * (n - 1) + 1;
    case ShapeFamily::Star: return 13;
  }
  return 0;
}

int Shape::vertex_index(const VertexKey& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v,
                             [](const VertexKey& a, const VertexKey& b) {
                               return canonical_less(a, b);
                             });
  if (it == vertices.end() || !(*it == v)) return -1;
  return static_cast<int>(it - vertices.begin());
}

int Shape::center_index(const HexCoord& c) const {
  auto it = std::lower_bound(centers.begin(), centers.end(), c,
                             [](const HexCoord& a, const HexCoord& b) {
                               return canonical_less(a, b);
                             });
  if (it == centers.end() || !(*it == c)) return -1;
  return static_cast<int>(it - centers.begin());
}

Shape build_shape(ShapeFamily family, int order) {
  if (!family_order_supported(family, order)) throw_unsupported(family, order);
  const long long expected = expected_vertex_count(family, order);
  if (expected > std::numeric_limits<int>::max() / 4) {
    std::ostringstream msg;
    msg << family_name(family) << " order " << order << " is too large to construct ("
        << expected << " vertices)";
    throw UnsupportedShapeError(msg.str());
  }

  Shape shape;
  shape.family = family;
  shape.order = order;
  shape.centers = family_centers(family, order);

  std::vector<VertexKey> corners;
  corners.reserve(shape.centers.size() * 6);
  for (const HexCoord& c : shape.centers)
    for (const VertexKey& v : hexagon_corners(c)) corners.push_back(v);
  std::sort(corners.begin(), corners.end(),
            [](const VertexKey& a, const VertexKey& b) { return canonical_less(a, b); });
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  shape.vertices = std::move(corners);

  const int n = shape.vertex_count();
  shape.membership.assign(n, 0);
  shape.hexagons_of_vertex.assign(n, {});
  shape.hexagons.reserve(shape.centers.size());
  for (int h = 0; h < static_cast<int>(shape.centers.size()); ++h) {
    std::array<int, 6> tuple{};
    const auto cs = hexagon_corners(shape.centers[h]);
    for (int i = 0; i < 6; ++i) {
      const int idx = shape.vertex_index(cs[i]);
      tuple[i] = idx;
      shape.membership[idx] += 1;
      shape.hexagons_of_vertex[idx].push_back(h);
    }
    shape.hexagons.push_back(tuple);
  }

  if (n != expected || shape.hexagon_count() != expected_hexagon_count(family, order))
    throw std::logic_error("shape construction does not match closed-form counts");
  return shape;
}

bool is_permutation(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

VerifyResult verify_solution(const Shape& shape, const Assignment& assignment) {
  VerifyResult result;
  auto add = [&result](const std::string& msg) { result.violations.push_back(msg); };

  if (assignment.family != shape.family || assignment.order != shape.order) {
    std::ostringstream msg;
    msg << "assignment is for " << family_name(assignment.family) << " order "
        << assignment.order << ", shape is " << family_name(shape.family) << " order "
        << shape.order;
    add(msg.str());
  }

  const int n = shape.vertex_count();
  const auto& values = assignment.values;
  if (static_cast<int>(values.size()) != n) {
    std::ostringstream msg;
    msg << "length mismatch: expected " << n << " values, got " << values.size();
    add(msg.str());
    return result;
  }

  std::vector<int> first_pos(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int v = values[i];
    if (v < 1 || v > n) {
      std::ostringstream msg;
      msg << "value " << v << " at position " << i << " is outside 1.." << n;
      add(msg.str());
      continue;
    }
    if (first_pos[v] >= 0) {
      std::ostringstream msg;
      msg << "duplicate value " << v << " at positions " << first_pos[v] << " and " << i;
      add(msg.str());
    } else {
      first_pos[v] = i;
    }
  }

  long long reference = 0;
  for (int h = 0; h < shape.hexagon_count(); ++h) {
    long long sum = 0;
    for (int idx : shape.hexagons[h]) sum += values[idx];
    if (h == 0) {
      reference = sum;
    } else if (sum != reference) {
      std::ostringstream msg;
      msg << "hexagon " << h << " (center " << shape.centers[h].q << ","
          << shape.centers[h].r << ") sums to " << sum << ", hexagon 0 sums to "
          << reference;
      add(msg.str());
    }
  }

  if (result.violations.empty()) result.magic = static_cast<int>(reference);
  return result;
}

Assignment complement_solution(const Assignment& assignment) {
  if (!is_permutation(assignment.values))
    throw std::invalid_argument("complement_solution: values are not a permutation of 1..n");
  const int n = static_cast<int>(assignment.values.size());
  Assignment out{assignment.family, assignment.order, assignment.values};
  for (int& v : out.values) v = n + 1 - v;
  return out;
}

}  // namespace htp
