#include "oracle.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace htp {

namespace {

struct Enumerator {
  const Shape& shape;
  const int magic;
  const int n;
  std::vector<int> position_of_vertex;
  std::vector<int> vertex_at_position;       // enumeration order
  std::vector<std::vector<int>> closes_at;   // position -> hexagons fully assigned there
  std::vector<int> value_of_vertex;
  std::vector<bool> used;
  unsigned long long count = 0;
  bool stop_at_first = false;
  bool found = false;

  Enumerator(const Shape& s, int m) : shape(s), magic(m), n(s.vertex_count()) {
    // Hexagon-major order: all vertices of hexagon 0 in canonical order,
    // then the remaining vertices of hexagon 1, and so on.
    position_of_vertex.assign(n, -1);
    for (const auto& hexagon : shape.hexagons) {
      std::array<int, 6> sorted = hexagon;
      std::sort(sorted.begin(), sorted.end());
      for (int v : sorted) {
        if (position_of_vertex[v] < 0) {
          position_of_vertex[v] = static_cast<int>(vertex_at_position.size());
          vertex_at_position.push_back(v);
        }
      }
    }
    closes_at.assign(n, {});
    for (int h = 0; h < shape.hexagon_count(); ++h) {
      int last = 0;
      for (int v : shape.hexagons[h]) last = std::max(last, position_of_vertex[v]);
      closes_at[last].push_back(h);
    }
    value_of_vertex.assign(n, 0);
    used.assign(n + 1, false);
  }

  bool hexagon_sum_ok(int h) const {
    int sum = 0;
    for (int v : shape.hexagons[h]) sum += value_of_vertex[v];
    return sum == magic;
  }

  void run(int pos) {
    if (pos == n) {
      ++count;
      found = true;
      return;
    }
    const int vertex = vertex_at_position[pos];
    for (int value = 1; value <= n; ++value) {
      if (used[value]) continue;
      used[value] = true;
      value_of_vertex[vertex] = value;
      bool ok = true;
      for (int h : closes_at[pos])
        if (!hexagon_sum_ok(h)) {
          ok = false;
          break;
        }
      if (ok) {
        run(pos + 1);
        // Keep the witness assignment intact on an early stop.
        if (stop_at_first && found) return;
      }
      used[value] = false;
      value_of_vertex[vertex] = 0;
    }
  }
};

void check_guard(const Shape& shape) {
  if (shape.vertex_count() > kOracleMaxVertices) {
    std::ostringstream msg;
    msg << "oracle supports at most " << kOracleMaxVertices << " vertices; "
        << family_name(shape.family) << " order " << shape.order << " has "
        << shape.vertex_count();
    throw UnsupportedShapeError(msg.str());
  }
}

}  // namespace

unsigned long long oracle_count(const Shape& shape, int magic) {
  check_guard(shape);
  Enumerator e(shape, magic);
  e.run(0);
  return e.count;
}

std::optional<Assignment> oracle_find(const Shape& shape, int magic) {
  check_guard(shape);
  Enumerator e(shape, magic);
  e.stop_at_first = true;
  e.run(0);
  if (!e.found) return std::nullopt;
  return Assignment{shape.family, shape.order, e.value_of_vertex};
}

}  // namespace htp
