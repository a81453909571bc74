// Brute-force reference enumerator, kept deliberately simple so its
// correctness is obvious by inspection. It shares nothing with the main
// solver's ordering or propagation.
#pragma once

#include <optional>

#include "hexgrid.hpp"

namespace htp {

// The oracle refuses shapes with more vertices than this.
inline constexpr int kOracleMaxVertices = 16;

// Exact number of assignments (all labelings distinct) with every hexagonal
// sum equal to magic. Enumerates permutations in a fixed hexagon-major
// vertex order, pruning only when a fully assigned hexagon misses the sum.
unsigned long long oracle_count(const Shape& shape, int magic);

// First witness under the same fixed enumeration order, if one exists.
std::optional<Assignment> oracle_find(const Shape& shape, int magic);

}  // namespace htp
