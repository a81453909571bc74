// Magic-constant range derivations for every shape family, each backed by a
// machine-checkable cover certificate, plus the complement identity and the
// refutation that pins the 3x3 diamond endpoints.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "hexgrid.hpp"

namespace htp {

using Rational = boost::rational<long long>;

enum class BoundKind { ExactFormula, Literature, Trivial };

const char* bound_kind_name(BoundKind kind);

struct MagicBounds {
  int lower = 0;
  int upper = 0;
  BoundKind kind = BoundKind::Trivial;
};

// Multiplicity vector asserting a linear coverage identity: for every vertex
// v, the number of selected hexagons containing v plus its individual
// multiplicity equals target[v].
struct CoverCertificate {
  std::string name;
  std::vector<int> hex_mult;  // one entry per hexagon
  std::vector<int> vtx_mult;  // one entry per vertex
  std::vector<int> target;    // one entry per vertex
};

struct CertificateCheck {
  bool valid = false;
  int failing_vertex = -1;
  long long achieved = 0;
  long long expected = 0;
};

// Validates the coverage identity; reports the first failing vertex with the
// coverage it achieved. Throws std::invalid_argument on size mismatch.
CertificateCheck check_cover_certificate(const Shape& shape, const CoverCertificate& cert);

// Named intermediate quantities (exact rationals) and the inequality chain
// of one derivation; every quantity is recomputable from the shape and 1..n.
struct DerivationReport {
  std::vector<std::pair<std::string, Rational>> quantities;
  std::vector<std::string> chain;
  std::vector<std::string> warnings;
  std::vector<CoverCertificate> certificates;

  void add(const std::string& label, Rational value) { quantities.emplace_back(label, value); }
  Rational quantity(std::string_view label) const;  // throws std::out_of_range
  bool has_quantity(std::string_view label) const;
};

// 3n+3: the fixed point of the complement transform on magic constants.
long long average_magic(long long vertex_count);

// 6n+6-M, per the reverse-order transform. Involution.
long long complement_magic(long long magic, long long vertex_count);

// Arithmetic of the endpoint refutation for the 3x3 diamond: four disjoint
// hexagons leave six free vertices whose sum 465-4M caps the doubly-covered
// pair, and the eight outer hexagons then cannot reach 8M.
struct Diamond3Refutation {
  int requested_magic = 0;  // as passed in
  int refuted_magic = 0;    // after complement normalization (>= average)
  long long f_sum = 0;      // sum left for the six free vertices
  long long f_d_max = 0;    // max for the two free vertices covered twice
  long long t_max = 0;      // max sum of the triple-covered pair
  long long td_max = 0;     // max combined sum over triple + double groups
  long long bound_8m = 0;   // 465 + t_max + td_max
  bool refuted = false;     // 8M exceeds bound_8m
  int t_size = 0;
  int d_size = 0;
  int s_size = 0;
};

// Throws std::domain_error when M (after complement normalization) leaves no
// room for six distinct positive free values.
Diamond3Refutation refute_diamond3_extreme(int magic);

// Dispatch over every derivation. Pure: identical inputs give identical
// reports. Throws UnsupportedShapeError when the shape cannot be built.
std::pair<MagicBounds, DerivationReport> bounds_for(ShapeFamily family, int order);

// Text rendering used by the command-line surface.
std::string format_bounds_report(const MagicBounds& bounds, const DerivationReport& report);

}  // namespace htp
