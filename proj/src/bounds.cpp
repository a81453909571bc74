#include "bounds.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace htp {

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::ExactFormula: return "exact-formula";
    case BoundKind::Literature: return "literature";
    case BoundKind::Trivial: return "trivial";
  }
  return "?";
}

Rational DerivationReport::quantity(std::string_view label) const {
  for (const auto& [name, value] : quantities)
    if (name == label) return value;
  throw std::out_of_range("no derivation quantity named '" + std::string(label) + "'");
}

bool DerivationReport::has_quantity(std::string_view label) const {
  for (const auto& [name, value] : quantities)
    if (name == label) return true;
  return false;
}

long long average_magic(long long vertex_count) {
  if (vertex_count < 6)
    throw std::invalid_argument("average_magic requires at least 6 vertices");
  return 3 * vertex_count + 3;
}

long long complement_magic(long long magic, long long vertex_count) {
  return 6 * vertex_count + 6 - magic;
}

CertificateCheck check_cover_certificate(const Shape& shape, const CoverCertificate& cert) {
  const int n = shape.vertex_count();
  if (static_cast<int>(cert.hex_mult.size()) != shape.hexagon_count() ||
      static_cast<int>(cert.vtx_mult.size()) != n ||
      static_cast<int>(cert.target.size()) != n) {
    throw std::invalid_argument("cover certificate does not match the shape's index ranges");
  }
  for (int v = 0; v < n; ++v) {
    long long achieved = cert.vtx_mult[v];
    for (int h : shape.hexagons_of_vertex[v]) achieved += cert.hex_mult[h];
    if (achieved != cert.target[v]) return {false, v, achieved, cert.target[v]};
  }
  return {true, -1, 0, 0};
}

namespace {

// Sum of the k largest values in 1..n.
long long top_sum(long long n, long long k) { return k * n - k * (k - 1) / 2; }

// Sum of 1..k.
long long bottom_sum(long long k) { return k * (k + 1) / 2; }

long long floor_rational(const Rational& x) {
  const long long num = x.numerator();
  const long long den = x.denominator();  // normalized, > 0
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::string rational_str(const Rational& x) {
  std::ostringstream os;
  os << x.numerator();
  if (x.denominator() != 1) os << "/" << x.denominator();
  return os.str();
}

bool hexagons_share_vertex(const Shape& shape, int a, int b) {
  for (int v : shape.hexagons[a])
    for (int w : shape.hexagons[b])
      if (v == w) return true;
  return false;
}

// Lexicographically smallest set (by canonical hexagon index) of `count`
// pairwise vertex-disjoint hexagons.
std::vector<int> first_disjoint_hexagons(const Shape& shape, int count) {
  std::vector<int> chosen;
  std::function<bool(int)> extend = [&](int start) -> bool {
    if (static_cast<int>(chosen.size()) == count) return true;
    for (int h = start; h < shape.hexagon_count(); ++h) {
      bool disjoint = true;
      for (int c : chosen)
        if (hexagons_share_vertex(shape, c, h)) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      chosen.push_back(h);
      if (extend(h + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!extend(0))
    throw std::logic_error("no pairwise disjoint hexagon set of the required size exists");
  return chosen;
}

// 1 for every vertex covered by at least one of the given hexagons.
std::vector<char> cover_marks(const Shape& shape, const std::vector<int>& hexes) {
  std::vector<char> marks(shape.vertex_count(), 0);
  for (int h : hexes)
    for (int v : shape.hexagons[h]) marks[v] = 1;
  return marks;
}

std::vector<int> indices_where(const std::vector<char>& marks, char value) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(marks.size()); ++i)
    if (marks[i] == value) out.push_back(i);
  return out;
}

void require_size(const std::vector<int>& group, int expected, const char* what) {
  if (static_cast<int>(group.size()) != expected) {
    std::ostringstream msg;
    msg << what << ": expected " << expected << " vertices, found " << group.size();
    throw std::logic_error(msg.str());
  }
}

void attach_checked(const Shape& shape, DerivationReport& report, CoverCertificate cert) {
  const CertificateCheck check = check_cover_certificate(shape, cert);
  if (!check.valid) {
    std::ostringstream msg;
    msg << "cover certificate '" << cert.name << "' fails at vertex " << check.failing_vertex
        << " (covered " << check.achieved << ", expected " << check.expected << ")";
    throw std::logic_error(msg.str());
  }
  report.certificates.push_back(std::move(cert));
}

CoverCertificate unit_cover(const Shape& shape, std::string name,
                            const std::vector<int>& hexes, const std::vector<int>& loose) {
  CoverCertificate cert;
  cert.name = std::move(name);
  cert.hex_mult.assign(shape.hexagon_count(), 0);
  cert.vtx_mult.assign(shape.vertex_count(), 0);
  cert.target.assign(shape.vertex_count(), 1);
  for (int h : hexes) cert.hex_mult[h] = 1;
  for (int v : loose) cert.vtx_mult[v] = 1;
  return cert;
}

void set_common(DerivationReport& report, const Shape& shape) {
  report.add("n", shape.vertex_count());
  report.add("value_total", shape.value_total());
}

void finish(MagicBounds& bounds, DerivationReport& report, const Shape& shape,
            const Rational& upper_exact, BoundKind kind) {
  const long long n = shape.vertex_count();
  const long long upper = floor_rational(upper_exact);
  const long long lower = complement_magic(upper, n);
  bounds = {static_cast<int>(lower), static_cast<int>(upper), kind};
  if (upper_exact.denominator() != 1) report.add("upper_exact", upper_exact);
  report.add("upper", upper);
  report.add("lower", lower);
}

// ---- one hexagon: the order-1 diamond and order-1 hexagonal shapes -------

void derive_single_hexagon(const Shape& shape, MagicBounds& bounds, DerivationReport& report) {
  set_common(report, shape);
  report.chain.push_back("one hexagon holds all of 1..6, so M = 21");
  finish(bounds, report, shape, Rational(21), BoundKind::ExactFormula);
  attach_checked(shape, report, unit_cover(shape, "whole-cover", {0}, {}));
}

// ---- 2x2 diamond ----------------------------------------------------------

void derive_diamond2(const Shape& shape, MagicBounds& bounds, DerivationReport& report) {
  const long long n = shape.vertex_count();  // 16
  const long long total = shape.value_total();

  const std::vector<int> pair = first_disjoint_hexagons(shape, 2);
  std::vector<int> middle;
  for (int h = 0; h < shape.hexagon_count(); ++h)
    if (std::find(pair.begin(), pair.end(), h) == pair.end()) middle.push_back(h);

  const std::vector<char> covered = cover_marks(shape, pair);
  const std::vector<int> outside = indices_where(covered, 0);
  require_size(outside, 4, "2x2 diamond: vertices outside the disjoint pair");

  // Vertices shared by the two middle hexagons; each sits on three hexagons
  // of the full shape.
  std::vector<int> shared;
  for (int v : shape.hexagons[middle[0]])
    for (int w : shape.hexagons[middle[1]])
      if (v == w) shared.push_back(v);
  std::sort(shared.begin(), shared.end());
  require_size(shared, 2, "2x2 diamond: vertices shared by the middle hexagons");
  for (int v : shared)
    if (shape.membership[v] != 3)
      throw std::logic_error("2x2 diamond: shared middle vertex is not a triple point");

  std::vector<char> in_middle = cover_marks(shape, middle);
  std::vector<int> once_in_middle;  // groups b and c: covered once by the middle pair
  for (int v = 0; v < n; ++v) {
    const bool is_shared = std::find(shared.begin(), shared.end(), v) != shared.end();
    if (in_middle[v] && !is_shared) once_in_middle.push_back(v);
  }

  const long long pair_max = top_sum(n, 2);                // best sum on the shared pair
  const long long top_six = top_sum(n, 6);                 // best sum on shared + single group
  const long long rhs_max = pair_max + top_six + total;    // 4M = 2A + B + 136

  set_common(report, shape);
  report.add("shared_pair_size", 2);
  report.add("outside_size", 4);
  report.add("shared_pair_max", pair_max);
  report.add("top_six_max", top_six);
  report.add("identity_rhs_max", rhs_max);
  report.chain.push_back(
      "the two opposite-corner hexagons plus the 4 outside vertices cover 1..16 once: "
      "C = 136 - 2M");
  report.chain.push_back(
      "the two middle hexagons cover their 2 shared triple points twice and the rest once: "
      "2M = 2A + B + C");
  std::ostringstream line;
  line << "eliminating C: 4M = 2A + B + 136 <= " << pair_max << " + " << top_six << " + "
       << total << " = " << rhs_max;
  report.chain.push_back(line.str());
  finish(bounds, report, shape, Rational(rhs_max, 4), BoundKind::ExactFormula);
  report.chain.push_back("complement transform: lower = 102 - 62 = 40");

  attach_checked(shape, report, unit_cover(shape, "disjoint-pair-cover", pair, outside));

  CoverCertificate middle_cert;
  middle_cert.name = "middle-pair-coverage";
  middle_cert.hex_mult.assign(shape.hexagon_count(), 0);
  middle_cert.vtx_mult.assign(n, 0);
  middle_cert.target.assign(n, 0);
  for (int h : middle) middle_cert.hex_mult[h] = 1;
  for (int v : shared) middle_cert.target[v] = 2;
  for (int v : once_in_middle) middle_cert.target[v] = 1;
  attach_checked(shape, report, middle_cert);
}

// ---- 3x3 diamond (literature range + endpoint refutation) ----------------

struct Diamond3Groups {
  std::vector<int> corner_hexes;  // four pairwise disjoint hexagons
  std::vector<int> free_vertices; // the six vertices they miss
  int center_hex = -1;
  std::vector<int> triple, dbl, single;  // by membership among the outer eight
};

Diamond3Groups diamond3_groups(const Shape& shape) {
  Diamond3Groups g;
  g.corner_hexes = first_disjoint_hexagons(shape, 4);
  const std::vector<char> covered = cover_marks(shape, g.corner_hexes);
  g.free_vertices = indices_where(covered, 0);
  require_size(g.free_vertices, 6, "3x3 diamond: vertices outside the four disjoint hexagons");

  g.center_hex = shape.center_index(HexCoord{1, 1});
  if (g.center_hex < 0) throw std::logic_error("3x3 diamond: no center hexagon");
  for (int v = 0; v < shape.vertex_count(); ++v) {
    int outer = 0;
    for (int h : shape.hexagons_of_vertex[v])
      if (h != g.center_hex) ++outer;
    if (outer == 3) g.triple.push_back(v);
    else if (outer == 2) g.dbl.push_back(v);
    else if (outer == 1) g.single.push_back(v);
    else throw std::logic_error("3x3 diamond: vertex misses all outer hexagons");
  }
  require_size(g.triple, 2, "3x3 diamond: triple-covered group");
  require_size(g.dbl, 14, "3x3 diamond: double-covered group");
  require_size(g.single, 14, "3x3 diamond: single-covered group");
  return g;
}

Diamond3Refutation refute_on(const Shape& shape, const Diamond3Groups& g, int magic) {
  const long long n = shape.vertex_count();  // 30
  const long long total = shape.value_total();

  Diamond3Refutation out;
  out.requested_magic = magic;
  out.refuted_magic =
      static_cast<int>(std::max<long long>(magic, complement_magic(magic, n)));
  out.t_size = static_cast<int>(g.triple.size());
  out.d_size = static_cast<int>(g.dbl.size());
  out.s_size = static_cast<int>(g.single.size());

  out.f_sum = total - 4LL * out.refuted_magic;
  if (out.f_sum < bottom_sum(6)) {
    std::ostringstream msg;
    msg << "magic " << magic << " is outside the refutation domain: the six free vertices "
        << "would have to sum to " << out.f_sum << " < 21";
    throw std::domain_error(msg.str());
  }

  // Of the six free vertices, exactly two are double-covered by the outer
  // eight hexagons; the other four are single-covered.
  int free_doubles = 0;
  for (int v : g.free_vertices)
    if (std::find(g.dbl.begin(), g.dbl.end(), v) != g.dbl.end()) ++free_doubles;
  if (free_doubles != 2)
    throw std::logic_error("3x3 diamond: free vertices do not split 2 double / 4 single");

  out.f_d_max = out.f_sum - bottom_sum(4);
  out.t_max = top_sum(n, out.t_size);
  const long long non_free_slots = out.t_size + out.d_size - free_doubles;
  out.td_max = top_sum(n, non_free_slots) + out.f_d_max;
  out.bound_8m = total + out.t_max + out.td_max;
  out.refuted = 8LL * out.refuted_magic > out.bound_8m;
  return out;
}

void derive_diamond3(const Shape& shape, MagicBounds& bounds, DerivationReport& report) {
  const Diamond3Groups g = diamond3_groups(shape);
  const Diamond3Refutation top = refute_on(shape, g, 110);

  // Interior of the range is taken from the published search literature;
  // only the endpoints are settled here.
  const int lit_lower = 76;
  const int lit_upper = 110;
  const int upper = top.refuted ? lit_upper - 1 : lit_upper;
  const int lower = static_cast<int>(complement_magic(upper, shape.vertex_count()));

  set_common(report, shape);
  report.add("literature_lower", lit_lower);
  report.add("literature_upper", lit_upper);
  report.add("f_sum", top.f_sum);
  report.add("f_d_max", top.f_d_max);
  report.add("t_max", top.t_max);
  report.add("td_max", top.td_max);
  report.add("bound_8m", top.bound_8m);
  report.add("t_size", top.t_size);
  report.add("d_size", top.d_size);
  report.add("s_size", top.s_size);
  report.chain.push_back("published search results give 76 <= M <= 110 with every value in "
                         "[77,108] achieved");
  report.chain.push_back("four disjoint hexagons leave 6 free vertices: 4M + f = 465");
  report.chain.push_back("at M = 110: f = 25, so the two doubly-covered free vertices sum to "
                         "at most 15");
  std::ostringstream line;
  line << "the eight outer hexagons give 8M = 3t + 2d + s = 465 + 2t + d <= 465 + " << top.t_max
       << " + " << top.td_max << " = " << top.bound_8m << " < 880";
  report.chain.push_back(line.str());
  report.chain.push_back("so M = 110 is impossible, and by the complement transform so is 76");
  report.add("upper", upper);
  report.add("lower", lower);
  bounds = {lower, upper, BoundKind::Literature};

  attach_checked(shape, report,
                 unit_cover(shape, "corner-cover", g.corner_hexes, g.free_vertices));

  CoverCertificate outer;
  outer.name = "outer-eight-membership";
  outer.hex_mult.assign(shape.hexagon_count(), 1);
  outer.hex_mult[g.center_hex] = 0;
  outer.vtx_mult.assign(shape.vertex_count(), 0);
  outer.target.assign(shape.vertex_count(), 0);
  for (int v : g.triple) outer.target[v] = 3;
  for (int v : g.dbl) outer.target[v] = 2;
  for (int v : g.single) outer.target[v] = 1;
  attach_checked(shape, report, outer);
}

// ---- 2x2 triangular -------------------------------------------------------

void derive_triangular2(const Shape& shape, MagicBounds& bounds, DerivationReport& report) {
  const long long n = shape.vertex_count();  // 13
  const long long total = shape.value_total();

  std::vector<int> triple, dbl, single;
  for (int v = 0; v < n; ++v) {
    if (shape.membership[v] == 3) triple.push_back(v);
    else if (shape.membership[v] == 2) dbl.push_back(v);
    else single.push_back(v);
  }
  require_size(triple, 1, "2x2 triangular: triple points");
  require_size(dbl, 3, "2x2 triangular: double points");
  require_size(single, 9, "2x2 triangular: single points");

  const long long a_max = top_sum(n, 1);
  const long long ab_max = top_sum(n, 4);  // triple point plus the three doubles
  const long long rhs_max = a_max + ab_max + total;

  set_common(report, shape);
  report.add("triple_size", 1);
  report.add("double_size", 3);
  report.add("single_size", 9);
  report.add("triple_max", a_max);
  report.add("triple_plus_doubles_max", ab_max);
  report.add("identity_rhs_max", rhs_max);
  report.chain.push_back("summing all three hexagons by membership: 3M = 3a + 2B + C");
  std::ostringstream line;
  line << "substituting C = 91 - a - B: 3M = 2a + B + 91 <= " << a_max << " + " << ab_max
       << " + " << total << " = " << rhs_max;
  report.chain.push_back(line.str());
  finish(bounds, report, shape, Rational(rhs_max, 3), BoundKind::ExactFormula);
  report.chain.push_back("complement transform: lower = 84 - 50 = 34");

  CoverCertificate cert;
  cert.name = "all-hexagons-membership";
  cert.hex_mult.assign(shape.hexagon_count(), 1);
  cert.vtx_mult.assign(n, 0);
  cert.target.assign(n, 0);
  for (int v : triple) cert.target[v] = 3;
  for (int v : dbl) cert.target[v] = 2;
  for (int v : single) cert.target[v] = 1;
  attach_checked(shape, report, cert);
}

// ---- 3x3 triangular -------------------------------------------------------

void derive_triangular3(const Shape& shape, MagicBounds& bounds, DerivationReport& report) {
  const long long total = shape.value_total();  // 253

  const std::vector<int> corners = first_disjoint_hexagons(shape, 3);
  const std::vector<char> covered = cover_marks(shape, corners);
  const std::vector<int> outside = indices_where(covered, 0);
  require_size(outside, 4, "3x3 triangular: vertices outside the disjoint corner hexagons");

  const long long outside_min = bottom_sum(4);
  const long long rhs_max = total - outside_min;

  set_common(report, shape);
  report.add("outside_size", 4);
  report.add("outside_min", outside_min);
  report.add("identity_rhs_max", rhs_max);
  report.chain.push_back(
      "three disjoint corner hexagons plus 4 leftover vertices cover 1..22 once: "
      "3M = 253 - (sum of the leftover vertices)");
  std::ostringstream line;
  line << "leftover is minimized by {1,2,3,4}: 3M <= " << rhs_max;
  report.chain.push_back(line.str());
  finish(bounds, report, shape, Rational(rhs_max, 3), BoundKind::ExactFormula);
  report.chain.push_back("complement transform: lower = 138 - 81 = 57");
  report.warnings.push_back(
      "previously reported upper bound 71 contradicts the covering identity and the "
      "complement of the lower bound 57; using 81");

  attach_checked(shape, report, unit_cover(shape, "corner-cover", corners, outside));
}

// ---- 4x4 triangular -------------------------------------------------------

void derive_triangular4(const Shape& shape, MagicBounds& bounds, DerivationReport& report) {
  const long long n = shape.vertex_count();  // 33
  const long long total = shape.value_total();

  const std::vector<int> disjoint = first_disjoint_hexagons(shape, 4);
  const int middle = shape.center_index(HexCoord{1, 1});
  if (std::find(disjoint.begin(), disjoint.end(), middle) == disjoint.end())
    throw std::logic_error("4x4 triangular: middle hexagon not in the disjoint set");

  const std::vector<char> covered = cover_marks(shape, disjoint);
  const std::vector<int> leftover = indices_where(covered, 0);
  require_size(leftover, 9, "4x4 triangular: leftover after the disjoint four");

  std::vector<char> on_middle(n, 0);
  for (int v : shape.hexagons[middle]) on_middle[v] = 1;

  std::vector<int> outer_triple;                    // group c: triple points off the middle hexagon
  std::vector<int> covered_double, covered_single;  // groups d, e
  std::vector<int> loose_double, loose_single;      // groups a, b (the leftover)
  for (int v = 0; v < n; ++v) {
    const int m = shape.membership[v];
    if (on_middle[v]) {
      if (m != 3) throw std::logic_error("4x4 triangular: middle corner is not a triple point");
      continue;
    }
    if (!covered[v]) {
      if (m == 3) throw std::logic_error("4x4 triangular: leftover vertex is a triple point");
      (m == 2 ? loose_double : loose_single).push_back(v);
    } else {
      if (m == 3) outer_triple.push_back(v);
      else (m == 2 ? covered_double : covered_single).push_back(v);
    }
  }
  require_size(outer_triple, 3, "4x4 triangular: triple points off the middle hexagon");
  require_size(covered_double, 6, "4x4 triangular: covered double points");
  require_size(covered_single, 9, "4x4 triangular: covered single points");
  require_size(loose_double, 3, "4x4 triangular: leftover double points");
  require_size(loose_single, 6, "4x4 triangular: leftover single points");

  const long long c_max = top_sum(n, 3);        // 96
  const long long cd_max = top_sum(n, 9);       // 261
  const long long b_min = bottom_sum(6);        // 21
  const long long rhs_max = c_max + cd_max - b_min + 2 * total;

  set_common(report, shape);
  report.add("outer_triple_size", 3);
  report.add("covered_double_size", 6);
  report.add("leftover_size", 9);
  report.add("outer_triple_max", c_max);
  report.add("triple_plus_double_max", cd_max);
  report.add("leftover_single_min", b_min);
  report.add("identity_rhs_max", rhs_max);
  report.chain.push_back(
      "three corner hexagons plus the middle hexagon are disjoint: A + B + 4M = 561");
  report.chain.push_back(
      "summing all ten hexagons by membership: 10M = 3(C + M) + 2(A + D) + (B + E)");
  std::ostringstream line;
  line << "eliminating A and E: 12M = 2C + D - B + 1122 <= " << c_max << " + " << cd_max
       << " - " << b_min << " + 1122 = " << rhs_max;
  report.chain.push_back(line.str());
  finish(bounds, report, shape, Rational(rhs_max, 12), BoundKind::ExactFormula);
  report.chain.push_back("complement transform: lower = 204 - 121 = 83");
  report.warnings.push_back(
      "previously reported ceiling 122 is loose: 12M <= 1458 already forces M <= 121 "
      "(= 204 - 83, matching the lower bound 83)");

  attach_checked(shape, report, unit_cover(shape, "disjoint-four-cover", disjoint, leftover));

  CoverCertificate all;
  all.name = "all-hexagons-membership";
  all.hex_mult.assign(shape.hexagon_count(), 1);
  all.vtx_mult.assign(n, 0);
  all.target.assign(n, 0);
  for (int v = 0; v < n; ++v)
    all.target[v] = on_middle[v] ? 3 : shape.membership[v];
  for (int v : outer_triple) all.target[v] = 3;
  attach_checked(shape, report, all);
}

// ---- 2x2 hexagonal --------------------------------------------------------

void derive_hexagonal2(const Shape& shape, MagicBounds& bounds, DerivationReport& report) {
  const long long n = shape.vertex_count();  // 24
  const long long total = shape.value_total();

  const int center = shape.center_index(HexCoord{0, 0});
  if (center < 0) throw std::logic_error("2x2 hexagonal: no center hexagon");
  std::vector<int> ring;
  for (int h = 0; h < shape.hexagon_count(); ++h)
    if (h != center) ring.push_back(h);

  std::vector<int> ring_membership(n, 0);
  for (int h : ring)
    for (int v : shape.hexagons[h]) ++ring_membership[v];

  std::vector<char> on_center(n, 0);
  for (int v : shape.hexagons[center]) on_center[v] = 1;

  std::vector<int> spokes, singles;
  for (int v = 0; v < n; ++v) {
    if (on_center[v]) {
      if (ring_membership[v] != 2)
        throw std::logic_error("2x2 hexagonal: center corner not on exactly two ring hexagons");
      continue;
    }
    if (ring_membership[v] == 2) spokes.push_back(v);
    else if (ring_membership[v] == 1) singles.push_back(v);
    else throw std::logic_error("2x2 hexagonal: unexpected ring membership");
  }
  require_size(spokes, 6, "2x2 hexagonal: doubly-covered vertices outside the center");
  require_size(singles, 12, "2x2 hexagonal: singly-covered ring vertices");

  const long long spoke_max = top_sum(n, 6);  // 129
  const long long rhs_max = total + spoke_max;

  set_common(report, shape);
  report.add("spoke_size", 6);
  report.add("single_size", 12);
  report.add("spoke_max", spoke_max);
  report.add("identity_rhs_max", rhs_max);
  report.chain.push_back(
      "summing the six ring hexagons counts the center corners and the six spoke vertices "
      "twice: 6M = 2M + 2B + C");
  std::ostringstream line;
  line << "substituting M + B + C = 300: 5M = 300 + B <= 300 + " << spoke_max << " = "
       << rhs_max;
  report.chain.push_back(line.str());
  finish(bounds, report, shape, Rational(rhs_max, 5), BoundKind::ExactFormula);
  report.chain.push_back("complement transform: lower = 150 - 85 = 65");

  CoverCertificate cert;
  cert.name = "ring-coverage";
  cert.hex_mult.assign(shape.hexagon_count(), 0);
  for (int h : ring) cert.hex_mult[h] = 1;
  cert.vtx_mult.assign(n, 0);
  cert.target.assign(n, 0);
  for (int v : shape.hexagons[center]) cert.target[v] = 2;
  for (int v : spokes) cert.target[v] = 2;
  for (int v : singles) cert.target[v] = 1;
  attach_checked(shape, report, cert);
}

// ---- 3x3 hexagonal --------------------------------------------------------

void derive_hexagonal3(const Shape& shape, MagicBounds& bounds, DerivationReport& report) {
  const long long n = shape.vertex_count();  // 54
  const long long total = shape.value_total();

  auto hex_set = [&shape](std::initializer_list<HexCoord> centers) {
    std::vector<int> out;
    for (const HexCoord& c : centers) {
      const int h = shape.center_index(c);
      if (h < 0) throw std::logic_error("3x3 hexagonal: cover hexagon missing from shape");
      out.push_back(h);
    }
    return out;
  };
  // Two seven-hexagon exact covers around the center: one through the
  // straight distance-2 neighbors, one through the staggered ones.
  const std::vector<int> straight = hex_set({HexCoord{0, 0}, HexCoord{2, 0}, HexCoord{0, 2},
                                             HexCoord{-2, 2}, HexCoord{-2, 0}, HexCoord{0, -2},
                                             HexCoord{2, -2}});
  const std::vector<int> staggered = hex_set({HexCoord{0, 0}, HexCoord{1, 1}, HexCoord{-1, 2},
                                              HexCoord{-2, 1}, HexCoord{-1, -1}, HexCoord{1, -2},
                                              HexCoord{2, -1}});

  const std::vector<char> in_straight = cover_marks(shape, straight);
  const std::vector<char> in_staggered = cover_marks(shape, staggered);
  const std::vector<int> miss_straight = indices_where(in_straight, 0);
  const std::vector<int> miss_staggered = indices_where(in_staggered, 0);
  require_size(miss_straight, 12, "3x3 hexagonal: vertices missed by the straight cover");
  require_size(miss_staggered, 12, "3x3 hexagonal: vertices missed by the staggered cover");

  std::vector<int> overlap;  // covered by both, excluding the center hexagon
  std::vector<char> on_center(n, 0);
  const int center = shape.center_index(HexCoord{0, 0});
  for (int v : shape.hexagons[center]) on_center[v] = 1;
  for (int v = 0; v < n; ++v)
    if (in_straight[v] && in_staggered[v] && !on_center[v]) overlap.push_back(v);
  require_size(overlap, 24, "3x3 hexagonal: overlap of the two covers");

  const long long miss_min = bottom_sum(24);  // the two missed sets are disjoint
  const long long rhs_max = 2 * total - miss_min;

  set_common(report, shape);
  report.add("straight_miss_size", 12);
  report.add("staggered_miss_size", 12);
  report.add("overlap_size", 24);
  report.add("miss_min", miss_min);
  report.add("identity_rhs_max", rhs_max);
  report.chain.push_back("the straight cover misses 12 vertices: 7M = 1485 - B");
  report.chain.push_back("the staggered cover misses 12 other vertices: 7M = 1485 - C");
  std::ostringstream line;
  line << "so B = C = 1485 - 7M, and B + C = 2970 - 14M >= " << miss_min
       << ", i.e. 14M <= " << rhs_max;
  report.chain.push_back(line.str());
  finish(bounds, report, shape, Rational(rhs_max, 14), BoundKind::ExactFormula);
  report.chain.push_back("complement transform: lower = 330 - 190 = 140");

  attach_checked(shape, report,
                 unit_cover(shape, "straight-cover", straight, miss_straight));
  attach_checked(shape, report,
                 unit_cover(shape, "staggered-cover", staggered, miss_staggered));
}

// ---- 2x2 star -------------------------------------------------------------

void derive_star2(const Shape& shape, MagicBounds& bounds, DerivationReport& report) {
  const long long total = shape.value_total();  // 903

  std::vector<int> cover;
  cover.push_back(shape.center_index(HexCoord{0, 0}));
  for (const HexCoord& tip : {HexCoord{1, 1}, HexCoord{-1, 2}, HexCoord{-2, 1},
                              HexCoord{-1, -1}, HexCoord{1, -2}, HexCoord{2, -1}}) {
    const int h = shape.center_index(tip);
    if (h < 0) throw std::logic_error("2x2 star: tip hexagon missing");
    cover.push_back(h);
  }

  if (total % 7 != 0) throw std::logic_error("2x2 star: 7M = 903 has no integer solution");
  const long long forced = total / 7;

  set_common(report, shape);
  report.add("cover_size", 7);
  report.add("forced_magic", forced);
  report.chain.push_back(
      "the center and the six tip hexagons cover all 42 vertices exactly once: 7M = 903");
  report.chain.push_back("so M = 129 is forced");
  finish(bounds, report, shape, Rational(forced), BoundKind::ExactFormula);

  attach_checked(shape, report, unit_cover(shape, "seven-hexagon-exact-cover", cover, {}));
}

// ---- fallback for orders with no specific derivation ----------------------

void derive_trivial(const Shape& shape, MagicBounds& bounds, DerivationReport& report) {
  const long long n = shape.vertex_count();
  const long long min_sum = bottom_sum(6);
  const long long max_sum = top_sum(n, 6);

  set_common(report, shape);
  report.add("min_hexagon_sum", min_sum);
  report.add("max_hexagon_sum", max_sum);
  std::ostringstream line;
  line << "no specific derivation at this order; any hexagon's six distinct values sum "
       << "within [" << min_sum << ", " << max_sum << "]";
  report.chain.push_back(line.str());
  report.chain.push_back("the interval is already complement-symmetric: 21 + (6n-15) = 6n+6");
  report.add("upper", max_sum);
  report.add("lower", min_sum);
  bounds = {static_cast<int>(min_sum), static_cast<int>(max_sum), BoundKind::Trivial};
}

}  // namespace

Diamond3Refutation refute_diamond3_extreme(int magic) {
  const Shape shape = build_shape(ShapeFamily::Diamond, 3);
  const Diamond3Groups g = diamond3_groups(shape);
  // The corner cover backing 4M + f = 465 must hold before any arithmetic.
  DerivationReport scratch;
  attach_checked(shape, scratch,
                 unit_cover(shape, "corner-cover", g.corner_hexes, g.free_vertices));
  return refute_on(shape, g, magic);
}

std::pair<MagicBounds, DerivationReport> bounds_for(ShapeFamily family, int order) {
  const Shape shape = build_shape(family, order);
  MagicBounds bounds;
  DerivationReport report;

  if ((family == ShapeFamily::Diamond || family == ShapeFamily::Hexagonal) && order == 1) {
    derive_single_hexagon(shape, bounds, report);
  } else if (family == ShapeFamily::Diamond && order == 2) {
    derive_diamond2(shape, bounds, report);
  } else if (family == ShapeFamily::Diamond && order == 3) {
    derive_diamond3(shape, bounds, report);
  } else if (family == ShapeFamily::Triangular && order == 2) {
    derive_triangular2(shape, bounds, report);
  } else if (family == ShapeFamily::Triangular && order == 3) {
    derive_triangular3(shape, bounds, report);
  } else if (family == ShapeFamily::Triangular && order == 4) {
    derive_triangular4(shape, bounds, report);
  } else if (family == ShapeFamily::Hexagonal && order == 2) {
    derive_hexagonal2(shape, bounds, report);
  } else if (family == ShapeFamily::Hexagonal && order == 3) {
    derive_hexagonal3(shape, bounds, report);
  } else if (family == ShapeFamily::Star && order == 2) {
    derive_star2(shape, bounds, report);
  } else {
    derive_trivial(shape, bounds, report);
  }

  const long long n = shape.vertex_count();
  if (bounds.lower > bounds.upper || bounds.lower + bounds.upper != 6 * n + 6)
    throw std::logic_error("derived bounds are not complement-symmetric");
  return {bounds, report};
}

std::string format_bounds_report(const MagicBounds& bounds, const DerivationReport& report) {
  std::ostringstream os;
  os << bounds.lower << " " << bounds.upper << " " << bound_kind_name(bounds.kind) << "\n";
  for (const auto& [label, value] : report.quantities)
    os << "  " << label << " = " << rational_str(value) << "\n";
  if (!report.chain.empty()) {
    os << "derivation:\n";
    for (const std::string& line : report.chain) os << "  " << line << "\n";
  }
  for (const std::string& w : report.warnings) os << "warning: " << w << "\n";
  return os.str();
}

}  // namespace htp
