// Text solution files and the shape JSON emission. The file format is
// bit-exact: serialize and parse are mutual inverses on valid files.
#pragma once

#include <stdexcept>
#include <string>

#include "hexgrid.hpp"

namespace htp {

struct SolutionParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolutionFile {
  ShapeFamily family = ShapeFamily::Diamond;
  int order = 0;
  int magic = 0;
  std::vector<int> values;  // canonical vertex order
};

// Exactly four LF-terminated lines, no trailing whitespace:
//   htp-solution v1
//   shape <family> <order>
//   magic <M>
//   values <v1> <v2> ... <vn>
std::string serialize_solution(const SolutionFile& solution);

// Strict inverse of serialize_solution. Throws SolutionParseError on any
// formatting deviation, UnsupportedShapeError when the declared shape does
// not exist, and SolutionParseError when the value count does not match it.
SolutionFile parse_solution(std::string_view text);

SolutionFile read_solution_file(const std::string& path);   // throws IoError too
void write_solution_file(const SolutionFile& solution, const std::string& path);

// Compact single-line JSON, byte-identical across runs:
// {"family":..,"order":..,"vertices":[{"q":..,"r":..,"cls":"N|S"},..],
//  "hexagons":[[i0,..,i5],..]}
std::string shape_to_json(const Shape& shape);

}  // namespace htp
