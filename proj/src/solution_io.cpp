#include "solution_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace htp {

namespace {

constexpr std::string_view kHeader = "htp-solution v1";

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    std::ostringstream msg;
    msg << "malformed " << what << " '" << token << "'";
    throw SolutionParseError(msg.str());
  }
  return value;
}

// Splits on single spaces; adjacent/leading/trailing spaces are rejected by
// yielding empty tokens.
std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t begin = 0;
  while (begin <= line.size()) {
    const size_t space = line.find(' ', begin);
    const size_t end = space == std::string_view::npos ? line.size() : space;
    tokens.push_back(line.substr(begin, end - begin));
    if (space == std::string_view::npos) break;
    begin = space + 1;
  }
  return tokens;
}

}  // namespace

std::string serialize_solution(const SolutionFile& solution) {
  std::ostringstream os;
  os << kHeader << "\n";
  os << "shape " << family_name(solution.family) << " " << solution.order << "\n";
  os << "magic " << solution.magic << "\n";
  os << "values";
  for (int v : solution.values) os << " " << v;
  os << "\n";
  return os.str();
}

SolutionFile parse_solution(std::string_view text) {
  if (text.find('\r') != std::string_view::npos)
    throw SolutionParseError("solution files use LF line endings");
  std::vector<std::string_view> lines;
  size_t begin = 0;
  while (begin < text.size()) {
    const size_t nl = text.find('\n', begin);
    if (nl == std::string_view::npos)
      throw SolutionParseError("missing final newline");
    lines.push_back(text.substr(begin, nl - begin));
    begin = nl + 1;
  }
  if (lines.size() != 4)
    throw SolutionParseError("expected exactly 4 lines (header, shape, magic, values)");
  if (lines[0] != kHeader)
    throw SolutionParseError("unrecognized header '" + std::string(lines[0]) + "'");

  const auto shape_tokens = split_tokens(lines[1]);
  if (shape_tokens.size() != 3 || shape_tokens[0] != "shape")
    throw SolutionParseError("malformed shape line");
  const auto family = family_from_name(shape_tokens[1]);
  if (!family)
    throw SolutionParseError("unknown shape family '" + std::string(shape_tokens[1]) + "'");
  const int order = parse_int(shape_tokens[2], "shape order");

  const auto magic_tokens = split_tokens(lines[2]);
  if (magic_tokens.size() != 2 || magic_tokens[0] != "magic")
    throw SolutionParseError("malformed magic line");
  const int magic = parse_int(magic_tokens[1], "magic constant");

  const auto value_tokens = split_tokens(lines[3]);
  if (value_tokens.size() < 2 || value_tokens[0] != "values")
    throw SolutionParseError("malformed values line");

  SolutionFile solution;
  solution.family = *family;
  solution.order = order;
  solution.magic = magic;
  for (size_t i = 1; i < value_tokens.size(); ++i)
    solution.values.push_back(parse_int(value_tokens[i], "value"));

  const long long expected = expected_vertex_count(*family, order);  // may throw
  if (static_cast<long long>(solution.values.size()) != expected) {
    std::ostringstream msg;
    msg << family_name(*family) << " order " << order << " has " << expected
        << " vertices, file lists " << solution.values.size() << " values";
    throw SolutionParseError(msg.str());
  }
  return solution;
}

SolutionFile read_solution_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_solution(buffer.str());
}

void write_solution_file(const SolutionFile& solution, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << serialize_solution(solution);
  if (!out) throw IoError("failed writing '" + path + "'");
}

std::string shape_to_json(const Shape& shape) {
  nlohmann::ordered_json j;
  j["family"] = family_name(shape.family);
  j["order"] = shape.order;
  nlohmann::ordered_json vertices = nlohmann::json::array();
  for (const VertexKey& v : shape.vertices) {
    nlohmann::ordered_json vj;
    vj["q"] = v.q;
    vj["r"] = v.r;
    vj["cls"] = v.cls == CornerClass::N ? "N" : "S";
    vertices.push_back(vj);
  }
  j["vertices"] = vertices;
  nlohmann::ordered_json hexagons = nlohmann::json::array();
  for (const auto& hexagon : shape.hexagons) hexagons.push_back(hexagon);
  j["hexagons"] = hexagons;
  return j.dump();
}

}  // namespace htp
