#pragma once

#include <string>
#include <string_view>

#include "recross/geometry.hpp"

namespace recross {

struct ParseError : std::runtime_error {
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  int line;
};

// Drawing file format: optional '#' comment lines, a vertex-count line,
// then exactly n lines of "x y" with decimal integer coordinates.
// Parsing is strict: stray tokens, bad integers, wrong counts, duplicate
// points and collinear triples are all rejected with a location.
Drawing parse_drawing(std::string_view text);

// Canonical form: count line plus one "x y" line per point, no comments.
std::string write_drawing(const Drawing& d);

Drawing read_drawing_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace recross
