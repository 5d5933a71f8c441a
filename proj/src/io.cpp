#include "recross/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace recross {

namespace {

struct Line {
  int number;        // 1-based position in the file
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    if (!line.empty() && line.front() != '#') out.push_back(Line{number, line});
    pos = end + 1;
  }
  return out;
}

std::int64_t parse_int(std::string_view token, int line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line_no, "not an integer: '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Drawing parse_drawing(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing vertex-count line");

  const auto head = split_fields(lines[0].text);
  if (head.size() != 1)
    throw ParseError(lines[0].number, "expected a single vertex count");
  const std::int64_t n = parse_int(head[0], lines[0].number);
  if (n < 3 || n > 100000)
    throw ParseError(lines[0].number, "vertex count out of range");

  if (static_cast<std::int64_t>(lines.size()) - 1 != n)
    throw ParseError(lines.empty() ? 1 : lines.back().number,
                     "expected " + std::to_string(n) + " coordinate lines, got " +
                         std::to_string(lines.size() - 1));

  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const Line& line = lines[i + 1];
    const auto fields = split_fields(line.text);
    if (fields.size() != 2)
      throw ParseError(line.number, "expected 'x y'");
    const std::int64_t x = parse_int(fields[0], line.number);
    const std::int64_t y = parse_int(fields[1], line.number);
    if (x < -kCoordBound || x > kCoordBound || y < -kCoordBound || y > kCoordBound)
      throw ParseError(line.number, "coordinate exceeds bound " +
                                        std::to_string(kCoordBound));
    pts.push_back(Point{x, y});
  }
  return Drawing(std::move(pts));  // general-position violations propagate
}

std::string write_drawing(const Drawing& d) {
  std::string out = std::to_string(d.size());
  out += '\n';
  for (const Point& p : d.points()) {
    out += std::to_string(p.x);
    out += ' ';
    out += std::to_string(p.y);
    out += '\n';
  }
  return out;
}

Drawing read_drawing_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_drawing(ss.str());
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

}  // namespace recross
