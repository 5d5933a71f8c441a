#include <doctest.h>

#include <fstream>
#include <sstream>

#include "recross/io.hpp"
#include "recross/svg.hpp"

using namespace recross;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("parse a minimal drawing") {
  const Drawing d = parse_drawing("3\n0 0\n4 0\n2 3\n");
  CHECK(d.size() == 3);
  CHECK(d[2] == Point{2, 3});
}

TEST_CASE("comments and whitespace are tolerated, junk is not") {
  const Drawing d = parse_drawing("# witness\n# more\n3\n0 0\n4 0\n2 3\n");
  CHECK(d.size() == 3);
  CHECK_THROWS_AS(parse_drawing("3\n0 0\n4 x\n2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_drawing("3\n0 0\n4 0\n"), ParseError);
  CHECK_THROWS_AS(parse_drawing("3\n0 0\n4 0\n2 3\n9 9\n"), ParseError);
  CHECK_THROWS_AS(parse_drawing("3\n0 0 7\n4 0\n2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_drawing(""), ParseError);
  CHECK_THROWS_AS(parse_drawing("3\n0 0\n2000000 0\n2 3\n"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_drawing("# c\n3\n0 0\nbad 0\n2 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 4);
  }
}

TEST_CASE("collinear triples are rejected with the triple named") {
  try {
    parse_drawing("4\n0 0\n1 1\n5 0\n2 2\n");
    FAIL("expected GeneralPositionViolation");
  } catch (const GeneralPositionViolation& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    CHECK(e.k == 3);
  }
}

TEST_CASE("round trip through the corpus file") {
  const std::string path = std::string(TEST_DATA_DIR) + "/k9_optimal.pts";
  const std::string bytes = slurp(path);
  const Drawing d = parse_drawing(bytes);
  CHECK(write_drawing(d) == bytes);  // the corpus file is canonical
  CHECK(count_crossings(d).count() == 36);
}

TEST_CASE("write then parse is the identity") {
  const Drawing d = parse_drawing("4\n0 0\n10 0\n10 10\n0 10\n");
  CHECK(parse_drawing(write_drawing(d)) == d);
}

TEST_CASE("svg output is deterministic and complete") {
  const std::string path = std::string(TEST_DATA_DIR) + "/k9_optimal.pts";
  const Drawing d = parse_drawing(slurp(path));
  const std::string svg = render_colored_svg(d);
  CHECK(svg == render_colored_svg(d));

  auto count_tag = [&](const std::string& tag) {
    size_t n = 0, pos = 0;
    while ((pos = svg.find(tag, pos)) != std::string::npos) {
      ++n;
      pos += tag.size();
    }
    return n;
  };
  CHECK(count_tag("<line ") == 36);              // C(9,2) edges
  CHECK(count_tag("r=\"4\"") == 9);              // vertices
  CHECK(count_tag("r=\"2\"") == 36);             // one dot per crossing
}

TEST_CASE("K4 renders exactly one crossing dot") {
  const Drawing d = parse_drawing("4\n0 0\n10 0\n10 10\n0 10\n");
  const std::string svg = render_svg(d, std::nullopt, {});
  size_t n = 0, pos = 0;
  while ((pos = svg.find("r=\"2\"", pos)) != std::string::npos) {
    ++n;
    pos += 5;
  }
  CHECK(n == 1);
}

TEST_CASE("unsupported shapes fall back to uncoloured rendering") {
  const Drawing convex6({{995, 100}, {411, 912}, {-584, 812}, {-995, -100},
                         {-411, -912}, {584, -812}});
  const std::string svg = render_colored_svg(convex6);
  CHECK(svg.find("#d40000") == std::string::npos);  // no red vertices
  CHECK(svg.find("<svg") != std::string::npos);
}

TEST_CASE("palette overrides apply, empty overrides fall back") {
  const std::string path = std::string(TEST_DATA_DIR) + "/k9_optimal.pts";
  const Drawing d = parse_drawing(slurp(path));
  RenderSpec spec;
  spec.palette[Color::Red] = "#123456";
  const std::string svg = render_colored_svg(d, spec);
  CHECK(svg.find("#123456") != std::string::npos);
  RenderSpec empty_override;
  empty_override.palette[Color::Red] = "";
  CHECK(render_colored_svg(d, empty_override).find("#d40000") !=
        std::string::npos);
}

TEST_SUITE_END();
