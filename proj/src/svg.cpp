#include "recross/svg.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace recross {

namespace {

using Big = boost::multiprecision::cpp_int;

// num/den truncated to six decimal places; den must be positive.
std::string fixed6(Big num, const Big& den) {
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  Big whole = num / den;
  Big rem = num % den;
  std::string frac;
  for (int i = 0; i < 6; ++i) {
    rem *= 10;
    frac += Big(rem / den).str();
    rem %= den;
  }
  return sign + whole.str() + "." + frac;
}

struct Frame {
  Big sx_num, sx_den;  // scale numerator/denominator
  std::int64_t minx, miny;
  int canvas, margin;

  // screen x of a rational drawing coordinate value/value_den
  std::string px(const Big& value, const Big& value_den) const {
    // margin + (value/value_den - minx) * sx_num/sx_den
    const Big num = Big(margin) * value_den * sx_den +
                    (value - Big(minx) * value_den) * sx_num;
    return fixed6(num, value_den * sx_den);
  }
  std::string py(const Big& value, const Big& value_den) const {
    const Big num = Big(canvas - margin) * value_den * sx_den -
                    (value - Big(miny) * value_den) * sx_num;
    return fixed6(num, value_den * sx_den);
  }
};

struct Rgb {
  int r, g, b;
};

Rgb parse_hex(const std::string& s) {
  auto hex = [&](size_t i) {
    const auto digit = [](char c) {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      return 0;
    };
    return digit(s[i]) * 16 + digit(s[i + 1]);
  };
  if (s.size() != 7 || s[0] != '#') return Rgb{128, 128, 128};
  return Rgb{hex(1), hex(3), hex(5)};
}

std::string to_hex(Rgb c) {
  const char* digits = "0123456789abcdef";
  std::string out = "#";
  for (int v : {c.r, c.g, c.b}) {
    out += digits[(v >> 4) & 15];
    out += digits[v & 15];
  }
  return out;
}

// Additive light mixing: a red and a green endpoint give a yellow edge.
Rgb blend(Rgb a, Rgb b) {
  return Rgb{std::max(a.r, b.r), std::max(a.g, b.g), std::max(a.b, b.b)};
}

std::string default_color(Color c) {
  switch (c) {
    case Color::Red: return "#d40000";
    case Color::Green: return "#00a000";
    case Color::Blue: return "#0000cc";
    case Color::White: return "#ffffff";
  }
  return "#333333";
}

}  // namespace

std::string render_svg(const Drawing& d,
                       const std::optional<std::vector<Color>>& colors,
                       const RenderSpec& spec) {
  std::int64_t minx = d[0].x, maxx = d[0].x, miny = d[0].y, maxy = d[0].y;
  for (const Point& p : d.points()) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const std::int64_t span = std::max(maxx - minx, maxy - miny);
  Frame f{Big(spec.canvas - 2 * spec.margin), Big(span < 1 ? 1 : span),
          minx,  miny,
          spec.canvas, spec.margin};

  auto vertex_style = [&](int v) -> std::string {
    if (!colors) return "#333333";
    const Color c = (*colors)[v];
    const auto it = spec.palette.find(c);
    return it != spec.palette.end() && !it->second.empty() ? it->second
                                                           : default_color(c);
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(spec.canvas) + "\" height=\"" +
         std::to_string(spec.canvas) + "\" viewBox=\"0 0 " +
         std::to_string(spec.canvas) + " " + std::to_string(spec.canvas) +
         "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  const int n = d.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::string stroke = "#888888";
      if (colors)
        stroke = to_hex(blend(parse_hex(vertex_style(i)),
                              parse_hex(vertex_style(j))));
      out += "<line x1=\"" + f.px(Big(d[i].x), 1) + "\" y1=\"" +
             f.py(Big(d[i].y), 1) + "\" x2=\"" + f.px(Big(d[j].x), 1) +
             "\" y2=\"" + f.py(Big(d[j].y), 1) + "\" stroke=\"" + stroke +
             "\" stroke-width=\"1\"/>\n";
    }

  if (spec.crossing_dots) {
    for (const Crossing& c : count_crossings(d).crossings) {
      const Point p1 = d[c.edge_a.first], p2 = d[c.edge_a.second];
      const Point p3 = d[c.edge_b.first], p4 = d[c.edge_b.second];
      // p1 + t (p2-p1) with t = cross(p3-p1, p4-p3) / cross(p2-p1, p4-p3)
      Big t_num = Big(p3.x - p1.x) * (p4.y - p3.y) - Big(p3.y - p1.y) * (p4.x - p3.x);
      Big t_den = Big(p2.x - p1.x) * (p4.y - p3.y) - Big(p2.y - p1.y) * (p4.x - p3.x);
      if (t_den < 0) {
        t_den = -t_den;
        t_num = -t_num;
      }
      const Big xi = Big(p1.x) * t_den + t_num * (p2.x - p1.x);
      const Big yi = Big(p1.y) * t_den + t_num * (p2.y - p1.y);
      out += "<circle cx=\"" + f.px(xi, t_den) + "\" cy=\"" + f.py(yi, t_den) +
             "\" r=\"2\" fill=\"#000000\"/>\n";
    }
  }

  for (int v = 0; v < n; ++v) {
    const std::string fill = vertex_style(v);
    out += "<circle cx=\"" + f.px(Big(d[v].x), 1) + "\" cy=\"" +
           f.py(Big(d[v].y), 1) + "\" r=\"4\" fill=\"" + fill +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_colored_svg(const Drawing& d, const RenderSpec& spec) {
  try {
    const ColoredDrawing cd = color_by_hulls(d);
    return render_svg(d, cd.colors, spec);
  } catch (const UnsupportedShape&) {
    return render_svg(d, std::nullopt, spec);
  }
}

}  // namespace recross
