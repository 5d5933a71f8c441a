#include "recross/rules.hpp"

#include <algorithm>

#include "recross/parallel.hpp"
#include "recross/search.hpp"

namespace recross {

namespace {

constexpr Color R = Color::Red;
constexpr Color G = Color::Green;
constexpr Color B = Color::Blue;
constexpr Color W = Color::White;

long long get(const LabelTally& t, Color a1, Color a2, Color b1, Color b2) {
  const auto it = t.find(
      make_color_label(make_color_pair(a1, a2), make_color_pair(b1, b2)));
  return it == t.end() ? 0 : it->second;
}

// Crossings whose endpoint colours are exactly {x, y}.
long long two_coloured(const LabelTally& t, Color x, Color y) {
  long long n = 0;
  for (const auto& [label, count] : t) {
    if (label.arity() != 2) continue;
    const Color cs[4] = {label.a.lo, label.a.hi, label.b.lo, label.b.hi};
    bool ok = true;
    for (Color c : cs)
      if (c != x && c != y) ok = false;
    if (ok) n += count;
  }
  return n;
}

long long white_involved(const LabelTally& t) {
  long long n = 0;
  for (const auto& [label, count] : t)
    if (label.a.lo == W || label.a.hi == W || label.b.lo == W ||
        label.b.hi == W)
      n += count;
  return n;
}

CheckReport vacuous(RuleId id, std::string why) {
  CheckReport r;
  r.rule = rule_info(id).name;
  r.required = rule_info(id).requirement;
  r.applicable = false;
  r.notes = std::move(why);
  return r;
}

CheckReport start_report(RuleId id) {
  CheckReport r;
  r.rule = rule_info(id).name;
  r.required = rule_info(id).requirement;
  r.applicable = true;
  return r;
}

}  // namespace

const std::vector<RuleInfo>& rule_table() {
  static const std::vector<RuleInfo> table = {
      {RuleId::k5_principle, "k5_principle", false,
       "hull-to-interior edge pairs cross exactly C(n-3,2) times"},
      {RuleId::two_colour, "two_colour", false,
       "rg, rb, gb two-coloured crossings each >= 3"},
      {RuleId::non_concentric_k6, "non_concentric_k6", false,
       "nested non-concentric K6 has total > 3"},
      {RuleId::rb_gg_nine, "rb_gg_nine", false, "rbxgg == 9"},
      {RuleId::rb_rg_nine, "rb_rg_nine", false, "rbxrg >= 9"},
      {RuleId::internal_nine, "internal_nine", false,
       "rbxgb + gbxbb >= 9"},
      {RuleId::k9_concentric_optimum, "k9_concentric_optimum", false,
       "36-crossing K9 has rgxgg == 0 and rbxbb == 0"},
      {RuleId::nine_max, "nine_max", false,
       "36-crossing K9 has internal == 9, gbxbb <= 2, rbxgb <= 9"},
      {RuleId::config_law, "config_law", false,
       "configuration class fixes the non-concentric crossing count"},
      {RuleId::white_in_green, "white_in_green", false,
       "rwxgb + rbxbw + gbxbw + rgxgg >= 6"},
      {RuleId::white_in_blue, "white_in_blue", false,
       "white-involved + rgxgg >= 27 and total >= 63"},
      {RuleId::ttq_62, "ttq_62", false, "peel [3,3,4] has total >= 62"},
      {RuleId::guilty_hull6, "guilty_hull6", false,
       "peel [3,6] has total >= 42"},
      {RuleId::guilty_hull5, "guilty_hull5", false,
       "peel [3,5,1] has total >= 38"},
      {RuleId::quad_second_hull_38, "quad_second_hull_38", false,
       "peel [3,4,2] has total >= 38"},
      {RuleId::barrier, "barrier", true,
       "edges (u,w), (v,w) through distinct outer edges cross >= 2 kite edges"},
      {RuleId::kite_lemma, "kite_lemma", true,
       "(o1,p) crosses (o2,l) or (o2,r) for p in region A"},
      {RuleId::ccc_lemma, "ccc_lemma", true,
       "(u,v) into region A crosses >= 2 kite edges"},
      {RuleId::containment, "containment", true,
       "the middle vertex sits in the kite quadrilateral; edges from outside cross it"},
      {RuleId::shared_labels, "shared_labels", true,
       "unary CCV concave kites carry identical l, m, r labels"},
  };
  return table;
}

const RuleInfo& rule_info(RuleId id) {
  for (const RuleInfo& r : rule_table())
    if (r.id == id) return r;
  throw UnknownRule("rule_info: unknown rule id");
}

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const RuleInfo& r : rule_table())
    if (name == r.name) return r.id;
  return std::nullopt;
}

std::string to_line(const CheckReport& r) {
  std::string out = "rule=" + r.rule;
  out += " status=";
  out += r.applicable ? (r.pass ? "pass" : "fail") : "n/a";
  for (const auto& [k, v] : r.observed) out += " " + k + "=" + std::to_string(v);
  if (!r.notes.empty()) out += " note=\"" + r.notes + "\"";
  return out;
}

std::optional<WhiteColoring> identify_white(const Drawing& d,
                                            std::optional<Color> inside) {
  if (d.size() != 10) return std::nullopt;
  for (int v = 0; v < 10; ++v) {
    std::vector<int> rest;
    for (int i = 0; i < 10; ++i)
      if (i != v) rest.push_back(i);
    const Drawing sub = subdrawing(d, rest);
    const HullDecomposition hd = peel_hulls(sub);
    if (hd.profile() != std::vector<int>{3, 3, 3}) continue;
    if (inside) {
      const auto& layer = hd.layers[*inside == Color::Green ? 1 : 2];
      if (!point_in_triangle(d[v], sub[layer[0]], sub[layer[1]], sub[layer[2]]))
        continue;
    }
    std::vector<Color> colors(10, Color::White);
    const Color per_layer[3] = {Color::Red, Color::Green, Color::Blue};
    for (size_t li = 0; li < 3; ++li)
      for (int local : hd.layers[li]) colors[rest[local]] = per_layer[li];
    return WhiteColoring{v, std::move(colors)};
  }
  return std::nullopt;
}

CheckReport verify_counting(const Drawing& d, RuleId rule) {
  if (rule_info(rule).geometric)
    throw UnknownRule(std::string("verify_counting: ") + rule_info(rule).name +
                      " is a witness rule");
  const HullDecomposition hd = peel_hulls(d);
  const std::vector<int> profile = hd.profile();
  const auto profile_is = [&](std::initializer_list<int> want) {
    return profile == std::vector<int>(want);
  };

  switch (rule) {
    case RuleId::k5_principle: {
      if (profile.empty() || hd.layers[0].size() != 3 || d.size() < 4)
        return vacuous(rule, "convex hull is not a triangle");
      CheckReport r = start_report(rule);
      std::vector<bool> on_hull(static_cast<size_t>(d.size()), false);
      for (int v : hd.layers[0]) on_hull[v] = true;
      auto mixed = [&](VertexPair e) {
        return on_hull[e.first] != on_hull[e.second];
      };
      long long got = 0;
      for (const Crossing& c : count_crossings(d).crossings)
        if (mixed(c.edge_a) && mixed(c.edge_b)) ++got;
      const long long k = d.size() - 3;
      const long long expected = k * (k - 1) / 2;
      r.observed = {{"hull_interior_pairs", got}, {"expected", expected}};
      r.pass = got == expected;
      return r;
    }

    case RuleId::two_colour: {
      if (!profile_is({3, 3, 3})) return vacuous(rule, "peel is not [3,3,3]");
      const LabelTally t = tally_by_label(color_by_hulls(d));
      CheckReport r = start_report(rule);
      const long long rg = two_coloured(t, R, G);
      const long long rb = two_coloured(t, R, B);
      const long long gb = two_coloured(t, G, B);
      r.observed = {{"rg2", rg}, {"rb2", rb}, {"gb2", gb}};
      r.pass = rg >= 3 && rb >= 3 && gb >= 3;
      return r;
    }

    case RuleId::non_concentric_k6: {
      if (!profile_is({3, 3})) return vacuous(rule, "peel is not [3,3]");
      const ColoredDrawing cd = color_by_hulls(d);
      if (are_concentric(cd, R, G))
        return vacuous(rule, "triangles are concentric");
      CheckReport r = start_report(rule);
      const long long total = count_crossings(d).count();
      r.observed = {{"total", total}};
      r.pass = total > 3;
      return r;
    }

    case RuleId::rb_gg_nine: {
      if (!profile_is({3, 3, 3})) return vacuous(rule, "peel is not [3,3,3]");
      const LabelTally t = tally_by_label(color_by_hulls(d));
      CheckReport r = start_report(rule);
      const long long v = get(t, R, B, G, G);
      r.observed = {{"rbxgg", v}};
      r.pass = v == 9;
      return r;
    }

    case RuleId::rb_rg_nine: {
      if (!profile_is({3, 3, 3})) return vacuous(rule, "peel is not [3,3,3]");
      const LabelTally t = tally_by_label(color_by_hulls(d));
      CheckReport r = start_report(rule);
      const long long v = get(t, R, B, R, G);
      // the lemma's statement says at least nine, its proof exactly nine;
      // record equality so the gap stays measurable
      r.observed = {{"rbxrg", v}, {"exactly_nine", v == 9 ? 1 : 0}};
      r.pass = v >= 9;
      return r;
    }

    case RuleId::internal_nine: {
      if (!profile_is({3, 3, 3})) return vacuous(rule, "peel is not [3,3,3]");
      const LabelTally t = tally_by_label(color_by_hulls(d));
      CheckReport r = start_report(rule);
      const long long internal = get(t, R, B, G, B) + get(t, G, B, B, B);
      r.observed = {{"internal", internal}};
      r.pass = internal >= 9;
      return r;
    }

    case RuleId::k9_concentric_optimum: {
      if (!profile_is({3, 3, 3})) return vacuous(rule, "peel is not [3,3,3]");
      const CrossingSet cs = count_crossings(d);
      if (cs.count() != 36)
        return vacuous(rule, "drawing is not optimal (count != 36)");
      const ColoredDrawing cd = color_by_hulls(d);
      const LabelTally t = tally_by_label(cd);
      CheckReport r = start_report(rule);
      const long long rggg = get(t, R, G, G, G);
      const long long rbbb = get(t, R, B, B, B);
      const long long conc_rg = are_concentric(cd, R, G) ? 1 : 0;
      const long long conc_rb = are_concentric(cd, R, B) ? 1 : 0;
      r.observed = {{"rgxgg", rggg},
                    {"rbxbb", rbbb},
                    {"concentric_rg", conc_rg},
                    {"concentric_rb", conc_rb}};
      // the label route and the polygon route must agree
      r.pass = rggg == 0 && rbbb == 0 && conc_rg == 1 && conc_rb == 1;
      return r;
    }

    case RuleId::nine_max: {
      if (!profile_is({3, 3, 3})) return vacuous(rule, "peel is not [3,3,3]");
      if (count_crossings(d).count() != 36)
        return vacuous(rule, "drawing is not optimal (count != 36)");
      const LabelTally t = tally_by_label(color_by_hulls(d));
      CheckReport r = start_report(rule);
      const long long rbgb = get(t, R, B, G, B);
      const long long gbbb = get(t, G, B, B, B);
      r.observed = {{"rbxgb", rbgb},
                    {"gbxbb", gbbb},
                    {"internal", rbgb + gbbb}};
      r.pass = rbgb + gbbb == 9 && gbbb <= 2 && rbgb <= 9;
      return r;
    }

    case RuleId::config_law: {
      if (!profile_is({3, 3})) return vacuous(rule, "peel is not [3,3]");
      const ColoredDrawing cd = color_by_hulls(d);
      const KiteConfiguration cfg = classify_configuration(cd);
      CheckReport r = start_report(rule);
      const long long want = non_concentric_count(cfg.cls);
      const long long got = count_non_concentric_crossings(cd);
      const long long rggg = get(tally_by_label(cd), R, G, G, G);
      r.observed = {{"class_count", want}, {"measured", got}, {"rgxgg", rggg}};
      r.notes = to_string(cfg.cls);
      // the label tally gives the same number by a second route
      r.pass = want == got && got == rggg;
      return r;
    }

    case RuleId::white_in_green: {
      const auto wc = identify_white(d, Color::Green);
      if (!wc) return vacuous(rule, "no white vertex inside the green triangle");
      const ColoredDrawing cd{d, hd, wc->colors};
      const LabelTally t = tally_by_label(cd);
      CheckReport r = start_report(rule);
      const long long rwgb = get(t, R, W, G, B);
      const long long rbbw = get(t, R, B, B, W);
      const long long gbbw = get(t, G, B, B, W);
      const long long rggg = get(t, R, G, G, G);
      const long long sum = rwgb + rbbw + gbbw + rggg;
      r.observed = {{"rwxgb", rwgb},
                    {"rbxbw", rbbw},
                    {"gbxbw", gbbw},
                    {"rgxgg", rggg},
                    {"sum", sum}};
      r.pass = sum >= 6;
      return r;
    }

    case RuleId::white_in_blue: {
      const auto wc = identify_white(d, Color::Blue);
      if (!wc) return vacuous(rule, "no white vertex inside the blue triangle");
      const ColoredDrawing cd{d, hd, wc->colors};
      const LabelTally t = tally_by_label(cd);
      CheckReport r = start_report(rule);
      const long long white = white_involved(t);
      const long long rggg = get(t, R, G, G, G);
      const long long total = count_crossings(d).count();
      r.observed = {{"white", white},
                    {"rgxgg", rggg},
                    {"white_plus_rgxgg", white + rggg},
                    {"total", total}};
      r.pass = white + rggg >= 27 && total >= 63;
      return r;
    }

    case RuleId::ttq_62: {
      if (d.size() != 10 || !profile_is({3, 3, 4}))
        return vacuous(rule, "peel is not [3,3,4]");
      CheckReport r = start_report(rule);
      const long long total = count_crossings(d).count();
      r.observed = {{"total", total}};
      r.pass = total >= 62;
      return r;
    }

    case RuleId::guilty_hull6:
    case RuleId::guilty_hull5:
    case RuleId::quad_second_hull_38: {
      const std::vector<int> want = rule == RuleId::guilty_hull6
                                        ? std::vector<int>{3, 6}
                                        : (rule == RuleId::guilty_hull5
                                               ? std::vector<int>{3, 5, 1}
                                               : std::vector<int>{3, 4, 2});
      const long long bound = rule == RuleId::guilty_hull6 ? 42 : 38;
      if (d.size() != 9 || profile != want)
        return vacuous(rule, "peel does not match the rule's shape");
      CheckReport r = start_report(rule);
      const long long total = count_crossings(d).count();
      r.observed = {{"total", total}, {"bound", bound}};
      r.pass = total >= bound;
      return r;
    }

    default:
      throw UnknownRule("verify_counting: unhandled rule");
  }
}

namespace {

bool outside_polygon(Point p, const std::vector<Point>& cycle) {
  return !point_in_convex_polygon(p, cycle);
}

std::vector<Point> layer_points(const ColoredDrawing& cd, size_t layer) {
  std::vector<Point> out;
  for (int v : cd.hulls.layers[layer]) out.push_back(cd.drawing[v]);
  return out;
}

// Which outer-triangle edge does (p, w) cross?  Returns -1 if none or
// several (several cannot happen for w strictly inside).
int crossed_outer_edge(const ColoredDrawing& cd, Point p, Point w) {
  const std::vector<int>& outer = cd.hulls.layers[0];
  int hit = -1;
  for (int e = 0; e < 3; ++e) {
    const Point a = cd.drawing[outer[e]];
    const Point b = cd.drawing[outer[(e + 1) % 3]];
    if (segments_cross(p, w, a, b)) {
      if (hit >= 0) return -1;
      hit = e;
    }
  }
  return hit;
}

long long kite_edge_crossings(const ColoredDrawing& cd, Point p, Point q,
                              std::optional<int> skip_vertex) {
  long long n = 0;
  for (VertexPair e : kite_edges(cd)) {
    if (skip_vertex && (e.first == *skip_vertex || e.second == *skip_vertex))
      continue;
    if (segments_cross(p, q, cd.drawing[e.first], cd.drawing[e.second])) ++n;
  }
  return n;
}

bool points_general_position_with(const Drawing& d,
                                  const std::vector<Point>& extra) {
  std::vector<Point> all = d.points();
  all.insert(all.end(), extra.begin(), extra.end());
  return is_general_position(all);
}

std::vector<Point> kite_hull(const ColoredDrawing& cd, const Kite& k) {
  const std::vector<Point> four = {cd.drawing[k.origin], cd.drawing[k.left],
                                   cd.drawing[k.middle], cd.drawing[k.right]};
  const HullDecomposition hd = peel_hulls(Drawing::unchecked(four));
  std::vector<Point> cycle;
  for (int i : hd.layers[0]) cycle.push_back(four[i]);
  return cycle;
}

}  // namespace

CheckReport verify_geometric(const Drawing& d, RuleId rule,
                             const LemmaWitnesses& w) {
  if (!rule_info(rule).geometric)
    throw UnknownRule(std::string("verify_geometric: ") +
                      rule_info(rule).name + " is a counting rule");
  if (peel_hulls(d).profile() != std::vector<int>{3, 3})
    return vacuous(rule, "drawing is not a nested K6");
  const ColoredDrawing cd = color_by_hulls(d);

  switch (rule) {
    case RuleId::barrier: {
      if (w.external.size() != 2 || !w.inner_vertex)
        return vacuous(rule, "witnesses missing");
      const Point u = w.external[0], v = w.external[1];
      const int wi = *w.inner_vertex;
      const std::vector<int>& inner = cd.hulls.layers[1];
      if (std::find(inner.begin(), inner.end(), wi) == inner.end())
        return vacuous(rule, "w is not an inner vertex");
      if (!points_general_position_with(d, {u, v}))
        return vacuous(rule, "witnesses break general position");
      const std::vector<Point> outer = layer_points(cd, 0);
      if (!outside_polygon(u, outer) || !outside_polygon(v, outer))
        return vacuous(rule, "witnesses are not outside the outer triangle");
      const Point wp = cd.drawing[wi];
      const int eu = crossed_outer_edge(cd, u, wp);
      const int ev = crossed_outer_edge(cd, v, wp);
      if (eu < 0 || ev < 0 || eu == ev)
        return vacuous(rule, "edges do not cross distinct outer edges");
      CheckReport r = start_report(rule);
      const long long cu = kite_edge_crossings(cd, u, wp, wi);
      const long long cv = kite_edge_crossings(cd, v, wp, wi);
      r.observed = {{"crossings_u", cu}, {"crossings_v", cv}, {"total", cu + cv}};
      r.pass = cu + cv >= 2;
      return r;
    }

    case RuleId::kite_lemma: {
      if (!w.origin || !w.probe) return vacuous(rule, "witnesses missing");
      const Point p = *w.probe;
      if (!points_general_position_with(d, {p}))
        return vacuous(rule, "probe breaks general position");
      Kite k1;
      try {
        k1 = extract_kite(cd, *w.origin);
      } catch (const UnsupportedShape&) {
        return vacuous(rule, "origin is not an outer vertex");
      }
      if (k1.shape != KiteShape::Concave)
        return vacuous(rule, "kite at o1 is not concave");
      // a second concave kite with identical labels
      std::optional<Kite> k2;
      for (int o : cd.hulls.layers[0]) {
        if (o == k1.origin) continue;
        const Kite k = extract_kite(cd, o);
        if (k.shape == KiteShape::Concave && k.left == k1.left &&
            k.middle == k1.middle && k.right == k1.right)
          k2 = k;
      }
      if (!k2) return vacuous(rule, "no twin concave kite with matching labels");
      if (point_in_convex_polygon(cd.drawing[k1.origin], kite_hull(cd, *k2)))
        return vacuous(rule, "o1 lies inside the twin kite");
      const Point o1 = cd.drawing[k1.origin];
      const Point l = cd.drawing[k1.left];
      const Point m = cd.drawing[k1.middle];
      const Point rr = cd.drawing[k1.right];
      if (!in_sector(o1, l, rr, p) || !in_sector(m, l, rr, p))
        return vacuous(rule, "p is not in region A");
      CheckReport r = start_report(rule);
      const Point o2 = cd.drawing[k2->origin];
      const long long xl = segments_cross(o1, p, o2, l) ? 1 : 0;
      const long long xr = segments_cross(o1, p, o2, rr) ? 1 : 0;
      r.observed = {{"crosses_o2l", xl},
                    {"crosses_o2r", xr},
                    {"lor_acute", k1.lor_acute ? 1 : 0}};
      r.notes = "region A read as the sector intersection";
      r.pass = xl + xr >= 1;
      return r;
    }

    case RuleId::ccc_lemma: {
      if (w.external.size() != 1 || !w.probe)
        return vacuous(rule, "witnesses missing");
      const Point u = w.external[0];
      const Point v = *w.probe;
      if (!points_general_position_with(d, {u, v}))
        return vacuous(rule, "witnesses break general position");
      const KiteConfiguration cfg = classify_configuration(cd);
      if (cfg.cls != ConfigClass::CCC)
        return vacuous(rule, "configuration is not CCC");
      for (const Kite& k : cfg.kites)
        if (point_in_convex_polygon(u, kite_hull(cd, k)))
          return vacuous(rule, "u lies inside a kite");
      for (const Kite& k : cfg.kites)
        if (!in_sector(cd.drawing[k.origin], cd.drawing[k.left],
                       cd.drawing[k.right], v))
          return vacuous(rule, "v is not in region A");
      CheckReport r = start_report(rule);
      const long long n = kite_edge_crossings(cd, u, v, std::nullopt);
      r.observed = {{"kite_crossings", n}};
      r.notes = "region A read as the sector intersection";
      r.pass = n >= 2;
      return r;
    }

    case RuleId::containment: {
      if (!w.origin || w.external.size() != 1)
        return vacuous(rule, "witnesses missing");
      const Point v = w.external[0];
      if (!points_general_position_with(d, {v}))
        return vacuous(rule, "witness breaks general position");
      Kite k;
      try {
        k = extract_kite(cd, *w.origin);
      } catch (const UnsupportedShape&) {
        return vacuous(rule, "origin is not an outer vertex");
      }
      if (k.shape != KiteShape::Concave)
        return vacuous(rule, "kite is not concave");
      if (!outside_polygon(v, layer_points(cd, 0)))
        return vacuous(rule, "v is not outside the drawing");
      const std::array<int, 4> quad = containment_quadrilateral(cd, k);
      const Point m = cd.drawing[k.middle];
      // quad splits along the (left, right) diagonal into two triangles
      const bool m_inside =
          point_in_triangle(m, cd.drawing[quad[0]], cd.drawing[quad[1]],
                            cd.drawing[quad[3]]) ||
          point_in_triangle(m, cd.drawing[quad[2]], cd.drawing[quad[1]],
                            cd.drawing[quad[3]]);
      long long edge_hits = 0;
      for (int e = 0; e < 4; ++e) {
        const Point a = cd.drawing[quad[e]];
        const Point b = cd.drawing[quad[(e + 1) % 4]];
        if (segments_cross(v, m, a, b)) ++edge_hits;
      }
      CheckReport r = start_report(rule);
      r.observed = {{"middle_inside", m_inside ? 1 : 0},
                    {"quad_edge_crossings", edge_hits},
                    {"lor_acute", k.lor_acute ? 1 : 0}};
      r.pass = m_inside && edge_hits >= 1;
      return r;
    }

    case RuleId::shared_labels: {
      const KiteConfiguration cfg = classify_configuration(cd);
      if (cfg.cls != ConfigClass::UnaryCCV)
        return vacuous(rule, "configuration is not unary CCV");
      std::vector<Kite> concave;
      for (const Kite& k : cfg.kites)
        if (k.shape == KiteShape::Concave) concave.push_back(k);
      CheckReport r = start_report(rule);
      const bool match = concave.size() == 2 &&
                         concave[0].left == concave[1].left &&
                         concave[0].middle == concave[1].middle &&
                         concave[0].right == concave[1].right;
      r.observed = {{"labels_match", match ? 1 : 0}};
      r.pass = match;
      return r;
    }

    default:
      throw UnknownRule("verify_geometric: unhandled rule");
  }
}

namespace {

Point sample_in_box(SplitMix64& rng, std::int64_t xlo, std::int64_t xhi,
                    std::int64_t ylo, std::int64_t yhi) {
  return Point{rng.range(xlo, xhi), rng.range(ylo, yhi)};
}

struct Box {
  std::int64_t xlo, xhi, ylo, yhi;
};

Box expanded_bbox(const Drawing& d, std::int64_t factor) {
  Box b{d[0].x, d[0].x, d[0].y, d[0].y};
  for (const Point& p : d.points()) {
    b.xlo = std::min(b.xlo, p.x);
    b.xhi = std::max(b.xhi, p.x);
    b.ylo = std::min(b.ylo, p.y);
    b.yhi = std::max(b.yhi, p.y);
  }
  const std::int64_t wx = std::max<std::int64_t>(1, (b.xhi - b.xlo) * (factor - 1) / 2);
  const std::int64_t wy = std::max<std::int64_t>(1, (b.yhi - b.ylo) * (factor - 1) / 2);
  b.xlo = std::max(-kCoordBound, b.xlo - wx);
  b.xhi = std::min(kCoordBound, b.xhi + wx);
  b.ylo = std::max(-kCoordBound, b.ylo - wy);
  b.yhi = std::min(kCoordBound, b.yhi + wy);
  return b;
}

}  // namespace

std::optional<LemmaWitnesses> sample_witnesses(const Drawing& d, RuleId rule,
                                               std::uint64_t seed) {
  if (!rule_info(rule).geometric)
    throw UnknownRule("sample_witnesses: not a witness rule");
  if (peel_hulls(d).profile() != std::vector<int>{3, 3}) return std::nullopt;
  const ColoredDrawing cd = color_by_hulls(d);
  SplitMix64 rng(mix_seed(seed, 0x7769746e657373ULL, static_cast<std::uint64_t>(rule)));

  if (rule == RuleId::shared_labels) {
    LemmaWitnesses w;
    return verify_geometric(d, rule, w).applicable ? std::optional(w)
                                                   : std::nullopt;
  }

  const Box outer_box = expanded_bbox(d, 3);
  const int budget = 4000;
  for (int attempt = 0; attempt < budget; ++attempt) {
    LemmaWitnesses w;
    switch (rule) {
      case RuleId::barrier: {
        w.external = {sample_in_box(rng, outer_box.xlo, outer_box.xhi,
                                    outer_box.ylo, outer_box.yhi),
                      sample_in_box(rng, outer_box.xlo, outer_box.xhi,
                                    outer_box.ylo, outer_box.yhi)};
        const auto& inner = cd.hulls.layers[1];
        w.inner_vertex = inner[rng.below(3)];
        break;
      }
      case RuleId::kite_lemma: {
        // choose a concave origin whose twin has matching labels
        std::vector<int> origins;
        for (int o : cd.hulls.layers[0])
          if (extract_kite(cd, o).shape == KiteShape::Concave)
            origins.push_back(o);
        if (origins.empty()) return std::nullopt;
        w.origin = origins[rng.below(origins.size())];
        w.probe = sample_in_box(rng, outer_box.xlo, outer_box.xhi,
                                outer_box.ylo, outer_box.yhi);
        break;
      }
      case RuleId::ccc_lemma: {
        w.external = {sample_in_box(rng, outer_box.xlo, outer_box.xhi,
                                    outer_box.ylo, outer_box.yhi)};
        w.probe = sample_in_box(rng, outer_box.xlo, outer_box.xhi,
                                outer_box.ylo, outer_box.yhi);
        break;
      }
      case RuleId::containment: {
        std::vector<int> origins;
        for (int o : cd.hulls.layers[0])
          if (extract_kite(cd, o).shape == KiteShape::Concave)
            origins.push_back(o);
        if (origins.empty()) return std::nullopt;
        w.origin = origins[rng.below(origins.size())];
        w.external = {sample_in_box(rng, outer_box.xlo, outer_box.xhi,
                                    outer_box.ylo, outer_box.yhi)};
        break;
      }
      default:
        return std::nullopt;
    }
    if (verify_geometric(d, rule, w).applicable) return w;
  }
  return std::nullopt;
}

CheckReport check_drawing(const Drawing& d, RuleId rule, std::uint64_t seed) {
  if (!rule_info(rule).geometric) return verify_counting(d, rule);
  const auto w = sample_witnesses(d, rule, seed);
  if (!w) return vacuous(rule, "no hypothesis-satisfying witnesses found");
  return verify_geometric(d, rule, *w);
}

std::vector<RuleId> suite_rules(std::string_view suite_name) {
  if (suite_name == "k6")
    return {RuleId::config_law,  RuleId::non_concentric_k6,
            RuleId::shared_labels, RuleId::barrier,
            RuleId::kite_lemma,  RuleId::ccc_lemma,
            RuleId::containment};
  if (suite_name == "k9")
    return {RuleId::k5_principle, RuleId::two_colour,
            RuleId::rb_gg_nine,   RuleId::rb_rg_nine,
            RuleId::internal_nine, RuleId::k9_concentric_optimum,
            RuleId::nine_max};
  if (suite_name == "k10")
    return {RuleId::ttq_62, RuleId::white_in_green, RuleId::white_in_blue};
  if (suite_name == "appendix")
    return {RuleId::guilty_hull6, RuleId::guilty_hull5,
            RuleId::quad_second_hull_38};
  if (suite_name == "all") {
    std::vector<RuleId> all;
    for (const RuleInfo& r : rule_table()) all.push_back(r.id);
    return all;
  }
  throw UnknownRule("unknown suite: " + std::string(suite_name));
}

namespace {

// The drawing family each rule is exercised on.
Drawing instance_for(RuleId rule, std::uint64_t seed, int index) {
  static constexpr ConfigClass all_classes[5] = {
      ConfigClass::CCC, ConfigClass::UnaryCCV, ConfigClass::BinaryCCV,
      ConfigClass::CVV, ConfigClass::VVV};
  static constexpr ConfigClass non_concentric_classes[4] = {
      ConfigClass::UnaryCCV, ConfigClass::BinaryCCV, ConfigClass::CVV,
      ConfigClass::VVV};
  static constexpr ConfigClass concave_classes[4] = {
      ConfigClass::CCC, ConfigClass::UnaryCCV, ConfigClass::BinaryCCV,
      ConfigClass::CVV};
  switch (rule) {
    case RuleId::k5_principle:
    case RuleId::two_colour:
    case RuleId::rb_gg_nine:
    case RuleId::rb_rg_nine:
    case RuleId::internal_nine:
      return generate_nested_k9(seed);
    case RuleId::k9_concentric_optimum:
    case RuleId::nine_max:
      return generate_optimal_k9(seed);
    case RuleId::config_law:
      return generate_nested_k6(seed, all_classes[index % 5]);
    case RuleId::non_concentric_k6:
      return generate_nested_k6(seed, non_concentric_classes[index % 4]);
    case RuleId::white_in_green:
      return generate_k10(seed, K10Shape::WhiteInGreen);
    case RuleId::white_in_blue:
      return generate_k10(seed, K10Shape::WhiteInBlue);
    case RuleId::ttq_62:
      return generate_k10(seed, K10Shape::TriTriQuad);
    case RuleId::guilty_hull6:
      return generate_k9_profile(seed, K9Profile::Hull6);
    case RuleId::guilty_hull5:
      return generate_k9_profile(seed, K9Profile::Hull5_1);
    case RuleId::quad_second_hull_38:
      return generate_k9_profile(seed, K9Profile::Quad2);
    case RuleId::barrier:
      return generate_nested_k6_any(seed);
    case RuleId::kite_lemma:
    case RuleId::shared_labels:
      return generate_nested_k6(seed, ConfigClass::UnaryCCV);
    case RuleId::ccc_lemma:
      return generate_nested_k6(seed, ConfigClass::CCC);
    case RuleId::containment:
      return generate_nested_k6(seed, concave_classes[index % 4]);
  }
  throw UnknownRule("instance_for: unhandled rule");
}

int rule_salt(RuleId rule) {
  const auto& table = rule_table();
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i].id == rule) return static_cast<int>(i);
  throw UnknownRule("rule_salt: unknown rule");
}

}  // namespace

std::string SuiteResult::text() const {
  std::string out;
  for (const std::string& l : lines) {
    out += l;
    out += '\n';
  }
  out += "checked: " + std::to_string(checked) + "\n";
  out += "vacuous: " + std::to_string(vacuous) + "\n";
  out += "failures: " + std::to_string(failures) + "\n";
  return out;
}

SuiteResult run_suite(const SuiteOptions& opts) {
  struct Slot {
    std::string line;
    bool applicable = false;
    bool failed = false;
  };
  const int jobs = static_cast<int>(opts.rules.size()) * opts.instances;
  std::vector<Slot> slots(jobs);
  const int threads = resolve_threads(opts.threads);

  parallel_for(jobs, threads, [&](int j) {
    const RuleId rule = opts.rules[j / opts.instances];
    const int index = j % opts.instances;
    const std::uint64_t seed =
        mix_seed(opts.master_seed, static_cast<std::uint64_t>(rule_salt(rule)),
                 static_cast<std::uint64_t>(index));
    Slot& slot = slots[j];
    try {
      const Drawing d = instance_for(rule, seed, index);
      CheckReport r = check_drawing(d, rule, seed);
      r.rule += " seed=" + std::to_string(seed);  // rule, seed, status, counts
      slot.line = to_line(r);
      slot.applicable = r.applicable;
      slot.failed = r.failed();
    } catch (const std::exception& e) {
      slot.line = std::string("rule=") + rule_info(rule).name +
                  " seed=" + std::to_string(seed) + " status=error note=\"" +
                  e.what() + "\"";
      slot.applicable = true;
      slot.failed = true;
    }
  });

  SuiteResult out;
  out.lines.reserve(jobs);
  for (const Slot& s : slots) {
    out.lines.push_back(s.line);
    if (s.applicable) {
      ++out.checked;
      if (s.failed) ++out.failures;
    } else {
      ++out.vacuous;
    }
  }
  return out;
}

}  // namespace recross
