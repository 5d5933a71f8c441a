#pragma once

#include <optional>
#include <string_view>

#include "recross/generate.hpp"

namespace recross {

struct UnknownRule : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Counting rules check exact label tallies against the bound a lemma
// states; geometric rules check a lemma's conclusion on explicit witness
// points.  Every rule is an instance predicate on one concrete drawing.
enum class RuleId {
  // counting rules
  k5_principle,         // triangular hull: hull-to-interior pairs cross C(n-3,2) times
  two_colour,           // nested K9: >= 3 two-coloured crossings per colour pair
  non_concentric_k6,    // nested non-concentric K6: total > 3
  rb_gg_nine,           // nested K9: rbxgg == 9
  rb_rg_nine,           // nested K9: rbxrg >= 9
  internal_nine,        // nested K9: rbxgb + gbxbb >= 9
  k9_concentric_optimum,  // 36-crossing K9: rgxgg == 0 and rbxbb == 0
  nine_max,             // 36-crossing K9: internal == 9, gbxbb <= 2, rbxgb <= 9
  config_law,           // nested K6: class determines non-concentric count
  white_in_green,       // K10, extra vertex in green: four-type sum >= 6
  white_in_blue,        // K10, extra vertex in blue: white+rgxgg >= 27, total >= 63
  ttq_62,               // K10 peel [3,3,4]: total >= 62
  guilty_hull6,         // K9 peel [3,6]: total >= 42
  guilty_hull5,         // K9 peel [3,5,1]: total >= 38
  quad_second_hull_38,  // K9 peel [3,4,2]: total >= 38
  // geometric lemmas, on witnesses
  barrier,        // two outside edges into one inner vertex: >= 2 kite-edge crossings
  kite_lemma,     // twin concave kites: (o1,p) crosses (o2,l) or (o2,r)
  ccc_lemma,      // CCC: edge from outside the kites into region A crosses >= 2
  containment,    // concave middle: outside edge to m crosses the quadrilateral
  shared_labels,  // unary CCV: both concave kites carry identical l,m,r
};

struct RuleInfo {
  RuleId id;
  const char* name;
  bool geometric;
  const char* requirement;
};

const std::vector<RuleInfo>& rule_table();
const RuleInfo& rule_info(RuleId id);
std::optional<RuleId> rule_from_name(std::string_view name);

// Outcome of one rule on one drawing.  `pass` is meaningful only when the
// rule was applicable; observed holds every count the predicate read, in a
// fixed print order.
struct CheckReport {
  std::string rule;
  bool applicable = false;
  bool pass = false;
  std::vector<std::pair<std::string, long long>> observed;
  std::string required;
  std::string notes;

  bool failed() const { return applicable && !pass; }
};

std::string to_line(const CheckReport& r);

CheckReport verify_counting(const Drawing& d, RuleId rule);

// Witness points for the geometric lemmas.  Roles per rule:
//   barrier:      external = {u, v}, inner_vertex = w
//   kite_lemma:   origin = o1 (a concave kite's origin), probe = p
//   ccc_lemma:    external = {u}, probe = v
//   containment:  origin = a concave kite's origin, external = {v}
//   shared_labels: none
// Witnesses that do not satisfy the lemma's hypothesis give a
// not-applicable (vacuous) report, never a failure.
struct LemmaWitnesses {
  std::vector<Point> external;
  std::optional<Point> probe;
  std::optional<int> inner_vertex;
  std::optional<int> origin;
};

CheckReport verify_geometric(const Drawing& d, RuleId rule,
                             const LemmaWitnesses& w);

// Deterministic witness sampling for a geometric rule; returns an empty
// optional when no hypothesis-satisfying witness was found in budget.
std::optional<LemmaWitnesses> sample_witnesses(const Drawing& d, RuleId rule,
                                               std::uint64_t seed);

// White-vertex identification for K10 rules: the lowest-index vertex whose
// removal leaves a [3,3,3] peel (optionally required to sit inside the
// remaining drawing's green or blue triangle).
struct WhiteColoring {
  int white;
  std::vector<Color> colors;  // over all n=10 vertices
};
std::optional<WhiteColoring> identify_white(const Drawing& d,
                                            std::optional<Color> inside);

struct SuiteOptions {
  std::vector<RuleId> rules;
  int instances = 1000;
  std::uint64_t master_seed = 42;
  int threads = 0;
};

struct SuiteResult {
  std::vector<std::string> lines;  // one per (rule, instance), seed order
  int checked = 0;                 // applicable instances
  int failures = 0;
  int vacuous = 0;

  std::string text() const;  // lines plus a trailing summary
};

// Generates the shape each rule wants, evaluates it, and reports in
// deterministic (rule, instance) order regardless of thread count.
SuiteResult run_suite(const SuiteOptions& opts);

// Rule groups for the CLI: k6, k9, k10, appendix, all.
std::vector<RuleId> suite_rules(std::string_view suite_name);

// Evaluate one rule on an externally supplied drawing (witness rules get
// seeded sampled witnesses).
CheckReport check_drawing(const Drawing& d, RuleId rule, std::uint64_t seed);

}  // namespace recross
