#pragma once

// Succession rules: label expansion, level counting by memoized dynamic
// programming over distinct labels, label distributions, and isomorphism
// checks between rules under a relabeling.

#include "invtree/bigint.hpp"

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invtree {

struct Label {
  int first = 0;
  int second = 0;
  int arity = 1;

  static Label one(int k) { return {k, 0, 1}; }
  static Label two(int h, int k) { return {h, k, 2}; }

  auto operator<=>(const Label&) const = default;
};

/// "(3)" or "(1,2)".
std::string to_text(const Label& l);

enum class RuleId { Cat, Cat2, IGeq3, Bax, Semi, PCat, P1234, Steady };

/// cat, cat2, i-geq3, bax, semi, pcat, p1234, steady.
std::string_view rule_name(RuleId id);
RuleId parse_rule(std::string_view name);
const std::vector<RuleId>& all_rules();

Label rule_axiom(RuleId id);
/// Production of l as a list (a multiset in production order). Throws
/// InvalidArgument on a label the rule can never reach.
std::vector<Label> expand_label(RuleId id, const Label& l);

using LabelCounts = std::map<Label, BigInt>;

/// Number of nodes on levels 1..depth.
std::vector<BigInt> level_counts(RuleId id, int depth);
/// Per level 1..depth, label -> number of nodes carrying it.
std::vector<LabelCounts> label_distribution(RuleId id, int depth);

struct IsomorphismResult {
  bool isomorphic = true;
  int levels_checked = 0;
  int first_divergent_level = 0;  // 0 when isomorphic
  std::string detail;
};

using Relabel = std::function<Label(const Label&)>;

/// Named relabelings: "identity", and "p1234-to-steady" which maps (1,k) to
/// (0,k+1) and every other (h,k) to (k,h).
Relabel named_relabel(std::string_view name);

/// Compares, level by level, the label distribution of a (relabeled) with
/// that of b, and for every label reached checks that relabeling commutes
/// with production.
IsomorphismResult rules_isomorphic_check(RuleId a, RuleId b, const Relabel& relabel, int depth);

}  // namespace invtree
