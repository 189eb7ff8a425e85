#include "invtree/gentree.hpp"

#include "invtree/error.hpp"

#include <algorithm>

namespace invtree {

std::string to_text(const Label& l) {
  if (l.arity == 1) return "(" + std::to_string(l.first) + ")";
  return "(" + std::to_string(l.first) + "," + std::to_string(l.second) + ")";
}

std::string_view rule_name(RuleId id) {
  switch (id) {
    case RuleId::Cat: return "cat";
    case RuleId::Cat2: return "cat2";
    case RuleId::IGeq3: return "i-geq3";
    case RuleId::Bax: return "bax";
    case RuleId::Semi: return "semi";
    case RuleId::PCat: return "pcat";
    case RuleId::P1234: return "p1234";
    case RuleId::Steady: return "steady";
  }
  return "?";
}

const std::vector<RuleId>& all_rules() {
  static const std::vector<RuleId> rules{RuleId::Cat,  RuleId::Cat2, RuleId::IGeq3, RuleId::Bax,
                                         RuleId::Semi, RuleId::PCat, RuleId::P1234, RuleId::Steady};
  return rules;
}

RuleId parse_rule(std::string_view name) {
  for (RuleId id : all_rules()) {
    if (rule_name(id) == name) return id;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown rule '" + std::string(name) + "'");
}

Label rule_axiom(RuleId id) {
  switch (id) {
    case RuleId::Cat:
    case RuleId::PCat: return Label::one(1);
    case RuleId::Steady: return Label::two(0, 2);
    default: return Label::two(1, 1);
  }
}

namespace {

[[noreturn]] void malformed(RuleId id, const Label& l) {
  throw Error(ErrorCode::InvalidArgument,
              "label " + to_text(l) + " is not reachable under rule " + std::string(rule_name(id)));
}

void check_label(RuleId id, const Label& l) {
  const int expected_arity = (id == RuleId::Cat || id == RuleId::PCat) ? 1 : 2;
  if (l.arity != expected_arity) malformed(id, l);
  const int h = l.first;
  const int k = l.second;
  bool ok = true;
  switch (id) {
    case RuleId::Cat:
    case RuleId::PCat: ok = h >= 1; break;
    case RuleId::Cat2:
    case RuleId::IGeq3: ok = h >= 0 && k >= 1; break;
    case RuleId::Bax:
    case RuleId::Semi: ok = h >= 1 && k >= 1; break;
    case RuleId::P1234: ok = h >= 1 && k >= 0 && !(h == 1 && k == 0); break;
    case RuleId::Steady: ok = h >= 0 && k >= 2; break;
  }
  if (!ok) malformed(id, l);
}

// (h+1,k), (h+2,k-1), ..., (h+k,1)
void push_diagonal(std::vector<Label>& out, int h, int k) {
  for (int i = 1; i <= k; ++i) out.push_back(Label::two(h + i, k + 1 - i));
}

}  // namespace

std::vector<Label> expand_label(RuleId id, const Label& l) {
  check_label(id, l);
  std::vector<Label> out;
  const int h = l.first;
  const int k = l.second;
  switch (id) {
    case RuleId::Cat:
      for (int i = 1; i <= h + 1; ++i) out.push_back(Label::one(i));
      break;
    case RuleId::Cat2:
      for (int i = 0; i < h; ++i) out.push_back(Label::two(0, k + 1));
      push_diagonal(out, h, k);
      break;
    case RuleId::IGeq3:
      for (int i = h - 1; i >= 0; --i) out.push_back(Label::two(i, k + 1));
      push_diagonal(out, h, k);
      break;
    case RuleId::Bax:
      for (int i = h - 1; i >= 1; --i) out.push_back(Label::two(i, k + 1));
      out.push_back(Label::two(1, k + 1));
      push_diagonal(out, h, k);
      break;
    case RuleId::Semi:
      for (int i = h; i >= 1; --i) out.push_back(Label::two(i, k + 1));
      push_diagonal(out, h, k);
      break;
    case RuleId::PCat:
      for (int j = 1; j <= h; ++j) {
        for (int m = 0; m < j; ++m) out.push_back(Label::one(j));
      }
      out.push_back(Label::one(h + 1));
      break;
    case RuleId::P1234:
      if (h == 1) {
        out.push_back(Label::two(1, k + 1));
        for (int i = 2; i <= k + 1; ++i) out.push_back(Label::two(i, k + 2 - i));
      } else {
        for (int i = 1; i <= h; ++i) out.push_back(Label::two(i, h + k + 1 - i));
        for (int i = 1; i <= k; ++i) out.push_back(Label::two(h + i, 0));
      }
      break;
    case RuleId::Steady:
      for (int j = 2; j <= k; ++j) out.push_back(Label::two(h + k + 1 - j, j));
      for (int j = k + 1; j <= h + k + 1; ++j) out.push_back(Label::two(0, j));
      break;
  }
  return out;
}

std::vector<LabelCounts> label_distribution(RuleId id, int depth) {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be at least 1");
  std::vector<LabelCounts> levels;
  levels.push_back({{rule_axiom(id), BigInt(1)}});
  std::map<Label, std::vector<Label>> memo;
  for (int level = 2; level <= depth; ++level) {
    LabelCounts next;
    for (const auto& [label, count] : levels.back()) {
      auto it = memo.find(label);
      if (it == memo.end()) it = memo.emplace(label, expand_label(id, label)).first;
      for (const Label& child : it->second) next[child] += count;
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

std::vector<BigInt> level_counts(RuleId id, int depth) {
  std::vector<BigInt> out;
  for (const auto& level : label_distribution(id, depth)) {
    BigInt total = 0;
    for (const auto& entry : level) total += entry.second;
    out.push_back(total);
  }
  return out;
}

Relabel named_relabel(std::string_view name) {
  if (name == "identity") return [](const Label& l) { return l; };
  if (name == "p1234-to-steady") {
    return [](const Label& l) {
      if (l.first == 1) return Label::two(0, l.second + 1);
      return Label::two(l.second, l.first);
    };
  }
  throw Error(ErrorCode::InvalidArgument, "unknown relabeling '" + std::string(name) + "'");
}

namespace {

std::string multiset_text(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += to_text(labels[i]);
  }
  return out + "}";
}

}  // namespace

IsomorphismResult rules_isomorphic_check(RuleId a, RuleId b, const Relabel& relabel, int depth) {
  IsomorphismResult result;
  const auto dist_a = label_distribution(a, depth);
  const auto dist_b = label_distribution(b, depth);
  for (int level = 1; level <= depth; ++level) {
    const auto& la = dist_a[static_cast<std::size_t>(level - 1)];
    LabelCounts mapped;
    for (const auto& [label, count] : la) mapped[relabel(label)] += count;
    const auto& lb = dist_b[static_cast<std::size_t>(level - 1)];
    if (mapped != lb) {
      result.isomorphic = false;
      result.first_divergent_level = level;
      for (const auto& [label, count] : mapped) {
        auto it = lb.find(label);
        const BigInt other = it == lb.end() ? BigInt(0) : it->second;
        if (other != count) {
          result.detail = "level " + std::to_string(level) + ": label " + to_text(label) + " has " +
                          to_string(count) + " nodes after relabeling but " + to_string(other) + " in " +
                          std::string(rule_name(b));
          break;
        }
      }
      if (result.detail.empty()) {
        result.detail = "level " + std::to_string(level) + ": " + std::string(rule_name(b)) + " has labels absent after relabeling";
      }
      return result;
    }
    if (level < depth) {
      for (const auto& [label, count] : la) {
        std::vector<Label> left;
        for (const Label& c : expand_label(a, label)) left.push_back(relabel(c));
        const auto right = expand_label(b, relabel(label));
        if (multiset_text(left) != multiset_text(right)) {
          result.isomorphic = false;
          result.first_divergent_level = level + 1;
          result.detail = "production of " + to_text(label) + " relabels to " + multiset_text(left) + " but " +
                          to_text(relabel(label)) + " produces " + multiset_text(right);
          return result;
        }
      }
    }
    result.levels_checked = level;
  }
  return result;
}

}  // namespace invtree
