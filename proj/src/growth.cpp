#include "invtree/growth.hpp"

#include "invtree/error.hpp"

#include <algorithm>
#include <map>

namespace invtree {

namespace {

const RelationTriple kCatalan{Relation::Geq, Relation::Any, Relation::Geq};
const RelationTriple kIGeq3{Relation::Geq, Relation::Geq, Relation::Geq};
const RelationTriple kBaxter{Relation::Geq, Relation::Geq, Relation::Gt};
const RelationTriple kSemi{Relation::Geq, Relation::Gt, Relation::Any};
const RelationTriple kPCat{Relation::Eq, Relation::Gt, Relation::Gt};

const RelationTriple& family_triple(RuleId id) {
  switch (id) {
    case RuleId::Cat:
    case RuleId::Cat2: return kCatalan;
    case RuleId::IGeq3: return kIGeq3;
    case RuleId::Bax: return kBaxter;
    case RuleId::Semi: return kSemi;
    case RuleId::PCat: return kPCat;
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "rule " + std::string(rule_name(id)) + " has no inversion-sequence family");
}

void require_member(const InversionSequence& e, RuleId id) {
  if (!validate(e).ok() || !avoids_triple(e, family_triple(id))) {
    throw PreconditionError("(" + to_text(e) + ") is not in the family of rule " + std::string(rule_name(id)));
  }
}

int max_entry(const InversionSequence& e) { return *std::max_element(e.entries.begin(), e.entries.end()); }

bool strict_ltr_max(const InversionSequence& e, std::size_t i) {
  for (std::size_t j = 0; j < i; ++j) {
    if (e[j] >= e[i]) return false;
  }
  return true;
}

// Index of the rightmost entry that is not a strict LTR maximum, or -1.
std::ptrdiff_t rightmost_non_ltr_max(const InversionSequence& e) {
  for (std::size_t i = e.size(); i-- > 0;) {
    if (!strict_ltr_max(e, i)) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

const VincularPattern& pattern_1_23_4() {
  static const VincularPattern v = parse_vincular_pattern("1-23-4");
  return v;
}

void require_steady(const Path& p) {
  Path q = p;
  q.kind = PathKind::Steady;
  if (!validate(q).ok()) throw PreconditionError(to_text(p) + " is not a steady path");
}

}  // namespace

InversionSequence cat_insert(const InversionSequence& e, int i) {
  const int n = static_cast<int>(e.size());
  if (i < 1 || i > n + 1) {
    throw Error(ErrorCode::InvalidArgument, "insertion position " + std::to_string(i) + " outside 1.." + std::to_string(n + 1));
  }
  InversionSequence out = e;
  out.entries.insert(out.entries.begin() + (i - 1), i - 1);
  return out;
}

std::vector<int> active_positions_cat(const InversionSequence& e) {
  require_member(e, RuleId::Cat);
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(e.size()) + 1; ++i) {
    if (avoids_triple(cat_insert(e, i), kCatalan)) out.push_back(i);
  }
  return out;
}

Children<InversionSequence> cat_children(const InversionSequence& e) {
  const auto active = active_positions_cat(e);
  Children<InversionSequence> out;
  for (std::size_t j = 0; j < active.size(); ++j) {
    out.emplace_back(cat_insert(e, active[j]), Label::one(static_cast<int>(j) + 1));
  }
  return out;
}

Label cat_label(const InversionSequence& e) {
  return Label::one(static_cast<int>(active_positions_cat(e).size()) - 1);
}

InversionSequence cat_parent(const InversionSequence& e) {
  if (e.size() < 2) throw PreconditionError("a sequence of length 1 has no parent");
  for (std::size_t i = e.size(); i-- > 0;) {
    if (e[i] == static_cast<int>(i)) {
      InversionSequence out = e;
      out.entries.erase(out.entries.begin() + static_cast<std::ptrdiff_t>(i));
      return out;
    }
  }
  throw PreconditionError("no entry equals its position minus one");
}

int max_weak_descent(const InversionSequence& e) {
  int best = -1;
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (e[i] >= e[i + 1]) best = std::max(best, e[i]);
  }
  return best;
}

namespace {

struct LastInfo {
  int last = 0;
  bool case_b = false;  // the rightmost non-LTR-maximum forms an inversion
};

LastInfo baxter_last(const InversionSequence& e) {
  const auto idx = rightmost_non_ltr_max(e);
  if (idx < 0) return {0, false};
  const int value = e[static_cast<std::size_t>(idx)];
  bool inversion = false;
  for (std::ptrdiff_t j = 0; j < idx; ++j) inversion = inversion || e[static_cast<std::size_t>(j)] > value;
  return {value, inversion};
}

}  // namespace

Label rightmost_entry_label(RuleId family, const InversionSequence& e) {
  require_member(e, family);
  const int n = static_cast<int>(e.size());
  const int mx = max_entry(e);
  switch (family) {
    case RuleId::Cat2: return Label::two(mx - max_weak_descent(e), n - mx);
    case RuleId::IGeq3: {
      const auto idx = rightmost_non_ltr_max(e);
      const int last = idx < 0 ? -1 : e[static_cast<std::size_t>(idx)];
      return Label::two(mx - last, n - mx);
    }
    case RuleId::Bax: {
      const auto info = baxter_last(e);
      return Label::two(mx - info.last + (info.case_b ? 0 : 1), n - mx);
    }
    case RuleId::Semi: {
      const auto info = baxter_last(e);
      return Label::two(mx - info.last + 1, n - mx);
    }
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "rule " + std::string(rule_name(family)) + " does not grow by a rightmost entry");
}

Children<InversionSequence> children_rightmost_entry(RuleId family, const InversionSequence& e) {
  const Label label = rightmost_entry_label(family, e);
  const int h = label.first;
  const int k = label.second;
  const int n = static_cast<int>(e.size());
  const int mx = max_entry(e);
  Children<InversionSequence> out;
  auto add = [&](int p, Label l) {
    InversionSequence f = e;
    f.entries.push_back(p);
    out.emplace_back(std::move(f), l);
  };
  auto add_new_maxima = [&] {
    for (int p = mx + 1; p <= n; ++p) add(p, Label::two(h + p - mx, n + 1 - p));
  };
  switch (family) {
    case RuleId::Cat2:
      for (int p = max_weak_descent(e) + 1; p <= mx; ++p) add(p, Label::two(0, k + 1));
      add_new_maxima();
      break;
    case RuleId::IGeq3: {
      const int last = mx - h;
      for (int p = last + 1; p <= mx; ++p) add(p, Label::two(mx - p, k + 1));
      add_new_maxima();
      break;
    }
    case RuleId::Bax: {
      const auto info = baxter_last(e);
      for (int p = info.case_b ? info.last + 1 : info.last; p < mx; ++p) add(p, Label::two(mx - p, k + 1));
      add(mx, Label::two(1, k + 1));
      add_new_maxima();
      break;
    }
    case RuleId::Semi: {
      const int last = baxter_last(e).last;
      for (int p = last; p <= mx; ++p) add(p, Label::two(mx - p + 1, k + 1));
      add_new_maxima();
      break;
    }
    default: break;
  }
  return out;
}

Label pcat_label_invseq(const InversionSequence& e) {
  require_member(e, RuleId::PCat);
  return Label::one(static_cast<int>(std::count(e.entries.begin(), e.entries.end(), 0)));
}

Children<InversionSequence> pcat_children_invseq(const InversionSequence& e) {
  require_member(e, RuleId::PCat);
  // e'' = (0, e' ) with positive entries raised by one; zero positions of
  // e'' other than the first are zeros[0..k-1].
  InversionSequence base;
  base.entries.push_back(0);
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) zeros.push_back(i + 1);
    base.entries.push_back(e[i] == 0 ? 0 : e[i] + 1);
  }
  const int k = static_cast<int>(zeros.size());
  Children<InversionSequence> out;
  for (int j = 1; j <= k; ++j) {
    for (int m = 1; m <= j; ++m) {
      InversionSequence f = base;
      for (int z = j; z < k; ++z) f.entries[zeros[static_cast<std::size_t>(z)]] = 1;
      f.entries[zeros[static_cast<std::size_t>(m - 1)]] = 1;
      out.emplace_back(std::move(f), Label::one(j));
    }
  }
  out.emplace_back(std::move(base), Label::one(k + 1));
  return out;
}

InversionSequence pcat_parent_invseq(const InversionSequence& f) {
  if (f.size() < 2) throw PreconditionError("a sequence of length 1 has no parent");
  require_member(f, RuleId::PCat);
  InversionSequence e;
  for (std::size_t i = 1; i < f.size(); ++i) {
    const int v = f[i];
    e.entries.push_back(v <= 1 ? 0 : v - 1);
  }
  return e;
}

namespace {

void require_dyck(const Path& p, PathKind kind) {
  Path q = p;
  q.kind = kind;
  if (!validate(q).ok()) throw PreconditionError(to_text(p) + " is not a valid " + std::string(to_string(kind)) + " path");
}

std::size_t last_descent_start(const Path& p) {
  std::size_t i = p.steps.size();
  while (i > 0 && p.steps[i - 1] == Step::D) --i;
  return i;
}

// Inserts UD after j steps of the last descent.
Path insert_peak(const Path& p, int j) {
  Path q = p;
  const auto at = static_cast<std::ptrdiff_t>(last_descent_start(p)) + j;
  q.steps.insert(q.steps.begin() + at, {Step::U, Step::D});
  return q;
}

}  // namespace

Label last_descent_label(const Path& p) {
  return Label::one(static_cast<int>(p.steps.size() - last_descent_start(p)));
}

Children<Path> dyck_children(const Path& p) {
  require_dyck(p, PathKind::Dyck);
  const int k = last_descent_label(p).first;
  Children<Path> out;
  for (int j = 0; j <= k; ++j) {
    Path q = insert_peak(p, j);
    q.marks.assign(valleys(q.steps).size(), 0);
    out.emplace_back(std::move(q), Label::one(k - j + 1));
  }
  return out;
}

Children<Path> vmdyck_children(const Path& p) {
  require_dyck(p, PathKind::ValleyMarkedDyck);
  const int k = last_descent_label(p).first;
  Children<Path> out;
  for (int j = 0; j <= k; ++j) {
    Path q = insert_peak(p, j);
    if (j == 0) {
      out.emplace_back(std::move(q), Label::one(k + 1));
      continue;
    }
    const int height = k - j;
    for (int mark = 0; mark <= height; ++mark) {
      Path r = q;
      r.marks.push_back(mark);
      out.emplace_back(std::move(r), Label::one(height + 1));
    }
  }
  return out;
}

Path remove_last_peak(const Path& p) {
  const std::size_t start = last_descent_start(p);
  if (start == 0 || p.size() < 2) throw PreconditionError("path " + to_text(p) + " has no parent");
  Path q = p;
  const std::size_t up = start - 1;
  const bool valley_before = up > 0 && p.steps[up - 1] == Step::D;
  q.steps.erase(q.steps.begin() + static_cast<std::ptrdiff_t>(up), q.steps.begin() + static_cast<std::ptrdiff_t>(up) + 2);
  if (valley_before && !q.marks.empty()) q.marks.pop_back();
  return q;
}

Label tree_label(const IncreasingTree& t) { return Label::one(t.root_degree()); }

Children<IncreasingTree> tree_children(const IncreasingTree& t) {
  if (!validate(t, true).ok()) throw PreconditionError(to_text(t) + " is not an increasing ordered tree with increasing leaves");
  const int n = t.size();
  // Raise every positive label by one.
  IncreasingTree raised;
  raised.children.assign(static_cast<std::size_t>(n) + 2, {});
  for (int v = 0; v <= n; ++v) {
    for (int c : t.children[static_cast<std::size_t>(v)]) {
      raised.children[static_cast<std::size_t>(v == 0 ? 0 : v + 1)].push_back(c + 1);
    }
  }
  const auto& roots = raised.children[0];
  const int d = static_cast<int>(roots.size());
  Children<IncreasingTree> out;
  {
    IncreasingTree c = raised;
    c.children[0].insert(c.children[0].begin(), 1);
    out.emplace_back(std::move(c), Label::one(d + 1));
  }
  for (int size = d; size >= 1; --size) {
    for (int a = 0; a + size <= d; ++a) {
      IncreasingTree c = raised;
      auto& top = c.children[0];
      c.children[1].assign(top.begin() + a, top.begin() + a + size);
      top.erase(top.begin() + a, top.begin() + a + size);
      top.insert(top.begin() + a, 1);
      out.emplace_back(std::move(c), Label::one(d - size + 1));
    }
  }
  return out;
}

IncreasingTree tree_parent(const IncreasingTree& t) {
  const int n = t.size();
  if (n < 2) throw PreconditionError("tree " + to_text(t) + " has no parent");
  auto& top = t.children[0];
  const auto pos = std::find(top.begin(), top.end(), 1);
  if (pos == top.end()) throw PreconditionError("vertex 1 is not a child of the root");
  IncreasingTree out;
  out.children.assign(static_cast<std::size_t>(n), {});
  auto shift = [](int c) { return c - 1; };
  for (auto it = top.begin(); it != top.end(); ++it) {
    if (it == pos) {
      for (int c : t.children[1]) out.children[0].push_back(shift(c));
    } else {
      out.children[0].push_back(shift(*it));
    }
  }
  for (int v = 2; v <= n; ++v) {
    for (int c : t.children[static_cast<std::size_t>(v)]) out.children[static_cast<std::size_t>(v - 1)].push_back(shift(c));
  }
  return out;
}

Permutation append_value(const Permutation& p, int a) {
  const int n = static_cast<int>(p.size());
  if (a < 1 || a > n + 1) throw Error(ErrorCode::InvalidArgument, "site " + std::to_string(a) + " outside 1.." + std::to_string(n + 1));
  Permutation q = p;
  for (int& v : q.values) v += v >= a;
  q.values.push_back(a);
  return q;
}

namespace {

void require_1234(const Permutation& p) {
  if (!validate(p).ok() || !avoids_vincular(p, pattern_1_23_4())) {
    throw PreconditionError(to_text(p) + " does not avoid 1-23-4");
  }
}

}  // namespace

std::vector<int> active_sites_1234(const Permutation& p) {
  require_1234(p);
  const std::size_t n = p.size();
  int bound = static_cast<int>(n) + 1;
  // Occurrences pi_s pi_{t-1} pi_t of 1-23; keep pi_t minimal.
  int running_min = n > 0 ? p[0] : 0;
  for (std::size_t t = 2; t < n; ++t) {
    running_min = std::min(running_min, p[t - 2]);
    if (p[t - 1] < p[t] && running_min < p[t - 1]) bound = std::min(bound, p[t]);
  }
  std::vector<int> out;
  for (int a = 1; a <= bound; ++a) out.push_back(a);
  return out;
}

std::vector<int> active_sites_1234_brute(const Permutation& p) {
  require_1234(p);
  std::vector<int> out;
  for (int a = 1; a <= static_cast<int>(p.size()) + 1; ++a) {
    if (avoids_vincular(append_value(p, a), pattern_1_23_4())) out.push_back(a);
  }
  return out;
}

Label perm1234_label(const Permutation& p) {
  const auto sites = active_sites_1234_brute(p);
  const int last = p[p.size() - 1];
  const int above = static_cast<int>(std::count_if(sites.begin(), sites.end(), [&](int a) { return a > last; }));
  const int below = static_cast<int>(sites.size()) - above;
  return Label::two(below, above);
}

Children<Permutation> perm1234_children(const Permutation& p) {
  const auto sites = active_sites_1234(p);
  const int last = p[p.size() - 1];
  const int h = last;
  const int k = static_cast<int>(sites.size()) - h;
  Children<Permutation> out;
  for (int a : sites) {
    Label l;
    if (h == 1) {
      l = Label::two(a, k + 2 - a);
    } else if (a <= h) {
      l = Label::two(a, h + k + 1 - a);
    } else {
      l = Label::two(a, 0);
    }
    out.emplace_back(append_value(p, a), l);
  }
  return out;
}

Permutation drop_last(const Permutation& p) {
  if (p.size() < 2) throw PreconditionError("a permutation of length 1 has no parent");
  Permutation q;
  const int removed = p[p.size() - 1];
  for (std::size_t i = 0; i + 1 < p.size(); ++i) q.values.push_back(p[i] - (p[i] > removed));
  return q;
}

std::vector<int> steady_distances(const Path& p) {
  std::vector<int> d;
  const auto pts = path_points(p.steps);
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i] == Step::U) d.push_back((pts[i].x - pts[i].y) / 2);
  }
  return d;
}

Path path_from_distances(std::span<const int> d) {
  Path p;
  p.kind = PathKind::Steady;
  for (std::size_t k = 0; k < d.size(); ++k) {
    p.steps.push_back(Step::U);
    // Both the end of this up step and the next start lie on x + y = 2(k+1);
    // walk along it by D (rightwards) or W (leftwards).
    const int here = static_cast<int>(k) + d[k] + 1;
    const int there = k + 1 < d.size() ? static_cast<int>(k + 1) + d[k + 1] : 2 * static_cast<int>(d.size());
    for (int x = here; x < there; ++x) p.steps.push_back(Step::D);
    for (int x = here; x > there; --x) p.steps.push_back(Step::W);
  }
  p.marks.assign(valleys(p.steps).size(), 0);
  return p;
}

Label steady_label(const Path& p) {
  require_steady(p);
  const int n = p.size();
  const auto st = path_statistics(p);
  const int r = st.last_descent_length;
  return Label::two(n - st.edge_line_offset / 2 - r, r + 1);
}

Children<Path> steady_children(const Path& p) {
  const Label label = steady_label(p);
  const int n = p.size();
  const int h = label.first;
  const int k = label.second;
  const int r = k - 1;
  const int s = h + r;
  auto d = steady_distances(p);
  Children<Path> out;
  for (int i = 0; i <= s; ++i) {
    d.push_back(n - i);
    Path child = path_from_distances(d);
    child.kind = p.kind;
    d.pop_back();
    out.emplace_back(std::move(child), i < r ? Label::two(h + k - 1 - i, i + 2) : Label::two(0, i + 2));
  }
  return out;
}

Path steady_parent(const Path& p) {
  if (p.size() < 2) throw PreconditionError("a steady path of size 1 has no parent");
  auto d = steady_distances(p);
  d.pop_back();
  Path q = path_from_distances(d);
  q.kind = p.kind;
  return q;
}

namespace {

class InvseqFamily : public Family {
public:
  InvseqFamily(std::string name, RuleId rule) : name_(std::move(name)), rule_(rule) {}
  std::string name() const override { return name_; }
  RuleId rule() const override { return rule_; }
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (const auto& e : enumerate_inversion_sequences(family_triple(rule_), n)) out.push_back(to_text(e));
    return out;
  }
  bool is_member(const std::string& text) const override {
    const auto e = parse_inversion_sequence(text);
    return validate(e).ok() && avoids_triple(e, family_triple(rule_));
  }
  std::vector<std::pair<std::string, Label>> children(const std::string& text) const override {
    const auto e = parse_inversion_sequence(text);
    Children<InversionSequence> kids;
    switch (rule_) {
      case RuleId::Cat: kids = cat_children(e); break;
      case RuleId::PCat: kids = pcat_children_invseq(e); break;
      default: kids = children_rightmost_entry(rule_, e); break;
    }
    std::vector<std::pair<std::string, Label>> out;
    for (auto& [c, l] : kids) out.emplace_back(to_text(c), l);
    return out;
  }
  Label label(const std::string& text) const override {
    const auto e = parse_inversion_sequence(text);
    switch (rule_) {
      case RuleId::Cat: return cat_label(e);
      case RuleId::PCat: return pcat_label_invseq(e);
      default: return rightmost_entry_label(rule_, e);
    }
  }
  std::string parent(const std::string& text) const override {
    const auto e = parse_inversion_sequence(text);
    switch (rule_) {
      case RuleId::Cat: return to_text(cat_parent(e));
      case RuleId::PCat: return to_text(pcat_parent_invseq(e));
      default: {
        if (e.size() < 2) throw PreconditionError("a sequence of length 1 has no parent");
        auto p = e;
        p.entries.pop_back();
        return to_text(p);
      }
    }
  }
  int size(const std::string& text) const override {
    return static_cast<int>(parse_inversion_sequence(text).size());
  }

private:
  std::string name_;
  RuleId rule_;
};

class PathFamily : public Family {
public:
  PathFamily(std::string name, RuleId rule, PathKind kind) : name_(std::move(name)), rule_(rule), kind_(kind) {}
  std::string name() const override { return name_; }
  RuleId rule() const override { return rule_; }
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (const auto& p : enumerate_paths(kind_, n)) out.push_back(to_text(p));
    return out;
  }
  bool is_member(const std::string& text) const override { return validate(parse_path(text, kind_)).ok(); }
  std::vector<std::pair<std::string, Label>> children(const std::string& text) const override {
    const auto p = parse_path(text, kind_);
    Children<Path> kids;
    switch (kind_) {
      case PathKind::Dyck: kids = dyck_children(p); break;
      case PathKind::ValleyMarkedDyck: kids = vmdyck_children(p); break;
      default: kids = steady_children(p); break;
    }
    std::vector<std::pair<std::string, Label>> out;
    for (auto& [c, l] : kids) out.emplace_back(to_text(c), l);
    return out;
  }
  Label label(const std::string& text) const override {
    const auto p = parse_path(text, kind_);
    return kind_ == PathKind::Steady ? steady_label(p) : last_descent_label(p);
  }
  std::string parent(const std::string& text) const override {
    const auto p = parse_path(text, kind_);
    return to_text(kind_ == PathKind::Steady ? steady_parent(p) : remove_last_peak(p));
  }
  int size(const std::string& text) const override { return parse_path(text, kind_).size(); }

private:
  std::string name_;
  RuleId rule_;
  PathKind kind_;
};

class TreeFamily : public Family {
public:
  std::string name() const override { return "pcat:tree"; }
  RuleId rule() const override { return RuleId::PCat; }
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    for (const auto& t : enumerate_trees(n, true)) out.push_back(to_text(t));
    return out;
  }
  bool is_member(const std::string& text) const override { return validate(parse_tree(text), true).ok(); }
  std::vector<std::pair<std::string, Label>> children(const std::string& text) const override {
    std::vector<std::pair<std::string, Label>> out;
    for (auto& [c, l] : tree_children(parse_tree(text))) out.emplace_back(to_text(c), l);
    return out;
  }
  Label label(const std::string& text) const override { return tree_label(parse_tree(text)); }
  std::string parent(const std::string& text) const override { return to_text(tree_parent(parse_tree(text))); }
  int size(const std::string& text) const override { return parse_tree(text).size(); }
};

class PermFamily : public Family {
public:
  std::string name() const override { return "p1234"; }
  RuleId rule() const override { return RuleId::P1234; }
  std::vector<std::string> members(int n) const override {
    std::vector<std::string> out;
    const std::vector<VincularPattern> pats{pattern_1_23_4()};
    for (const auto& p : enumerate_permutations(pats, n)) out.push_back(to_text(p));
    return out;
  }
  bool is_member(const std::string& text) const override {
    const auto p = parse_permutation(text);
    return validate(p).ok() && avoids_vincular(p, pattern_1_23_4());
  }
  std::vector<std::pair<std::string, Label>> children(const std::string& text) const override {
    std::vector<std::pair<std::string, Label>> out;
    for (auto& [c, l] : perm1234_children(parse_permutation(text))) out.emplace_back(to_text(c), l);
    return out;
  }
  Label label(const std::string& text) const override { return perm1234_label(parse_permutation(text)); }
  std::string parent(const std::string& text) const override { return to_text(drop_last(parse_permutation(text))); }
  int size(const std::string& text) const override { return static_cast<int>(parse_permutation(text).size()); }
};

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"cat",   "cat:dyck",    "cat2",        "i-geq3",    "bax",   "semi",
                                              "pcat:invseq", "pcat:vmdyck", "pcat:tree", "p1234", "steady"};
  return names;
}

std::unique_ptr<Family> make_family(std::string_view name) {
  if (name == "cat") return std::make_unique<InvseqFamily>("cat", RuleId::Cat);
  if (name == "cat:dyck") return std::make_unique<PathFamily>("cat:dyck", RuleId::Cat, PathKind::Dyck);
  if (name == "cat2") return std::make_unique<InvseqFamily>("cat2", RuleId::Cat2);
  if (name == "i-geq3") return std::make_unique<InvseqFamily>("i-geq3", RuleId::IGeq3);
  if (name == "bax") return std::make_unique<InvseqFamily>("bax", RuleId::Bax);
  if (name == "semi") return std::make_unique<InvseqFamily>("semi", RuleId::Semi);
  if (name == "pcat" || name == "pcat:invseq") return std::make_unique<InvseqFamily>("pcat:invseq", RuleId::PCat);
  if (name == "pcat:vmdyck") return std::make_unique<PathFamily>("pcat:vmdyck", RuleId::PCat, PathKind::ValleyMarkedDyck);
  if (name == "pcat:tree") return std::make_unique<TreeFamily>();
  if (name == "p1234") return std::make_unique<PermFamily>();
  if (name == "steady") return std::make_unique<PathFamily>("steady", RuleId::Steady, PathKind::Steady);
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

namespace {

std::string labels_text(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  std::string out;
  for (const auto& l : labels) out += to_text(l);
  return out;
}

}  // namespace

GrowthReport growth_consistency(const Family& family, int n_max, std::size_t max_violations) {
  GrowthReport report;
  report.family = family.name();
  report.n_max = n_max;
  auto fail = [&](std::string check, std::string object, std::string detail) {
    if (report.violations.size() < max_violations) report.violations.push_back({std::move(check), std::move(object), std::move(detail)});
  };
  std::vector<std::string> level = family.members(1);
  if (level.size() != 1) fail("count", "", "size 1 has " + std::to_string(level.size()) + " members");
  for (const auto& obj : level) {
    if (family.label(obj) != rule_axiom(family.rule())) fail("labels", obj, "label " + to_text(family.label(obj)) + " differs from the axiom");
  }
  for (int n = 1; n < n_max; ++n) {
    std::map<std::string, int> produced;
    for (const auto& obj : level) {
      ++report.objects_checked;
      std::vector<Label> emitted;
      for (const auto& [child, l] : family.children(obj)) {
        emitted.push_back(l);
        ++produced[child];
        if (!family.is_member(child)) {
          fail("membership", child, "child of " + obj + " is not a member");
          continue;
        }
        const Label own = family.label(child);
        if (own != l) fail("labels", child, "emitted " + to_text(l) + " but the object has label " + to_text(own));
        const std::string back = family.parent(child);
        if (back != obj) fail("parent", child, "parent is " + back + ", expected " + obj);
      }
      const auto expected = expand_label(family.rule(), family.label(obj));
      if (labels_text(emitted) != labels_text(expected)) {
        fail("production", obj, "child labels " + labels_text(emitted) + " but the rule produces " + labels_text(expected));
      }
    }
    std::vector<std::string> next = family.members(n + 1);
    for (const auto& m : next) {
      auto it = produced.find(m);
      const int times = it == produced.end() ? 0 : it->second;
      if (times != 1) fail("unique", m, "generated " + std::to_string(times) + " times");
    }
    if (produced.size() != next.size()) {
      for (const auto& [obj, times] : produced) {
        if (!std::binary_search(next.begin(), next.end(), obj)) fail("unique", obj, "generated but not enumerated");
      }
    }
    level = std::move(next);
  }
  report.objects_checked += level.size();
  return report;
}

}  // namespace invtree
