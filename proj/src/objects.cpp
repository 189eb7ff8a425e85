#include "invtree/objects.hpp"

#include "invtree/error.hpp"

#include <algorithm>

namespace invtree {

std::string_view to_string(PathKind kind) {
  switch (kind) {
    case PathKind::Dyck: return "dyck";
    case PathKind::ValleyMarkedDyck: return "vmdyck";
    case PathKind::Steady: return "steady";
    case PathKind::ValleyMarkedSteady: return "vmsteady";
  }
  return "?";
}

PathKind parse_path_kind(std::string_view name) {
  if (name == "dyck") return PathKind::Dyck;
  if (name == "vmdyck") return PathKind::ValleyMarkedDyck;
  if (name == "steady") return PathKind::Steady;
  if (name == "vmsteady") return PathKind::ValleyMarkedSteady;
  throw Error(ErrorCode::InvalidArgument, "unknown path kind '" + std::string(name) + "'");
}

int Path::size() const {
  return static_cast<int>(std::count(steps.begin(), steps.end(), Step::U));
}

std::vector<Point> path_points(std::span<const Step> steps) {
  std::vector<Point> points;
  points.reserve(steps.size() + 1);
  Point p{0, 0};
  points.push_back(p);
  for (Step s : steps) {
    switch (s) {
      case Step::U: ++p.x; ++p.y; break;
      case Step::D: ++p.x; --p.y; break;
      case Step::W: --p.x; ++p.y; break;
    }
    points.push_back(p);
  }
  return points;
}

std::vector<Valley> valleys(std::span<const Step> steps) {
  std::vector<Valley> out;
  Point p{0, 0};
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0 && steps[i - 1] == Step::D && steps[i] == Step::U) out.push_back({i, p});
    switch (steps[i]) {
      case Step::U: ++p.x; ++p.y; break;
      case Step::D: ++p.x; --p.y; break;
      case Step::W: --p.x; ++p.y; break;
    }
  }
  return out;
}

std::vector<int> preorder_leaves(const IncreasingTree& tree) {
  std::vector<int> leaves;
  if (tree.children.empty()) return leaves;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    const auto& kids = tree.children[static_cast<std::size_t>(v)];
    if (kids.empty()) {
      if (v != 0) leaves.push_back(v);
      continue;
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return leaves;
}

bool has_increasing_leaves(const IncreasingTree& tree) {
  auto leaves = preorder_leaves(tree);
  return std::adjacent_find(leaves.begin(), leaves.end(), std::greater_equal<>()) == leaves.end();
}

bool ValidityReport::violates(std::string_view invariant) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.invariant == invariant; });
}

ValidityReport validate(const InversionSequence& e) {
  ValidityReport report;
  if (e.entries.empty()) report.violations.push_back({"length", -1, "length must be at least 1"});
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > static_cast<int>(i)) {
      report.violations.push_back(
          {"bound", static_cast<std::ptrdiff_t>(i + 1),
           "e_" + std::to_string(i + 1) + " = " + std::to_string(e[i]) +
               " is outside [0, " + std::to_string(i) + "]"});
    }
  }
  return report;
}

ValidityReport validate(const Permutation& p) {
  ValidityReport report;
  const int n = static_cast<int>(p.size());
  if (n == 0) report.violations.push_back({"length", -1, "length must be at least 1"});
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 0; i < n; ++i) {
    int v = p[static_cast<std::size_t>(i)];
    if (v < 1 || v > n) {
      report.violations.push_back({"range", i + 1, "value " + std::to_string(v) + " outside 1.." + std::to_string(n)});
    } else if (seen[static_cast<std::size_t>(v)]) {
      report.violations.push_back({"distinct", i + 1, "value " + std::to_string(v) + " repeated"});
    } else {
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  return report;
}

namespace {

std::string point_text(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

void check_dyck_shape(const Path& p, const std::vector<Point>& pts, ValidityReport& r) {
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i] == Step::W) r.violations.push_back({"no-W", static_cast<std::ptrdiff_t>(i), "W step in a Dyck path"});
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].y < 0) {
      r.violations.push_back({"above-axis", static_cast<std::ptrdiff_t>(i), "point " + point_text(pts[i]) + " below the x-axis"});
    }
  }
  if (pts.back().y != 0) r.violations.push_back({"ends-on-axis", -1, "path ends at " + point_text(pts.back())});
}

void check_steady_shape(const Path& p, const std::vector<Point>& pts, ValidityReport& r) {
  const auto& s = p.steps;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point q = pts[i];
    if (q.x < 0 || q.y < 0 || q.y > q.x) {
      r.violations.push_back({"cone", static_cast<std::ptrdiff_t>(i), "point " + point_text(q) + " outside 0 <= y <= x"});
    }
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] == Step::W && s[i] == Step::D) r.violations.push_back({"no-WD", static_cast<std::ptrdiff_t>(i - 1), "WD factor"});
    if (s[i - 1] == Step::D && s[i] == Step::W) r.violations.push_back({"no-DW", static_cast<std::ptrdiff_t>(i - 1), "DW factor"});
  }
  const int n = p.size();
  if (pts.back() != Point{2 * n, 0}) {
    r.violations.push_back({"endpoint", -1, "path ends at " + point_text(pts.back()) + ", expected (" + std::to_string(2 * n) + ",0)"});
  }
  // (S1) and (S2): after a UU factor, or after the U of a WU factor, every
  // later point stays weakly below the parallel to y = x through that U.
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] != Step::U || (s[i - 1] != Step::U && s[i - 1] != Step::W)) continue;
    const bool uu = s[i - 1] == Step::U;
    const int offset = pts[i].x - pts[i].y;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[j].x - pts[j].y < offset) {
        r.violations.push_back(
            {uu ? "S1" : "S2", static_cast<std::ptrdiff_t>(i - 1),
             std::string(uu ? "UU" : "WU") + " factor at step " + std::to_string(i - 1) +
                 " is followed by point " + point_text(pts[j]) + " above the line y = x - " +
                 std::to_string(offset)});
        break;
      }
    }
  }
}

}  // namespace

ValidityReport validate(const Path& p) {
  ValidityReport r;
  if (p.steps.empty()) {
    r.violations.push_back({"nonempty", -1, "empty step word"});
    return r;
  }
  const auto pts = path_points(p.steps);
  const auto vs = valleys(p.steps);

  const bool steady = p.kind == PathKind::Steady || p.kind == PathKind::ValleyMarkedSteady;
  if (steady) {
    check_steady_shape(p, pts, r);
  } else {
    check_dyck_shape(p, pts, r);
  }

  if (p.marks.size() != vs.size()) {
    r.violations.push_back({"marks-count", -1, std::to_string(p.marks.size()) + " marks for " + std::to_string(vs.size()) + " valleys"});
    return r;
  }
  if (!is_valley_marked(p.kind)) {
    for (std::size_t v = 0; v < vs.size(); ++v) {
      if (p.marks[v] != 0) r.violations.push_back({"marks-zero", static_cast<std::ptrdiff_t>(vs[v].up_step), "unmarked kind carries a mark"});
    }
    return r;
  }

  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (p.marks[v] < 0 || p.marks[v] > vs[v].corner.y) {
      r.violations.push_back({"M1", static_cast<std::ptrdiff_t>(vs[v].up_step),
                              "mark " + std::to_string(p.marks[v]) + " not in [0, " + std::to_string(vs[v].corner.y) + "]"});
    }
  }
  if (p.kind == PathKind::ValleyMarkedSteady) {
    for (std::size_t v = 0; v < vs.size(); ++v) {
      if (p.marks[v] == 0) continue;
      for (std::size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i] != Step::W) continue;
        const int w_height = pts[i].y;
        if (vs[v].corner.y > w_height) {
          r.violations.push_back({"M2", static_cast<std::ptrdiff_t>(vs[v].up_step),
                                  "marked valley at height " + std::to_string(vs[v].corner.y) +
                                      " above the W step " + std::to_string(i)});
          break;
        }
        if (vs[v].corner.y == w_height && vs[v].up_step < i) {
          r.violations.push_back({"M3", static_cast<std::ptrdiff_t>(vs[v].up_step),
                                  "marked valley level with and left of the W step " + std::to_string(i)});
          break;
        }
      }
    }
  }
  return r;
}

ValidityReport validate(const IncreasingTree& t, bool require_increasing_leaves) {
  ValidityReport r;
  if (t.children.empty()) {
    r.violations.push_back({"root", -1, "tree has no root"});
    return r;
  }
  const int n = t.size();
  std::vector<int> parent_count(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v <= n; ++v) {
    for (int c : t.children[static_cast<std::size_t>(v)]) {
      if (c < 1 || c > n) {
        r.violations.push_back({"labels", v, "child label " + std::to_string(c) + " outside 1.." + std::to_string(n)});
        continue;
      }
      ++parent_count[static_cast<std::size_t>(c)];
      if (c <= v) r.violations.push_back({"increasing", c, "child " + std::to_string(c) + " does not exceed parent " + std::to_string(v)});
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (parent_count[static_cast<std::size_t>(v)] != 1) {
      r.violations.push_back({"labels", v, "vertex " + std::to_string(v) + " has " + std::to_string(parent_count[static_cast<std::size_t>(v)]) + " parents"});
    }
  }
  if (require_increasing_leaves && r.ok() && !has_increasing_leaves(t)) {
    r.violations.push_back({"increasing-leaves", -1, "leaves are not increasing in pre-order"});
  }
  return r;
}

PathStatistics path_statistics(const Path& p) {
  PathStatistics st;
  const auto pts = path_points(p.steps);
  const auto vs = valleys(p.steps);
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i] == Step::W) ++st.w_count;
    if (pts[i].x == pts[i].y && pts[i + 1].x == pts[i + 1].y) ++st.diagonal_steps;
    if (i > 0 && p.steps[i] == Step::U && (p.steps[i - 1] == Step::U || p.steps[i - 1] == Step::W)) {
      st.edge_line_offset = pts[i].x - pts[i].y;
    }
  }
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    if (pts[i].y == 0) ++st.returns_to_axis;
  }
  for (std::size_t v = 0; v < vs.size() && v < p.marks.size(); ++v) {
    st.total_mark += p.marks[v];
    if (p.marks[v] == vs[v].corner.y) ++st.returns_to_mark;
  }
  for (auto it = p.steps.rbegin(); it != p.steps.rend() && *it == Step::D; ++it) ++st.last_descent_length;
  return st;
}

}  // namespace invtree
