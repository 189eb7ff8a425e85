#include "invtree/bijections.hpp"
#include "invtree/error.hpp"

#include <algorithm>
#include <numeric>

namespace invtree {

namespace {

// A step together with the mark of the valley it opens (U steps of DU
// factors only; -1 elsewhere). Rearranging blocks of these keeps every
// untouched valley attached to its mark.
struct MarkedStep {
  Step step;
  int mark;
};

using Word = std::vector<MarkedStep>;

Word attach_marks(const Path& p) {
  Word w;
  for (Step s : p.steps) w.push_back({s, -1});
  const auto vs = valleys(p.steps);
  for (std::size_t v = 0; v < vs.size(); ++v) w[vs[v].up_step].mark = p.marks[v];
  return w;
}

Path detach_marks(const Word& w, PathKind kind) {
  Path p;
  p.kind = kind;
  for (const auto& ms : w) p.steps.push_back(ms.step);
  for (const auto& v : valleys(p.steps)) {
    const int mark = w[v.up_step].mark;
    if (mark < 0) throw Error(ErrorCode::Internal, "valley at step " + std::to_string(v.up_step) + " lost its mark");
    p.marks.push_back(mark);
  }
  return p;
}

void append(Word& out, const Word& in, std::size_t from, std::size_t to) {
  out.insert(out.end(), in.begin() + static_cast<std::ptrdiff_t>(from), in.begin() + static_cast<std::ptrdiff_t>(to));
}

void require_vmsteady(const Path& p) {
  Path q = p;
  q.kind = PathKind::ValleyMarkedSteady;
  const auto report = validate(q);
  if (!report.ok()) {
    throw PreconditionError(to_text(q) + " is not a valley-marked steady path (" + report.violations.front().invariant + ")");
  }
}

// First point index > from with height below `level`.
std::size_t first_point_below(const std::vector<Point>& pts, std::size_t from, int level) {
  for (std::size_t i = from + 1; i < pts.size(); ++i) {
    if (pts[i].y < level) return i;
  }
  throw Error(ErrorCode::Internal, "path never returns below height " + std::to_string(level));
}

// Last point index < from with height below `level`.
std::size_t last_point_below(const std::vector<Point>& pts, std::size_t from, int level) {
  for (std::size_t i = from; i-- > 0;) {
    if (pts[i].y < level) return i;
  }
  throw Error(ErrorCode::Internal, "no point below height " + std::to_string(level) + " before " + std::to_string(from));
}

}  // namespace

Path phi(const Path& p) {
  require_vmsteady(p);
  const auto pts = path_points(p.steps);
  std::ptrdiff_t w_idx = -1;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i] != Step::W) continue;
    if (w_idx < 0 || pts[i].y <= pts[static_cast<std::size_t>(w_idx)].y) w_idx = static_cast<std::ptrdiff_t>(i);
  }
  if (w_idx < 0) throw PreconditionError("phi needs a path with a W step");
  const auto wi = static_cast<std::size_t>(w_idx);
  // Factor D U W with the valley between D and U at height k.
  const std::size_t ui = wi - 1;
  const std::size_t di = wi - 2;
  const int k = pts[ui].y;
  const Word word = attach_marks(p);
  const int h = word[ui].mark;

  // Pr . U . A . D U W . B . D . C . D . S
  const std::size_t pr_end = last_point_below(pts, di, k + 1);  // the matching U is step pr_end
  const std::size_t a_begin = pr_end + 1;
  const std::size_t b_begin = wi + 1;
  const std::size_t b_end = first_point_below(pts, wi + 1, k + 2) - 1;  // step b_end is the D after B
  const std::size_t c_begin = b_end + 1;

  Word out;
  append(out, word, 0, a_begin);  // Pr . U
  MarkedStep new_up{Step::U, h + 1};
  if (a_begin == di) {
    append(out, word, b_begin, b_end);  // B
    out.push_back(new_up);
    out.push_back({Step::D, -1});
  } else {
    append(out, word, a_begin, di);  // A
    out.push_back(new_up);
    append(out, word, b_begin, b_end);  // B
    out.push_back(word[b_end]);
  }
  append(out, word, c_begin, word.size());  // C . D . S
  return detach_marks(out, PathKind::ValleyMarkedSteady);
}

Path theta(const Path& p) {
  require_vmsteady(p);
  const auto vs = valleys(p.steps);
  std::ptrdiff_t chosen = -1;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (p.marks[v] == 0) continue;
    if (chosen < 0 || vs[v].corner.y > vs[static_cast<std::size_t>(chosen)].corner.y) chosen = static_cast<std::ptrdiff_t>(v);
  }
  if (chosen < 0) throw PreconditionError("theta needs a path with a nonzero mark");
  const auto& valley = vs[static_cast<std::size_t>(chosen)];
  const int h = p.marks[static_cast<std::size_t>(chosen)];
  const int k = valley.corner.y;
  const auto pts = path_points(p.steps);
  const Word word = attach_marks(p);

  // Pr . A . U . B . D . C . D . S
  const std::size_t ui = valley.up_step;
  const std::size_t a_begin = last_point_below(pts, ui, k) + 1;
  const std::size_t b_begin = ui + 1;
  const std::size_t b_end = first_point_below(pts, ui + 1, k + 1) - 1;
  const std::size_t c_begin = b_end + 1;

  Word out;
  const Word dipped{{Step::D, -1}, {Step::U, h - 1}, {Step::W, -1}};
  if (b_begin == b_end) {
    append(out, word, 0, a_begin);  // Pr
    out.insert(out.end(), dipped.begin(), dipped.end());
    append(out, word, a_begin, ui);  // A
    out.push_back(word[b_end]);      // D
  } else {
    append(out, word, 0, ui);  // Pr . A
    out.insert(out.end(), dipped.begin(), dipped.end());
    append(out, word, b_begin, b_end + 1);  // B . D
  }
  append(out, word, c_begin, word.size());  // C . D . S
  return detach_marks(out, PathKind::ValleyMarkedSteady);
}

Path phi_star(const Path& p) {
  Path q = p;
  q.kind = PathKind::ValleyMarkedSteady;
  require_vmsteady(q);
  while (std::find(q.steps.begin(), q.steps.end(), Step::W) != q.steps.end()) q = phi(q);
  q.kind = PathKind::ValleyMarkedDyck;
  return q;
}

Path theta_star(const Path& p) {
  Path q = p;
  q.kind = PathKind::ValleyMarkedSteady;
  require_vmsteady(q);
  while (std::accumulate(q.marks.begin(), q.marks.end(), 0) > 0) q = theta(q);
  q.kind = PathKind::Steady;
  return q;
}

}  // namespace invtree
