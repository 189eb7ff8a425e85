#include "invtree/error.hpp"
#include "invtree/patterns.hpp"

#include <algorithm>
#include <functional>

namespace invtree {

namespace {

template <class Visit>
void each_invseq(int n, const std::function<bool(std::span<const int>)>& occurs_at_end, Visit&& visit) {
  if (n < 1) return;
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(n));
  std::function<void()> rec = [&] {
    const int i = static_cast<int>(e.size());
    if (i == n) {
      visit(e);
      return;
    }
    for (int p = 0; p <= i; ++p) {
      e.push_back(p);
      if (!occurs_at_end(e)) rec();
      e.pop_back();
    }
  };
  rec();
}

template <class Visit>
void each_triple_invseq(const RelationTriple& t, int n, Visit&& visit) {
  each_invseq(n, [&](std::span<const int> s) { return triple_occurs_at_end(s, t); }, visit);
}

template <class Visit>
void each_word_invseq(std::span<const WordPattern> ws, int n, Visit&& visit) {
  each_invseq(
      n,
      [&](std::span<const int> s) {
        return std::any_of(ws.begin(), ws.end(), [&](const WordPattern& w) { return word_occurs_at_end(s, w); });
      },
      visit);
}

// Builds permutations left to right: appending a in 1..m+1 to a permutation
// of size m shifts every value >= a up by one. Prefixes of pattern avoiders
// avoid the pattern after standardization, so only occurrences ending at the
// new entry need checking.
template <class Visit>
void each_permutation(std::span<const VincularPattern> vs, int n, Visit&& visit) {
  if (n < 1) return;
  std::vector<int> p;
  p.reserve(static_cast<std::size_t>(n));
  std::function<void()> rec = [&] {
    const int m = static_cast<int>(p.size());
    if (m == n) {
      visit(p);
      return;
    }
    for (int a = 1; a <= m + 1; ++a) {
      std::vector<int> q = p;
      for (int& v : q) v += v >= a;
      q.push_back(a);
      const bool bad = std::any_of(vs.begin(), vs.end(), [&](const VincularPattern& v) { return vincular_occurs_at_end(q, v); });
      if (bad) continue;
      std::swap(p, q);
      rec();
      std::swap(p, q);
    }
  };
  rec();
}

template <class Visit>
void each_dyck_word(int n, Visit&& visit) {
  std::vector<Step> w;
  std::function<void(int, int)> rec = [&](int ups, int height) {
    if (ups == n && height == 0) {
      visit(w);
      return;
    }
    if (ups < n) {
      w.push_back(Step::U);
      rec(ups + 1, height + 1);
      w.pop_back();
    }
    if (height > 0) {
      w.push_back(Step::D);
      rec(ups, height - 1);
      w.pop_back();
    }
  };
  if (n >= 1) rec(0, 0);
}

// Words in the cone 0 <= y <= x without WD or DW factors; (S1)/(S2) are
// left to validate(). After the last U only D steps can follow.
template <class Visit>
void each_steady_word(int n, Visit&& visit) {
  std::vector<Step> w;
  std::function<void(int, int, int)> rec = [&](int ups, int x, int y) {
    if (ups == n && y == 0) {
      visit(w);
      return;
    }
    const Step prev = w.empty() ? Step::U : w.back();
    if (ups < n) {
      w.push_back(Step::U);
      rec(ups + 1, x + 1, y + 1);
      w.pop_back();
    }
    if (y > 0 && prev != Step::W) {
      w.push_back(Step::D);
      rec(ups, x + 1, y - 1);
      w.pop_back();
    }
    if (ups < n && prev != Step::D && !w.empty() && y + 1 <= x - 1) {
      w.push_back(Step::W);
      rec(ups, x - 1, y + 1);
      w.pop_back();
    }
  };
  if (n >= 1) rec(0, 0, 0);
}

// Every assignment of marks 0..height to the valleys of p.
template <class Visit>
void each_marking(Path p, Visit&& visit) {
  const auto vs = valleys(p.steps);
  p.marks.assign(vs.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == vs.size()) {
      visit(p);
      return;
    }
    for (int m = 0; m <= vs[v].corner.y; ++m) {
      p.marks[v] = m;
      rec(v + 1);
    }
    p.marks[v] = 0;
  };
  rec(0);
}

template <class Visit>
void each_path(PathKind kind, int n, Visit&& visit) {
  auto base = [&](const std::vector<Step>& w) {
    Path p;
    p.steps = w;
    p.kind = kind;
    p.marks.assign(valleys(p.steps).size(), 0);
    return p;
  };
  switch (kind) {
    case PathKind::Dyck:
      each_dyck_word(n, [&](const std::vector<Step>& w) { visit(base(w)); });
      break;
    case PathKind::ValleyMarkedDyck:
      each_dyck_word(n, [&](const std::vector<Step>& w) { each_marking(base(w), visit); });
      break;
    case PathKind::Steady:
      each_steady_word(n, [&](const std::vector<Step>& w) {
        Path p = base(w);
        if (validate(p).ok()) visit(p);
      });
      break;
    case PathKind::ValleyMarkedSteady:
      each_steady_word(n, [&](const std::vector<Step>& w) {
        Path p = base(w);
        p.kind = PathKind::Steady;
        if (!validate(p).ok()) return;
        p.kind = kind;
        each_marking(p, [&](const Path& q) {
          if (validate(q).ok()) visit(q);
        });
      });
      break;
  }
}

// Vertex m is placed as a child of any smaller vertex, in any slot.
template <class Visit>
void each_tree(int n, bool increasing_leaves_only, Visit&& visit) {
  if (n < 0) return;
  IncreasingTree t;
  t.children.assign(1, {});
  std::function<void(int)> rec = [&](int m) {
    if (m > n) {
      if (!increasing_leaves_only || has_increasing_leaves(t)) visit(t);
      return;
    }
    t.children.emplace_back();
    for (int v = 0; v < m; ++v) {
      const std::size_t degree = t.children[static_cast<std::size_t>(v)].size();
      for (std::size_t slot = 0; slot <= degree; ++slot) {
        auto& kids = t.children[static_cast<std::size_t>(v)];
        kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(slot), m);
        rec(m + 1);
        auto& again = t.children[static_cast<std::size_t>(v)];
        again.erase(again.begin() + static_cast<std::ptrdiff_t>(slot));
      }
    }
    t.children.pop_back();
  };
  rec(1);
}

template <class T>
void sort_by_text(std::vector<T>& items) {
  std::vector<std::pair<std::string, T>> keyed;
  keyed.reserve(items.size());
  for (auto& it : items) keyed.emplace_back(to_text(it), std::move(it));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  items.clear();
  for (auto& [key, it] : keyed) items.push_back(std::move(it));
}

void check_limit(int n, int limit, const char* what) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "size must be at least 1");
  if (n > limit) {
    throw LimitError(std::string("exhaustive enumeration of ") + what + " is limited to size " + std::to_string(limit) +
                     ", got " + std::to_string(n));
  }
}

template <class F>
void dispatch(const ClassSpec& spec, int n, const EnumerationLimits& limits, F&& on_text_source) {
  switch (spec.kind) {
    case ClassKind::InvseqTriple:
      check_limit(n, limits.inversion_sequences, "inversion sequences");
      break;
    case ClassKind::InvseqWords:
      check_limit(n, limits.inversion_sequences, "inversion sequences");
      break;
    case ClassKind::PermVincular:
    case ClassKind::PermClassical:
      check_limit(n, limits.permutations, "permutations");
      break;
    case ClassKind::Paths:
      check_limit(n, limits.paths, "paths");
      break;
    case ClassKind::Trees:
      check_limit(n, limits.trees, "trees");
      break;
  }
  on_text_source();
}

}  // namespace

std::vector<InversionSequence> enumerate_inversion_sequences(const RelationTriple& t, int n) {
  std::vector<InversionSequence> out;
  each_triple_invseq(t, n, [&](const std::vector<int>& e) { out.push_back({e}); });
  sort_by_text(out);
  return out;
}

std::vector<InversionSequence> enumerate_inversion_sequences(std::span<const WordPattern> ws, int n) {
  std::vector<InversionSequence> out;
  each_word_invseq(ws, n, [&](const std::vector<int>& e) { out.push_back({e}); });
  sort_by_text(out);
  return out;
}

std::vector<Permutation> enumerate_permutations(std::span<const VincularPattern> vs, int n) {
  std::vector<Permutation> out;
  each_permutation(vs, n, [&](const std::vector<int>& p) { out.push_back({p}); });
  sort_by_text(out);
  return out;
}

std::vector<Path> enumerate_paths(PathKind kind, int n) {
  std::vector<Path> out;
  each_path(kind, n, [&](const Path& p) { out.push_back(p); });
  sort_by_text(out);
  return out;
}

std::vector<IncreasingTree> enumerate_trees(int n, bool increasing_leaves_only) {
  std::vector<IncreasingTree> out;
  each_tree(n, increasing_leaves_only, [&](const IncreasingTree& t) { out.push_back(t); });
  sort_by_text(out);
  return out;
}

std::uint64_t count_class(const ClassSpec& spec, int n, const EnumerationLimits& limits) {
  std::uint64_t count = 0;
  auto bump = [&](const auto&) { ++count; };
  dispatch(spec, n, limits, [&] {
    switch (spec.kind) {
      case ClassKind::InvseqTriple: each_triple_invseq(spec.triple, n, bump); break;
      case ClassKind::InvseqWords: each_word_invseq(spec.words, n, bump); break;
      case ClassKind::PermVincular:
      case ClassKind::PermClassical: each_permutation(spec.perm_patterns, n, bump); break;
      case ClassKind::Paths: each_path(spec.path_kind, n, bump); break;
      case ClassKind::Trees: each_tree(n, spec.increasing_leaves, bump); break;
    }
  });
  return count;
}

std::vector<std::string> enumerate_class(const ClassSpec& spec, int n, const EnumerationLimits& limits) {
  std::vector<std::string> out;
  dispatch(spec, n, limits, [&] {
    switch (spec.kind) {
      case ClassKind::InvseqTriple:
        each_triple_invseq(spec.triple, n, [&](const std::vector<int>& e) { out.push_back(to_text(std::span<const int>(e))); });
        break;
      case ClassKind::InvseqWords:
        each_word_invseq(spec.words, n, [&](const std::vector<int>& e) { out.push_back(to_text(std::span<const int>(e))); });
        break;
      case ClassKind::PermVincular:
      case ClassKind::PermClassical:
        each_permutation(spec.perm_patterns, n, [&](const std::vector<int>& p) { out.push_back(to_text(std::span<const int>(p))); });
        break;
      case ClassKind::Paths:
        each_path(spec.path_kind, n, [&](const Path& p) { out.push_back(to_text(p)); });
        break;
      case ClassKind::Trees:
        each_tree(n, spec.increasing_leaves, [&](const IncreasingTree& t) { out.push_back(to_text(t)); });
        break;
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace invtree
