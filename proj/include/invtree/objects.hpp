#pragma once

// Core combinatorial value types: inversion sequences, permutations,
// U/D/W lattice paths with valley marks, and increasing ordered trees.
//
// The types are plain values. They may hold data that violates their
// invariants (so that validate() has something to report); operations that
// require a valid object say so and check.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invtree {

/// Integer sequence (e_1, ..., e_n) with 0 <= e_i < i. Stored 0-based, so
/// entries[i] must be < i + 1.
struct InversionSequence {
  std::vector<int> entries;

  std::size_t size() const noexcept { return entries.size(); }
  int operator[](std::size_t i) const { return entries[i]; }

  auto operator<=>(const InversionSequence&) const = default;
};

/// One-line notation pi_1 ... pi_n, a rearrangement of 1..n.
struct Permutation {
  std::vector<int> values;

  std::size_t size() const noexcept { return values.size(); }
  int operator[](std::size_t i) const { return values[i]; }

  auto operator<=>(const Permutation&) const = default;
};

enum class Step : char { U = 'U', D = 'D', W = 'W' };

enum class PathKind { Dyck, ValleyMarkedDyck, Steady, ValleyMarkedSteady };

std::string_view to_string(PathKind kind);
PathKind parse_path_kind(std::string_view name);

inline bool is_valley_marked(PathKind kind) {
  return kind == PathKind::ValleyMarkedDyck || kind == PathKind::ValleyMarkedSteady;
}

/// A lattice path from (0,0) with steps U=(1,1), D=(1,-1), W=(-1,1). Marks
/// hold one height per valley (DU factor), left to right; unmarked kinds
/// keep them all zero.
struct Path {
  std::vector<Step> steps;
  std::vector<int> marks;
  PathKind kind = PathKind::Dyck;

  /// Number of U steps.
  int size() const;

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path& other) const {
    if (auto c = steps <=> other.steps; c != 0) return c;
    return marks <=> other.marks;
  }
};

struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

/// Lattice points visited by the step word, starting at (0,0); one more
/// entry than there are steps.
std::vector<Point> path_points(std::span<const Step> steps);

struct Valley {
  std::size_t up_step;  // index of the U of the DU factor
  Point corner;         // the lattice point between D and U
};

/// DU factors left to right.
std::vector<Valley> valleys(std::span<const Step> steps);

/// Ordered rooted tree on the labels {0, 1, ..., n} with root 0.
/// children[v] lists the children of vertex v left to right.
struct IncreasingTree {
  std::vector<std::vector<int>> children;

  int size() const { return static_cast<int>(children.size()) - 1; }
  int root_degree() const { return children.empty() ? 0 : static_cast<int>(children[0].size()); }

  auto operator<=>(const IncreasingTree&) const = default;
};

/// Leaves in pre-order.
std::vector<int> preorder_leaves(const IncreasingTree& tree);
bool has_increasing_leaves(const IncreasingTree& tree);

struct Violation {
  std::string invariant;
  std::ptrdiff_t position = -1;  // entry, step or vertex index; -1 if global
  std::string detail;
};

struct ValidityReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool violates(std::string_view invariant) const;
};

ValidityReport validate(const InversionSequence& e);
ValidityReport validate(const Permutation& p);
/// Checks every invariant of p.kind and reports all failures.
ValidityReport validate(const Path& p);
ValidityReport validate(const IncreasingTree& t, bool require_increasing_leaves = false);

struct PathStatistics {
  int w_count = 0;
  int total_mark = 0;
  int returns_to_axis = 0;
  int returns_to_mark = 0;
  int diagonal_steps = 0;
  int last_descent_length = 0;
  int edge_line_offset = 0;

  bool operator==(const PathStatistics&) const = default;
};

/// All seven statistics. edge_line_offset is the t of y = x - t through the
/// up step of the rightmost UU or WU factor, 0 when there is none.
PathStatistics path_statistics(const Path& p);

// Text formats. Parsers throw ParseError with a byte offset; serializers
// round-trip with them.

std::vector<int> parse_int_list(std::string_view text);
InversionSequence parse_inversion_sequence(std::string_view text);
Permutation parse_permutation(std::string_view text);
/// Step word with an optional ";marks=m1,m2,..." suffix. When the suffix is
/// present it must carry exactly one mark per valley.
Path parse_path(std::string_view text, PathKind kind);
/// Nested parenthesized labels, e.g. "0(1(3)2)". Adjacent leaf siblings may
/// be separated by ','.
IncreasingTree parse_tree(std::string_view text);

std::string to_text(std::span<const int> values);
std::string to_text(const InversionSequence& e);
std::string to_text(const Permutation& p);
std::string to_text(const Path& p);
std::string step_word(std::span<const Step> steps);
std::string to_text(const IncreasingTree& t);

}  // namespace invtree
