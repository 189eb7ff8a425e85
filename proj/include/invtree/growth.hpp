#pragma once

// Object-level growths. Each family has a child generator that emits
// (child, label) pairs, a label function computed from the object alone,
// a membership oracle, and a parent map. growth_consistency() checks all of
// them against each other and against the rule catalog.

#include "invtree/gentree.hpp"
#include "invtree/objects.hpp"
#include "invtree/patterns.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace invtree {

template <class T>
using Children = std::vector<std::pair<T, Label>>;

// Catalan inversion sequences by insertion of i-1 at position i.

/// (e_1, ..., e_{i-1}, i-1, e_i, ..., e_n); i is 1-based, 1 <= i <= n+1.
InversionSequence cat_insert(const InversionSequence& e, int i);
/// Positions i (1-based, ascending) such that cat_insert(e, i) stays in
/// I(>=,-,>=), found by testing each insertion with the avoidance oracle.
std::vector<int> active_positions_cat(const InversionSequence& e);
Children<InversionSequence> cat_children(const InversionSequence& e);
Label cat_label(const InversionSequence& e);
/// Removes the rightmost entry equal to its position minus one.
InversionSequence cat_parent(const InversionSequence& e);

// Growths by a new rightmost entry, for rules cat2, i-geq3, bax and semi.

Children<InversionSequence> children_rightmost_entry(RuleId family, const InversionSequence& e);
Label rightmost_entry_label(RuleId family, const InversionSequence& e);
/// Largest entry forming a weak descent e_i >= e_{i+1}; -1 if none.
int max_weak_descent(const InversionSequence& e);

// Powered Catalan inversion sequences, I(=,>,>).

Children<InversionSequence> pcat_children_invseq(const InversionSequence& e);
InversionSequence pcat_parent_invseq(const InversionSequence& f);
Label pcat_label_invseq(const InversionSequence& e);

// Dyck paths under the Catalan rule, and valley-marked Dyck paths: a new
// rightmost peak is inserted at a point of the last descent.

Children<Path> dyck_children(const Path& p);
Children<Path> vmdyck_children(const Path& p);
/// (number of D steps in the last descent)
Label last_descent_label(const Path& p);
/// Removes the last peak (and the mark of the valley before it, if any).
Path remove_last_peak(const Path& p);

// Increasing ordered trees with increasing leaves.

Children<IncreasingTree> tree_children(const IncreasingTree& t);
Label tree_label(const IncreasingTree& t);
/// Removes vertex 1, hands its children to the root in its place, and
/// decrements the other labels.
IncreasingTree tree_parent(const IncreasingTree& t);

// Permutations avoiding 1-23-4, grown by appending pi . a.

/// pi . a: appends a and shifts the entries >= a up by one.
Permutation append_value(const Permutation& p, int a);
/// Active sites from the minimal 1-23 occurrence: [1, pi_t], or [1, n+1].
std::vector<int> active_sites_1234(const Permutation& p);
/// Active sites by testing every a with the avoidance oracle.
std::vector<int> active_sites_1234_brute(const Permutation& p);
Children<Permutation> perm1234_children(const Permutation& p);
Label perm1234_label(const Permutation& p);
/// Drops the last entry and standardizes.
Permutation drop_last(const Permutation& p);

// Steady paths, grown by a new rightmost up step.

/// Diagonal distances (i_k - j_k) / 2 of the up-step starting points, left
/// to right.
std::vector<int> steady_distances(const Path& p);
/// The unique U/D/W word whose k-th up step starts at distance d[k] from
/// y = x; the result is not validated.
Path path_from_distances(std::span<const int> d);
Children<Path> steady_children(const Path& p);
Label steady_label(const Path& p);
/// Removes the rightmost up step.
Path steady_parent(const Path& p);

// Type-erased families, addressed by name: cat, cat:dyck, cat2, i-geq3,
// bax, semi, pcat:invseq (also pcat), pcat:vmdyck, pcat:tree, p1234,
// steady. Objects travel as canonical text.

class Family {
public:
  virtual ~Family() = default;
  virtual std::string name() const = 0;
  virtual RuleId rule() const = 0;
  /// All members of size n in canonical text order (exhaustive oracle).
  virtual std::vector<std::string> members(int n) const = 0;
  virtual bool is_member(const std::string& text) const = 0;
  virtual std::vector<std::pair<std::string, Label>> children(const std::string& text) const = 0;
  virtual Label label(const std::string& text) const = 0;
  virtual std::string parent(const std::string& text) const = 0;
  virtual int size(const std::string& text) const = 0;
};

std::unique_ptr<Family> make_family(std::string_view name);
const std::vector<std::string>& family_names();

struct GrowthViolation {
  std::string check;   // membership, labels, production, unique, parent, count
  std::string object;  // serialized counterexample
  std::string detail;
};

struct GrowthReport {
  std::string family;
  int n_max = 0;
  std::uint64_t objects_checked = 0;
  std::vector<GrowthViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// For every member of size < n_max: children are members, emitted labels
/// equal the children's own labels, the label multiset equals the rule
/// production, and parent(child) is the object. For every size 2..n_max
/// each member arises from exactly one parent. At most max_violations are
/// kept.
GrowthReport growth_consistency(const Family& family, int n_max, std::size_t max_violations = 20);

}  // namespace invtree
