#pragma once

// Explicit bijections: left inversion tables, Catalan inversion sequences to
// AV(1-23, 2-14-3), steady paths to AV(1-34-2), and the phi / theta moves
// between valley-marked steady paths with their iterates phi* and theta*.

#include "invtree/objects.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace invtree {

/// t_1..t_n with 0 <= t_i <= n - i.
struct LeftInversionTable {
  std::vector<int> entries;
  std::size_t size() const noexcept { return entries.size(); }
  bool operator==(const LeftInversionTable&) const = default;
};

/// t_i = #{ j > i : pi_i > pi_j }.
LeftInversionTable left_inversion_table(const Permutation& p);
/// Inverse of left_inversion_table; throws InvalidArgument on a bound
/// violation.
Permutation permutation_from_table(const LeftInversionTable& t);

/// Reverses e, reads it as a left inversion table and inverts it. The input
/// must lie in I(>=,-,>=); the output lies in AV(1-23, 2-14-3).
Permutation catalan_invseq_to_perm(const InversionSequence& e);
InversionSequence catalan_perm_to_invseq(const Permutation& p);

/// Distances of the up steps from y = x read right to left, inverted as a
/// left inversion table. Output lies in AV(1-34-2).
Permutation steady_to_perm(const Path& p);
Path perm_to_steady(const Permutation& p);

/// One phi step: removes the rightmost of the bottommost W steps and adds
/// one unit of mark. Requires a valid valley-marked steady path with a W.
Path phi(const Path& p);
/// Inverse of phi. Requires a valid valley-marked steady path with a
/// nonzero mark.
Path theta(const Path& p);
/// Iterates phi from a steady path (or valley-marked steady path) until no W
/// remains; the result has kind ValleyMarkedDyck.
Path phi_star(const Path& p);
/// Iterates theta from a valley-marked Dyck path until every mark is zero;
/// the result has kind Steady.
Path theta_star(const Path& p);

/// Named maps on canonical text: tinv, tinv-inv, cat-perm, cat-perm-inv,
/// steady-perm, steady-perm-inv, phi, theta, phi-star, theta-star.
std::string apply_map(std::string_view name, std::string_view input);
const std::vector<std::string>& map_names();

}  // namespace invtree
