#include "invtree/bijections.hpp"

#include "invtree/error.hpp"
#include "invtree/growth.hpp"
#include "invtree/patterns.hpp"

#include <algorithm>

namespace invtree {

LeftInversionTable left_inversion_table(const Permutation& p) {
  if (!validate(p).ok()) throw Error(ErrorCode::InvalidArgument, to_text(p) + " is not a permutation");
  LeftInversionTable t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int count = 0;
    for (std::size_t j = i + 1; j < p.size(); ++j) count += p[i] > p[j];
    t.entries.push_back(count);
  }
  return t;
}

Permutation permutation_from_table(const LeftInversionTable& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty inversion table");
  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) remaining[static_cast<std::size_t>(v)] = v + 1;
  Permutation p;
  for (int i = 0; i < n; ++i) {
    const int ti = t.entries[static_cast<std::size_t>(i)];
    if (ti < 0 || ti > n - 1 - i) {
      throw Error(ErrorCode::InvalidArgument, "t_" + std::to_string(i + 1) + " = " + std::to_string(ti) +
                                                  " is outside [0, " + std::to_string(n - 1 - i) + "]");
    }
    // pi_i is the (t_i + 1)-th smallest value not used yet.
    p.values.push_back(remaining[static_cast<std::size_t>(ti)]);
    remaining.erase(remaining.begin() + ti);
  }
  return p;
}

namespace {

const std::vector<VincularPattern>& catalan_perm_patterns() {
  static const std::vector<VincularPattern> v{parse_vincular_pattern("1-23"), parse_vincular_pattern("2-14-3")};
  return v;
}

const VincularPattern& pattern_1_34_2() {
  static const VincularPattern v = parse_vincular_pattern("1-34-2");
  return v;
}

}  // namespace

Permutation catalan_invseq_to_perm(const InversionSequence& e) {
  if (!validate(e).ok() || !catalan_weak_descent_criterion(e)) {
    throw PreconditionError("(" + to_text(e) + ") is not in I(>=,-,>=)");
  }
  LeftInversionTable t{std::vector<int>(e.entries.rbegin(), e.entries.rend())};
  Permutation p = permutation_from_table(t);
  if (!avoids_all(p, catalan_perm_patterns())) throw Error(ErrorCode::Internal, "image " + to_text(p) + " leaves AV(1-23, 2-14-3)");
  return p;
}

InversionSequence catalan_perm_to_invseq(const Permutation& p) {
  if (!validate(p).ok() || !avoids_all(p, catalan_perm_patterns())) {
    throw PreconditionError(to_text(p) + " is not in AV(1-23, 2-14-3)");
  }
  const auto t = left_inversion_table(p);
  return InversionSequence{std::vector<int>(t.entries.rbegin(), t.entries.rend())};
}

Permutation steady_to_perm(const Path& p) {
  Path q = p;
  q.kind = PathKind::Steady;
  if (!validate(q).ok()) throw PreconditionError(to_text(p) + " is not a steady path");
  const auto d = steady_distances(q);
  Permutation out = permutation_from_table(LeftInversionTable{std::vector<int>(d.rbegin(), d.rend())});
  if (!avoids_vincular(out, pattern_1_34_2())) throw Error(ErrorCode::Internal, "image " + to_text(out) + " contains 1-34-2");
  return out;
}

Path perm_to_steady(const Permutation& p) {
  if (!validate(p).ok() || !avoids_vincular(p, pattern_1_34_2())) {
    throw PreconditionError(to_text(p) + " does not avoid 1-34-2");
  }
  const auto t = left_inversion_table(p);
  const std::vector<int> d(t.entries.rbegin(), t.entries.rend());
  Path out = path_from_distances(d);
  if (!validate(out).ok()) throw Error(ErrorCode::Internal, "table of " + to_text(p) + " does not encode a steady path");
  return out;
}

const std::vector<std::string>& map_names() {
  static const std::vector<std::string> names{"tinv",        "tinv-inv",        "cat-perm", "cat-perm-inv",
                                              "steady-perm", "steady-perm-inv", "phi",      "theta",
                                              "phi-star",    "theta-star"};
  return names;
}

std::string apply_map(std::string_view name, std::string_view input) {
  if (name == "tinv") return to_text(std::span<const int>(left_inversion_table(parse_permutation(input)).entries));
  if (name == "tinv-inv") return to_text(permutation_from_table(LeftInversionTable{parse_int_list(input)}));
  if (name == "cat-perm") return to_text(catalan_invseq_to_perm(parse_inversion_sequence(input)));
  if (name == "cat-perm-inv") return to_text(catalan_perm_to_invseq(parse_permutation(input)));
  if (name == "steady-perm") return to_text(steady_to_perm(parse_path(input, PathKind::Steady)));
  if (name == "steady-perm-inv") return to_text(perm_to_steady(parse_permutation(input)));
  if (name == "phi") return to_text(phi(parse_path(input, PathKind::ValleyMarkedSteady)));
  if (name == "theta") return to_text(theta(parse_path(input, PathKind::ValleyMarkedSteady)));
  if (name == "phi-star") return to_text(phi_star(parse_path(input, PathKind::Steady)));
  if (name == "theta-star") return to_text(theta_star(parse_path(input, PathKind::ValleyMarkedDyck)));
  throw Error(ErrorCode::InvalidArgument, "unknown map '" + std::string(name) + "'");
}

}  // namespace invtree
