#pragma once

// Avoidance oracles for inversion sequences (relation triples and word
// patterns) and permutations (vincular patterns), the structural criteria
// that characterize the classes studied here, and exhaustive enumerators.

#include "invtree/objects.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace invtree {

enum class Relation { Lt, Gt, Leq, Geq, Eq, Neq, Any };

bool holds(Relation r, int a, int b) noexcept;
/// ASCII token: lt, gt, leq, geq, eq, neq, dash.
Relation parse_relation(std::string_view token);
std::string_view to_string(Relation r);

struct RelationTriple {
  Relation first = Relation::Any;   // between e_i and e_j
  Relation second = Relation::Any;  // between e_j and e_k
  Relation third = Relation::Any;   // between e_i and e_k

  bool operator==(const RelationTriple&) const = default;
};

/// "geq,dash,geq" and the like.
RelationTriple parse_relation_triple(std::string_view text);
std::string to_text(const RelationTriple& t);

/// Word over non-negative integers; an occurrence is a subsequence with the
/// same equality and order type.
struct WordPattern {
  std::vector<int> letters;
  bool operator==(const WordPattern&) const = default;
};

/// Single-digit letters, e.g. "110".
WordPattern parse_word_pattern(std::string_view text);
std::string to_text(const WordPattern& w);

/// Permutation pattern; adjacent[i] requires pattern entries i and i+1 to
/// sit at consecutive positions of the text. All false gives a classical
/// pattern.
struct VincularPattern {
  std::vector<int> perm;
  std::vector<bool> adjacent;

  std::size_t size() const noexcept { return perm.size(); }
  bool operator==(const VincularPattern&) const = default;
};

/// Dash notation: "1-23-4" (entries without a dash between them are
/// adjacent); "123" is the fully adjacent pattern, so classical patterns
/// are written with dashes, "1-2-3", or parsed with parse_classical_pattern.
VincularPattern parse_vincular_pattern(std::string_view text);
VincularPattern parse_classical_pattern(std::string_view text);
std::string to_text(const VincularPattern& v);

bool avoids_triple(const InversionSequence& e, const RelationTriple& t);
bool avoids_word(std::span<const int> seq, const WordPattern& w);
inline bool avoids_word(const InversionSequence& e, const WordPattern& w) {
  return avoids_word(std::span<const int>(e.entries), w);
}
bool avoids_words(std::span<const int> seq, std::span<const WordPattern> ws);
bool avoids_vincular(const Permutation& p, const VincularPattern& v);
bool avoids_all(const Permutation& p, std::span<const VincularPattern> vs);

// Occurrence tests restricted to occurrences whose last entry is the last
// element of seq. These drive the prefix-pruned enumerators.
bool triple_occurs_at_end(std::span<const int> seq, const RelationTriple& t);
bool word_occurs_at_end(std::span<const int> seq, const WordPattern& w);
bool vincular_occurs_at_end(std::span<const int> perm, const VincularPattern& v);

struct PermStatistics {
  int ltr_minima = 0;
  int ltr_maxima = 0;
  int rtl_minima = 0;
  int rtl_maxima = 0;
  bool operator==(const PermStatistics&) const = default;
};

PermStatistics perm_statistics(const Permutation& p);

// Structural characterizations.

/// Every weak descent e_i >= e_{i+1} has e_i < e_j for all j > i+1.
bool catalan_weak_descent_criterion(const InversionSequence& e);
/// Left-to-right maxima and the remaining entries are both strictly
/// increasing.
bool ltr_bottom_criterion(const InversionSequence& e);
/// For every inversion e_i > e_j: e_i is a LTR maximum and e_j a RTL minimum.
bool baxter_inversion_criterion(const InversionSequence& e);
/// For every inversion e_i > e_j: e_i is a LTR maximum.
bool semibaxter_inversion_criterion(const InversionSequence& e);
/// Every ascent pi_i < pi_{i+1} has pi_i a LTR minimum or pi_{i+1} a RTL
/// maximum.
bool ascent_criterion_1_23_4(const Permutation& p);

// Combinatorial classes.

enum class ClassKind { InvseqTriple, InvseqWords, PermVincular, PermClassical, Paths, Trees };

struct ClassSpec {
  ClassKind kind = ClassKind::InvseqTriple;
  RelationTriple triple;
  std::vector<WordPattern> words;
  std::vector<VincularPattern> perm_patterns;
  PathKind path_kind = PathKind::Dyck;
  bool increasing_leaves = true;

  std::string text() const;
};

/// Accepted forms:
///   "geq,dash,geq"             inversion sequences avoiding a relation triple
///   "avoid:100,110,210"        inversion sequences avoiding words
///   "perm:1-23-4,2-14-3"       permutations avoiding vincular patterns
///   "classical:123,132"        permutations avoiding classical patterns
///   "path:steady"              paths of a kind (dyck, vmdyck, steady, vmsteady)
///   "tree" / "tree:all"        increasing ordered trees (with increasing leaves / all)
ClassSpec parse_class_spec(std::string_view text);

struct EnumerationLimits {
  int permutations = 10;
  int inversion_sequences = 10;
  int paths = 8;
  int trees = 8;
};

/// Number of objects of size n in the class.
std::uint64_t count_class(const ClassSpec& spec, int n, const EnumerationLimits& limits = {});
/// Canonical texts of all objects of size n, each once, sorted
/// lexicographically.
std::vector<std::string> enumerate_class(const ClassSpec& spec, int n, const EnumerationLimits& limits = {});

// Typed enumerators. Each returns every object of size n once, sorted by
// canonical text. They do not apply limits.
std::vector<InversionSequence> enumerate_inversion_sequences(const RelationTriple& t, int n);
std::vector<InversionSequence> enumerate_inversion_sequences(std::span<const WordPattern> ws, int n);
std::vector<Permutation> enumerate_permutations(std::span<const VincularPattern> vs, int n);
std::vector<Path> enumerate_paths(PathKind kind, int n);
std::vector<IncreasingTree> enumerate_trees(int n, bool increasing_leaves_only);

struct EquinumerosityRow {
  int n = 0;
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  bool equal() const noexcept { return count_a == count_b; }
};

struct EquinumerosityTable {
  std::string class_a;
  std::string class_b;
  std::vector<EquinumerosityRow> rows;
  bool all_equal() const;
};

EquinumerosityTable equinumerosity_check(const ClassSpec& a, const ClassSpec& b, int n_max,
                                         const EnumerationLimits& limits = {});

}  // namespace invtree
