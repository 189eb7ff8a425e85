#include "doctest.h"
#include "oracles.hpp"

#include "invtree/error.hpp"
#include "invtree/patterns.hpp"

#include <map>

using namespace invtree;

namespace {

InversionSequence seq(const char* s) { return parse_inversion_sequence(s); }
Permutation perm(const char* s) { return parse_permutation(s); }

const std::map<std::string, oracle::Rel>& relations() {
  static const std::map<std::string, oracle::Rel> m{{"lt", oracle::lt},   {"gt", oracle::gt}, {"leq", oracle::leq},
                                                    {"geq", oracle::geq}, {"eq", oracle::eq}, {"neq", oracle::neq},
                                                    {"dash", oracle::any}};
  return m;
}

}  // namespace

TEST_CASE("relation triples") {
  CHECK(avoids_triple(seq("0,0,1,1,4,2,6,5"), parse_relation_triple("geq,dash,geq")));
  const auto e = seq("0,1,0,1,4,2,3,5");
  CHECK_FALSE(avoids_triple(e, parse_relation_triple("geq,dash,geq")));
  CHECK(avoids_triple(e, parse_relation_triple("geq,geq,geq")));
  CHECK(avoids_triple(seq("0"), parse_relation_triple("dash,dash,dash")));
  CHECK(to_text(parse_relation_triple("eq,gt,gt")) == "eq,gt,gt");
  CHECK_THROWS_AS(parse_relation_triple("geq,foo,gt"), Error);
  CHECK_THROWS_AS(parse_relation_triple("geq,gt"), Error);
}

TEST_CASE("relation triples against the naive oracle") {
  // A spread of triples covering every relation symbol in every slot.
  const char* triples[] = {"geq,dash,geq", "geq,geq,geq", "geq,geq,gt", "geq,gt,dash", "eq,gt,gt",  "lt,neq,dash",
                           "eq,lt,dash",   "gt,lt,dash",  "leq,eq,neq", "neq,leq,lt",  "dash,gt,eq", "gt,dash,geq"};
  for (const char* t : triples) {
    const auto triple = parse_relation_triple(t);
    std::vector<std::string> parts;
    std::string s = t;
    for (std::size_t start = 0;;) {
      const auto comma = s.find(',', start);
      parts.push_back(s.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    for (int n = 1; n <= 7; ++n) {
      for (const auto& e : oracle::inversion_sequences(n)) {
        const bool want = oracle::avoids_triple(e, relations().at(parts[0]), relations().at(parts[1]), relations().at(parts[2]));
        INFO(t << " " << to_text(std::span<const int>(e)));
        REQUIRE(avoids_triple(InversionSequence{e}, triple) == want);
      }
    }
  }
}

TEST_CASE("word patterns") {
  CHECK_FALSE(avoids_word(seq("0,1,1,0"), parse_word_pattern("110")));
  CHECK(avoids_word(seq("0,0,1"), parse_word_pattern("000")));
  CHECK(avoids_word(seq("0,0,1,3,3,4,5"), parse_word_pattern("100")));
  for (const char* w : {"000", "100", "101", "110", "201", "210", "012", "102", "0101"}) {
    const auto pattern = parse_word_pattern(w);
    for (int n = 1; n <= 7; ++n) {
      for (const auto& e : oracle::inversion_sequences(n)) {
        INFO(w << " " << to_text(std::span<const int>(e)));
        REQUIRE(avoids_word(std::span<const int>(e), pattern) == !oracle::contains_word(e, w));
      }
    }
  }
}

TEST_CASE("vincular patterns") {
  CHECK_FALSE(avoids_vincular(perm("1,2,3,4"), parse_vincular_pattern("1-23-4")));
  CHECK(avoids_vincular(perm("2,4,1,3"), parse_vincular_pattern("1-23-4")));
  CHECK_FALSE(avoids_vincular(perm("1,3,2,4"), parse_vincular_pattern("1-23")));
  CHECK(to_text(parse_vincular_pattern("2-14-3")) == "2-14-3");
  CHECK(parse_vincular_pattern("123").adjacent == std::vector<bool>{true, true});
  CHECK(parse_classical_pattern("123").adjacent == std::vector<bool>{false, false});
  CHECK_THROWS_AS(parse_vincular_pattern("1-1"), Error);

  for (const char* v : {"1-23-4", "1-23", "2-14-3", "1-34-2", "23-1-4", "1-32-4", "12", "1-2-3", "31-2"}) {
    const auto pattern = parse_vincular_pattern(v);
    for (int n = 1; n <= 7; ++n) {
      for (const auto& p : oracle::permutations(n)) {
        INFO(v << " " << to_text(std::span<const int>(p)));
        REQUIRE(avoids_vincular(Permutation{p}, pattern) == !oracle::contains_vincular(p, v));
      }
    }
  }
}

TEST_CASE("permutation statistics") {
  CHECK(perm_statistics(perm("3,2,1")).rtl_minima == 1);
  CHECK(perm_statistics(perm("2,4,1,3")).rtl_minima == 2);
  CHECK(perm_statistics(perm("1,2,3,4,5")).rtl_minima == 5);
  const auto s = perm_statistics(perm("2,4,1,3"));
  CHECK(s.ltr_minima == 2);
  CHECK(s.ltr_maxima == 2);
  CHECK(s.rtl_maxima == 2);
  for (const auto& p : oracle::permutations(6)) CHECK(perm_statistics(Permutation{p}).rtl_minima == oracle::rtl_minima(p));
}

TEST_CASE("structural criteria") {
  // Criteria against the naive word and triple oracles, exhaustive to n = 8
  // (the verification suite runs n = 9).
  for (int n = 1; n <= 8; ++n) {
    for (const auto& raw : oracle::inversion_sequences(n)) {
      const InversionSequence e{raw};
      INFO(to_text(e));
      REQUIRE(catalan_weak_descent_criterion(e) == oracle::avoids_triple(raw, oracle::geq, oracle::any, oracle::geq));
      REQUIRE(ltr_bottom_criterion(e) == oracle::avoids_triple(raw, oracle::geq, oracle::geq, oracle::geq));
      REQUIRE(baxter_inversion_criterion(e) == oracle::avoids_words(raw, {"100", "110", "210"}));
      REQUIRE(semibaxter_inversion_criterion(e) == oracle::avoids_words(raw, {"110", "210"}));
    }
  }
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : oracle::permutations(n)) {
      REQUIRE(ascent_criterion_1_23_4(Permutation{p}) == !oracle::contains_vincular(p, "1-23-4"));
    }
  }
}

TEST_CASE("word characterizations of the triples") {
  struct Case {
    const char* triple;
    std::vector<std::string> words;
  };
  const Case cases[] = {
      {"geq,dash,geq", {"000", "100", "101", "110", "201", "210"}},
      {"geq,geq,geq", {"000", "100", "110", "210"}},
      {"geq,geq,gt", {"100", "110", "210"}},
      {"geq,gt,dash", {"110", "210"}},
      {"eq,gt,gt", {"110"}},
  };
  for (const auto& c : cases) {
    const auto t = parse_relation_triple(c.triple);
    for (int n = 1; n <= 8; ++n) {
      for (const auto& e : oracle::inversion_sequences(n)) {
        INFO(c.triple << " " << to_text(std::span<const int>(e)));
        REQUIRE(avoids_triple(InversionSequence{e}, t) == oracle::avoids_words(e, c.words));
      }
    }
  }
}

TEST_CASE("class specs") {
  CHECK(parse_class_spec("geq,dash,geq").kind == ClassKind::InvseqTriple);
  CHECK(parse_class_spec("avoid:100,110").kind == ClassKind::InvseqWords);
  CHECK(parse_class_spec("perm:1-23-4").kind == ClassKind::PermVincular);
  CHECK(parse_class_spec("classical:123,132").kind == ClassKind::PermClassical);
  CHECK(parse_class_spec("path:vmdyck").path_kind == PathKind::ValleyMarkedDyck);
  CHECK(parse_class_spec("tree").increasing_leaves);
  CHECK_FALSE(parse_class_spec("tree:all").increasing_leaves);
  CHECK(parse_class_spec("classical:123,132").text() == "classical:123,132");
  CHECK_THROWS_AS(parse_class_spec("path:zigzag"), Error);
  CHECK_THROWS_AS(parse_class_spec("bogus"), Error);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_class(parse_class_spec("geq,dash,geq"), 3) ==
        std::vector<std::string>{"0,0,1", "0,0,2", "0,1,0", "0,1,1", "0,1,2"});
  CHECK(count_class(parse_class_spec("perm:1-23-4"), 4) == 23);
  CHECK(enumerate_class(parse_class_spec("path:steady"), 1) == std::vector<std::string>{"UD"});
  CHECK_THROWS_AS(count_class(parse_class_spec("geq,dash,geq"), 11), LimitError);
  CHECK_THROWS_AS(count_class(parse_class_spec("path:dyck"), 9), LimitError);

  for (int n = 1; n <= 7; ++n) {
    CHECK(count_class(parse_class_spec("path:dyck"), n) == oracle::dyck_words(n).size());
    CHECK(count_class(parse_class_spec("geq,dash,geq"), n) == oracle::catalan(n));
  }
  // Every enumerator returns distinct members in sorted order.
  for (const char* spec : {"geq,geq,geq", "perm:1-34-2", "path:vmsteady", "tree"}) {
    const auto all = enumerate_class(parse_class_spec(spec), 5);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("enumerators agree with filtering everything") {
  const RelationTriple t = parse_relation_triple("geq,gt,dash");
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t want = 0;
    for (const auto& e : oracle::inversion_sequences(n)) want += oracle::avoids_triple(e, oracle::geq, oracle::gt, oracle::any);
    CHECK(enumerate_inversion_sequences(t, n).size() == want);
  }
  const std::vector<VincularPattern> vs{parse_vincular_pattern("1-23"), parse_vincular_pattern("2-14-3")};
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t want = 0;
    for (const auto& p : oracle::permutations(n)) {
      want += !oracle::contains_vincular(p, "1-23") && !oracle::contains_vincular(p, "2-14-3");
    }
    CHECK(enumerate_permutations(vs, n).size() == want);
  }
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t want = 0;
    for (const auto& p : oracle::permutations(n)) want += !oracle::contains_classical(p, "4321") && !oracle::contains_classical(p, "4312");
    CHECK(count_class(parse_class_spec("classical:4321,4312"), n) == want);
  }
}

TEST_CASE("equinumerosity") {
  const auto a = equinumerosity_check(parse_class_spec("eq,dash,dash"), parse_class_spec("classical:123,132,231"), 7);
  CHECK(a.all_equal());
  CHECK(a.rows.size() == 7);
  CHECK(equinumerosity_check(parse_class_spec("lt,neq,dash"), parse_class_spec("classical:213,321"), 7).all_equal());
  CHECK(equinumerosity_check(parse_class_spec("eq,gt,gt"), parse_class_spec("perm:1-23-4"), 8).all_equal());
  const auto b = equinumerosity_check(parse_class_spec("geq,dash,geq"), parse_class_spec("eq,gt,gt"), 4);
  CHECK_FALSE(b.all_equal());
  CHECK(b.rows[2].count_a == 5);
  CHECK(b.rows[2].count_b == 6);
}
