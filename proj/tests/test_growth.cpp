#include "doctest.h"
#include "oracles.hpp"

#include "invtree/error.hpp"
#include "invtree/growth.hpp"

#include <algorithm>
#include <map>

using namespace invtree;

namespace {

InversionSequence seq(const char* s) { return parse_inversion_sequence(s); }

template <class T>
std::vector<std::pair<std::string, Label>> texts(const Children<T>& children) {
  std::vector<std::pair<std::string, Label>> out;
  for (const auto& [child, label] : children) out.emplace_back(to_text(child), label);
  std::sort(out.begin(), out.end());
  return out;
}

using Expected = std::vector<std::pair<std::string, Label>>;

}  // namespace

TEST_CASE("cat insertion") {
  CHECK(cat_insert(seq("0,0,1,3,4,5"), 4) == seq("0,0,1,3,3,4,5"));
  CHECK(cat_insert(seq("0"), 2) == seq("0,1"));
  CHECK(cat_insert(seq("0"), 1) == seq("0,0"));
  CHECK_THROWS_AS(cat_insert(seq("0"), 3), Error);

  CHECK(active_positions_cat(seq("0")) == std::vector<int>{1, 2});
  CHECK(cat_label(seq("0")) == Label::one(1));
  CHECK(active_positions_cat(seq("0,1")) == std::vector<int>{1, 2, 3});
  for (const auto& e : enumerate_inversion_sequences(parse_relation_triple("geq,dash,geq"), 6)) {
    const auto a = active_positions_cat(e);
    CHECK(std::find(a.begin(), a.end(), 6) != a.end());
    CHECK(std::find(a.begin(), a.end(), 7) != a.end());
  }
}

TEST_CASE("rightmost entry growths") {
  CHECK(texts(children_rightmost_entry(RuleId::Cat2, seq("0"))) ==
        Expected{{"0,0", Label::two(0, 2)}, {"0,1", Label::two(2, 1)}});
  CHECK(texts(children_rightmost_entry(RuleId::Semi, seq("0"))) ==
        Expected{{"0,0", Label::two(1, 2)}, {"0,1", Label::two(2, 1)}});
  CHECK(rightmost_entry_label(RuleId::IGeq3, seq("0")) == Label::two(1, 1));
  CHECK(max_weak_descent(seq("0,1,2")) == -1);
  CHECK(max_weak_descent(seq("0,1,1,0")) == 1);
}

TEST_CASE("cat2 label statistics") {
  // h = max(e) - mwd(e), k = n - max(e), from brute-force statistics.
  for (int n = 1; n <= 7; ++n) {
    for (const auto& e : enumerate_inversion_sequences(parse_relation_triple("geq,dash,geq"), n)) {
      const int mx = *std::max_element(e.entries.begin(), e.entries.end());
      int mwd = -1;
      for (std::size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i] >= e[i + 1]) mwd = std::max(mwd, e[i]);
      }
      CHECK(rightmost_entry_label(RuleId::Cat2, e) == Label::two(mx - mwd, n - mx));
    }
  }
}

TEST_CASE("powered Catalan inversion sequences") {
  CHECK(texts(pcat_children_invseq(seq("0"))) == Expected{{"0,0", Label::one(2)}, {"0,1", Label::one(1)}});
  const auto kids = pcat_children_invseq(seq("0,0"));
  CHECK(kids.size() == 4);
  std::vector<Label> labels;
  for (const auto& [child, label] : kids) labels.push_back(label);
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<Label>{Label::one(1), Label::one(2), Label::one(2), Label::one(3)});
  CHECK(pcat_parent_invseq(seq("0,1")) == seq("0"));
  CHECK(pcat_parent_invseq(seq("0,0")) == seq("0"));
  CHECK_THROWS_AS(pcat_parent_invseq(seq("0")), Error);

  for (int n = 1; n <= 6; ++n) {
    for (const auto& e : enumerate_inversion_sequences(parse_relation_triple("eq,gt,gt"), n)) {
      const int zeros = static_cast<int>(std::count(e.entries.begin(), e.entries.end(), 0));
      const auto children = pcat_children_invseq(e);
      CHECK(children.size() == static_cast<std::size_t>(zeros * (zeros + 1) / 2 + 1));
      for (const auto& [child, label] : children) CHECK(pcat_parent_invseq(child) == e);
    }
  }
}

TEST_CASE("steady path growth") {
  const auto ud = parse_path("UD", PathKind::Steady);
  CHECK(steady_label(ud) == Label::two(0, 2));
  CHECK(texts(steady_children(ud)) == Expected{{"UDUD", Label::two(1, 2)}, {"UUDD", Label::two(0, 3)}});
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_paths(PathKind::Steady, n)) {
      const Label l = steady_label(p);
      CHECK(steady_children(p).size() == static_cast<std::size_t>(l.first + l.second));
      CHECK(path_from_distances(steady_distances(p)) == p);
    }
  }
}

TEST_CASE("steady path from the distance sequence") {
  const std::vector<int> d{5, 3, 0, 4, 1, 0, 1, 0};
  const Path p = path_from_distances(std::vector<int>(d.rbegin(), d.rend()));
  CHECK(validate(p).ok());
  CHECK(p.size() == 8);
  CHECK(steady_distances(p) == std::vector<int>(d.rbegin(), d.rend()));
}

TEST_CASE("1-23-4 avoiders") {
  const Permutation one{{1}};
  CHECK(perm1234_label(one) == Label::two(1, 1));
  CHECK(texts(perm1234_children(one)) == Expected{{"1,2", Label::two(2, 1)}, {"2,1", Label::two(1, 2)}});
  CHECK(append_value(parse_permutation("2,1"), 2) == parse_permutation("3,1,2"));
  CHECK(drop_last(parse_permutation("3,1,2")) == parse_permutation("2,1"));
  const std::vector<VincularPattern> v{parse_vincular_pattern("1-23-4")};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : enumerate_permutations(v, n)) CHECK(active_sites_1234(p) == active_sites_1234_brute(p));
  }
}

TEST_CASE("valley-marked Dyck paths") {
  const auto ud = parse_path("UD", PathKind::ValleyMarkedDyck);
  CHECK(texts(vmdyck_children(ud)) == Expected{{"UDUD;marks=0", Label::one(1)}, {"UUDD", Label::one(2)}});
  std::vector<Label> labels;
  for (const auto& [child, label] : vmdyck_children(parse_path("UUDD", PathKind::ValleyMarkedDyck))) labels.push_back(label);
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<Label>{Label::one(1), Label::one(2), Label::one(2), Label::one(3)});
  CHECK(remove_last_peak(parse_path("UUDUDD;marks=1", PathKind::ValleyMarkedDyck)) == parse_path("UUDD", PathKind::ValleyMarkedDyck));
}

TEST_CASE("Dyck paths under the Catalan rule") {
  const auto kids = dyck_children(parse_path("UUDD", PathKind::Dyck));
  CHECK(kids.size() == 3);
  CHECK(last_descent_label(parse_path("UUDD", PathKind::Dyck)) == Label::one(2));
}

TEST_CASE("increasing trees") {
  const auto t = parse_tree("0(1)");
  CHECK(tree_label(t) == Label::one(1));
  const auto kids = tree_children(t);
  REQUIRE(kids.size() == 2);
  std::vector<Label> labels{kids[0].second, kids[1].second};
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<Label>{Label::one(1), Label::one(2)});
  for (const auto& [child, label] : kids) CHECK(tree_parent(child) == t);
}

TEST_CASE("families") {
  CHECK(family_names().size() == 11);
  for (const auto& name : family_names()) {
    const auto f = make_family(name);
    CHECK(f->name() == name);
    CHECK(f->members(1).size() == 1);
  }
  CHECK(make_family("pcat")->name() == "pcat:invseq");
  CHECK_THROWS_AS(make_family("nope"), Error);
  CHECK_THROWS_AS(make_family("steady")->children("UUDUDDD"), Error);
}

TEST_CASE("tree growth level counts") {
  // Counting the generated tree level by level from its root.
  const auto f = make_family("pcat:tree");
  std::vector<std::string> level = f->members(1);
  std::vector<std::size_t> counts{level.size()};
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::string> next;
    for (const auto& t : level) {
      for (const auto& [child, label] : f->children(t)) next.push_back(child);
    }
    counts.push_back(next.size());
    level = std::move(next);
  }
  CHECK(counts == std::vector<std::size_t>{1, 2, 6, 23, 105, 549});
}

TEST_CASE("growth consistency") {
  for (const auto& name : family_names()) {
    const auto report = growth_consistency(*make_family(name), 6);
    INFO(name);
    CHECK(report.ok());
    CHECK(report.objects_checked > 0);
  }
  CHECK(growth_consistency(*make_family("cat"), 8).ok());
}

TEST_CASE("family sizes match rule levels") {
  const std::map<std::string, RuleId> rules{{"cat", RuleId::Cat},     {"cat2", RuleId::Cat2}, {"i-geq3", RuleId::IGeq3},
                                            {"bax", RuleId::Bax},     {"semi", RuleId::Semi}, {"pcat:invseq", RuleId::PCat},
                                            {"steady", RuleId::Steady}};
  for (const auto& [name, rule] : rules) {
    const auto f = make_family(name);
    const auto levels = level_counts(rule, 8);
    for (int n = 1; n <= 8; ++n) CHECK(BigInt(f->members(n).size()) == levels[static_cast<std::size_t>(n - 1)]);
  }
  const auto levels = level_counts(RuleId::P1234, 8);
  const auto f = make_family("p1234");
  for (int n = 1; n <= 8; ++n) CHECK(BigInt(f->members(n).size()) == levels[static_cast<std::size_t>(n - 1)]);
}
