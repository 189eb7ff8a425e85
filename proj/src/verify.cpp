#include "invtree/verify.hpp"

#include "invtree/bijections.hpp"
#include "invtree/error.hpp"
#include "invtree/gentree.hpp"
#include "invtree/growth.hpp"
#include "invtree/patterns.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace invtree {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

struct Check {
  std::string name;
  std::string sizes;
  std::function<void(CheckResult&)> run;
};

void fail(CheckResult& r, std::string counterexample, std::string detail) {
  if (!r.passed) return;  // keep the first counterexample
  r.passed = false;
  r.counterexample = std::move(counterexample);
  r.detail = std::move(detail);
}

std::string join(const std::vector<BigInt>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].str();
  }
  return out;
}

std::vector<BigInt> big(std::initializer_list<long long> values) { return {values.begin(), values.end()}; }

void compare_sequences(CheckResult& r, const std::vector<BigInt>& got, const std::vector<BigInt>& want,
                       const std::string& what) {
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i) {
    if (got[i] != want[i]) {
      fail(r, "n=" + std::to_string(i + 1), what + ": got " + got[i].str() + ", expected " + want[i].str());
      return;
    }
  }
  if (got.size() != want.size()) fail(r, "length", what + ": " + std::to_string(got.size()) + " terms vs " + std::to_string(want.size()));
  if (r.passed) r.detail = join(got);
}

// Every inversion sequence of length n, lexicographically.
void each_inversion_sequence(int n, const std::function<void(const InversionSequence&)>& f) {
  InversionSequence e;
  e.entries.assign(static_cast<std::size_t>(n), 0);
  while (true) {
    f(e);
    int i = n - 1;
    while (i >= 0 && e.entries[static_cast<std::size_t>(i)] == i) e.entries[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++e.entries[static_cast<std::size_t>(i)];
  }
}

void each_permutation(int n, const std::function<void(const Permutation&)>& f) {
  Permutation p;
  for (int v = 1; v <= n; ++v) p.values.push_back(v);
  do f(p);
  while (std::next_permutation(p.values.begin(), p.values.end()));
}

std::vector<WordPattern> words(std::initializer_list<const char*> ws) {
  std::vector<WordPattern> out;
  for (const char* w : ws) out.push_back(parse_word_pattern(w));
  return out;
}

std::vector<BigInt> class_counts(const std::string& spec, int n_max) {
  const ClassSpec c = parse_class_spec(spec);
  std::vector<BigInt> out;
  for (int n = 1; n <= n_max; ++n) out.emplace_back(count_class(c, n));
  return out;
}

// Known initial terms, sizes 1, 2, ...
const std::vector<BigInt>& catalan_terms() {
  static const auto v = big({1, 2, 5, 14, 42, 132, 429, 1430, 4862});
  return v;
}
const std::vector<BigInt>& geq3_terms() {
  static const auto v = big({1, 2, 5, 15, 51, 191, 772, 3320});
  return v;
}
const std::vector<BigInt>& baxter_terms() {
  static const auto v = big({1, 2, 6, 22, 92, 422, 2074});
  return v;
}
const std::vector<BigInt>& semibaxter_terms() {
  static const auto v = big({1, 2, 6, 23, 104, 530, 2958});
  return v;
}
const std::vector<BigInt>& pcat_terms() {
  static const auto v = big({1, 2, 6, 23, 105, 549, 3207});
  return v;
}

void add_characterizations(std::vector<Check>& out) {
  struct Prefix {
    const char* spec;
    const std::vector<BigInt>* terms;
  };
  for (const Prefix& p : {Prefix{"geq,dash,geq", &catalan_terms()}, Prefix{"geq,geq,geq", &geq3_terms()},
                          Prefix{"geq,geq,gt", &baxter_terms()}, Prefix{"geq,gt,dash", &semibaxter_terms()},
                          Prefix{"eq,gt,gt", &pcat_terms()}}) {
    const int n_max = static_cast<int>(p.terms->size());
    out.push_back({"counts " + std::string(p.spec), "n<=" + std::to_string(n_max), [p, n_max](CheckResult& r) {
                     compare_sequences(r, class_counts(p.spec, n_max), *p.terms, std::string("|I_n(") + p.spec + ")|");
                   }});
  }

  struct WordChar {
    const char* triple;
    std::initializer_list<const char*> ws;
  };
  const WordChar word_chars[] = {
      {"geq,dash,geq", {"000", "100", "101", "110", "201", "210"}},
      {"geq,geq,geq", {"000", "100", "110", "210"}},
      {"geq,geq,gt", {"100", "110", "210"}},
      {"geq,gt,dash", {"110", "210"}},
      {"eq,gt,gt", {"110"}},
  };
  for (const auto& wc : word_chars) {
    const RelationTriple t = parse_relation_triple(wc.triple);
    const auto ws = words(wc.ws);
    std::string name = "word characterization " + std::string(wc.triple) + " = avoid:";
    for (std::size_t i = 0; i < ws.size(); ++i) name += (i ? "," : "") + to_text(ws[i]);
    out.push_back({name, "n<=9", [t, ws](CheckResult& r) {
                     std::uint64_t seen = 0;
                     for (int n = 1; n <= 9 && r.passed; ++n) {
                       each_inversion_sequence(n, [&](const InversionSequence& e) {
                         ++seen;
                         if (avoids_triple(e, t) != avoids_words(e.entries, ws)) fail(r, to_text(e), "triple and word avoidance disagree");
                       });
                     }
                     if (r.passed) r.detail = std::to_string(seen) + " inversion sequences";
                   }});
  }

  struct Criterion {
    const char* name;
    std::function<bool(const InversionSequence&)> criterion;
    std::function<bool(const InversionSequence&)> membership;
  };
  const auto triple = [](const char* s) {
    const RelationTriple t = parse_relation_triple(s);
    return [t](const InversionSequence& e) { return avoids_triple(e, t); };
  };
  const auto avoid = [](std::initializer_list<const char*> s) {
    const auto ws = words(s);
    return [ws](const InversionSequence& e) { return avoids_words(e.entries, ws); };
  };
  const Criterion criteria[] = {
      {"weak descent criterion = I(geq,dash,geq)", catalan_weak_descent_criterion, triple("geq,dash,geq")},
      {"LTR/bottom criterion = I(geq,geq,geq)", ltr_bottom_criterion, triple("geq,geq,geq")},
      {"Baxter inversion criterion = avoid:100,110,210", baxter_inversion_criterion, avoid({"100", "110", "210"})},
      {"semi-Baxter inversion criterion = avoid:110,210", semibaxter_inversion_criterion, avoid({"110", "210"})},
  };
  for (const auto& c : criteria) {
    out.push_back({c.name, "n<=9", [c](CheckResult& r) {
                     for (int n = 1; n <= 9 && r.passed; ++n) {
                       each_inversion_sequence(n, [&](const InversionSequence& e) {
                         if (c.criterion(e) != c.membership(e)) fail(r, to_text(e), "criterion and avoidance disagree");
                       });
                     }
                   }});
  }
  out.push_back({"ascent criterion = AV(1-23-4)", "n<=8", [](CheckResult& r) {
                   const auto v = parse_vincular_pattern("1-23-4");
                   for (int n = 1; n <= 8 && r.passed; ++n) {
                     each_permutation(n, [&](const Permutation& p) {
                       if (ascent_criterion_1_23_4(p) != avoids_vincular(p, v)) fail(r, to_text(p), "criterion and avoidance disagree");
                     });
                   }
                 }});

  struct Pair {
    const char* a;
    const char* b;
    int n_max;
  };
  const Pair pairs[] = {
      {"eq,dash,dash", "classical:123,132,231", 7},
      {"lt,neq,dash", "classical:213,321", 7},
      {"eq,lt,dash", "classical:132,231", 7},
      {"lt,geq,dash", "classical:213,312", 7},
      {"dash,gt,dash", "classical:213", 7},
      {"gt,lt,dash", "classical:2143,3142,4132", 7},
      {"gt,lt,dash", "classical:2143,3142,3241", 7},
      {"gt,dash,geq", "classical:2134,2143", 7},
      {"geq,neq,geq", "classical:4321,4312", 7},
      {"eq,gt,gt", "perm:1-23-4", 8},
  };
  for (const auto& p : pairs) {
    out.push_back({"equinumerous I(" + std::string(p.a) + ") ~ " + p.b, "n<=" + std::to_string(p.n_max), [p](CheckResult& r) {
                     const auto table = equinumerosity_check(parse_class_spec(p.a), parse_class_spec(p.b), p.n_max);
                     std::string counts;
                     for (const auto& row : table.rows) {
                       if (!row.equal()) {
                         fail(r, "n=" + std::to_string(row.n),
                              std::to_string(row.count_a) + " vs " + std::to_string(row.count_b));
                       }
                       counts += (counts.empty() ? "" : ",") + std::to_string(row.count_a);
                     }
                     if (r.passed) r.detail = counts;
                   }});
  }
}

struct RuleClass {
  RuleId rule;
  const char* spec;
  int depth;
};

void add_growths(std::vector<Check>& out) {
  const RuleClass rules[] = {
      {RuleId::Cat, "geq,dash,geq", 8}, {RuleId::Cat2, "geq,dash,geq", 8}, {RuleId::IGeq3, "geq,geq,geq", 8},
      {RuleId::Bax, "geq,geq,gt", 8},   {RuleId::Semi, "geq,gt,dash", 8},  {RuleId::PCat, "eq,gt,gt", 8},
      {RuleId::P1234, "perm:1-23-4", 7}, {RuleId::Steady, "path:steady", 8},
  };
  for (const auto& rc : rules) {
    out.push_back({"rule " + std::string(rule_name(rc.rule)) + " levels = " + rc.spec, "d<=" + std::to_string(rc.depth),
                   [rc](CheckResult& r) {
                     compare_sequences(r, level_counts(rc.rule, rc.depth), class_counts(rc.spec, rc.depth),
                                       "level count vs objects");
                   }});
  }
  for (const auto& name : family_names()) {
    out.push_back({"growth " + name, "n<=7", [name](CheckResult& r) {
                     const auto family = make_family(name);
                     const auto report = growth_consistency(*family, 7);
                     if (!report.ok()) {
                       const auto& v = report.violations.front();
                       fail(r, v.object, v.check + ": " + v.detail);
                     } else {
                       r.detail = std::to_string(report.objects_checked) + " objects";
                     }
                   }});
  }
  out.push_back({"active sites of 1-23-4 growth", "n<=7", [](CheckResult& r) {
                   const std::vector<VincularPattern> v{parse_vincular_pattern("1-23-4")};
                   for (int n = 1; n <= 7 && r.passed; ++n) {
                     for (const auto& p : enumerate_permutations(v, n)) {
                       if (active_sites_1234(p) != active_sites_1234_brute(p)) {
                         fail(r, to_text(p), "minimal 1-23 occurrence does not predict the active sites");
                         break;
                       }
                     }
                   }
                 }});
  out.push_back({"rule p1234 isomorphic to steady", "depth<=10", [](CheckResult& r) {
                   const auto result = rules_isomorphic_check(RuleId::P1234, RuleId::Steady, named_relabel("p1234-to-steady"), 10);
                   if (!result.isomorphic) {
                     fail(r, "level " + std::to_string(result.first_divergent_level), result.detail);
                   } else {
                     r.detail = std::to_string(result.levels_checked) + " levels";
                   }
                 }});
  out.push_back({"rule pcat label distribution = c(n,k)", "n<=12", [](CheckResult& r) {
                   const auto dist = label_distribution(RuleId::PCat, 12);
                   const auto tri = callan_triangle(12);
                   for (int n = 1; n <= 12; ++n) {
                     const auto& level = dist[static_cast<std::size_t>(n - 1)];
                     for (int k = 0; k <= n + 1; ++k) {
                       const auto it = level.find(Label::one(k));
                       const BigInt got = it == level.end() ? BigInt(0) : it->second;
                       const BigInt want = k <= n ? tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] : BigInt(0);
                       if (got != want) {
                         fail(r, "n=" + std::to_string(n) + ",k=" + std::to_string(k), got.str() + " vs " + want.str());
                         return;
                       }
                     }
                   }
                 }});
}

template <class T, class Forward, class Backward>
void check_bijection(CheckResult& r, const std::vector<T>& domain, std::size_t codomain_size, Forward forward,
                     Backward backward) {
  std::set<std::string> images;
  for (const auto& x : domain) {
    const auto y = forward(x);
    if (!images.insert(to_text(y)).second) {
      fail(r, to_text(x), "image " + to_text(y) + " is hit twice");
      return;
    }
    if (backward(y) != x) {
      fail(r, to_text(x), "inverse does not return the input");
      return;
    }
  }
  if (images.size() != codomain_size) {
    fail(r, "size " + std::to_string(domain.empty() ? 0 : domain.front().size()),
         std::to_string(images.size()) + " images for a codomain of " + std::to_string(codomain_size));
  }
}

void add_bijections(std::vector<Check>& out) {
  out.push_back({"left inversion table round trip", "n<=8", [](CheckResult& r) {
                   for (int n = 1; n <= 8 && r.passed; ++n) {
                     each_permutation(n, [&](const Permutation& p) {
                       if (permutation_from_table(left_inversion_table(p)) != p) fail(r, to_text(p), "round trip failed");
                     });
                   }
                 }});
  out.push_back({"cat-perm bijection onto AV(1-23,2-14-3)", "n<=9", [](CheckResult& r) {
                   const RelationTriple t = parse_relation_triple("geq,dash,geq");
                   const std::vector<VincularPattern> vs{parse_vincular_pattern("1-23"), parse_vincular_pattern("2-14-3")};
                   for (int n = 1; n <= 9 && r.passed; ++n) {
                     check_bijection(r, enumerate_inversion_sequences(t, n), enumerate_permutations(vs, n).size(),
                                     catalan_invseq_to_perm, catalan_perm_to_invseq);
                   }
                 }});
  out.push_back({"steady-perm bijection onto AV(1-34-2)", "n<=8", [](CheckResult& r) {
                   const std::vector<VincularPattern> vs{parse_vincular_pattern("1-34-2")};
                   for (int n = 1; n <= 8 && r.passed; ++n) {
                     check_bijection(r, enumerate_paths(PathKind::Steady, n), enumerate_permutations(vs, n).size(),
                                     steady_to_perm, perm_to_steady);
                   }
                 }});
  out.push_back({"phi and theta inverse steps", "n<=6", [](CheckResult& r) {
                   for (int n = 1; n <= 6 && r.passed; ++n) {
                     for (const auto& p : enumerate_paths(PathKind::ValleyMarkedSteady, n)) {
                       const auto stats = path_statistics(p);
                       if (stats.w_count > 0 && theta(phi(p)) != p) fail(r, to_text(p), "theta(phi(p)) != p");
                       if (stats.total_mark > 0 && phi(theta(p)) != p) fail(r, to_text(p), "phi(theta(p)) != p");
                       if (!r.passed) return;
                     }
                   }
                 }});
  out.push_back({"phi* and theta* round trips", "n<=7", [](CheckResult& r) {
                   for (int n = 1; n <= 7 && r.passed; ++n) {
                     const auto steady = enumerate_paths(PathKind::Steady, n);
                     const auto marked = enumerate_paths(PathKind::ValleyMarkedDyck, n);
                     std::set<std::string> images;
                     for (const auto& p : steady) {
                       const Path q = phi_star(p);
                       images.insert(to_text(q));
                       if (!validate(q).ok()) return fail(r, to_text(p), "phi* leaves the valley-marked Dyck paths");
                       if (theta_star(q) != p) return fail(r, to_text(p), "theta*(phi*(p)) != p");
                     }
                     for (const auto& q : marked) {
                       if (phi_star(theta_star(q)) != q) return fail(r, to_text(q), "phi*(theta*(q)) != q");
                     }
                     if (images.size() != marked.size()) {
                       return fail(r, "n=" + std::to_string(n), "phi* is not onto the valley-marked Dyck paths");
                     }
                   }
                 }});
  out.push_back({"phi* statistics", "n<=7", [](CheckResult& r) {
                   for (int n = 1; n <= 7 && r.passed; ++n) {
                     for (const auto& p : enumerate_paths(PathKind::Steady, n)) {
                       const auto before = path_statistics(p);
                       const auto after = path_statistics(phi_star(p));
                       if (after.total_mark != before.w_count) return fail(r, to_text(p), "total mark differs from the number of W steps");
                       if (after.diagonal_steps != before.diagonal_steps) return fail(r, to_text(p), "diagonal steps not preserved");
                       if (after.returns_to_mark != before.returns_to_axis) {
                         return fail(r, to_text(p), "returns to the mark differ from returns to the axis");
                       }
                     }
                   }
                 }});
}

void add_series(std::vector<Check>& out) {
  out.push_back({"kernel A(1,1) = E3 recurrence = |I_n(geq,geq,geq)|", "n<=9", [](CheckResult& r) {
                   const auto kernel = kernel_A11(9);
                   const auto e3 = e3_sequence(9);
                   const std::vector<BigInt> shifted(e3.begin() + 1, e3.end());
                   compare_sequences(r, kernel, shifted, "kernel vs recurrence");
                   compare_sequences(r, kernel, class_counts("geq,geq,geq", 9), "kernel vs enumeration");
                 }});
  out.push_back({"kernel A(1,1) satisfies the recurrence", "n<=14", [](CheckResult& r) {
                   auto a = kernel_A11(14);
                   a.insert(a.begin(), BigInt(1));
                   const int bad = first_recurrence_failure(a);
                   if (bad >= 0) fail(r, "n=" + std::to_string(bad), "recurrence fails");
                 }});
  out.push_back({"functional equation residual", "order 8", [](CheckResult& r) {
                   const auto res = functional_equation_residual(8);
                   if (!res.divisions_exact) fail(r, res.first_nonzero, "divided difference is not exact");
                   if (!res.zero) fail(r, res.first_nonzero, "nonzero residual");
                 }});
  out.push_back({"kernel W residual", "order 8", [](CheckResult& r) {
                   if (!kernel_W_residual(kernel_W(8)).is_zero()) fail(r, "order 8", "W does not satisfy its equation");
                 }});
  out.push_back({"c(n,k) = zeros of I_n(eq,gt,gt) = last descents of valley-marked Dyck paths", "n<=8", [](CheckResult& r) {
                   const auto tri = callan_triangle(8);
                   const auto dist = label_distribution(RuleId::PCat, 8);
                   const RelationTriple t = parse_relation_triple("eq,gt,gt");
                   for (int n = 1; n <= 8; ++n) {
                     std::vector<BigInt> zeros(static_cast<std::size_t>(n) + 1), descents(static_cast<std::size_t>(n) + 1);
                     for (const auto& e : enumerate_inversion_sequences(t, n)) {
                       ++zeros[static_cast<std::size_t>(std::count(e.entries.begin(), e.entries.end(), 0))];
                     }
                     for (const auto& p : enumerate_paths(PathKind::ValleyMarkedDyck, n)) {
                       ++descents[static_cast<std::size_t>(path_statistics(p).last_descent_length)];
                     }
                     for (int k = 0; k <= n; ++k) {
                       const auto ks = static_cast<std::size_t>(k);
                       const auto& level = dist[static_cast<std::size_t>(n - 1)];
                       const auto it = level.find(Label::one(k));
                       const BigInt labels = it == level.end() ? BigInt(0) : it->second;
                       const BigInt& c = tri[static_cast<std::size_t>(n)][ks];
                       if (zeros[ks] != c || descents[ks] != c || labels != c) {
                         return fail(r, "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                                     "c=" + c.str() + " zeros=" + zeros[ks].str() + " descents=" + descents[ks].str() +
                                         " labels=" + labels.str());
                       }
                     }
                   }
                 }});
  out.push_back({"c(n,k) row sums = pcat levels = |I_n(eq,gt,gt)|", "n<=9", [](CheckResult& r) {
                   const auto tri = callan_triangle(9);
                   std::vector<BigInt> sums;
                   for (int n = 1; n <= 9; ++n) {
                     BigInt s = 0;
                     for (const auto& c : tri[static_cast<std::size_t>(n)]) s += c;
                     sums.push_back(s);
                   }
                   compare_sequences(r, sums, level_counts(RuleId::PCat, 9), "row sums vs rule levels");
                   compare_sequences(r, sums, class_counts("eq,gt,gt", 9), "row sums vs enumeration");
                 }});
  struct Ref {
    const char* name;
    RuleId rule;
  };
  for (const Ref& ref : {Ref{"catalan", RuleId::Cat}, Ref{"a108307", RuleId::IGeq3}, Ref{"baxter", RuleId::Bax},
                         Ref{"semibaxter", RuleId::Semi}, Ref{"pcat", RuleId::PCat}}) {
    out.push_back({"rule " + std::string(rule_name(ref.rule)) + " levels = " + ref.name + " sequence", "d<=13",
                   [ref](CheckResult& r) {
                     compare_sequences(r, level_counts(ref.rule, 13), reference_sequence(ref.name, 13), "levels vs reference");
                   }});
  }
}

std::vector<Check> suite_checks(std::string_view suite) {
  std::vector<Check> checks;
  const bool all = suite == "all";
  if (all || suite == "characterizations") add_characterizations(checks);
  if (all || suite == "growths") add_growths(checks);
  if (all || suite == "bijections") add_bijections(checks);
  if (all || suite == "series") add_series(checks);
  if (checks.empty()) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
  return checks;
}

VerificationReport run_checks(std::string suite, const std::vector<Check>& checks, const VerifyOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  VerificationReport report;
  report.suite = std::move(suite);
  report.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  std::mutex progress;
  const auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      const auto t0 = clock::now();
      CheckResult r;
      r.name = checks[i].name;
      r.sizes = checks[i].sizes;
      try {
        checks[i].run(r);
      } catch (const std::exception& ex) {
        r.passed = false;
        r.detail = std::string("exception: ") + ex.what();
      }
      if (!r.passed && r.counterexample.empty()) r.counterexample = r.sizes;
      r.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
      if (options.on_check) {
        std::lock_guard lock(progress);
        options.on_check(r);
      }
      report.checks[i] = std::move(r);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(options.jobs, 1)), 1, checks.size());
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"characterizations", "growths", "bijections", "series", "all"};
  return names;
}

VerificationReport run_suite(std::string_view suite, const VerifyOptions& options) {
  return run_checks(std::string(suite), suite_checks(suite), options);
}

std::vector<std::uint64_t> rtl_minima_distribution_23_1_4(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  if (n > 10) throw LimitError("AV_n(23-1-4) is enumerated only up to n = 10");
  const std::vector<VincularPattern> v{parse_vincular_pattern("23-1-4")};
  std::vector<std::uint64_t> dist(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : enumerate_permutations(v, n)) ++dist[static_cast<std::size_t>(perm_statistics(p).rtl_minima)];
  return dist;
}

VerificationReport conjecture_23_1_4_report(int n_max, const VerifyOptions& options) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
  std::vector<Check> checks;
  for (int n = 1; n <= n_max; ++n) {
    checks.push_back({"RTL minima of AV_" + std::to_string(n) + "(23-1-4) vs c(" + std::to_string(n) + ",k)",
                      "n=" + std::to_string(n), [n](CheckResult& r) {
                        const auto dist = rtl_minima_distribution_23_1_4(n);
                        const auto row = callan_triangle(n)[static_cast<std::size_t>(n)];
                        std::string detail;
                        for (int k = 0; k <= n; ++k) {
                          const auto ks = static_cast<std::size_t>(k);
                          const bool agree = BigInt(dist[ks]) == row[ks];
                          detail += (k ? " " : "") + std::string("k=") + std::to_string(k) + ":" + std::to_string(dist[ks]) +
                                    (agree ? "=" : "!=") + row[ks].str();
                          if (!agree) fail(r, "n=" + std::to_string(n) + ",k=" + std::to_string(k), "");
                        }
                        r.detail = detail;
                      }});
  }
  auto report = run_checks("conjecture-23-1-4", checks, options);
  report.kind = "conjecture evidence";
  return report;
}

}  // namespace invtree
