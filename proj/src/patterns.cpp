#include "invtree/patterns.hpp"

#include "invtree/error.hpp"

#include <algorithm>

namespace invtree {

bool holds(Relation r, int a, int b) noexcept {
  switch (r) {
    case Relation::Lt: return a < b;
    case Relation::Gt: return a > b;
    case Relation::Leq: return a <= b;
    case Relation::Geq: return a >= b;
    case Relation::Eq: return a == b;
    case Relation::Neq: return a != b;
    case Relation::Any: return true;
  }
  return false;
}

Relation parse_relation(std::string_view token) {
  if (token == "lt") return Relation::Lt;
  if (token == "gt") return Relation::Gt;
  if (token == "leq") return Relation::Leq;
  if (token == "geq") return Relation::Geq;
  if (token == "eq") return Relation::Eq;
  if (token == "neq") return Relation::Neq;
  if (token == "dash") return Relation::Any;
  throw Error(ErrorCode::InvalidArgument, "unknown relation '" + std::string(token) + "'");
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Lt: return "lt";
    case Relation::Gt: return "gt";
    case Relation::Leq: return "leq";
    case Relation::Geq: return "geq";
    case Relation::Eq: return "eq";
    case Relation::Neq: return "neq";
    case Relation::Any: return "dash";
  }
  return "?";
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int sign(int v) { return (v > 0) - (v < 0); }

}  // namespace

RelationTriple parse_relation_triple(std::string_view text) {
  auto parts = split(text, ',');
  if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "relation triple needs three tokens: '" + std::string(text) + "'");
  return {parse_relation(parts[0]), parse_relation(parts[1]), parse_relation(parts[2])};
}

std::string to_text(const RelationTriple& t) {
  return std::string(to_string(t.first)) + "," + std::string(to_string(t.second)) + "," +
         std::string(to_string(t.third));
}

WordPattern parse_word_pattern(std::string_view text) {
  WordPattern w;
  if (text.empty()) throw ParseError(0, "empty word pattern");
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw ParseError(i, "word letters are single digits");
    w.letters.push_back(text[i] - '0');
  }
  return w;
}

std::string to_text(const WordPattern& w) {
  std::string out;
  for (int l : w.letters) out += static_cast<char>('0' + l);
  return out;
}

VincularPattern parse_vincular_pattern(std::string_view text) {
  VincularPattern v;
  bool dash_pending = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '-') {
      if (v.perm.empty() || dash_pending) throw ParseError(i, "misplaced dash");
      dash_pending = true;
      continue;
    }
    if (c < '1' || c > '9') throw ParseError(i, "pattern entries are digits 1-9");
    if (!v.perm.empty()) v.adjacent.push_back(!dash_pending);
    dash_pending = false;
    v.perm.push_back(c - '0');
  }
  if (v.perm.empty() || dash_pending) throw ParseError(text.size(), "incomplete pattern");
  if (!validate(Permutation{v.perm}).ok()) throw ParseError(0, "pattern is not a permutation");
  return v;
}

VincularPattern parse_classical_pattern(std::string_view text) {
  VincularPattern v = parse_vincular_pattern(text);
  std::fill(v.adjacent.begin(), v.adjacent.end(), false);
  return v;
}

std::string to_text(const VincularPattern& v) {
  std::string out;
  for (std::size_t i = 0; i < v.perm.size(); ++i) {
    if (i > 0 && !v.adjacent[i - 1]) out += '-';
    out += static_cast<char>('0' + v.perm[i]);
  }
  return out;
}

bool triple_occurs_at_end(std::span<const int> seq, const RelationTriple& t) {
  if (seq.size() < 3) return false;
  const std::size_t k = seq.size() - 1;
  for (std::size_t j = 1; j < k; ++j) {
    if (!holds(t.second, seq[j], seq[k])) continue;
    for (std::size_t i = 0; i < j; ++i) {
      if (holds(t.first, seq[i], seq[j]) && holds(t.third, seq[i], seq[k])) return true;
    }
  }
  return false;
}

bool avoids_triple(const InversionSequence& e, const RelationTriple& t) {
  std::span<const int> s(e.entries);
  for (std::size_t end = 3; end <= s.size(); ++end) {
    if (triple_occurs_at_end(s.first(end), t)) return false;
  }
  return true;
}

namespace {

// Assigns pattern slots right to left: slot `slot` gets an index below
// `limit`; chosen[slot+1..] already hold indices. Every new slot is checked
// against the chosen ones for matching comparison signs.
template <class Pattern, class Adjacent>
bool match_from(std::span<const int> seq, const Pattern& pat, Adjacent adjacent, std::vector<std::size_t>& chosen,
                std::ptrdiff_t slot) {
  if (slot < 0) return true;
  const std::size_t s = static_cast<std::size_t>(slot);
  const std::size_t right = chosen[s + 1];
  auto fits = [&](std::size_t idx) {
    for (std::size_t m = s + 1; m < pat.size(); ++m) {
      if (sign(seq[idx] - seq[chosen[m]]) != sign(pat[s] - pat[m])) return false;
    }
    return true;
  };
  if (adjacent(s)) {
    if (right == 0) return false;
    const std::size_t idx = right - 1;
    if (idx < s || !fits(idx)) return false;
    chosen[s] = idx;
    return match_from(seq, pat, adjacent, chosen, slot - 1);
  }
  for (std::size_t idx = right; idx-- > s;) {
    if (!fits(idx)) continue;
    chosen[s] = idx;
    if (match_from(seq, pat, adjacent, chosen, slot - 1)) return true;
  }
  return false;
}

template <class Pattern, class Adjacent>
bool occurs_at_end(std::span<const int> seq, const Pattern& pat, Adjacent adjacent) {
  const std::size_t k = pat.size();
  if (k == 0) return true;
  if (seq.size() < k) return false;
  std::vector<std::size_t> chosen(k);
  chosen[k - 1] = seq.size() - 1;
  return match_from(seq, pat, adjacent, chosen, static_cast<std::ptrdiff_t>(k) - 2);
}

}  // namespace

bool word_occurs_at_end(std::span<const int> seq, const WordPattern& w) {
  return occurs_at_end(seq, w.letters, [](std::size_t) { return false; });
}

bool avoids_word(std::span<const int> seq, const WordPattern& w) {
  for (std::size_t end = 1; end <= seq.size(); ++end) {
    if (word_occurs_at_end(seq.first(end), w)) return false;
  }
  return true;
}

bool avoids_words(std::span<const int> seq, std::span<const WordPattern> ws) {
  return std::all_of(ws.begin(), ws.end(), [&](const WordPattern& w) { return avoids_word(seq, w); });
}

bool vincular_occurs_at_end(std::span<const int> perm, const VincularPattern& v) {
  return occurs_at_end(perm, v.perm, [&](std::size_t slot) { return static_cast<bool>(v.adjacent[slot]); });
}

bool avoids_vincular(const Permutation& p, const VincularPattern& v) {
  std::span<const int> s(p.values);
  for (std::size_t end = 1; end <= s.size(); ++end) {
    if (vincular_occurs_at_end(s.first(end), v)) return false;
  }
  return true;
}

bool avoids_all(const Permutation& p, std::span<const VincularPattern> vs) {
  return std::all_of(vs.begin(), vs.end(), [&](const VincularPattern& v) { return avoids_vincular(p, v); });
}

PermStatistics perm_statistics(const Permutation& p) {
  PermStatistics st;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool ltr_min = true, ltr_max = true, rtl_min = true, rtl_max = true;
    for (std::size_t j = 0; j < i; ++j) {
      if (p[j] < p[i]) ltr_min = false;
      if (p[j] > p[i]) ltr_max = false;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p[j] < p[i]) rtl_min = false;
      if (p[j] > p[i]) rtl_max = false;
    }
    st.ltr_minima += ltr_min;
    st.ltr_maxima += ltr_max;
    st.rtl_minima += rtl_min;
    st.rtl_maxima += rtl_max;
  }
  return st;
}

namespace {

bool is_ltr_max(std::span<const int> e, std::size_t i) {
  for (std::size_t j = 0; j < i; ++j) {
    if (e[j] >= e[i]) return false;
  }
  return true;
}

bool is_rtl_min(std::span<const int> e, std::size_t i) {
  for (std::size_t j = i + 1; j < e.size(); ++j) {
    if (e[j] <= e[i]) return false;
  }
  return true;
}

}  // namespace

bool catalan_weak_descent_criterion(const InversionSequence& e) {
  const std::size_t n = e.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (e[i] < e[i + 1]) continue;
    for (std::size_t j = i + 2; j < n; ++j) {
      if (e[i] >= e[j]) return false;
    }
  }
  return true;
}

bool ltr_bottom_criterion(const InversionSequence& e) {
  int top = -1;
  int bottom = -1;
  for (int v : e.entries) {
    if (v > top) {
      top = v;
    } else {
      if (v <= bottom) return false;
      bottom = v;
    }
  }
  return true;
}

bool baxter_inversion_criterion(const InversionSequence& e) {
  std::span<const int> s(e.entries);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] > s[j] && (!is_ltr_max(s, i) || !is_rtl_min(s, j))) return false;
    }
  }
  return true;
}

bool semibaxter_inversion_criterion(const InversionSequence& e) {
  std::span<const int> s(e.entries);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] > s[j] && !is_ltr_max(s, i)) return false;
    }
  }
  return true;
}

bool ascent_criterion_1_23_4(const Permutation& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (p[i] > p[i + 1]) continue;
    bool ltr_min = true;
    for (std::size_t j = 0; j < i; ++j) ltr_min = ltr_min && p[j] > p[i];
    bool rtl_max = true;
    for (std::size_t j = i + 2; j < n; ++j) rtl_max = rtl_max && p[j] < p[i + 1];
    if (!ltr_min && !rtl_max) return false;
  }
  return true;
}

std::string ClassSpec::text() const {
  auto join = [](const auto& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ',';
      out += to_text(items[i]);
    }
    return out;
  };
  switch (kind) {
    case ClassKind::InvseqTriple: return to_text(triple);
    case ClassKind::InvseqWords: return "avoid:" + join(words);
    case ClassKind::PermVincular: return "perm:" + join(perm_patterns);
    case ClassKind::PermClassical: {
      std::string out = "classical:";
      for (std::size_t i = 0; i < perm_patterns.size(); ++i) {
        if (i) out += ',';
        for (int v : perm_patterns[i].perm) out += static_cast<char>('0' + v);
      }
      return out;
    }
    case ClassKind::Paths: return "path:" + std::string(to_string(path_kind));
    case ClassKind::Trees: return increasing_leaves ? "tree" : "tree:all";
  }
  return {};
}

ClassSpec parse_class_spec(std::string_view text) {
  ClassSpec spec;
  auto with_prefix = [&](std::string_view prefix) {
    if (text.substr(0, prefix.size()) != prefix) return false;
    text.remove_prefix(prefix.size());
    return true;
  };
  if (with_prefix("avoid:")) {
    spec.kind = ClassKind::InvseqWords;
    for (auto part : split(text, ',')) spec.words.push_back(parse_word_pattern(part));
  } else if (with_prefix("perm:")) {
    spec.kind = ClassKind::PermVincular;
    for (auto part : split(text, ',')) spec.perm_patterns.push_back(parse_vincular_pattern(part));
  } else if (with_prefix("classical:")) {
    spec.kind = ClassKind::PermClassical;
    for (auto part : split(text, ',')) spec.perm_patterns.push_back(parse_classical_pattern(part));
  } else if (with_prefix("path:")) {
    spec.kind = ClassKind::Paths;
    spec.path_kind = parse_path_kind(text);
  } else if (text == "tree") {
    spec.kind = ClassKind::Trees;
  } else if (text == "tree:all") {
    spec.kind = ClassKind::Trees;
    spec.increasing_leaves = false;
  } else {
    spec.kind = ClassKind::InvseqTriple;
    spec.triple = parse_relation_triple(text);
  }
  return spec;
}

bool EquinumerosityTable::all_equal() const {
  return std::all_of(rows.begin(), rows.end(), [](const EquinumerosityRow& r) { return r.equal(); });
}

EquinumerosityTable equinumerosity_check(const ClassSpec& a, const ClassSpec& b, int n_max,
                                         const EnumerationLimits& limits) {
  EquinumerosityTable table{a.text(), b.text(), {}};
  for (int n = 1; n <= n_max; ++n) {
    table.rows.push_back({n, count_class(a, n, limits), count_class(b, n, limits)});
  }
  return table;
}

}  // namespace invtree
