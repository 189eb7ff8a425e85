#pragma once

// Naive reference implementations used as test oracles. They use nothing
// from the library so that a shared bug cannot hide on both sides.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;
using Rel = std::function<bool(int, int)>;

inline const Rel lt = [](int a, int b) { return a < b; };
inline const Rel gt = [](int a, int b) { return a > b; };
inline const Rel leq = [](int a, int b) { return a <= b; };
inline const Rel geq = [](int a, int b) { return a >= b; };
inline const Rel eq = [](int a, int b) { return a == b; };
inline const Rel neq = [](int a, int b) { return a != b; };
inline const Rel any = [](int, int) { return true; };

inline std::vector<Seq> inversion_sequences(int n) {
  std::vector<Seq> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Seq> next;
    for (const auto& s : out) {
      for (int v = 0; v <= i; ++v) {
        auto t = s;
        t.push_back(v);
        next.push_back(t);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Seq> permutations(int n) {
  Seq p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Seq> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool avoids_triple(const Seq& e, const Rel& r1, const Rel& r2, const Rel& r3) {
  const std::size_t n = e.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (r1(e[i], e[j]) && r2(e[j], e[k]) && r3(e[i], e[k])) return false;
  return true;
}

// Calls f with every increasing choice of m indices below n.
inline bool any_combination(std::size_t n, std::size_t m, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(m);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == m) return f(idx);
    for (std::size_t i = from; i < n; ++i) {
      idx[depth] = i;
      if (rec(depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

inline bool same_order_type(const Seq& a, const Seq& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j]) || (a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

// word is a string of digits, e.g. "110".
inline bool contains_word(const Seq& e, const std::string& word) {
  Seq w;
  for (char c : word) w.push_back(c - '0');
  return any_combination(e.size(), w.size(), [&](const std::vector<std::size_t>& idx) {
    Seq sub;
    for (auto i : idx) sub.push_back(e[i]);
    return same_order_type(sub, w);
  });
}

inline bool avoids_words(const Seq& e, const std::vector<std::string>& words) {
  return std::none_of(words.begin(), words.end(), [&](const std::string& w) { return contains_word(e, w); });
}

// Dashed notation, "1-23-4": digits without a dash between them must be
// adjacent in the text.
inline bool contains_vincular(const Seq& p, const std::string& pattern) {
  Seq pat;
  std::vector<bool> adjacent;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] == '-') continue;
    if (!pat.empty()) adjacent.push_back(pattern[i - 1] != '-');
    pat.push_back(pattern[i] - '0');
  }
  return any_combination(p.size(), pat.size(), [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (adjacent[i] && idx[i + 1] != idx[i] + 1) return false;
    Seq sub;
    for (auto i : idx) sub.push_back(p[i]);
    return same_order_type(sub, pat);
  });
}

inline bool contains_classical(const Seq& p, const std::string& pattern) {
  std::string dashed;
  for (char c : pattern) {
    if (!dashed.empty()) dashed += '-';
    dashed += c;
  }
  return contains_vincular(p, dashed);
}

inline int rtl_minima(const Seq& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool minimum = true;
    for (std::size_t j = i + 1; j < p.size(); ++j) minimum = minimum && p[i] < p[j];
    count += minimum;
  }
  return count;
}

inline Seq left_inversion_table(const Seq& p) {
  Seq t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int c = 0;
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
    t.push_back(c);
  }
  return t;
}

// Every U/D word of semi-length n that stays weakly above the axis and ends on it.
inline std::vector<std::string> dyck_words(int n) {
  std::vector<std::string> out;
  const int len = 2 * n;
  for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
    std::string w;
    int h = 0;
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      const bool up = (mask >> (len - 1 - i)) & 1u;
      w += up ? 'U' : 'D';
      h += up ? 1 : -1;
      ok = h >= 0;
    }
    if (ok && h == 0) out.push_back(w);
  }
  return out;
}

// c(n,k) straight from its recurrence, summing the tail each time.
inline std::vector<std::vector<std::uint64_t>> c_triangle(int n_max) {
  std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n_max) + 1);
  c[0] = {1};
  for (int n = 1; n <= n_max; ++n) {
    c[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
      std::uint64_t tail = 0;
      for (int j = k; j <= n - 1; ++j) tail += c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(j)];
      const std::uint64_t prev = k - 1 <= n - 1 ? c[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] : 0;
      c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = prev + static_cast<std::uint64_t>(k) * tail;
    }
  }
  return c;
}

inline std::uint64_t catalan(int n) {
  // C(2n, n) / (n + 1) with exact intermediate division.
  std::uint64_t c = 1;
  for (int i = 1; i <= n; ++i) c = c * static_cast<std::uint64_t>(n + i) / static_cast<std::uint64_t>(i);
  return c / static_cast<std::uint64_t>(n + 1);
}

}  // namespace oracle
