#include "invtree/series.hpp"

#include "invtree/error.hpp"
#include "invtree/gentree.hpp"

#include <algorithm>

namespace invtree {

LaurentPoly::LaurentPoly(BigInt constant) { add(0, constant); }

LaurentPoly LaurentPoly::monomial(int exponent, BigInt coefficient) {
  LaurentPoly p;
  p.add(exponent, coefficient);
  return p;
}

void LaurentPoly::add(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const { return terms_.begin()->first; }
int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add(ea + eb, ca * cb);
  }
  return out;
}

std::string LaurentPoly::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "a";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

TruncatedSeries::TruncatedSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "series order must be non-negative");
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  for (int n = 0; n <= std::min(order_, o.order_); ++n) (*this)[n] += o[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  for (int n = 0; n <= std::min(order_, o.order_); ++n) (*this)[n] -= o[n];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order_, b.order_);
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const LaurentPoly& p) const {
  TruncatedSeries out(order_);
  for (int n = 0; n <= order_; ++n) out[n] = (*this)[n] * p;
  return out;
}

TruncatedSeries TruncatedSeries::shifted() const {
  TruncatedSeries out(order_);
  for (int n = 1; n <= order_; ++n) out[n] = (*this)[n - 1];
  return out;
}

std::vector<BigInt> e3_sequence(int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be non-negative");
  std::vector<BigInt> e{1, 1};
  for (int n = 0; n + 2 <= n_max; ++n) {
    const BigInt numerator = BigInt(8) * (n + 3) * (n + 1) * e[static_cast<std::size_t>(n)] +
                             BigInt(7 * n * n + 53 * n + 88) * e[static_cast<std::size_t>(n) + 1];
    const BigInt denominator = BigInt(n + 8) * (n + 7);
    if (numerator % denominator != 0) {
      throw Error(ErrorCode::Internal, "recurrence division is not exact at n = " + std::to_string(n));
    }
    e.push_back(numerator / denominator);
  }
  e.resize(static_cast<std::size_t>(n_max) + 1);
  return e;
}

int first_recurrence_failure(const std::vector<BigInt>& a) {
  for (std::size_t n = 0; n + 2 < a.size(); ++n) {
    const long long m = static_cast<long long>(n);
    const BigInt lhs = BigInt(8) * (m + 3) * (m + 1) * a[n] + BigInt(7 * m * m + 53 * m + 88) * a[n + 1];
    if (lhs != BigInt(m + 8) * (m + 7) * a[n + 2]) return static_cast<int>(n);
  }
  return -1;
}

CountTriangle callan_triangle(int n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "n_max must be non-negative");
  CountTriangle c{{BigInt(1)}};
  for (int n = 1; n <= n_max; ++n) {
    const auto& prev = c.back();
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, BigInt(0));
    // tail[k] = sum_{j >= k} prev[j]
    std::vector<BigInt> tail(prev.size() + 1, BigInt(0));
    for (std::size_t j = prev.size(); j-- > 0;) tail[j] = tail[j + 1] + prev[j];
    for (int k = 1; k <= n; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      row[ku] = prev[ku - 1] + (ku < tail.size() ? BigInt(k) * tail[ku] : BigInt(0));
    }
    c.push_back(std::move(row));
  }
  return c;
}

namespace {

const std::vector<const char*> kBaxter{"1",      "2",       "6",        "22",      "92",
                                       "422",    "2074",    "10754",    "58202",   "326240",
                                       "1882960", "11140560", "67329992"};
const std::vector<const char*> kSemiBaxter{"1",      "2",       "6",        "23",       "104",
                                           "530",    "2958",    "17734",    "112657",   "750726",
                                           "5207910", "37387881", "276467208"};

std::vector<BigInt> bundled(const std::vector<const char*>& table, std::string_view name, int n_max) {
  if (n_max > static_cast<int>(table.size())) {
    throw LimitError("only " + std::to_string(table.size()) + " terms of " + std::string(name) + " are bundled");
  }
  std::vector<BigInt> out;
  for (int i = 0; i < n_max; ++i) out.emplace_back(table[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

const std::vector<std::string>& reference_names() {
  static const std::vector<std::string> names{"catalan", "a108307", "baxter", "semibaxter", "pcat"};
  return names;
}

std::vector<BigInt> reference_sequence(std::string_view name, int n_max) {
  if (n_max < 1) throw Error(ErrorCode::InvalidArgument, "n_max must be at least 1");
  std::vector<BigInt> out;
  if (name == "catalan") {
    BigInt c = 1;  // C_0
    for (int n = 0; n < n_max; ++n) {
      c = c * 2 * (2 * n + 1) / (n + 2);
      out.push_back(c);
    }
    return out;
  }
  if (name == "a108307") {
    const auto e = e3_sequence(n_max);
    return {e.begin() + 1, e.end()};
  }
  if (name == "pcat") {
    const auto tri = callan_triangle(n_max);
    for (int n = 1; n <= n_max; ++n) {
      BigInt sum = 0;
      for (const auto& v : tri[static_cast<std::size_t>(n)]) sum += v;
      out.push_back(sum);
    }
    return out;
  }
  if (name == "baxter") return bundled(kBaxter, name, n_max);
  if (name == "semibaxter") return bundled(kSemiBaxter, name, n_max);
  throw Error(ErrorCode::InvalidArgument, "unknown sequence '" + std::string(name) + "'");
}

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += LaurentPoly::monomial(e, c);
  return p;
}

TruncatedSeries kernel_rhs(const TruncatedSeries& w) {
  TruncatedSeries left = w;
  left[0] += poly({{0, 1}, {1, 1}});
  TruncatedSeries right = w;
  right[0] += poly({{1, 1}, {2, 1}});
  return (left * right).scaled(LaurentPoly::monomial(-1)).shifted();
}

}  // namespace

TruncatedSeries kernel_W(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be at least 1");
  TruncatedSeries w(order);
  for (int i = 0; i < order; ++i) w = kernel_rhs(w);
  if (!kernel_W_residual(w).is_zero()) throw Error(ErrorCode::Internal, "fixed point iteration did not converge");
  return w;
}

TruncatedSeries kernel_W_residual(const TruncatedSeries& w) { return w - kernel_rhs(w); }

std::vector<BigInt> kernel_A11(int order) {
  const TruncatedSeries w = kernel_W(order);
  const LaurentPoly q1 = poly({{-6, -1}, {-5, -3}, {-4, -3}, {-3, -1}, {0, 1}, {1, 3}, {2, 3}, {3, 1}});
  const LaurentPoly q2 = poly({{-5, 1}, {-4, 1}, {-1, -1}, {0, -1}});
  const LaurentPoly q3 = poly({{-6, 1}, {-4, -1}, {-3, 1}, {-1, -1}});
  const LaurentPoly q4 = poly({{-5, -1}, {-4, 1}});
  const TruncatedSeries w2 = w * w;
  const TruncatedSeries w3 = w2 * w;
  const TruncatedSeries w4 = w3 * w;
  const TruncatedSeries q = w.scaled(q1) + w2.scaled(q2) + w3.scaled(q3) + w4.scaled(q4);
  std::vector<BigInt> out;
  for (int n = 1; n <= order; ++n) {
    // [a^0] of L(a) * sum_j (-1)^j C(j+2, 2) a^j, i.e. of L(a) / (1+a)^3.
    BigInt total = 0;
    for (const auto& [e, c] : q[n].terms()) {
      if (e > 0) break;
      const long long j = -e;
      const BigInt binom = BigInt((j + 2) * (j + 1) / 2);
      total += (j % 2 == 0 ? c : BigInt(-c)) * binom;
    }
    out.push_back(total);
  }
  return out;
}

namespace {

// Polynomial in y and z: (h, k) -> coefficient of y^h z^k.
using Poly2 = std::map<std::pair<int, int>, BigInt>;

void add_term(Poly2& p, int h, int k, const BigInt& c) {
  if (c == 0) return;
  auto& slot = p[{h, k}];
  slot += c;
  if (slot == 0) p.erase({h, k});
}

Poly2 subtract(const Poly2& a, const Poly2& b) {
  Poly2 out = a;
  for (const auto& [hk, c] : b) add_term(out, hk.first, hk.second, -c);
  return out;
}

// Coefficients of z^k as polynomials in y (index = power of y).
std::map<int, std::vector<BigInt>> by_z(const Poly2& p) {
  std::map<int, std::vector<BigInt>> out;
  for (const auto& [hk, c] : p) {
    auto& row = out[hk.second];
    if (row.size() <= static_cast<std::size_t>(hk.first)) row.resize(static_cast<std::size_t>(hk.first) + 1);
    row[static_cast<std::size_t>(hk.first)] += c;
  }
  return out;
}

// (A(1,z) - A(y,z)) / (1 - y), dividing each z^k coefficient p(1) - p(y)
// by 1 - y with a synthetic division at y = 1.
Poly2 divided_difference_one(const Poly2& a, bool& exact) {
  Poly2 numerator;
  for (const auto& [k, row] : by_z(a)) {
    BigInt at_one = 0;
    for (const auto& c : row) at_one += c;
    add_term(numerator, 0, k, at_one);
    for (std::size_t h = 0; h < row.size(); ++h) add_term(numerator, static_cast<int>(h), k, -row[h]);
  }
  Poly2 out;
  for (const auto& [k, row] : by_z(numerator)) {
    // row(y) = (y - 1) q(y) + r; the quotient by (1 - y) is -q.
    const std::size_t d = row.size() - 1;
    std::vector<BigInt> q(d, BigInt(0));
    BigInt carry = 0;
    for (std::size_t i = d + 1; i-- > 1;) {
      carry = row[i] + carry;
      q[i - 1] = carry;
    }
    const BigInt remainder = row[0] + carry;
    if (remainder != 0) exact = false;
    for (std::size_t i = 0; i < q.size(); ++i) add_term(out, static_cast<int>(i), k, -q[i]);
  }
  return out;
}

// (A(y,z) - A(y,y)) / (z - y), by synthetic division in z at z = y with
// coefficients in Z[y].
Poly2 divided_difference_diag(const Poly2& a, bool& exact) {
  Poly2 numerator = a;
  for (const auto& [hk, c] : a) add_term(numerator, hk.first + hk.second, 0, -c);
  if (numerator.empty()) return {};
  int degree = 0;
  for (const auto& [hk, c] : numerator) degree = std::max(degree, hk.second);
  auto rows = by_z(numerator);
  Poly2 out;
  std::map<int, BigInt> carry;  // polynomial in y
  for (int k = degree; k >= 1; --k) {
    std::map<int, BigInt> coeff = carry;
    if (auto it = rows.find(k); it != rows.end()) {
      for (std::size_t h = 0; h < it->second.size(); ++h) coeff[static_cast<int>(h)] += it->second[h];
    }
    for (const auto& [h, c] : coeff) add_term(out, h, k - 1, c);
    carry.clear();
    for (const auto& [h, c] : coeff) {
      if (c != 0) carry[h + 1] += c;
    }
  }
  std::map<int, BigInt> remainder = carry;
  if (auto it = rows.find(0); it != rows.end()) {
    for (std::size_t h = 0; h < it->second.size(); ++h) remainder[static_cast<int>(h)] += it->second[h];
  }
  for (const auto& [h, c] : remainder) {
    if (c != 0) exact = false;
  }
  return out;
}

Poly2 multiply_monomial(const Poly2& p, int dh, int dk) {
  Poly2 out;
  for (const auto& [hk, c] : p) add_term(out, hk.first + dh, hk.second + dk, c);
  return out;
}

}  // namespace

ResidualReport functional_equation_residual(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be at least 1");
  const auto dist = label_distribution(RuleId::IGeq3, order);
  std::vector<Poly2> a(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) {
    for (const auto& [label, count] : dist[static_cast<std::size_t>(n - 1)]) {
      add_term(a[static_cast<std::size_t>(n)], label.first, label.second, count);
    }
  }
  ResidualReport report;
  for (int n = 1; n <= order; ++n) {
    const Poly2& prev = a[static_cast<std::size_t>(n - 1)];
    Poly2 rhs;
    if (n == 1) add_term(rhs, 1, 1, 1);
    bool exact = true;
    for (const auto& [hk, c] : multiply_monomial(divided_difference_one(prev, exact), 0, 1)) add_term(rhs, hk.first, hk.second, c);
    for (const auto& [hk, c] : multiply_monomial(divided_difference_diag(prev, exact), 1, 1)) add_term(rhs, hk.first, hk.second, c);
    if (!exact) report.divisions_exact = false;
    const Poly2 diff = subtract(a[static_cast<std::size_t>(n)], rhs);
    if (!diff.empty() && report.zero) {
      report.zero = false;
      const auto& [hk, c] = *diff.begin();
      report.first_nonzero = c.str() + "*x^" + std::to_string(n) + "*y^" + std::to_string(hk.first) + "*z^" +
                             std::to_string(hk.second);
    }
  }
  if (!report.divisions_exact) report.zero = false;
  return report;
}

}  // namespace invtree
