#pragma once

// Exact recurrences, bundled reference sequences, and the kernel-method
// series for I(>=,>=,>=): the fixed point W(x; a), the extraction of
// A(1,1), and the residual of the functional equation for A(y,z).

#include "invtree/bigint.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace invtree {

/// Laurent polynomial in a with exact integer coefficients. Zero
/// coefficients are never stored.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(int exponent, BigInt coefficient = 1);

  const std::map<int, BigInt>& terms() const noexcept { return terms_; }
  BigInt coefficient(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  /// e.g. "1+2*a+a^2" or "a^-1-3"; "0" for zero.
  std::string text() const;

private:
  void add(int exponent, const BigInt& c);
  std::map<int, BigInt> terms_;
};

/// Power series in x truncated after x^order, with Laurent coefficients.
class TruncatedSeries {
public:
  explicit TruncatedSeries(int order);

  int order() const noexcept { return order_; }
  const LaurentPoly& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  LaurentPoly& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Multiplies every coefficient by a Laurent polynomial.
  TruncatedSeries scaled(const LaurentPoly& p) const;
  /// Multiplies by x (dropping the term beyond the order).
  TruncatedSeries shifted() const;

private:
  int order_;
  std::vector<LaurentPoly> coeffs_;
};

/// E(0), ..., E(n_max) from E(0) = E(1) = 1 and
/// (n+8)(n+7) E(n+2) = 8(n+3)(n+1) E(n) + (7n^2+53n+88) E(n+1).
std::vector<BigInt> e3_sequence(int n_max);

/// Rows 0..n_max of c_{n,k}: c_{0,0} = 1, c_{n,0} = 0 for n >= 1, and
/// c_{n,k} = c_{n-1,k-1} + k * sum_{j >= k} c_{n-1,j}. Row n has n+1 entries.
using CountTriangle = std::vector<std::vector<BigInt>>;
CountTriangle callan_triangle(int n_max);

/// catalan, a108307, baxter, semibaxter, pcat; terms for sizes 1..n_max.
std::vector<BigInt> reference_sequence(std::string_view name, int n_max);
const std::vector<std::string>& reference_names();

/// W = x (1/a) (W + 1 + a)(W + a + a^2) modulo x^(order+1).
TruncatedSeries kernel_W(int order);
/// Residual W - x (1/a)(W+1+a)(W+a+a^2); zero for the computed W.
TruncatedSeries kernel_W_residual(const TruncatedSeries& w);
/// [x^n] A(1,1) for n = 1..order from the non-negative part in a of
/// Q(a, W) / (1+a)^3.
std::vector<BigInt> kernel_A11(int order);

struct ResidualReport {
  bool zero = true;
  bool divisions_exact = true;
  std::string first_nonzero;  // monomial text, empty when zero
};

/// Builds A(y,z) to x-degree `order` from the label distribution of rule
/// i-geq3 and evaluates LHS - RHS of the functional equation with exact
/// divided differences.
ResidualReport functional_equation_residual(int order);

/// Index of the first n where a(n), a(n+1), a(n+2) (a indexed from 0)
/// break the A108307 recurrence, or -1 when every window satisfies it.
int first_recurrence_failure(const std::vector<BigInt>& a);

}  // namespace invtree
