#ifndef CORNERS_QSERIES_HPP
#define CORNERS_QSERIES_HPP

#include <cstdint>
#include <vector>

#include "corners/bigint.hpp"

namespace corners {

/// Power series in q with exact integer coefficients, known modulo
/// q^(trunc+1). Arithmetic on operands of different trunc yields the
/// minimum trunc; coefficients beyond trunc are unknown, not zero, so
/// equality requires matching trunc.
class QSeries {
 public:
  explicit QSeries(std::int64_t trunc);
  static QSeries one(std::int64_t trunc);

  std::int64_t trunc() const { return trunc_; }
  const BigInt& coeff(std::int64_t n) const;
  void set_coeff(std::int64_t n, BigInt value);

  /// Multiply by q^s (s >= 0); the result keeps the same trunc.
  QSeries shifted(std::int64_t s) const;
  /// Multiply by 1/(1 - q^i) = 1 + q^i + q^{2i} + ... (i >= 1).
  QSeries mul_geometric(std::int64_t i) const;
  /// Multiply every coefficient by c.
  QSeries scaled(const BigInt& c) const;
  /// Restrict to a smaller trunc.
  QSeries truncated(std::int64_t new_trunc) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  bool operator==(const QSeries& other) const = default;

 private:
  std::int64_t trunc_;
  std::vector<BigInt> coeffs_;
};

/// Polynomial in x of degree <= x_deg whose coefficients are QSeries, all
/// sharing one trunc. Mixed-degree or mixed-trunc arithmetic truncates to
/// the minimum on both axes.
class XQSeries {
 public:
  XQSeries(std::int64_t x_deg, std::int64_t trunc);
  static XQSeries one(std::int64_t x_deg, std::int64_t trunc);

  std::int64_t x_deg() const { return x_deg_; }
  std::int64_t trunc() const { return by_x_.front().trunc(); }
  const QSeries& coeff_x(std::int64_t k) const;
  QSeries& coeff_x(std::int64_t k);
  const BigInt& coeff(std::int64_t k, std::int64_t n) const;

  /// Re-expands the polynomial around x - 1, i.e. returns P(x - 1) via
  /// binomial re-expansion of each power. Exact in q only when the
  /// caller's dropped x-degrees would not reach the retained q-range.
  XQSeries substitute_x_minus_one() const;

  friend XQSeries operator+(const XQSeries& a, const XQSeries& b);
  friend XQSeries operator*(const XQSeries& a, const XQSeries& b);
  friend XQSeries operator*(const XQSeries& a, const QSeries& b);
  bool operator==(const XQSeries& other) const = default;

 private:
  std::int64_t x_deg_;
  std::vector<QSeries> by_x_;
};

/// 1/(1 - q^i), i >= 1.
QSeries inv_one_minus_qi(std::int64_t i, std::int64_t trunc);

/// Product of 1/(1 - q^i) over i = 1..trunc; coefficient of q^n is p(n).
QSeries euler_inverse(std::int64_t trunc);

/// Product of (1 + x q^i / (1 - q^i)) over i = 1..trunc, truncated to
/// x-degree x_deg; coefficient (k, n) counts partitions of n with exactly
/// k distinct part sizes.
XQSeries corner_gf(std::int64_t x_deg, std::int64_t trunc);

/// Both sides of the distinct-parts identity
///   prod (1 + x q^i) = sum_j x^j q^{binomial(j+1,2)} / ((1-q)...(1-q^j)),
/// each computed independently for cross-checking.
XQSeries durfee_lhs(std::int64_t x_deg, std::int64_t trunc);
XQSeries durfee_rhs(std::int64_t x_deg, std::int64_t trunc);

/// q^{binomial(k+1,2)} / ((1-q)...(1-q^k)) times euler_inverse. For
/// binomial(k+1,2) <= n < binomial(k+2,2) its q^n coefficient equals the
/// count of partitions of n with k corners.
QSeries summand_k(std::int64_t k, std::int64_t trunc);

/// euler_inverse / ((1-q)...(1-q^k)); coefficient of q^h counts pairs
/// (lambda, mu) with |lambda| + |mu| = h and length(lambda) <= k. Equals
/// summand_k without the staircase shift.
QSeries pair_count_series(std::int64_t k, std::int64_t trunc);

}  // namespace corners

#endif
