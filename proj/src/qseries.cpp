#include "corners/qseries.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

#include "corners/errors.hpp"

namespace corners {

namespace {

std::size_t index_checked(std::int64_t n, std::int64_t bound, const char* what) {
  if (n < 0 || n > bound) {
    throw OutOfRange(std::string(what) + ": index outside retained range");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

QSeries::QSeries(std::int64_t trunc) : trunc_(trunc) {
  if (trunc < 0) {
    throw BadTruncation("QSeries: trunc must be nonnegative");
  }
  coeffs_.resize(static_cast<std::size_t>(trunc) + 1);
}

QSeries QSeries::one(std::int64_t trunc) {
  QSeries s(trunc);
  s.coeffs_[0] = 1;
  return s;
}

const BigInt& QSeries::coeff(std::int64_t n) const {
  return coeffs_[index_checked(n, trunc_, "QSeries::coeff")];
}

void QSeries::set_coeff(std::int64_t n, BigInt value) {
  coeffs_[index_checked(n, trunc_, "QSeries::set_coeff")] = std::move(value);
}

QSeries QSeries::shifted(std::int64_t s) const {
  if (s < 0) {
    throw OutOfRange("QSeries::shifted: shift must be nonnegative");
  }
  QSeries result(trunc_);
  for (std::int64_t d = s; d <= trunc_; ++d) {
    result.coeffs_[static_cast<std::size_t>(d)] = coeffs_[static_cast<std::size_t>(d - s)];
  }
  return result;
}

QSeries QSeries::mul_geometric(std::int64_t i) const {
  if (i < 1) {
    throw OutOfRange("QSeries::mul_geometric: period must be >= 1");
  }
  QSeries result = *this;
  for (std::int64_t d = i; d <= trunc_; ++d) {
    result.coeffs_[static_cast<std::size_t>(d)] += result.coeffs_[static_cast<std::size_t>(d - i)];
  }
  return result;
}

QSeries QSeries::scaled(const BigInt& c) const {
  QSeries result = *this;
  for (BigInt& coeff : result.coeffs_) {
    coeff *= c;
  }
  return result;
}

QSeries QSeries::truncated(std::int64_t new_trunc) const {
  if (new_trunc < 0 || new_trunc > trunc_) {
    throw BadTruncation("QSeries::truncated: new trunc outside [0, trunc]");
  }
  QSeries result(new_trunc);
  std::copy_n(coeffs_.begin(), static_cast<std::size_t>(new_trunc) + 1, result.coeffs_.begin());
  return result;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries result(std::min(a.trunc_, b.trunc_));
  for (std::int64_t d = 0; d <= result.trunc_; ++d) {
    const auto i = static_cast<std::size_t>(d);
    result.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  }
  return result;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries result(std::min(a.trunc_, b.trunc_));
  for (std::int64_t d = 0; d <= result.trunc_; ++d) {
    const auto i = static_cast<std::size_t>(d);
    result.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  }
  return result;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries result(std::min(a.trunc_, b.trunc_));
  for (std::int64_t da = 0; da <= result.trunc_; ++da) {
    const BigInt& ca = a.coeffs_[static_cast<std::size_t>(da)];
    if (ca == 0) {
      continue;
    }
    for (std::int64_t db = 0; da + db <= result.trunc_; ++db) {
      result.coeffs_[static_cast<std::size_t>(da + db)] +=
          ca * b.coeffs_[static_cast<std::size_t>(db)];
    }
  }
  return result;
}

XQSeries::XQSeries(std::int64_t x_deg, std::int64_t trunc) : x_deg_(x_deg) {
  if (x_deg < 0) {
    throw BadTruncation("XQSeries: x_deg must be nonnegative");
  }
  by_x_.assign(static_cast<std::size_t>(x_deg) + 1, QSeries(trunc));
}

XQSeries XQSeries::one(std::int64_t x_deg, std::int64_t trunc) {
  XQSeries s(x_deg, trunc);
  s.by_x_[0] = QSeries::one(trunc);
  return s;
}

const QSeries& XQSeries::coeff_x(std::int64_t k) const {
  return by_x_[index_checked(k, x_deg_, "XQSeries::coeff_x")];
}

QSeries& XQSeries::coeff_x(std::int64_t k) {
  return by_x_[index_checked(k, x_deg_, "XQSeries::coeff_x")];
}

const BigInt& XQSeries::coeff(std::int64_t k, std::int64_t n) const { return coeff_x(k).coeff(n); }

XQSeries XQSeries::substitute_x_minus_one() const {
  XQSeries result(x_deg_, trunc());
  for (std::int64_t k = 0; k <= x_deg_; ++k) {
    QSeries acc(trunc());
    for (std::int64_t j = k; j <= x_deg_; ++j) {
      BigInt c = binomial(j, k);
      if ((j - k) % 2 != 0) {
        c = -c;
      }
      acc = acc + by_x_[static_cast<std::size_t>(j)].scaled(c);
    }
    result.by_x_[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return result;
}

XQSeries operator+(const XQSeries& a, const XQSeries& b) {
  XQSeries result(std::min(a.x_deg_, b.x_deg_), std::min(a.trunc(), b.trunc()));
  for (std::int64_t k = 0; k <= result.x_deg_; ++k) {
    const auto i = static_cast<std::size_t>(k);
    result.by_x_[i] = a.by_x_[i] + b.by_x_[i];
  }
  return result;
}

XQSeries operator*(const XQSeries& a, const XQSeries& b) {
  XQSeries result(std::min(a.x_deg_, b.x_deg_), std::min(a.trunc(), b.trunc()));
  for (std::int64_t ka = 0; ka <= result.x_deg_; ++ka) {
    for (std::int64_t kb = 0; ka + kb <= result.x_deg_; ++kb) {
      const QSeries product =
          a.by_x_[static_cast<std::size_t>(ka)] * b.by_x_[static_cast<std::size_t>(kb)];
      auto& slot = result.by_x_[static_cast<std::size_t>(ka + kb)];
      slot = slot + product;
    }
  }
  return result;
}

XQSeries operator*(const XQSeries& a, const QSeries& b) {
  XQSeries result(a.x_deg_, std::min(a.trunc(), b.trunc()));
  for (std::int64_t k = 0; k <= result.x_deg_; ++k) {
    result.by_x_[static_cast<std::size_t>(k)] = a.by_x_[static_cast<std::size_t>(k)] * b;
  }
  return result;
}

QSeries inv_one_minus_qi(std::int64_t i, std::int64_t trunc) {
  return QSeries::one(trunc).mul_geometric(i);
}

QSeries euler_inverse(std::int64_t trunc) {
  QSeries result = QSeries::one(trunc);
  for (std::int64_t i = 1; i <= trunc; ++i) {
    result = result.mul_geometric(i);
  }
  return result;
}

XQSeries corner_gf(std::int64_t x_deg, std::int64_t trunc) {
  XQSeries result = XQSeries::one(x_deg, trunc);
  for (std::int64_t i = 1; i <= trunc; ++i) {
    for (std::int64_t k = x_deg; k >= 1; --k) {
      result.coeff_x(k) =
          result.coeff_x(k) + result.coeff_x(k - 1).shifted(i).mul_geometric(i);
    }
  }
  return result;
}

XQSeries durfee_lhs(std::int64_t x_deg, std::int64_t trunc) {
  XQSeries result = XQSeries::one(x_deg, trunc);
  for (std::int64_t i = 1; i <= trunc; ++i) {
    for (std::int64_t k = x_deg; k >= 1; --k) {
      result.coeff_x(k) = result.coeff_x(k) + result.coeff_x(k - 1).shifted(i);
    }
  }
  return result;
}

XQSeries durfee_rhs(std::int64_t x_deg, std::int64_t trunc) {
  XQSeries result(x_deg, trunc);
  QSeries term = QSeries::one(trunc);
  result.coeff_x(0) = term;
  for (std::int64_t j = 1; j <= x_deg && triangular(j) <= trunc; ++j) {
    term = term.shifted(j).mul_geometric(j);
    result.coeff_x(j) = term;
  }
  return result;
}

QSeries summand_k(std::int64_t k, std::int64_t trunc) {
  return pair_count_series(k, trunc).shifted(triangular(k));
}

QSeries pair_count_series(std::int64_t k, std::int64_t trunc) {
  if (k < 0) {
    throw OutOfRange("pair_count_series: k must be nonnegative");
  }
  QSeries result = euler_inverse(trunc);
  for (std::int64_t d = 1; d <= k; ++d) {
    result = result.mul_geometric(d);
  }
  return result;
}

}  // namespace corners
