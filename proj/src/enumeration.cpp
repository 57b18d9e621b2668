#include "corners/enumeration.hpp"

#include <cmath>
#include <cstddef>

#include "corners/errors.hpp"
#include "corners/parallel.hpp"

namespace corners {

namespace {

std::int64_t distinct_count(const std::vector<std::int64_t>& sorted_parts) {
  if (sorted_parts.empty()) {
    return 0;
  }
  std::int64_t distinct = 1;
  for (std::size_t i = 1; i < sorted_parts.size(); ++i) {
    if (sorted_parts[i] != sorted_parts[i - 1]) {
      ++distinct;
    }
  }
  return distinct;
}

// p(0..max_n) by the classic part-size sweep.
std::vector<BigInt> partition_counts(std::int64_t max_n) {
  std::vector<BigInt> counts(static_cast<std::size_t>(max_n) + 1);
  counts[0] = 1;
  for (std::int64_t part = 1; part <= max_n; ++part) {
    for (std::int64_t n = part; n <= max_n; ++n) {
      counts[static_cast<std::size_t>(n)] += counts[static_cast<std::size_t>(n - part)];
    }
  }
  return counts;
}

}  // namespace

PartitionGenerator::PartitionGenerator(std::int64_t n, std::int64_t max_part) {
  if (n < 0) {
    done_ = true;
    return;
  }
  if (n == 0) {
    return;  // the empty partition, then done
  }
  if (max_part < 0 || max_part > n) {
    max_part = n;
  }
  if (max_part == 0) {
    done_ = true;
    return;
  }
  std::int64_t rem = n;
  while (rem >= max_part) {
    parts_.push_back(max_part);
    rem -= max_part;
  }
  if (rem > 0) {
    parts_.push_back(rem);
  }
}

void PartitionGenerator::advance() {
  if (done_) {
    return;
  }
  std::int64_t ones = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    parts_.pop_back();
    ++ones;
  }
  if (parts_.empty()) {
    done_ = true;
    return;
  }
  parts_.back() -= 1;
  const std::int64_t cap = parts_.back();
  std::int64_t rem = ones + 1;
  while (rem >= cap) {
    parts_.push_back(cap);
    rem -= cap;
  }
  if (rem > 0) {
    parts_.push_back(rem);
  }
}

PartitionRange::iterator::iterator(std::int64_t n, std::int64_t max_part)
    : gen_(n, max_part), at_end_(gen_.done()) {
  if (!at_end_) {
    load();
  }
}

void PartitionRange::iterator::load() { current_ = Partition::from_sorted(gen_.parts()); }

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  gen_.advance();
  at_end_ = gen_.done();
  if (!at_end_) {
    load();
  }
  return *this;
}

PartitionRange partitions_of(std::int64_t n) { return PartitionRange(n); }

PartitionRange partitions_of(std::int64_t n, std::int64_t max_part) {
  return PartitionRange(n, max_part);
}

BigInt nu(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) {
    return BigInt(0);
  }
  BigInt count = 0;
  for (PartitionGenerator gen(n); !gen.done(); gen.advance()) {
    if (distinct_count(gen.parts()) == k) {
      ++count;
    }
  }
  return count;
}

std::int64_t max_feasible_corners(std::int64_t n) {
  if (n < 0) {
    throw OutOfRange("max_feasible_corners: weight must be nonnegative");
  }
  auto k = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (triangular(k + 1) <= n) {
    ++k;
  }
  while (k > 0 && triangular(k) > n) {
    --k;
  }
  return k;
}

BigInt CountTable::row_sum(std::int64_t n) const {
  BigInt total = 0;
  for (const BigInt& entry : row(n)) {
    total += entry;
  }
  return total;
}

CountTable triangle(std::int64_t max_n) {
  if (max_n < 0) {
    throw OutOfRange("triangle: max_n must be nonnegative");
  }
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(max_n) + 1);
  parallel_for_index(max_n + 1, [&rows](std::int64_t n) {
    std::vector<BigInt> row(static_cast<std::size_t>(max_feasible_corners(n)) + 1);
    for (PartitionGenerator gen(n); !gen.done(); gen.advance()) {
      row[static_cast<std::size_t>(distinct_count(gen.parts()))] += 1;
    }
    rows[static_cast<std::size_t>(n)] = std::move(row);
  });
  return CountTable(std::move(rows));
}

PairRange::iterator::iterator(std::int64_t m) : m_(m) {
  if (m < 0) {
    return;
  }
  at_end_ = false;
  alpha_gen_ = PartitionGenerator(0);
  beta_gen_ = PartitionGenerator(m_);
  load_beta();
}

void PairRange::iterator::load_beta() {
  current_.first = Partition::from_sorted(alpha_gen_.parts());
  current_.second = Partition::from_sorted(beta_gen_.parts());
}

PairRange::iterator& PairRange::iterator::operator++() {
  if (at_end_) {
    return *this;
  }
  beta_gen_.advance();
  if (beta_gen_.done()) {
    alpha_gen_.advance();
    if (alpha_gen_.done()) {
      ++alpha_weight_;
      if (alpha_weight_ > m_) {
        at_end_ = true;
        return *this;
      }
      alpha_gen_ = PartitionGenerator(alpha_weight_);
    }
    beta_gen_ = PartitionGenerator(m_ - alpha_weight_);
  }
  load_beta();
  return *this;
}

PairRange pairs_of(std::int64_t m) { return PairRange(m); }

BigInt count_pairs(std::int64_t m) {
  if (m < 0) {
    return BigInt(0);
  }
  const std::vector<BigInt> counts = partition_counts(m);
  BigInt total = 0;
  for (std::int64_t a = 0; a <= m; ++a) {
    total += counts[static_cast<std::size_t>(a)] * counts[static_cast<std::size_t>(m - a)];
  }
  return total;
}

BigInt count_pairs_bounded(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0) {
    return BigInt(0);
  }
  BigInt total = 0;
  for (const auto& [alpha, beta] : pairs_of(m)) {
    if (alpha.length() + beta.length() <= k) {
      ++total;
    }
  }
  return total;
}

}  // namespace corners
