#ifndef CORNERS_ENUMERATION_HPP
#define CORNERS_ENUMERATION_HPP

#include <cstdint>
#include <iterator>
#include <utility>
#include <vector>

#include "corners/bigint.hpp"
#include "corners/partition.hpp"

namespace corners {

/// Streaming generator for the partitions of n in reverse-lexicographic
/// order, (n) first and (1^n) last; n = 0 yields the empty partition once.
/// An optional cap bounds the largest part. State advances in place, so a
/// full sweep does no per-partition allocation.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(std::int64_t n, std::int64_t max_part = -1);

  bool done() const { return done_; }
  const std::vector<std::int64_t>& parts() const { return parts_; }
  void advance();

 private:
  std::vector<std::int64_t> parts_;
  bool done_ = false;
};

/// Lazy range over partitions_of(n); dereferences to const Partition&.
/// Callers may stop early.
class PartitionRange {
 public:
  explicit PartitionRange(std::int64_t n, std::int64_t max_part = -1)
      : n_(n), max_part_(max_part) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Partition*;
    using reference = const Partition&;

    iterator() = default;
    iterator(std::int64_t n, std::int64_t max_part);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    bool operator==(const iterator& other) const { return at_end_ == other.at_end_; }

   private:
    void load();
    PartitionGenerator gen_{0};
    Partition current_;
    bool at_end_ = true;
  };

  iterator begin() const { return iterator(n_, max_part_); }
  iterator end() const { return iterator(); }

 private:
  std::int64_t n_;
  std::int64_t max_part_;
};

PartitionRange partitions_of(std::int64_t n);
PartitionRange partitions_of(std::int64_t n, std::int64_t max_part);

/// nu(n; k): partitions of n with exactly k corners, by exhaustive count.
BigInt nu(std::int64_t n, std::int64_t k);

/// Largest k whose staircase fits inside weight n, i.e. triangular(k) <= n.
std::int64_t max_feasible_corners(std::int64_t n);

/// Triangle of nu(n; k) for 0 <= n <= max_n. Row n holds entries for
/// 0 <= k <= max_feasible_corners(n); each row sums to p(n).
class CountTable {
 public:
  explicit CountTable(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {}

  std::int64_t max_n() const { return static_cast<std::int64_t>(rows_.size()) - 1; }
  std::int64_t max_k(std::int64_t n) const {
    return static_cast<std::int64_t>(rows_.at(static_cast<std::size_t>(n)).size()) - 1;
  }
  const BigInt& value(std::int64_t n, std::int64_t k) const {
    return rows_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k));
  }
  const std::vector<BigInt>& row(std::int64_t n) const {
    return rows_.at(static_cast<std::size_t>(n));
  }
  BigInt row_sum(std::int64_t n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

/// Builds the full nu triangle; parallelizes across n when a thread budget
/// allows, with output identical to sequential evaluation.
CountTable triangle(std::int64_t max_n);

/// Lazy range over ordered pairs (alpha, beta) with |alpha| + |beta| = m.
class PairRange {
 public:
  explicit PairRange(std::int64_t m) : m_(m) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::pair<Partition, Partition>;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    explicit iterator(std::int64_t m);

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    bool operator==(const iterator& other) const { return at_end_ == other.at_end_; }

   private:
    void load_beta();
    std::int64_t m_ = 0;
    std::int64_t alpha_weight_ = 0;
    PartitionGenerator alpha_gen_{0};
    PartitionGenerator beta_gen_{0};
    value_type current_;
    bool at_end_ = true;
  };

  iterator begin() const { return iterator(m_); }
  iterator end() const { return iterator(); }

 private:
  std::int64_t m_;
};

PairRange pairs_of(std::int64_t m);

/// Number of ordered pairs with |alpha| + |beta| = m (no length constraint).
BigInt count_pairs(std::int64_t m);

/// Number of ordered pairs with |alpha| + |beta| = m and
/// length(alpha) + length(beta) <= k.
BigInt count_pairs_bounded(std::int64_t m, std::int64_t k);

}  // namespace corners

#endif
