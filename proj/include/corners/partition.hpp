#ifndef CORNERS_PARTITION_HPP
#define CORNERS_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corners {

/// An integer partition in canonical form: weakly decreasing positive parts.
/// The default-constructed value is the empty partition. Immutable after
/// construction; all operations below are pure functions.
class Partition {
 public:
  Partition() = default;

  /// Canonicalizes (sorts descending). Throws MalformedPartition if any part
  /// is <= 0.
  explicit Partition(std::vector<std::int64_t> parts);

  /// Trusted constructor for callers that already hold a weakly decreasing
  /// sequence of positive parts (generators, conjugation, ...).
  static Partition from_sorted(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  std::int64_t weight() const;
  bool empty() const { return parts_.empty(); }

  /// Part at 1-based row index, 0 beyond the length (the convention every
  /// componentwise formula here relies on).
  std::int64_t part(std::size_t row) const {
    return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0;
  }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<std::int64_t> parts_;
};

/// Sparse exponential notation: part size -> multiplicity, all entries
/// strictly positive, keyed in decreasing part order.
struct ExponentialForm {
  std::map<std::int64_t, std::int64_t, std::greater<std::int64_t>> multiplicities;

  bool operator==(const ExponentialForm&) const = default;
};

ExponentialForm exponential_form(const Partition& p);
Partition from_exponential(const ExponentialForm& form);

/// Parses a comma-separated list of positive decimal parts; empty (or
/// all-whitespace) input is the empty partition. Rejects zeros, negatives and
/// non-integer tokens with MalformedPartition.
Partition parse_partition(std::string_view text);

/// Canonical rendering: descending parts, comma-separated, no spaces; the
/// empty partition renders as "".
std::string to_string(const Partition& p);

Partition conjugate(const Partition& p);

/// Componentwise sum of parts (shorter operand padded with zeros).
Partition sum(const Partition& a, const Partition& b);

/// Multiset union of parts; exponential forms add pointwise.
Partition union_of(const Partition& a, const Partition& b);

/// Number of corners of the diagram = number of distinct part sizes.
std::int64_t num_corners(const Partition& p);

/// The staircase (k, k-1, ..., 1); the smallest partition with k corners.
Partition staircase(std::int64_t k);

/// Diagram inclusion: inner_j <= outer_j for every row.
bool contains(const Partition& outer, const Partition& inner);

/// Splits a k-corner partition as lambda = (staircase(k) + mu) union rest,
/// where rest keeps one fewer copy of each distinct part. Throws
/// WrongCornerCount unless lambda has exactly k corners.
std::pair<Partition, Partition> staircase_decompose(const Partition& lambda,
                                                    std::int64_t k);

}  // namespace corners

#endif
