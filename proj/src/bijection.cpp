#include "corners/bijection.hpp"

#include <cstddef>
#include <string>

#include "corners/bigint.hpp"
#include "corners/errors.hpp"

namespace corners {

namespace {

std::vector<std::int64_t> multiplicities_descending(const Partition& p) {
  std::vector<std::int64_t> result;
  for (const auto& [size, mult] : exponential_form(p).multiplicities) {
    result.push_back(mult);
  }
  return result;
}

// Reads the partition whose conjugate has multiplicity coords[k-s+1] - 1
// of each part size s; coords entries are the border segment lengths.
Partition read_conjugate_excess(const std::vector<std::int64_t>& coords) {
  const auto k = static_cast<std::int64_t>(coords.size());
  ExponentialForm form;
  for (std::int64_t s = 1; s <= k; ++s) {
    const std::int64_t excess = coords[static_cast<std::size_t>(k - s)] - 1;
    if (excess > 0) {
      form.multiplicities[s] = excess;
    }
  }
  return conjugate(from_exponential(form));
}

}  // namespace

BorderCoordinates border_coordinates(const Partition& lambda) {
  BorderCoordinates bc;
  bc.horiz = multiplicities_descending(conjugate(lambda));
  bc.vert = multiplicities_descending(lambda);
  return bc;
}

Partition from_border_coordinates(const BorderCoordinates& bc) {
  if (bc.horiz.size() != bc.vert.size()) {
    throw MalformedPartition("border coordinates: horiz and vert lengths differ");
  }
  const std::size_t k = bc.horiz.size();
  ExponentialForm form;
  std::int64_t part = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (bc.horiz[i] < 1 || bc.vert[i] < 1) {
      throw MalformedPartition("border coordinates: entries must be >= 1");
    }
    // The i-th prefix sum of horiz is the (k - i)-th largest distinct part,
    // whose multiplicity sits at the same mirrored index of vert.
    part += bc.horiz[i];
    form.multiplicities[part] = bc.vert[k - 1 - i];
  }
  return from_exponential(form);
}

Partition forward(const Partition& alpha, const Partition& beta, std::int64_t k) {
  if (k < 0) {
    throw OutOfRange("forward: k must be nonnegative");
  }
  if (alpha.length() + beta.length() > k) {
    throw LengthBudgetExceeded("forward: length(alpha) + length(beta) = " +
                               std::to_string(alpha.length() + beta.length()) +
                               " exceeds k = " + std::to_string(k));
  }
  return sum(union_of(staircase(k), conjugate(beta)), alpha);
}

std::pair<Partition, Partition> inverse(const Partition& lambda, std::int64_t k) {
  if (k < 0) {
    throw OutOfRange("inverse: k must be nonnegative");
  }
  if (num_corners(lambda) != k) {
    throw NotInImage("inverse: partition has " + std::to_string(num_corners(lambda)) +
                     " corners, expected " + std::to_string(k));
  }
  if (contains(lambda, staircase(k + 1))) {
    throw NotInImage("inverse: partition contains the staircase with " +
                     std::to_string(k + 1) + " corners");
  }
  const BorderCoordinates bc = border_coordinates(lambda);
  Partition alpha = read_conjugate_excess(bc.horiz);
  Partition beta = read_conjugate_excess(bc.vert);
  if (alpha.length() + beta.length() > k) {
    throw NotInImage("inverse: recovered pair breaks the length budget");
  }
  return {std::move(alpha), std::move(beta)};
}

}  // namespace corners
