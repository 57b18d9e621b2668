#ifndef CORNERS_BIJECTION_HPP
#define CORNERS_BIJECTION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "corners/partition.hpp"

namespace corners {

/// Segment lengths along the border of a k-corner partition. Index i = 1
/// (stored at offset 0) belongs to the largest distinct part: horiz[i] is
/// the multiplicity of the i-th largest distinct part of the conjugate,
/// vert[i] the multiplicity of the i-th largest distinct part itself.
struct BorderCoordinates {
  std::vector<std::int64_t> horiz;
  std::vector<std::int64_t> vert;

  bool operator==(const BorderCoordinates&) const = default;
};

BorderCoordinates border_coordinates(const Partition& lambda);

/// Unique partition with the given coordinates: its j-th largest distinct
/// part is the prefix sum horiz[1] + ... + horiz[k-j+1], with multiplicity
/// vert[j].
Partition from_border_coordinates(const BorderCoordinates& bc);

/// The pair map (alpha, beta) -> (staircase(k) ∪ conjugate(beta)) + alpha.
/// Requires length(alpha) + length(beta) <= k; the image has exactly k
/// corners, does not contain staircase(k+1), and has weight
/// binomial(k+1,2) + |alpha| + |beta|.
Partition forward(const Partition& alpha, const Partition& beta, std::int64_t k);

/// Inverse of forward on its image: requires num_corners(lambda) = k and
/// lambda not containing staircase(k+1). Reads alpha and beta off the
/// border coordinates: the multiplicity of s in conjugate(alpha) is
/// horiz[k-s+1] - 1, and in conjugate(beta) is vert[k-s+1] - 1.
std::pair<Partition, Partition> inverse(const Partition& lambda, std::int64_t k);

}  // namespace corners

#endif
