#ifndef CORNERS_FINE_HPP
#define CORNERS_FINE_HPP

#include <cstdint>

#include "corners/bigint.hpp"

namespace corners {

/// Sum over partitions of n of binomial(number of distinct part sizes, r).
BigInt fine_lhs(std::int64_t n, std::int64_t r);

/// Sum over partitions of n of the product of the multiplicities of the
/// parts 1, 2, ..., r (empty product = 1 when r = 0). Equals fine_lhs for
/// every n and r.
BigInt fine_rhs(std::int64_t n, std::int64_t r);

/// Count of partitions of n with exactly k corners, computed as the
/// multiplicity-product sum over partitions of n with parts <= k. Only
/// valid for binomial(k+1,2) <= n < binomial(k+2,2).
BigInt nu_via_fine(std::int64_t n, std::int64_t k);

/// Same window as nu_via_fine; counts ordered splits gamma = alpha ∪ beta
/// over partitions of n with parts exactly {1..k} after removing one copy
/// of each size. Equals the number of partition pairs with total weight
/// n - binomial(k+1,2).
BigInt pairs_via_decomposition(std::int64_t n, std::int64_t k);

}  // namespace corners

#endif
