#ifndef CORNERS_BIGINT_HPP
#define CORNERS_BIGINT_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace corners {

// Exact integer type for counts and series coefficients. Partition parts and
// weights stay in std::int64_t; only aggregates that can outgrow 64 bits
// (partition numbers, convolution sums) are BigInt.
using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient with the summation-friendly convention
// binomial(n, k) = 0 whenever k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

// k*(k+1)/2, the weight of the staircase with k corners.
inline std::int64_t triangular(std::int64_t k) { return k * (k + 1) / 2; }

}  // namespace corners

#endif
