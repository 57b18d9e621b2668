#include "corners/bigint.hpp"

#include <algorithm>

namespace corners {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) {
    return BigInt(0);
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace corners
