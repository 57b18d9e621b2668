#include "corners/fine.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include "corners/enumeration.hpp"
#include "corners/errors.hpp"

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

// Multiplicities of the part sizes 1..r, as counts[s - 1].
std::vector<std::int64_t> small_multiplicities(const std::vector<std::int64_t>& sorted_parts,
                                               std::int64_t r) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(r));
  for (const std::int64_t part : sorted_parts) {
    if (part <= r) {
      ++counts[static_cast<std::size_t>(part - 1)];
    }
  }
  return counts;
}

void require_window(std::int64_t n, std::int64_t k, const char* what) {
  if (k < 0 || n < triangular(k) || n >= triangular(k + 1)) {
    throw OutOfRange(std::string(what) + ": n = " + std::to_string(n) +
                     " outside [binomial(k+1,2), binomial(k+2,2)) for k = " + std::to_string(k));
  }
}

}  // namespace

BigInt fine_lhs(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0) {
    return BigInt(0);
  }
  BigInt total = 0;
  for (PartitionGenerator gen(n); !gen.done(); gen.advance()) {
    total += binomial(distinct_count(gen.parts()), r);
  }
  return total;
}

BigInt fine_rhs(std::int64_t n, std::int64_t r) {
  if (n < 0 || r < 0) {
    return BigInt(0);
  }
  BigInt total = 0;
  for (PartitionGenerator gen(n); !gen.done(); gen.advance()) {
    BigInt term = 1;
    for (const std::int64_t mult : small_multiplicities(gen.parts(), r)) {
      term *= mult;
    }
    total += term;
  }
  return total;
}

BigInt nu_via_fine(std::int64_t n, std::int64_t k) {
  require_window(n, k, "nu_via_fine");
  BigInt total = 0;
  for (PartitionGenerator gen(n, k); !gen.done(); gen.advance()) {
    BigInt term = 1;
    for (const std::int64_t mult : small_multiplicities(gen.parts(), k)) {
      term *= mult;
    }
    total += term;
  }
  return total;
}

BigInt pairs_via_decomposition(std::int64_t n, std::int64_t k) {
  require_window(n, k, "pairs_via_decomposition");
  BigInt total = 0;
  for (PartitionGenerator gen(n, k); !gen.done(); gen.advance()) {
    const std::vector<std::int64_t> mults = small_multiplicities(gen.parts(), k);
    bool full_support = true;
    BigInt splits = 1;
    for (const std::int64_t mult : mults) {
      if (mult == 0) {
        full_support = false;
        break;
      }
      splits *= mult;
    }
    if (full_support) {
      total += splits;
    }
  }
  return total;
}

}  // namespace corners
