#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "corners/bigint.hpp"
#include "corners/bijection.hpp"
#include "corners/enumeration.hpp"
#include "corners/errors.hpp"
#include "corners/partition.hpp"

using namespace corners;

namespace {

Partition p(std::vector<std::int64_t> parts) { return Partition(std::move(parts)); }

std::vector<std::int64_t> distinct_parts_descending(const Partition& lambda) {
  std::vector<std::int64_t> out;
  for (const auto& [part, mult] : exponential_form(lambda).multiplicities) {
    (void)mult;
    out.push_back(part);
  }
  return out;
}

std::set<Partition> image_targets(std::int64_t k, std::int64_t m) {
  std::set<Partition> out;
  for (const Partition& lambda : partitions_of(m + triangular(k))) {
    if (num_corners(lambda) == k && !contains(lambda, staircase(k + 1))) {
      out.insert(lambda);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("border coordinate examples") {
  BorderCoordinates bc = border_coordinates(p({3, 1}));
  CHECK(bc.horiz == std::vector<std::int64_t>{1, 2});
  CHECK(bc.vert == std::vector<std::int64_t>{1, 1});

  BorderCoordinates mixed = border_coordinates(p({7, 4, 4, 2, 2, 2, 1}));
  CHECK(mixed.horiz == std::vector<std::int64_t>{1, 1, 2, 3});
  CHECK(mixed.vert == std::vector<std::int64_t>{1, 2, 3, 1});

  CHECK(border_coordinates(Partition()).horiz.empty());
  CHECK(border_coordinates(Partition()).vert.empty());

  for (std::int64_t k = 1; k <= 6; ++k) {
    BorderCoordinates stairs = border_coordinates(staircase(k));
    CHECK(stairs.horiz == std::vector<std::int64_t>(static_cast<std::size_t>(k), 1));
    CHECK(stairs.vert == std::vector<std::int64_t>(static_cast<std::size_t>(k), 1));
  }
}

TEST_CASE("border segments are successive differences of the distinct parts") {
  for (std::int64_t n = 0; n <= 25; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      BorderCoordinates bc = border_coordinates(lambda);
      std::vector<std::int64_t> q = distinct_parts_descending(lambda);
      std::vector<std::int64_t> pc = distinct_parts_descending(conjugate(lambda));
      std::size_t k = q.size();
      REQUIRE(bc.horiz.size() == k);
      REQUIRE(bc.vert.size() == k);
      REQUIRE(pc.size() == k);
      for (std::size_t i = 1; i <= k; ++i) {
        std::int64_t q_hi = q[k - i];
        std::int64_t q_lo = (k - i + 1 < k) ? q[k - i + 1] : 0;
        CHECK(bc.horiz[i - 1] == q_hi - q_lo);
        std::int64_t p_hi = pc[k - i];
        std::int64_t p_lo = (k - i + 1 < k) ? pc[k - i + 1] : 0;
        CHECK(bc.vert[i - 1] == p_hi - p_lo);
      }
    }
  }
}

TEST_CASE("conjugation swaps the two coordinate lists") {
  for (std::int64_t n = 0; n <= 20; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      BorderCoordinates bc = border_coordinates(lambda);
      BorderCoordinates cc = border_coordinates(conjugate(lambda));
      CHECK(cc.horiz == bc.vert);
      CHECK(cc.vert == bc.horiz);
    }
  }
}

TEST_CASE("coordinates reconstruct the partition") {
  BorderCoordinates bc;
  bc.horiz = {1, 1, 2, 3};
  bc.vert = {1, 2, 3, 1};
  CHECK(from_border_coordinates(bc) == p({7, 4, 4, 2, 2, 2, 1}));

  for (std::int64_t n = 0; n <= 25; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      CHECK(from_border_coordinates(border_coordinates(lambda)) == lambda);
    }
  }
}

TEST_CASE("every positive coordinate vector is realized by a unique partition") {
  for (std::int64_t h1 = 1; h1 <= 3; ++h1)
    for (std::int64_t h2 = 1; h2 <= 3; ++h2)
      for (std::int64_t v1 = 1; v1 <= 3; ++v1)
        for (std::int64_t v2 = 1; v2 <= 3; ++v2) {
          BorderCoordinates bc;
          bc.horiz = {h1, h2};
          bc.vert = {v1, v2};
          Partition lambda = from_border_coordinates(bc);
          CHECK(num_corners(lambda) == 2);
          CHECK(border_coordinates(lambda) == bc);
        }
}

TEST_CASE("malformed coordinates are rejected") {
  BorderCoordinates mismatch;
  mismatch.horiz = {1, 2};
  mismatch.vert = {1};
  CHECK_THROWS_AS(from_border_coordinates(mismatch), MalformedPartition);

  BorderCoordinates zero_entry;
  zero_entry.horiz = {1, 0};
  zero_entry.vert = {1, 1};
  CHECK_THROWS_AS(from_border_coordinates(zero_entry), MalformedPartition);
}

TEST_CASE("forward map examples") {
  CHECK(forward(Partition(), Partition(), 3) == p({3, 2, 1}));
  CHECK(forward(p({1}), Partition(), 3) == p({4, 2, 1}));
  CHECK(forward(Partition(), p({1}), 3) == p({3, 2, 1, 1}));
  CHECK(forward(p({2}), Partition(), 2) == p({4, 1}));
  CHECK(forward(Partition(), Partition(), 0) == Partition());
  for (std::int64_t k = 0; k <= 6; ++k) {
    CHECK(forward(Partition(), Partition(), k) == staircase(k));
  }
}

TEST_CASE("forward rejects over-budget lengths and negative k") {
  CHECK_THROWS_AS(forward(p({1, 1}), p({1, 1}), 3), LengthBudgetExceeded);
  CHECK_THROWS_AS(forward(p({1}), Partition(), 0), LengthBudgetExceeded);
  CHECK_THROWS_AS(forward(Partition(), Partition(), -1), OutOfRange);
}

TEST_CASE("forward lands in the advertised image") {
  for (std::int64_t k = 0; k <= 6; ++k) {
    for (std::int64_t m = 0; m <= 10; ++m) {
      for (const auto& [alpha, beta] : pairs_of(m)) {
        if (static_cast<std::int64_t>(alpha.length() + beta.length()) > k) continue;
        Partition lambda = forward(alpha, beta, k);
        CHECK(lambda.weight() == triangular(k) + m);
        CHECK(num_corners(lambda) == k);
        CHECK_FALSE(contains(lambda, staircase(k + 1)));
      }
    }
  }
}

TEST_CASE("inverse map examples") {
  auto [a1, b1] = inverse(p({3, 2, 1}), 3);
  CHECK(a1 == Partition());
  CHECK(b1 == Partition());

  auto [a2, b2] = inverse(p({4, 2, 1}), 3);
  CHECK(a2 == p({1}));
  CHECK(b2 == Partition());

  auto [a3, b3] = inverse(p({3, 2, 1, 1}), 3);
  CHECK(a3 == Partition());
  CHECK(b3 == p({1}));

  auto [a4, b4] = inverse(p({4, 1}), 2);
  CHECK(a4 == p({2}));
  CHECK(b4 == Partition());

  auto [a5, b5] = inverse(Partition(), 0);
  CHECK(a5 == Partition());
  CHECK(b5 == Partition());
}

TEST_CASE("inverse rejects partitions outside the image") {
  CHECK_THROWS_AS(inverse(p({3, 2, 1}), 2), NotInImage);
  CHECK_THROWS_AS(inverse(p({5, 4, 4, 4, 1}), 3), NotInImage);
  CHECK_THROWS_AS(inverse(p({2, 2}), 1), NotInImage);
  CHECK_THROWS_AS(inverse(p({1}), 0), NotInImage);
  CHECK_THROWS_AS(inverse(Partition(), -1), OutOfRange);
}

TEST_CASE("inverse undoes forward") {
  for (std::int64_t k = 0; k <= 6; ++k) {
    for (std::int64_t m = 0; m <= 10; ++m) {
      for (const auto& [alpha, beta] : pairs_of(m)) {
        if (static_cast<std::int64_t>(alpha.length() + beta.length()) > k) continue;
        auto [back_alpha, back_beta] = inverse(forward(alpha, beta, k), k);
        CHECK(back_alpha == alpha);
        CHECK(back_beta == beta);
      }
    }
  }
}

TEST_CASE("forward is a bijection onto the staircase-avoiding k-corner partitions") {
  for (std::int64_t k = 0; k <= 5; ++k) {
    for (std::int64_t m = 0; m <= 10; ++m) {
      std::set<Partition> image;
      std::int64_t mapped = 0;
      for (const auto& [alpha, beta] : pairs_of(m)) {
        if (static_cast<std::int64_t>(alpha.length() + beta.length()) > k) continue;
        image.insert(forward(alpha, beta, k));
        ++mapped;
      }
      CHECK(static_cast<std::int64_t>(image.size()) == mapped);
      CHECK(image == image_targets(k, m));
    }
  }
}

TEST_CASE("adding copies of existing parts only stretches vertical segments") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      std::vector<std::int64_t> sizes = distinct_parts_descending(lambda);
      std::size_t k = sizes.size();
      for (std::int64_t count = 1; count <= 2; ++count) {
        for (std::size_t pick = 0; pick < k; ++pick) {
          std::vector<std::int64_t> extra(static_cast<std::size_t>(count), sizes[pick]);
          BorderCoordinates before = border_coordinates(lambda);
          BorderCoordinates after = border_coordinates(union_of(lambda, Partition(extra)));
          CHECK(after.horiz == before.horiz);
          std::vector<std::int64_t> expected_vert = before.vert;
          expected_vert[pick] += count;
          CHECK(after.vert == expected_vert);
        }
      }
    }
  }
}

TEST_CASE("adding columns of existing heights only stretches horizontal segments") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      std::vector<std::int64_t> heights = distinct_parts_descending(conjugate(lambda));
      std::size_t k = heights.size();
      for (std::size_t pick = 0; pick < k; ++pick) {
        std::vector<std::int64_t> gamma_parts(1, heights[pick]);
        Partition alpha = conjugate(Partition(gamma_parts));
        BorderCoordinates before = border_coordinates(lambda);
        BorderCoordinates after = border_coordinates(sum(lambda, alpha));
        CHECK(after.vert == before.vert);
        std::vector<std::int64_t> expected_horiz = before.horiz;
        expected_horiz[pick] += 1;
        CHECK(after.horiz == expected_horiz);
      }
    }
  }
}

TEST_CASE("every exposed diagonal point yields the same split") {
  for (std::int64_t k = 0; k <= 5; ++k) {
    for (std::int64_t m = 0; m <= 8; ++m) {
      for (const auto& [alpha, beta] : pairs_of(m)) {
        if (static_cast<std::int64_t>(alpha.length() + beta.length()) > k) continue;
        Partition lambda = forward(alpha, beta, k);
        std::int64_t exposed = 0;
        for (std::int64_t j0 = 1; j0 <= k + 1; ++j0) {
          std::int64_t i0 = k + 2 - j0;
          if (lambda.part(static_cast<std::size_t>(j0)) >= i0) continue;
          ++exposed;
          CHECK(static_cast<std::int64_t>(beta.length()) <= i0 - 1);
          CHECK(static_cast<std::int64_t>(alpha.length()) <= j0 - 1);
        }
        CHECK(exposed >= 1);
      }
    }
  }
}

TEST_CASE("the 18 small pairs for k = 3 map onto the light 3-corner partitions") {
  const std::int64_t k = 3;
  std::map<std::int64_t, std::int64_t> layer_counts;
  std::set<Partition> image;
  std::int64_t total = 0;
  for (std::int64_t m = 0; m <= 3; ++m) {
    for (const auto& [alpha, beta] : pairs_of(m)) {
      REQUIRE(static_cast<std::int64_t>(alpha.length() + beta.length()) <= k);
      Partition lambda = forward(alpha, beta, k);
      CHECK(lambda.weight() == 6 + m);
      image.insert(lambda);
      ++layer_counts[m];
      ++total;
    }
  }
  CHECK(total == 18);
  CHECK(static_cast<std::int64_t>(image.size()) == 18);
  CHECK(layer_counts[0] == 1);
  CHECK(layer_counts[1] == 2);
  CHECK(layer_counts[2] == 5);
  CHECK(layer_counts[3] == 10);

  std::set<Partition> targets;
  for (std::int64_t n = 6; n < 10; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      if (num_corners(lambda) == k) targets.insert(lambda);
    }
  }
  CHECK(image == targets);
}
