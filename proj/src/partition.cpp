#include "corners/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "corners/errors.hpp"

namespace corners {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::int64_t p : parts_) {
    if (p <= 0) {
      throw MalformedPartition("parts must be positive, got " + std::to_string(p));
    }
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::from_sorted(std::vector<std::int64_t> parts) {
  Partition out;
  out.parts_ = std::move(parts);
  return out;
}

std::int64_t Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

ExponentialForm exponential_form(const Partition& p) {
  ExponentialForm form;
  for (std::int64_t part : p.parts()) ++form.multiplicities[part];
  return form;
}

Partition from_exponential(const ExponentialForm& form) {
  std::vector<std::int64_t> parts;
  for (auto [size, mult] : form.multiplicities) {
    if (size <= 0) throw MalformedPartition("part size must be positive");
    if (mult <= 0) throw MalformedPartition("multiplicity must be positive");
    parts.insert(parts.end(), static_cast<std::size_t>(mult), size);
  }
  return Partition::from_sorted(std::move(parts));
}

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  text = trimmed(text);
  if (text.empty()) return {};

  std::vector<std::int64_t> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token =
        trimmed(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw MalformedPartition("expected a positive integer, got \"" + std::string(token) + "\"");
    }
    if (value <= 0) {
      throw MalformedPartition("parts must be positive, got " + std::to_string(value));
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<std::int64_t> cols(static_cast<std::size_t>(p.parts()[0]), 0);
  for (std::int64_t part : p.parts()) {
    for (std::int64_t j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition::from_sorted(std::move(cols));
}

Partition sum(const Partition& a, const Partition& b) {
  const std::size_t n = std::max(a.length(), b.length());
  std::vector<std::int64_t> parts(n);
  for (std::size_t i = 0; i < n; ++i) parts[i] = a.part(i + 1) + b.part(i + 1);
  return Partition::from_sorted(std::move(parts));
}

Partition union_of(const Partition& a, const Partition& b) {
  std::vector<std::int64_t> parts;
  parts.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition::from_sorted(std::move(parts));
}

std::int64_t num_corners(const Partition& p) {
  std::int64_t distinct = 0;
  std::int64_t prev = 0;
  for (std::int64_t part : p.parts()) {
    if (part != prev) ++distinct;
    prev = part;
  }
  return distinct;
}

Partition staircase(std::int64_t k) {
  std::vector<std::int64_t> parts;
  parts.reserve(static_cast<std::size_t>(k > 0 ? k : 0));
  for (std::int64_t i = k; i >= 1; --i) parts.push_back(i);
  return Partition::from_sorted(std::move(parts));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i) {
    if (inner.parts()[i] > outer.parts()[i]) return false;
  }
  return true;
}

std::pair<Partition, Partition> staircase_decompose(const Partition& lambda,
                                                    std::int64_t k) {
  if (num_corners(lambda) != k) {
    throw WrongCornerCount("expected " + std::to_string(k) + " corners, partition " +
                           to_string(lambda) + " has " + std::to_string(num_corners(lambda)));
  }
  const ExponentialForm form = exponential_form(lambda);

  // mu_i = p_i - (k - i + 1) for the distinct parts p_1 > ... > p_k.
  std::vector<std::int64_t> mu;
  std::vector<std::int64_t> rest;
  std::int64_t i = 0;
  for (auto [size, mult] : form.multiplicities) {
    ++i;
    const std::int64_t step = size - (k - i + 1);
    if (step > 0) mu.push_back(step);
    rest.insert(rest.end(), static_cast<std::size_t>(mult - 1), size);
  }
  return {Partition::from_sorted(std::move(mu)), Partition::from_sorted(std::move(rest))};
}

}  // namespace corners
