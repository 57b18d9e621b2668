#ifndef CORNERS_VERIFY_HPP
#define CORNERS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace corners {

struct Failure {
  std::string description;
  std::string witness;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::int64_t checks_run = 0;
  std::vector<Failure> failures;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

struct VerifyBounds {
  std::int64_t max_k = 6;
  std::int64_t max_n = 40;
  std::int64_t max_m = 15;
  std::int64_t max_r = 6;
  std::int64_t trunc = 200;
};

/// Pair counts from exhaustive enumeration versus the window formula:
/// for each k <= max_k and each n in [binomial(k+1,2), binomial(k+2,2)),
/// the k-corner count of n must equal the number of partition pairs of
/// total weight n - binomial(k+1,2).
RunReport verify_conjecture(const VerifyBounds& bounds);

/// Length-bounded pair counts versus staircase-avoiding corner counts:
/// for k <= max_k, m <= max_m, pairs with length sum <= k and weight sum m
/// match partitions of m + binomial(k+1,2) with k corners and no
/// staircase(k+1).
RunReport verify_general(const VerifyBounds& bounds);

/// Both sides of the multiplicity identity for n <= max_n, r <= max_r.
RunReport verify_fine(const VerifyBounds& bounds);

/// Coefficientwise equality of the distinct-parts product and its
/// quotient-sum expansion, x-degree <= max_k, truncation <= trunc.
RunReport verify_durfee(const VerifyBounds& bounds);

/// Four independent routes to every corner count with n <= max_n:
/// enumeration, series coefficient, window summand plus multiplicity sum,
/// and the explicit pair bijection.
RunReport verify_cross(const VerifyBounds& bounds);

/// Dispatch by suite name (conjecture, general, fine, durfee, cross);
/// throws OutOfRange on an unknown name.
RunReport run_suite(const std::string& name, const VerifyBounds& bounds);

/// Deterministic text rendering: command, parameters, check count, sorted
/// failure lines, and PASS/FAIL. Elapsed time is deliberately excluded so
/// identical runs produce identical bytes.
std::string render_report(const RunReport& report);

}  // namespace corners

#endif
