#include "corners/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <set>
#include <sstream>

#include "corners/bigint.hpp"
#include "corners/bijection.hpp"
#include "corners/enumeration.hpp"
#include "corners/errors.hpp"
#include "corners/fine.hpp"
#include "corners/partition.hpp"
#include "corners/qseries.hpp"

namespace corners {

namespace {

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    const auto delta = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(delta).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void check_equal(RunReport& report, const BigInt& expected, const BigInt& actual,
                 const std::string& description, const std::string& witness) {
  ++report.checks_run;
  if (expected != actual) {
    report.failures.push_back({description, witness});
  }
}

std::string pair_witness(std::int64_t n, std::int64_t k, const BigInt& lhs, const BigInt& rhs) {
  std::ostringstream out;
  out << "n=" << n << " k=" << k << " lhs=" << lhs << " rhs=" << rhs;
  return out.str();
}

}  // namespace

RunReport verify_conjecture(const VerifyBounds& bounds) {
  Stopwatch watch;
  RunReport report;
  report.command = "verify conjecture";
  report.parameters = {{"max_k", std::to_string(bounds.max_k)}};
  for (std::int64_t k = 0; k <= bounds.max_k; ++k) {
    for (std::int64_t n = triangular(k); n < triangular(k + 1); ++n) {
      const BigInt corner_count = nu(n, k);
      const BigInt pair_count = count_pairs(n - triangular(k));
      check_equal(report, corner_count, pair_count,
                  "corner count differs from pair count in its window",
                  pair_witness(n, k, corner_count, pair_count));
    }
  }
  report.elapsed_ms = watch.elapsed_ms();
  return report;
}

RunReport verify_general(const VerifyBounds& bounds) {
  Stopwatch watch;
  RunReport report;
  report.command = "verify general";
  report.parameters = {{"max_k", std::to_string(bounds.max_k)},
                       {"max_m", std::to_string(bounds.max_m)}};
  for (std::int64_t k = 0; k <= bounds.max_k; ++k) {
    for (std::int64_t m = 0; m <= bounds.max_m; ++m) {
      const BigInt bounded_pairs = count_pairs_bounded(m, k);
      BigInt image_count = 0;
      for (PartitionGenerator gen(m + triangular(k)); !gen.done(); gen.advance()) {
        const auto& parts = gen.parts();
        std::int64_t distinct = parts.empty() ? 0 : 1;
        for (std::size_t i = 1; i < parts.size(); ++i) {
          if (parts[i] != parts[i - 1]) {
            ++distinct;
          }
        }
        if (distinct != k) {
          continue;
        }
        bool has_staircase = true;
        for (std::int64_t row = 1; row <= k + 1; ++row) {
          const std::int64_t part =
              row <= static_cast<std::int64_t>(parts.size()) ? parts[static_cast<std::size_t>(row - 1)] : 0;
          if (part < k + 2 - row) {
            has_staircase = false;
            break;
          }
        }
        if (!has_staircase) {
          ++image_count;
        }
      }
      std::ostringstream witness;
      witness << "m=" << m << " k=" << k << " pairs=" << bounded_pairs
              << " partitions=" << image_count;
      check_equal(report, bounded_pairs, image_count,
                  "length-bounded pair count differs from staircase-avoiding corner count",
                  witness.str());
    }
  }
  report.elapsed_ms = watch.elapsed_ms();
  return report;
}

RunReport verify_fine(const VerifyBounds& bounds) {
  Stopwatch watch;
  RunReport report;
  report.command = "verify fine";
  report.parameters = {{"max_n", std::to_string(bounds.max_n)},
                       {"max_r", std::to_string(bounds.max_r)}};
  for (std::int64_t n = 0; n <= bounds.max_n; ++n) {
    for (std::int64_t r = 0; r <= bounds.max_r; ++r) {
      const BigInt lhs = fine_lhs(n, r);
      const BigInt rhs = fine_rhs(n, r);
      std::ostringstream witness;
      witness << "n=" << n << " r=" << r << " lhs=" << lhs << " rhs=" << rhs;
      check_equal(report, lhs, rhs, "multiplicity identity sides differ", witness.str());
    }
  }
  report.elapsed_ms = watch.elapsed_ms();
  return report;
}

RunReport verify_durfee(const VerifyBounds& bounds) {
  Stopwatch watch;
  RunReport report;
  report.command = "verify durfee";
  report.parameters = {{"max_k", std::to_string(bounds.max_k)},
                       {"trunc", std::to_string(bounds.trunc)}};
  const XQSeries lhs = durfee_lhs(bounds.max_k, bounds.trunc);
  const XQSeries rhs = durfee_rhs(bounds.max_k, bounds.trunc);
  for (std::int64_t k = 0; k <= bounds.max_k; ++k) {
    for (std::int64_t n = 0; n <= bounds.trunc; ++n) {
      check_equal(report, lhs.coeff(k, n), rhs.coeff(k, n),
                  "distinct-parts product differs from its quotient-sum expansion",
                  pair_witness(n, k, lhs.coeff(k, n), rhs.coeff(k, n)));
    }
  }
  report.elapsed_ms = watch.elapsed_ms();
  return report;
}

RunReport verify_cross(const VerifyBounds& bounds) {
  Stopwatch watch;
  RunReport report;
  report.command = "verify cross";
  report.parameters = {{"max_n", std::to_string(bounds.max_n)}};
  const CountTable table = triangle(bounds.max_n);
  const std::int64_t x_deg = max_feasible_corners(bounds.max_n);
  const XQSeries gf = corner_gf(x_deg, bounds.max_n);
  std::vector<QSeries> summands;
  for (std::int64_t k = 0; k <= x_deg; ++k) {
    summands.push_back(summand_k(k, bounds.max_n));
  }
  for (std::int64_t n = 0; n <= bounds.max_n; ++n) {
    for (std::int64_t k = 0; k <= table.max_k(n); ++k) {
      const BigInt& expected = table.value(n, k);
      check_equal(report, expected, gf.coeff(k, n),
                  "series coefficient differs from enumeration",
                  pair_witness(n, k, expected, gf.coeff(k, n)));
      if (n >= triangular(k) && n < triangular(k + 1)) {
        const BigInt& window = summands[static_cast<std::size_t>(k)].coeff(n);
        check_equal(report, expected, window, "window summand differs from enumeration",
                    pair_witness(n, k, expected, window));
        const BigInt via_fine = nu_via_fine(n, k);
        check_equal(report, expected, via_fine,
                    "multiplicity-sum route differs from enumeration",
                    pair_witness(n, k, expected, via_fine));
        const std::int64_t m = n - triangular(k);
        std::set<Partition> images;
        bool image_ok = true;
        for (const auto& [alpha, beta] : pairs_of(m)) {
          if (alpha.length() + beta.length() > k) {
            continue;
          }
          const Partition image = forward(alpha, beta, k);
          if (num_corners(image) != k || contains(image, staircase(k + 1)) ||
              image.weight() != n) {
            image_ok = false;
          }
          images.insert(image);
        }
        const BigInt bijection_count = image_ok ? BigInt(images.size()) : BigInt(-1);
        check_equal(report, expected, bijection_count,
                    "pair bijection image count differs from enumeration",
                    pair_witness(n, k, expected, bijection_count));
      }
    }
  }
  report.elapsed_ms = watch.elapsed_ms();
  return report;
}

RunReport run_suite(const std::string& name, const VerifyBounds& bounds) {
  if (name == "conjecture") {
    return verify_conjecture(bounds);
  }
  if (name == "general") {
    return verify_general(bounds);
  }
  if (name == "fine") {
    return verify_fine(bounds);
  }
  if (name == "durfee") {
    return verify_durfee(bounds);
  }
  if (name == "cross") {
    return verify_cross(bounds);
  }
  throw OutOfRange("unknown verification suite: " + name);
}

std::string render_report(const RunReport& report) {
  std::ostringstream out;
  out << "command: " << report.command << "\n";
  out << "parameters:";
  for (const auto& [key, value] : report.parameters) {
    out << " " << key << "=" << value;
  }
  out << "\n";
  out << "checks_run: " << report.checks_run << "\n";
  out << "failures: " << report.failures.size() << "\n";
  std::vector<std::pair<std::string, std::string>> lines;
  for (const Failure& failure : report.failures) {
    lines.emplace_back(failure.description, failure.witness);
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [description, witness] : lines) {
    out << "failure: " << description << " | witness: " << witness << "\n";
  }
  out << "result: " << (report.failures.empty() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace corners
