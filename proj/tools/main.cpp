#include <chrono>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "corners/bijection.hpp"
#include "corners/enumeration.hpp"
#include "corners/errors.hpp"
#include "corners/partition.hpp"
#include "corners/table_io.hpp"
#include "corners/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

int report_outcome(const corners::RunReport& report) {
  std::cout << corners::render_report(report);
  std::cerr << "elapsed_ms: " << report.elapsed_ms << "\n";
  return report.passed() ? kExitPass : kExitVerificationFailure;
}

int run_triangle(std::int64_t max_n, const std::string& format) {
  const corners::CountTable table = corners::triangle(max_n);
  std::cout << corners::render_triangle(table, corners::parse_format(format));
  return kExitPass;
}

int run_verify(const std::string& suite, const corners::VerifyBounds& bounds) {
  return report_outcome(corners::run_suite(suite, bounds));
}

int run_map(const std::string& alpha_text, const std::string& beta_text, std::int64_t k,
            bool diagram) {
  const corners::Partition alpha = corners::parse_partition(alpha_text);
  const corners::Partition beta = corners::parse_partition(beta_text);
  const corners::Partition image = corners::forward(alpha, beta, k);
  std::cout << corners::to_string(image) << "\n";
  if (diagram) {
    std::cout << corners::render_diagram(image);
  }
  return kExitPass;
}

int run_unmap(const std::string& lambda_text, std::int64_t k, bool diagram) {
  const corners::Partition lambda = corners::parse_partition(lambda_text);
  const auto [alpha, beta] = corners::inverse(lambda, k);
  std::cout << corners::to_string(alpha) << "|" << corners::to_string(beta) << "\n";
  if (diagram) {
    std::cout << corners::render_diagram(alpha) << "---\n" << corners::render_diagram(beta);
  }
  return kExitPass;
}

int run_series(std::int64_t max_k, std::int64_t trunc, const std::string& format) {
  std::cout << corners::render_series(max_k, trunc, corners::parse_format(format));
  return kExitPass;
}

int run_oeis_check(const std::string& bfile, std::int64_t max_n) {
  const auto start = std::chrono::steady_clock::now();
  corners::RunReport report = corners::check_bfile(bfile, max_n);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report_outcome(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partition corner counts: triangle emission, identity "
               "verification, and the pair bijection"};
  app.require_subcommand(1);

  std::int64_t max_n = 40;
  std::int64_t max_k = 6;
  std::int64_t max_m = 15;
  std::int64_t max_r = 6;
  std::int64_t trunc = 200;
  std::int64_t k = 0;
  std::string format = "text";
  std::string alpha_text;
  std::string beta_text;
  std::string lambda_text;
  std::string suite;
  std::string bfile;
  bool diagram = false;

  CLI::App* cmd_triangle = app.add_subcommand(
      "triangle", "Print corner counts for weights 0..max-n, one row per weight");
  cmd_triangle->add_option("--max-n", max_n, "Largest weight")->check(CLI::NonNegativeNumber);
  cmd_triangle->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Run one verification suite and report PASS or FAIL");
  cmd_verify->add_option("suite", suite, "conjecture, general, fine, durfee, or cross")
      ->required()
      ->check(CLI::IsMember({"conjecture", "general", "fine", "durfee", "cross"}));
  cmd_verify->add_option("--max-k", max_k, "Largest corner count")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--max-n", max_n, "Largest weight")->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--max-m", max_m, "Largest pair weight")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--max-r", max_r, "Largest multiplicity depth")
      ->check(CLI::NonNegativeNumber);
  cmd_verify->add_option("--trunc", trunc, "Series truncation order")
      ->check(CLI::NonNegativeNumber);

  CLI::App* cmd_map = app.add_subcommand(
      "map", "Apply the pair-to-partition map: (alpha, beta) -> image with k corners");
  cmd_map->add_option("--alpha", alpha_text, "First partition, comma-separated parts");
  cmd_map->add_option("--beta", beta_text, "Second partition, comma-separated parts");
  cmd_map->add_option("--k", k, "Corner count of the image")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_map->add_flag("--diagram", diagram, "Also print the image as '#' rows");

  CLI::App* cmd_unmap = app.add_subcommand(
      "unmap", "Invert the map: partition with k corners -> 'alpha|beta'");
  cmd_unmap->add_option("--lambda", lambda_text, "Partition, comma-separated parts");
  cmd_unmap->add_option("--k", k, "Corner count of the input")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_unmap->add_flag("--diagram", diagram, "Also print both preimages as '#' rows");

  CLI::App* cmd_series = app.add_subcommand(
      "series", "Dump window summand and pair-count series coefficients for k = 0..max-k");
  cmd_series->add_option("--max-k", max_k, "Largest k")->check(CLI::NonNegativeNumber);
  cmd_series->add_option("--trunc", trunc, "Series truncation order")
      ->check(CLI::NonNegativeNumber);
  cmd_series->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  CLI::App* cmd_oeis = app.add_subcommand(
      "oeis-check", "Compare a b-file against the computed triangle (rows n >= 1, k >= 1)");
  cmd_oeis->add_option("--bfile", bfile, "Path to the b-file")->required();
  cmd_oeis->add_option("--max-n", max_n, "Largest weight to compare")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (app.got_subcommand(cmd_triangle)) {
      return run_triangle(max_n, format);
    }
    if (app.got_subcommand(cmd_verify)) {
      corners::VerifyBounds bounds;
      bounds.max_k = max_k;
      bounds.max_n = max_n;
      bounds.max_m = max_m;
      bounds.max_r = max_r;
      bounds.trunc = trunc;
      return run_verify(suite, bounds);
    }
    if (app.got_subcommand(cmd_map)) {
      return run_map(alpha_text, beta_text, k, diagram);
    }
    if (app.got_subcommand(cmd_unmap)) {
      return run_unmap(lambda_text, k, diagram);
    }
    if (app.got_subcommand(cmd_series)) {
      return run_series(max_k, trunc, format);
    }
    if (app.got_subcommand(cmd_oeis)) {
      return run_oeis_check(bfile, max_n);
    }
  } catch (const corners::LengthBudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const corners::NotInImage& e) {
    std::cerr << e.what() << "\n";
    return kExitVerificationFailure;
  } catch (const corners::MalformedPartition& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const corners::MalformedBFile& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
