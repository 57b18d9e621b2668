#include "corners/table_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "corners/bigint.hpp"
#include "corners/errors.hpp"
#include "corners/qseries.hpp"

namespace corners {

namespace {

constexpr const char* kBFileConvention =
    "expected 'index value' lines, indices consecutive from 1, listing the triangle "
    "rows n >= 1 with entries k >= 1";

std::int64_t row_first_k(std::int64_t n) { return n == 0 ? 0 : 1; }

std::string join_row(const std::vector<BigInt>& values, const char* separator,
                     bool keep_zeros) {
  std::ostringstream out;
  bool first = true;
  for (const BigInt& value : values) {
    if (!keep_zeros && value == 0) {
      continue;
    }
    if (!first) {
      out << separator;
    }
    out << value;
    first = false;
  }
  return out.str();
}

std::string render_rows_json(const std::vector<std::vector<BigInt>>& rows,
                             std::int64_t max_n) {
  std::ostringstream out;
  out << "{\"rows\": [";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) {
      out << ", ";
    }
    out << "[" << join_row(rows[r], ", ", true) << "]";
  }
  out << "], \"max_n\": " << max_n << "}\n";
  return out.str();
}

std::vector<std::vector<BigInt>> visible_rows(const CountTable& table) {
  std::vector<std::vector<BigInt>> rows;
  for (std::int64_t n = 0; n <= table.max_n(); ++n) {
    std::vector<BigInt> row;
    for (std::int64_t k = row_first_k(n); k <= table.max_k(n); ++k) {
      row.push_back(table.value(n, k));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BigInt> series_coeffs(const QSeries& series) {
  std::vector<BigInt> coeffs;
  for (std::int64_t n = 0; n <= series.trunc(); ++n) {
    coeffs.push_back(series.coeff(n));
  }
  return coeffs;
}

}  // namespace

TableFormat parse_format(const std::string& name) {
  if (name == "text") {
    return TableFormat::text;
  }
  if (name == "csv") {
    return TableFormat::csv;
  }
  if (name == "json") {
    return TableFormat::json;
  }
  throw OutOfRange("unknown format: " + name + " (expected text, csv, or json)");
}

std::string render_triangle(const CountTable& table, TableFormat format) {
  const std::vector<std::vector<BigInt>> rows = visible_rows(table);
  if (format == TableFormat::json) {
    return render_rows_json(rows, table.max_n());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    out << (format == TableFormat::csv ? join_row(row, ",", true) : join_row(row, " ", false))
        << "\n";
  }
  return out.str();
}

std::string render_series(std::int64_t max_k, std::int64_t trunc, TableFormat format) {
  std::vector<std::vector<BigInt>> summand_rows;
  std::vector<std::vector<BigInt>> pair_rows;
  for (std::int64_t k = 0; k <= max_k; ++k) {
    summand_rows.push_back(series_coeffs(summand_k(k, trunc)));
    pair_rows.push_back(series_coeffs(pair_count_series(k, trunc)));
  }
  std::ostringstream out;
  switch (format) {
    case TableFormat::text:
      for (std::int64_t k = 0; k <= max_k; ++k) {
        const auto i = static_cast<std::size_t>(k);
        out << "summand[" << k << "]: " << join_row(summand_rows[i], " ", true) << "\n";
        out << "pair_count[" << k << "]: " << join_row(pair_rows[i], " ", true) << "\n";
      }
      break;
    case TableFormat::csv:
      for (std::int64_t k = 0; k <= max_k; ++k) {
        const auto i = static_cast<std::size_t>(k);
        out << "summand," << k << "," << join_row(summand_rows[i], ",", true) << "\n";
        out << "pair_count," << k << "," << join_row(pair_rows[i], ",", true) << "\n";
      }
      break;
    case TableFormat::json: {
      out << "{\"summand\": [";
      for (std::size_t i = 0; i < summand_rows.size(); ++i) {
        out << (i > 0 ? ", [" : "[") << join_row(summand_rows[i], ", ", true) << "]";
      }
      out << "], \"pair_count\": [";
      for (std::size_t i = 0; i < pair_rows.size(); ++i) {
        out << (i > 0 ? ", [" : "[") << join_row(pair_rows[i], ", ", true) << "]";
      }
      out << "], \"max_k\": " << max_k << ", \"trunc\": " << trunc << "}\n";
      break;
    }
  }
  return out.str();
}

std::string render_diagram(const Partition& p) {
  std::ostringstream out;
  for (const std::int64_t part : p.parts()) {
    out << std::string(static_cast<std::size_t>(part), '#') << "\n";
  }
  return out.str();
}

RunReport check_bfile(const std::string& path, std::int64_t max_n) {
  std::ifstream in(path);
  if (!in) {
    throw MalformedBFile("cannot open '" + path + "'; " + kBFileConvention);
  }
  std::vector<BigInt> file_values;
  std::string line;
  std::int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = 0;
    while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start]))) {
      ++start;
    }
    if (start == line.size() || line[start] == '#') {
      continue;
    }
    std::istringstream fields(line.substr(start));
    std::int64_t index = 0;
    std::string value_text;
    std::string extra;
    if (!(fields >> index >> value_text) || (fields >> extra)) {
      throw MalformedBFile("line " + std::to_string(line_no) + " is not 'index value'; " +
                           kBFileConvention);
    }
    if (index != static_cast<std::int64_t>(file_values.size()) + 1) {
      throw MalformedBFile("line " + std::to_string(line_no) + " has index " +
                           std::to_string(index) + ", expected " +
                           std::to_string(file_values.size() + 1) + "; " + kBFileConvention);
    }
    try {
      file_values.emplace_back(value_text);
    } catch (const std::exception&) {
      throw MalformedBFile("line " + std::to_string(line_no) + " has non-integer value '" +
                           value_text + "'; " + kBFileConvention);
    }
  }
  if (file_values.empty()) {
    throw MalformedBFile("no data lines in '" + path + "'; " + kBFileConvention);
  }

  RunReport report;
  report.command = "oeis-check";
  report.parameters = {{"bfile", path}, {"max_n", std::to_string(max_n)}};
  const CountTable table = triangle(max_n);
  std::size_t position = 0;
  for (std::int64_t n = 1; n <= max_n && position < file_values.size(); ++n) {
    for (std::int64_t k = 1; k <= table.max_k(n) && position < file_values.size(); ++k) {
      ++report.checks_run;
      if (file_values[position] != table.value(n, k)) {
        std::ostringstream witness;
        witness << "index=" << position + 1 << " file=" << file_values[position]
                << " computed=" << table.value(n, k) << " (n=" << n << " k=" << k << ")";
        report.failures.push_back({"b-file value differs from computed triangle",
                                   witness.str()});
        return report;
      }
      ++position;
    }
  }
  return report;
}

}  // namespace corners
