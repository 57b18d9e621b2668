#ifndef CORNERS_TABLE_IO_HPP
#define CORNERS_TABLE_IO_HPP

#include <cstdint>
#include <string>

#include "corners/enumeration.hpp"
#include "corners/partition.hpp"
#include "corners/verify.hpp"

namespace corners {

enum class TableFormat { text, csv, json };

/// Accepts "text", "csv", or "json"; throws OutOfRange otherwise.
TableFormat parse_format(const std::string& name);

/// Renders the triangle row by row. Row n spans k = 1..max_k(n) (row 0 is
/// its single k = 0 entry). text separates values with spaces and omits
/// zero entries; csv keeps zeros, comma-separated; json is one object
/// {"rows": [[...], ...], "max_n": N}.
std::string render_triangle(const CountTable& table, TableFormat format);

/// Coefficient dump of the window summand series and the length-bounded
/// pair series for k = 0..max_k, both truncated at trunc.
std::string render_series(std::int64_t max_k, std::int64_t trunc, TableFormat format);

/// One '#'-row per part, longest first; empty partition renders to "".
std::string render_diagram(const Partition& p);

/// Compares a b-file against the computed triangle flattened by rows with
/// n >= 1 and k >= 1, entries indexed consecutively from 1. Lines starting
/// with '#' and blank lines are skipped. Throws MalformedBFile on missing,
/// empty, or unparseable files; value mismatches become report failures.
RunReport check_bfile(const std::string& path, std::int64_t max_n);

}  // namespace corners

#endif
