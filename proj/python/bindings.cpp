#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "corners/bigint.hpp"
#include "corners/bijection.hpp"
#include "corners/enumeration.hpp"
#include "corners/errors.hpp"
#include "corners/fine.hpp"
#include "corners/partition.hpp"
#include "corners/qseries.hpp"
#include "corners/table_io.hpp"
#include "corners/verify.hpp"

namespace py = pybind11;

namespace {

using Parts = std::vector<std::int64_t>;

corners::Partition make(const Parts& parts) { return corners::Partition(parts); }

py::int_ to_py(const corners::BigInt& value) {
  const std::string digits = value.str();
  PyObject* object = PyLong_FromString(digits.c_str(), nullptr, 10);
  if (object == nullptr) {
    throw py::error_already_set();
  }
  return py::reinterpret_steal<py::int_>(object);
}

std::vector<py::int_> row_to_py(const std::vector<corners::BigInt>& row) {
  std::vector<py::int_> out;
  out.reserve(row.size());
  for (const corners::BigInt& value : row) {
    out.push_back(to_py(value));
  }
  return out;
}

std::vector<py::int_> series_to_py(const corners::QSeries& series) {
  std::vector<py::int_> out;
  for (std::int64_t n = 0; n <= series.trunc(); ++n) {
    out.push_back(to_py(series.coeff(n)));
  }
  return out;
}

corners::VerifyBounds bounds_from(std::int64_t max_k, std::int64_t max_n, std::int64_t max_m,
                                  std::int64_t max_r, std::int64_t trunc) {
  corners::VerifyBounds bounds;
  bounds.max_k = max_k;
  bounds.max_n = max_n;
  bounds.max_m = max_m;
  bounds.max_r = max_r;
  bounds.trunc = trunc;
  return bounds;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact partition corner counts: enumeration, series, and the pair bijection";

  py::register_exception<corners::MalformedPartition>(m, "MalformedPartition",
                                                      PyExc_ValueError);
  py::register_exception<corners::WrongCornerCount>(m, "WrongCornerCount", PyExc_ValueError);
  py::register_exception<corners::BadTruncation>(m, "BadTruncation", PyExc_ValueError);
  py::register_exception<corners::LengthBudgetExceeded>(m, "LengthBudgetExceeded",
                                                        PyExc_ValueError);
  py::register_exception<corners::NotInImage>(m, "NotInImage", PyExc_ValueError);
  py::register_exception<corners::OutOfRange>(m, "OutOfRange", PyExc_ValueError);

  m.def("parse_partition", [](const std::string& text) {
    return corners::parse_partition(text).parts();
  });
  m.def("to_string", [](const Parts& parts) { return corners::to_string(make(parts)); });
  m.def("conjugate", [](const Parts& parts) { return corners::conjugate(make(parts)).parts(); });
  m.def("sum_of", [](const Parts& a, const Parts& b) {
    return corners::sum(make(a), make(b)).parts();
  });
  m.def("union_of", [](const Parts& a, const Parts& b) {
    return corners::union_of(make(a), make(b)).parts();
  });
  m.def("num_corners", [](const Parts& parts) { return corners::num_corners(make(parts)); });
  m.def("staircase", [](std::int64_t k) { return corners::staircase(k).parts(); });
  m.def("contains", [](const Parts& outer, const Parts& inner) {
    return corners::contains(make(outer), make(inner));
  });
  m.def("staircase_decompose", [](const Parts& parts, std::int64_t k) {
    auto [mu, rest] = corners::staircase_decompose(make(parts), k);
    return std::make_pair(mu.parts(), rest.parts());
  });
  m.def("triangular", &corners::triangular);

  m.def("partitions_of", [](std::int64_t n) {
    std::vector<Parts> out;
    for (const corners::Partition& lambda : corners::partitions_of(n)) {
      out.push_back(lambda.parts());
    }
    return out;
  });
  m.def("nu", [](std::int64_t n, std::int64_t k) { return to_py(corners::nu(n, k)); });
  m.def("max_feasible_corners", &corners::max_feasible_corners);
  m.def("triangle", [](std::int64_t max_n) {
    corners::CountTable table = corners::triangle(max_n);
    std::vector<std::vector<py::int_>> rows;
    for (std::int64_t n = 0; n <= table.max_n(); ++n) {
      rows.push_back(row_to_py(table.row(n)));
    }
    return rows;
  });
  m.def("pairs_of", [](std::int64_t m) {
    std::vector<std::pair<Parts, Parts>> out;
    for (const auto& [alpha, beta] : corners::pairs_of(m)) {
      out.emplace_back(alpha.parts(), beta.parts());
    }
    return out;
  });
  m.def("count_pairs", [](std::int64_t m) { return to_py(corners::count_pairs(m)); });
  m.def("count_pairs_bounded", [](std::int64_t m, std::int64_t k) {
    return to_py(corners::count_pairs_bounded(m, k));
  });

  m.def("partition_numbers", [](std::int64_t trunc) {
    return series_to_py(corners::euler_inverse(trunc));
  });
  m.def("corner_gf", [](std::int64_t x_deg, std::int64_t trunc) {
    corners::XQSeries series = corners::corner_gf(x_deg, trunc);
    std::vector<std::vector<py::int_>> rows;
    for (std::int64_t k = 0; k <= x_deg; ++k) {
      rows.push_back(series_to_py(series.coeff_x(k)));
    }
    return rows;
  });
  m.def("summand_k", [](std::int64_t k, std::int64_t trunc) {
    return series_to_py(corners::summand_k(k, trunc));
  });
  m.def("pair_count_series", [](std::int64_t k, std::int64_t trunc) {
    return series_to_py(corners::pair_count_series(k, trunc));
  });

  m.def("fine_lhs", [](std::int64_t n, std::int64_t r) { return to_py(corners::fine_lhs(n, r)); });
  m.def("fine_rhs", [](std::int64_t n, std::int64_t r) { return to_py(corners::fine_rhs(n, r)); });
  m.def("nu_via_fine", [](std::int64_t n, std::int64_t k) {
    return to_py(corners::nu_via_fine(n, k));
  });
  m.def("pairs_via_decomposition", [](std::int64_t n, std::int64_t k) {
    return to_py(corners::pairs_via_decomposition(n, k));
  });

  m.def("border_coordinates", [](const Parts& parts) {
    corners::BorderCoordinates bc = corners::border_coordinates(make(parts));
    return std::make_pair(bc.horiz, bc.vert);
  });
  m.def("from_border_coordinates", [](const Parts& horiz, const Parts& vert) {
    corners::BorderCoordinates bc;
    bc.horiz = horiz;
    bc.vert = vert;
    return corners::from_border_coordinates(bc).parts();
  });
  m.def("forward", [](const Parts& alpha, const Parts& beta, std::int64_t k) {
    return corners::forward(make(alpha), make(beta), k).parts();
  });
  m.def("inverse", [](const Parts& parts, std::int64_t k) {
    auto [alpha, beta] = corners::inverse(make(parts), k);
    return std::make_pair(alpha.parts(), beta.parts());
  });

  m.def(
      "run_suite",
      [](const std::string& name, std::int64_t max_k, std::int64_t max_n, std::int64_t max_m,
         std::int64_t max_r, std::int64_t trunc) {
        corners::RunReport report =
            corners::run_suite(name, bounds_from(max_k, max_n, max_m, max_r, trunc));
        py::dict out;
        out["command"] = report.command;
        out["checks_run"] = report.checks_run;
        out["passed"] = report.passed();
        py::list failures;
        for (const corners::Failure& failure : report.failures) {
          failures.append(py::make_tuple(failure.description, failure.witness));
        }
        out["failures"] = failures;
        out["report"] = corners::render_report(report);
        return out;
      },
      py::arg("name"), py::arg("max_k") = 6, py::arg("max_n") = 40, py::arg("max_m") = 15,
      py::arg("max_r") = 6, py::arg("trunc") = 200);
}
