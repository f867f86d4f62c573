#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "ccoef/classify.hpp"
#include "ccoef/coefficient.hpp"
#include "ccoef/complexity.hpp"
#include "ccoef/engine.hpp"
#include "ccoef/enumeration.hpp"
#include "ccoef/life.hpp"
#include "ccoef/report.hpp"

namespace py = pybind11;
using namespace ccoef;

namespace {

using Rows = std::vector<std::vector<std::uint8_t>>;

RuleNumber to_number(const py::int_& value) { return RuleNumber(py::str(py::handle(value)).cast<std::string>()); }

py::int_ from_number(const RuleNumber& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

Boundary boundary_of(const std::string& kind, int background) {
  if (kind == "cyclic") return Boundary::cyclic();
  if (kind == "fixed") return Boundary::fixed(static_cast<std::uint8_t>(background));
  throw std::invalid_argument("boundary must be 'cyclic' or 'fixed'");
}

Rows rows_of(const Evolution& evo) {
  Rows out;
  for (const auto& row : evo.rows()) out.push_back(row.cells());
  return out;
}

Rows rows_of(const InputFamily& family) {
  Rows out;
  for (const auto& m : family.members) out.push_back(m.cells());
  return out;
}

Rows frames_of(const LifeGrid& grid) {
  Rows out;
  for (std::size_t y = 0; y < grid.height(); ++y) {
    const auto begin = grid.cells().begin() + static_cast<long>(y * grid.width());
    out.emplace_back(begin, begin + static_cast<long>(grid.width()));
  }
  return out;
}

LifeGrid grid_of(const Rows& rows) {
  if (rows.empty()) throw std::invalid_argument("life grid needs at least one row");
  LifeGrid g(rows.size(), rows.front().size());
  for (std::size_t y = 0; y < rows.size(); ++y) {
    if (rows[y].size() != g.width()) throw std::invalid_argument("life grid rows must share one width");
    for (std::size_t x = 0; x < g.width(); ++x) g.set(y, x, rows[y][x]);
  }
  return g;
}

CoefficientOptions options_of(std::optional<std::size_t> t_min, std::optional<std::size_t> stride,
                              bool include_input_row, std::size_t workers) {
  CoefficientOptions o;
  o.t_min = t_min;
  o.stride = stride;
  o.include_input_row = include_input_row;
  o.workers = workers;
  return o;
}

InputFamily family_of(const std::string& family, std::size_t n, std::size_t width, int colours, std::uint64_t seed,
                      double density, const Boundary& boundary) {
  if (family == "gray") return gray_initials(n, width, colours, boundary);
  if (family == "random") return random_initials(n, width, seed, density, colours, boundary);
  throw std::invalid_argument("family must be 'gray' or 'random'");
}

}  // namespace

PYBIND11_MODULE(_ccoef, m) {
  m.doc() = "Compression-based programmability coefficients for cellular automata";

  py::register_exception<IncomparableError>(m, "IncomparableError", PyExc_ValueError);
  py::register_exception<DegenerateFitError>(m, "DegenerateFitError", PyExc_ValueError);

  py::class_<RuleTable>(m, "RuleTable")
      .def(py::init([](const py::int_& number, int k, int r) { return RuleTable::from_number(to_number(number), k, r); }),
           py::arg("number"), py::arg("k") = 2, py::arg("r") = 1)
      .def_property_readonly("number", [](const RuleTable& t) { return from_number(t.number()); })
      .def_property_readonly("k", &RuleTable::colours)
      .def_property_readonly("r", &RuleTable::radius)
      .def_property_readonly("id", &RuleTable::id)
      .def_property_readonly("entries",
                             [](const RuleTable& t) { return std::vector<std::uint8_t>(t.entries().begin(), t.entries().end()); })
      .def("complement", &RuleTable::complement)
      .def("mirror", &RuleTable::mirror)
      .def("__eq__", [](const RuleTable& a, const RuleTable& b) { return a == b; })
      .def("__repr__", [](const RuleTable& t) { return "<RuleTable " + t.id() + ">"; });

  m.def(
      "evolve",
      [](const RuleTable& rule, const std::vector<std::uint8_t>& cells, std::size_t steps, const std::string& boundary,
         int background) {
        const auto init = Configuration::from_cells(cells, rule.colours(), boundary_of(boundary, background));
        return rows_of(evolve(rule, init, steps));
      },
      py::arg("rule"), py::arg("cells"), py::arg("steps"), py::arg("boundary") = "cyclic", py::arg("background") = 0,
      "Space-time diagram as a list of rows, row 0 being the input.");

  m.def(
      "life_evolve",
      [](const Rows& grid, std::size_t steps, const std::string& rule) {
        std::vector<Rows> out;
        for (const auto& frame : evolve_life(grid_of(grid), steps, LifeRule::parse(rule))) out.push_back(frames_of(frame));
        return out;
      },
      py::arg("grid"), py::arg("steps"), py::arg("rule") = "B3/S23");

  m.def(
      "gray_initials",
      [](std::size_t n, std::size_t width) { return rows_of(gray_initials(n, width)); }, py::arg("n"), py::arg("width"));
  m.def(
      "random_initials",
      [](std::size_t n, std::size_t width, std::uint64_t seed, double density) {
        return rows_of(random_initials(n, width, seed, density));
      },
      py::arg("n"), py::arg("width"), py::arg("seed"), py::arg("density") = 0.5);

  m.def("compressor_id", &compressor_id);
  m.def(
      "compressed_size",
      [](const py::bytes& payload) {
        const std::string s = payload;
        return compressed_size(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
      },
      py::arg("payload"), "Exact raw-DEFLATE length in bits.");
  m.def(
      "serialize",
      [](const RuleTable& rule, const std::vector<std::uint8_t>& cells, std::size_t steps, bool include_input_row) {
        const auto bytes = serialize(evolve(rule, Configuration::from_cells(cells, rule.colours()), steps), include_input_row);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
      },
      py::arg("rule"), py::arg("cells"), py::arg("steps"), py::arg("include_input_row") = true);
  m.def(
      "complexity",
      [](const RuleTable& rule, const std::vector<std::uint8_t>& cells, std::size_t steps, bool include_input_row) {
        return complexity_C(rule, Configuration::from_cells(cells, rule.colours()), steps, include_input_row).bits;
      },
      py::arg("rule"), py::arg("cells"), py::arg("steps"), py::arg("include_input_row") = true);

  py::class_<CoefficientResult>(m, "CoefficientResult")
      .def_property_readonly("c_value", [](const CoefficientResult& r) { return r.c_value; })
      .def_property_readonly("slope", [](const CoefficientResult& r) { return r.fit.slope; })
      .def_property_readonly("intercept", [](const CoefficientResult& r) { return r.fit.intercept; })
      .def_property_readonly("rmse", [](const CoefficientResult& r) { return r.fit.rmse; })
      .def_property_readonly("rule_id", [](const CoefficientResult& r) { return r.params.rule_id; })
      .def_property_readonly("curve",
                             [](const CoefficientResult& r) {
                               std::vector<std::pair<std::size_t, double>> out;
                               for (const auto& p : r.curve.points) out.emplace_back(p.t, p.s);
                               return out;
                             })
      .def("to_json", [](const CoefficientResult& r) { return to_json(r).dump(); })
      .def("__repr__", [](const CoefficientResult& r) {
        return "<CoefficientResult " + r.params.rule_id + " c=" + format_double(r.c_value) + ">";
      });

  m.def(
      "coefficient",
      [](const RuleTable& rule, std::size_t t, std::size_t n, std::size_t width, const std::string& family,
         std::uint64_t seed, double density, std::optional<std::size_t> t_min, std::optional<std::size_t> stride,
         bool include_input_row, const std::string& boundary, int background, std::size_t workers) {
        const auto fam = family_of(family, n, width, rule.colours(), seed, density, boundary_of(boundary, background));
        py::gil_scoped_release release;
        return coefficient_C(rule, fam, t, options_of(t_min, stride, include_input_row, workers));
      },
      py::arg("rule"), py::arg("t") = 200, py::arg("n") = 40, py::arg("width") = 61, py::arg("family") = "gray",
      py::arg("seed") = 1, py::arg("density") = 0.5, py::arg("t_min") = py::none(), py::arg("stride") = py::none(),
      py::arg("include_input_row") = true, py::arg("boundary") = "cyclic", py::arg("background") = 0,
      py::arg("workers") = 0);

  m.def(
      "life_coefficient",
      [](const std::string& rule, std::size_t t, std::size_t n, std::size_t height, std::size_t width,
         std::optional<std::size_t> t_min, std::optional<std::size_t> stride, bool include_input_row,
         std::size_t workers) {
        const auto parsed = LifeRule::parse(rule);
        const auto fam = gray_patches(n, height, width);
        py::gil_scoped_release release;
        return coefficient_C(parsed, fam, t, options_of(t_min, stride, include_input_row, workers));
      },
      py::arg("rule") = "B3/S23", py::arg("t") = 100, py::arg("n") = 16, py::arg("height") = 32, py::arg("width") = 32,
      py::arg("t_min") = py::none(), py::arg("stride") = py::none(), py::arg("include_input_row") = true,
      py::arg("workers") = 0);

  m.def("inert_rules", &inert_rules, py::arg("k") = 2, py::arg("r") = 1);
  m.def("calibrate_zero_band", &calibrate_zero_band, py::arg("inert"));
  m.def("is_zero_computer", &is_zero_computer, py::arg("result"), py::arg("epsilon"));
  m.def("computes", &computes, py::arg("result"), py::arg("epsilon"));
  m.def("c_equivalent", &c_equivalent, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "behaviourally_equivalent",
      [](const std::vector<CoefficientResult>& a, const std::vector<CoefficientResult>& b, std::optional<double> zero_band) {
        return behaviourally_equivalent(CoefficientGrid{a}, CoefficientGrid{b}, zero_band);
      },
      py::arg("a"), py::arg("b"), py::arg("zero_band") = py::none());
  m.def("kmeans_1d", &kmeans_1d, py::arg("values"), py::arg("clusters") = 4);

  m.def(
      "sweep_json",
      [](std::size_t t, std::size_t n, std::size_t width, std::optional<double> epsilon, std::size_t workers) {
        SweepParams p;
        p.t_max = t;
        p.n = n;
        p.width = width;
        p.epsilon = epsilon;
        p.workers = workers;
        std::string out;
        {
          py::gil_scoped_release release;
          out = sweep_json(sweep_eca(p)).dump();
        }
        return out;
      },
      py::arg("t") = 200, py::arg("n") = 40, py::arg("width") = 61, py::arg("epsilon") = py::none(),
      py::arg("workers") = 0);
}
