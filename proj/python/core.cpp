#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "growthlab/error.hpp"
#include "growthlab/experiment.hpp"
#include "growthlab/field.hpp"
#include "growthlab/matrix.hpp"
#include "growthlab/pargcd.hpp"

namespace py = pybind11;
// Field elements cross the boundary as their integer codes.
using namespace growthlab;

namespace {

std::vector<std::string> dump_records(const std::vector<Json>& records) {
  std::vector<std::string> out;
  out.reserve(records.size());
  for (const Json& j : records) out.push_back(j.dump());
  return out;
}

std::vector<Json> load_records(const std::vector<std::string>& records) {
  std::vector<Json> out;
  out.reserve(records.size());
  for (const auto& s : records) out.push_back(Json::parse(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Field>(m, "Field")
      .def(py::init([](const std::string& literal) { return Field::parse(literal); }))
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("k", &Field::k)
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("modulus", &Field::modulus)
      .def_property_readonly("literal", &Field::literal)
      .def("add", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.add(Fq{a}, Fq{b}).code; })
      .def("mul", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.mul(Fq{a}, Fq{b}).code; })
      .def("inv", [](const Field& f, std::uint32_t a) { return f.inv(Fq{a}).code; })
      .def("from_coeffs", [](const Field& f, std::vector<std::uint32_t> c) { return f.from_coeffs(c).code; })
      .def("coeffs", [](const Field& f, std::uint32_t a) { return f.coeffs(Fq{a}); })
      .def("format", [](const Field& f, std::uint32_t a) { return f.format(Fq{a}); })
      .def("primitive_element", [](const Field& f) { return f.primitive_element().code; })
      .def("__repr__", [](const Field& f) { return "Field('" + f.literal() + "')"; });

  m.def(
      "group_order", [](const std::string& literal) { return GroupSpec::parse(literal).order().str(); },
      "Order of a group literal such as 'SL(2,7)', as a decimal string.");

  m.def("parse_config", [](const std::string& text) { return format_config(parse_config(text)); },
        "Validates config text and returns it in canonical form.");
  m.def(
      "run",
      [](const std::string& config_text) {
        const ExperimentConfig c = parse_config(config_text);
        RunResult r;
        {
          py::gil_scoped_release release;
          r = run(c);
        }
        return py::make_tuple(dump_records(r.records), r.exit_code());
      },
      "Runs a config; returns (records as JSON strings, exit code).");
  m.def(
      "plot_data",
      [](const std::vector<std::string>& records, const std::string& kind) {
        return emit_plot_data(load_records(records), kind);
      },
      "CSV plot data for records returned by run().");
  m.def("commands", &command_names);

  m.def(
      "pargcd_verify",
      [](const std::string& family_text) {
        const pargcd::ParamFamily fam = pargcd::parse_family(family_text);
        const auto rep = pargcd::verify_partition(fam);
        py::dict d;
        d["points"] = rep.points;
        d["classes"] = rep.classes;
        d["empty_classes"] = rep.empty_classes;
        d["uncovered"] = rep.uncovered;
        d["overlaps"] = rep.overlaps;
        d["gcd_mismatches"] = rep.gcd_mismatches;
        d["label_mismatches"] = rep.label_mismatches;
        d["within_bound"] = rep.within_bound;
        d["ok"] = rep.ok();
        return d;
      },
      "Partitions a parametric family, refines by root count and checks every point.");
}
