#include "schur/alphafinite.hpp"
#include "schur/cli.hpp"
#include "schur/corpus.hpp"
#include "schur/groupspec.hpp"
#include "schur/homology.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

namespace py = pybind11;

namespace {

py::object to_py(const schur::BigInt& v) { return py::int_(py::str(schur::to_string(v))); }

schur::BigInt from_py(const py::int_& v) { return schur::parse_bigint(py::str(v).cast<std::string>()); }

py::list factors(const schur::FinAbDesc& a) {
  py::list out;
  for (const auto& f : a.factors) out.append(to_py(f));
  return out;
}

}  // namespace

PYBIND11_MODULE(_schur, m) {
  m.doc() = "Schur multipliers, representation groups and projective representations";

  py::register_exception<schur::CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<schur::CheckFailed>(m, "CheckFailed", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const schur::InvalidInput& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.attr("DEFAULT_SEED") = schur::kDefaultSeed;

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        schur::CliOutput o;
        {
          py::gil_scoped_release release;
          o = schur::run_cli(args);
        }
        return std::make_tuple(o.exit_code, o.out, o.err);
      },
      py::arg("args"), "Run a CLI subcommand; returns (exit_code, stdout, stderr).");

  m.def(
      "canonical_spec", [](const std::string& text) { return schur::parse_group_spec(text).to_string(); },
      py::arg("spec"), "Parse a group spec and return its canonical text.");

  m.def(
      "group_order",
      [](const std::string& text) { return to_py(schur::parse_group_spec(text).order()); }, py::arg("spec"),
      "Order of the group, 0 when infinite.");

  m.def(
      "h2_integral",
      [](const std::string& text, std::size_t max_order) {
        const auto spec = schur::parse_group_spec(text);
        return factors(schur::h2_integral(*spec.instantiate(max_order), max_order));
      },
      py::arg("spec"), py::arg("max_order") = schur::kDefaultBarCap,
      "Invariant factors of H2(G, Z) from the bar complex.");

  m.def(
      "multiplier_metacyclic",
      [](const py::int_& mm, const py::int_& n, const py::int_& r) {
        return factors(schur::multiplier_metacyclic(schur::MetacyclicDesc(from_py(mm), from_py(n), from_py(r))));
      },
      py::arg("m"), py::arg("n"), py::arg("r"));

  m.def(
      "mc_is_nilpotent", [](const py::int_& mm, const py::int_& r) { return schur::mc_is_nilpotent(from_py(mm), from_py(r)); },
      py::arg("m"), py::arg("r"));

  m.def(
      "corpus",
      [](std::size_t max_order) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& g : schur::corpus_groups(max_order)) out.emplace_back(g.name, g.family);
        return out;
      },
      py::arg("max_order") = 16, "(spec, family) pairs of the verification corpus.");
}
