#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylgenus/octonion.hpp"
#include "weylgenus/partitions.hpp"
#include "weylgenus/report.hpp"
#include "weylgenus/selftest.hpp"

namespace py = pybind11;
using namespace genus;

namespace {

GroupType resolve_type(const std::string& type, int rank) {
  Family fam = family_from_string(type);
  if (fam == Family::G2) rank = 2;
  if (fam == Family::F4) rank = 4;
  if (rank <= 0)
    throw std::invalid_argument("rank is required for classical types");
  return GroupType{fam, rank};
}

ClassifyOptions options_from(const std::vector<int>& denominators) {
  ClassifyOptions opts;
  if (!denominators.empty()) opts.denominators = denominators;
  return opts;
}

Frac frac_from_py(const py::object& obj) {
  if (py::isinstance<py::int_>(obj)) return Frac(obj.cast<std::int64_t>());
  return Frac::parse(obj.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact orbit-type (genus number) computations for the compact "
            "simply connected simple groups of types A, B, C, D, G2, F4";

  m.def("partition_count", [](int n) { return partition_count(n); },
        py::arg("n"));
  m.def("enumerate_partitions",
        [](int n) { return enumerate_partitions(n); }, py::arg("n"));

  m.def(
      "formula_genus",
      [](const std::string& type, int rank, const std::string& mode) {
        return formula_genus(resolve_type(type, rank), mode_from_string(mode));
      },
      py::arg("type"), py::arg("rank") = 0, py::arg("mode") = "group");

  m.def(
      "weyl_order",
      [](const std::string& type, int rank) {
        return weyl_group(resolve_type(type, rank))->order();
      },
      py::arg("type"), py::arg("rank") = 0);

  m.def(
      "_genus_report_json",
      [](const std::string& type, int rank, const std::string& mode,
         const std::string& method, const std::vector<int>& denominators) {
        bool run_formula = method != "brute";
        bool run_brute = method != "formula";
        return make_genus_report(resolve_type(type, rank),
                                 mode_from_string(mode), run_formula, run_brute,
                                 options_from(denominators))
            .to_json();
      },
      py::arg("type"), py::arg("rank") = 0, py::arg("mode") = "group",
      py::arg("method") = "both",
      py::arg("denominators") = std::vector<int>{});

  m.def(
      "_table_json",
      [](const std::string& mode, int max_rank,
         const std::vector<int>& denominators) {
        return make_table_report(mode_from_string(mode), max_rank,
                                 options_from(denominators))
            .to_json();
      },
      py::arg("mode") = "group", py::arg("max_rank") = 4,
      py::arg("denominators") = std::vector<int>{});

  m.def(
      "_compare_lattices_json",
      [](const std::string& type, int rank, int coarse_index,
         const std::vector<int>& denominators) {
        return make_compare_report(resolve_type(type, rank), coarse_index,
                                   options_from(denominators))
            .to_json();
      },
      py::arg("type"), py::arg("rank") = 0, py::arg("coarse_index") = 2,
      py::arg("denominators") = std::vector<int>{});

  m.def(
      "check_derivation",
      [](const py::sequence& params) {
        if (py::len(params) != 4)
          throw std::invalid_argument("expected 4 parameters");
        std::array<Frac, 4> p;
        for (int i = 0; i < 4; ++i) p[i] = frac_from_py(params[i]);
        auto chk = check_derivation(p);
        return py::make_tuple(chk.ok, chk.i, chk.j);
      },
      py::arg("params"),
      "Tests t1(xy) = t2(x)y + x t3(y) on all 64 basis pairs; params are "
      "ints or 'p/q' strings. Returns (ok, i, j) with the first failing "
      "basis pair when ok is False.");

  m.def(
      "_selftest_json",
      [](std::uint64_t seed) {
        SelftestOptions opts;
        opts.seed = seed;
        return selftest_json(run_acceptance(opts), seed);
      },
      py::arg("seed") = 12345);
}
