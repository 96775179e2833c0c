// Python bindings for the main operations: flag validation, weight
// classification, cohomology tables, family dimensions, the rigidity
// verdict, and the coordinate cocycle oracle. Results are returned as
// plain Python dicts via the JSON layer so no bespoke types leak out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "flagrig/report.hpp"

#include <stdexcept>

namespace py = pybind11;
using namespace flagrig;

namespace {

FlagType make_ft(int m, int n, const std::vector<int>& k,
                 const std::vector<int>& l) {
  FlagType ft{m, n, k, l};
  if (ft.k.empty() || ft.l.empty() || ft.k[0] != m || ft.l[0] != n)
    throw std::invalid_argument("k and l must start with m and n");
  return ft;
}

py::object to_py(const Json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

Family parse_family(const std::string& name) {
  std::optional<Family> f = family_from_name(name);
  if (!f) throw std::invalid_argument("unknown sheaf family: " + name);
  return *f;
}

}  // namespace

PYBIND11_MODULE(_flagrig, mod) {
  mod.doc() =
      "Exact cohomological rigidity computations for flag supermanifolds";
  mod.attr("__version__") = kToolVersion;

  mod.def(
      "validate",
      [](int m, int n, const std::vector<int>& k, const std::vector<int>& l) {
        return to_py(json_of(validate_flag_type(make_ft(m, n, k, l))));
      },
      py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"),
      "Check genericity and admissibility of a flag type.");

  mod.def(
      "classify_weight",
      [](int m, int n, const std::vector<int>& k, const std::vector<int>& l,
         const std::vector<int>& mu, const std::vector<int>& la) {
        FlagType ft = make_ft(m, n, k, l);
        Weight w{mu, la};
        Character c;
        c[w] = 1;
        CohomologyTable t = cohomology(ft, c, true);
        return to_py(json_of(t));
      },
      py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"), py::arg("mu"),
      py::arg("la"),
      "Bott classification of a single isotropy weight: the per-degree "
      "dominant image and its dimension, or an empty table when singular.");

  mod.def(
      "cohomology",
      [](int m, int n, const std::vector<int>& k, const std::vector<int>& l,
         const std::string& sheaf, int p, int q) {
        FlagType ft = make_ft(m, n, k, l);
        AssumptionLog log;
        FamilyResult r = family_h01(ft, parse_family(sheaf), p, q, &log);
        Json payload = json_of(r);
        return to_py(envelope(ft, "cohomology", payload, log));
      },
      py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"),
      py::arg("sheaf"), py::arg("p") = 0, py::arg("q") = 0,
      "Degree 0/1 cohomology of a catalog sheaf (exact recursive route).");

  mod.def(
      "rigidity",
      [](int m, int n, const std::vector<int>& k, const std::vector<int>& l,
         bool allow_nonadmissible) {
        FlagType ft = make_ft(m, n, k, l);
        RigidityOptions opt;
        opt.allow_nonadmissible = allow_nonadmissible;
        RigidityVerdict rv = rigidity_report(ft, opt);
        return to_py(envelope(ft, "rigidity", json_of(rv), rv.assumption_log));
      },
      py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"),
      py::arg("allow_nonadmissible") = false,
      "Full rigidity verdict with the graded tables and assumption log.");

  mod.def(
      "oracle_cocycle",
      [](int m, int n, const std::vector<int>& k, const std::vector<int>& l) {
        FlagType ft = make_ft(m, n, k, l);
        CocycleDims d = vertical_cocycle_dim(ft);
        return to_py(envelope(ft, "oracle-cocycle", json_of(d)));
      },
      py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"),
      "Symbolic coordinate oracle: dimensions of the invariant vertical "
      "cocycle space in the deepest graded cell.");

  py::register_exception<FlagrigError>(mod, "FlagrigError");
}
