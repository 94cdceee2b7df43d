// Python bindings for the main operations: presets, model I/O and
// validation, Betti tables, stability verification, and the oracle suite.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cebetti/oracle.hpp"
#include "cebetti/presets.hpp"
#include "cebetti/stability.hpp"

namespace py = pybind11;
using namespace cebetti;

namespace {

Variant variant_arg(const std::string& text, int n) { return variant_from_cli(text, n); }

py::dict betti_dict(const std::map<int, int>& dims) {
    py::dict out;
    for (const auto& [degree, dim] : dims) out[py::int_(degree)] = dim;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Betti numbers of unordered configuration spaces via the weight-graded "
              "Chevalley-Eilenberg complex of a cohomology presentation";

    py::class_<CohomologyModel>(m, "Model")
        .def_property_readonly("name", [](const CohomologyModel& s) { return s.name; })
        .def_property_readonly("n", [](const CohomologyModel& s) { return s.n; })
        .def_property_readonly("connected", [](const CohomologyModel& s) { return s.connected; })
        .def_property_readonly("orientable_surface",
                               [](const CohomologyModel& s) { return s.orientable_surface; })
        .def("serialize", &serialize_model)
        .def("__repr__", [](const CohomologyModel& s) {
            return "<cebetti.Model '" + s.name + "' n=" + std::to_string(s.n) + ">";
        });

    m.def("preset", &preset, py::arg("name"), py::arg("params") = std::map<std::string, long>{},
          "Instantiate a shipped manifold preset.");

    m.def("presets", [] {
        py::list out;
        for (const auto& info : preset_catalogue()) {
            py::dict d;
            d["name"] = info.name;
            d["params"] = info.params;
            d["description"] = info.description;
            out.append(d);
        }
        return out;
    });

    m.def("parse_model", &parse_model_file, py::arg("text"),
          "Parse a model document in the JSON file format.");

    m.def("validate", [](const CohomologyModel& model) {
        py::list out;
        for (const auto& v : validate(model)) out.append(v.field + "/" + v.rule + ": " + v.message);
        return out;
    });

    m.def(
        "betti",
        [](const CohomologyModel& model, int k, const std::string& variant) {
            LieModel lm = build_lie_model(model, variant_arg(variant, model.n));
            return betti_dict(betti(lm, k));
        },
        py::arg("model"), py::arg("k"), py::arg("variant") = "standard",
        "Betti numbers of B_k as a dict degree -> dimension.");

    m.def(
        "betti_table",
        [](const CohomologyModel& model, int k_lo, int k_hi, const std::string& variant) {
            LieModel lm = build_lie_model(model, variant_arg(variant, model.n));
            SliceStore store(lm);
            py::list rows;
            for (int k = k_lo; k <= k_hi; ++k)
                for (const auto& [degree, dim] : betti(lm, *store.slice(k)))
                    rows.append(py::make_tuple(k, degree, dim));
            return rows;
        },
        py::arg("model"), py::arg("k_lo"), py::arg("k_hi"), py::arg("variant") = "standard",
        "List of (k, degree, dimension) rows over an inclusive weight range.");

    m.def(
        "stability",
        [](const CohomologyModel& model, int k_max) {
            LieModel lm = build_lie_model(model, Variant::Standard);
            SliceStore store(lm);
            StabilityReport report = verify_stability(store, k_max);
            py::dict out;
            out["pass"] = report.pass;
            out["orientable_surface"] = report.orientable_surface;
            out["predicted_range"] = report.predicted_range;
            out["improved_range"] = report.improved_range;
            out["first_counterexample"] = report.first_counterexample;
            py::list cells;
            for (const auto& cell : report.cells) {
                py::dict c;
                c["k"] = cell.k;
                c["degree"] = cell.degree;
                c["dim_from"] = cell.dim_from;
                c["dim_to"] = cell.dim_to;
                c["iso"] = cell.induced_map_iso;
                c["surjective"] = cell.induced_map_surjective;
                cells.append(c);
            }
            out["cells"] = cells;
            return out;
        },
        py::arg("model"), py::arg("k_max"),
        "Verify the homological stability ranges up to k_max.");

    m.def(
        "check",
        [](const CohomologyModel& model, int k_max, const std::string& variant) {
            py::list out;
            for (const auto& o :
                 run_oracle_suite(model, variant_arg(variant, model.n), k_max)) {
                py::dict d;
                d["name"] = o.name;
                d["inputs"] = o.inputs;
                d["pipeline"] = o.pipeline_value;
                d["oracle"] = o.oracle_value;
                d["agree"] = o.agree;
                out.append(d);
            }
            return out;
        },
        py::arg("model"), py::arg("k_max"), py::arg("variant") = "standard",
        "Run every applicable independent cross-check.");

    m.def("sym_power", &sym_power_oracle, py::arg("graded_dims"), py::arg("k"),
          "Graded dimensions of the k-th symmetric power of a graded vector space.");
}
