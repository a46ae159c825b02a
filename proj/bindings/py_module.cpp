// Python surface over the document layer. Documents are opaque handles;
// reports cross the boundary as the canonical JSON strings the CLI emits, so
// determinism guarantees carry over unchanged.

#include "workbench/dispatch.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace wb;

namespace {

// Refusals surface in python as ConstructionRefused with the gate's report
// attached (rendered under the construction id, matching the CLI).
struct RefusedError {
    std::string message;
    std::string report_json;
};

DocumentReport checks_to_report(const WorkbenchDocument& doc, std::vector<CheckRun> runs,
                                const std::string& target) {
    DocumentReport rep;
    rep.target = !target.empty() ? target : (!doc.name.empty() ? doc.name : "document");
    rep.checks = std::move(runs);
    return rep;
}

bool all_ok(const std::vector<CheckRun>& runs) {
    for (const CheckRun& run : runs)
        if (run.status == "fail") return false;
    return true;
}

} // namespace

PYBIND11_MODULE(_workbench, m) {
    m.doc() = "Exact-arithmetic workbench for Hom-, biHom-, and dendriform-type algebras.";

    static py::exception<RefusedError> refused(m, "ConstructionRefused");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const RefusedError& e) {
            py::object exc = refused(e.message.c_str());
            exc.attr("report_json") = e.report_json;
            PyErr_SetObject(refused.ptr(), exc.ptr());
        } catch (const DocumentError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const DimensionError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<WorkbenchDocument>(m, "Document")
        .def_property_readonly(
            "kind", [](const WorkbenchDocument& d) { return std::string(kind_name(d.kind)); })
        .def_readwrite("name", &WorkbenchDocument::name)
        .def_readwrite("description", &WorkbenchDocument::description)
        .def_property_readonly("dim", &document_dim)
        .def("__repr__", [](const WorkbenchDocument& d) {
            std::string r = "<workbench.Document kind=";
            r += kind_name(d.kind);
            if (!d.name.empty()) r += " name=" + d.name;
            r += " dim=" + std::to_string(document_dim(d)) + ">";
            return r;
        });

    m.def("parse_document", &parse_document_text, py::arg("text"),
          "Parse a JSON document; raises ValueError with the field path on bad input.");
    m.def("parse_document_file", &parse_document_file, py::arg("path"));
    m.def("serialize_document", &serialize_document, py::arg("doc"),
          "Canonical JSON text; parse(serialize(doc)) round-trips exactly.");

    m.def("all_check_ids", &all_check_ids, "Every check id, in registry (execution) order.");
    m.def("construction_ids", &construction_ids);
    m.def("applicable_check_ids", &applicable_check_ids, py::arg("doc"),
          "Check ids whose kind and flavor both match the document.");

    m.def(
        "check",
        [](const WorkbenchDocument& doc, const std::vector<std::string>& checks,
           bool all_witnesses, const std::string& target) {
            CheckOptions opt;
            if (all_witnesses) opt.witness_cap = -1;
            DocumentReport rep = checks_to_report(doc, run_checks(doc, checks, opt), target);
            return py::make_tuple(all_ok(rep.checks), render_report_json(rep));
        },
        py::arg("doc"), py::arg("checks") = std::vector<std::string>{},
        py::arg("all_witnesses") = false, py::arg("target") = std::string(),
        "Run checks (all applicable when none named). Returns (ok, report_json).");

    m.def(
        "construct",
        [](const std::string& id, const std::vector<WorkbenchDocument>& inputs,
           bool all_witnesses) {
            CheckOptions opt;
            if (all_witnesses) opt.witness_cap = -1;
            const std::string target =
                inputs.empty() || inputs[0].name.empty() ? id : inputs[0].name;
            try {
                ConstructionResult res = run_construction(id, inputs, opt);
                DocumentReport rep;
                rep.target = target;
                rep.checks = res.post;
                rep.notes = res.notes;
                ConstructionRef ref;
                ref.id = id;
                ref.name = res.output.name;
                ref.kind = kind_name(res.output.kind);
                ref.dim = document_dim(res.output);
                rep.constructions.push_back(std::move(ref));
                return py::make_tuple(res.output, all_ok(res.post),
                                      render_report_json(rep));
            } catch (const CheckFailure& e) {
                DocumentReport rep;
                rep.target = target;
                CheckRun run;
                run.id = id;
                run.status = "fail";
                run.report = e.report;
                run.report.ok = false;
                run.report.notes.push_back(e.what());
                rep.checks.push_back(std::move(run));
                throw RefusedError{e.what(), render_report_json(rep)};
            }
        },
        py::arg("id"), py::arg("inputs"), py::arg("all_witnesses") = false,
        "Execute a construction; returns (output_doc, post_ok, report_json). "
        "Raises ConstructionRefused (with .report_json) when a gate refuses.");

    m.def(
        "report_text",
        [](const std::string& report_json) {
            return render_report_text(parse_report_text(report_json));
        },
        py::arg("report_json"), "Re-render a stored JSON report as text.");
}
