#include "odrl/alignment.hpp"
#include "odrl/bench.hpp"
#include "odrl/denotation.hpp"
#include "odrl/encoder.hpp"
#include "odrl/error.hpp"
#include "odrl/kb.hpp"
#include "odrl/policy_io.hpp"
#include "odrl/runtime.hpp"
#include "odrl/verdict.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace odrl;

namespace {

Mode mode_of(const std::string& text) {
    if (auto m = parse_mode(text)) return *m;
    throw Error(ErrorKind::ConfigError, "unknown mode '" + text + "' (expected open or closed)");
}

Polarity polarity_of(const std::string& text) {
    if (auto p = parse_polarity(text)) return *p;
    throw Error(ErrorKind::ConfigError, "unknown polarity '" + text + "' (expected compat or conflict)");
}

std::optional<std::string> witness_of(const PairVerdict& v) { return v.witness; }

py::tuple pair(const PairVerdict& v) { return py::make_tuple(std::string(to_string(v.verdict)), witness_of(v)); }

std::optional<std::vector<std::string>> names(const KnowledgeBase& kb, const Denotation& d) {
    if (d.is_top()) return std::nullopt;
    std::vector<std::string> out;
    for (auto i : d.set().members()) out.push_back(kb.name(i));
    std::sort(out.begin(), out.end());
    return out;
}

Constraint constraint(const std::string& json) { return io::parse_constraint(json, "<constraint>"); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Conflict detection for ODRL constraints over finite knowledge bases";

    m.attr("OdrlError") = py::handle(PyErr_NewException("odrlkb._core.OdrlError", PyExc_RuntimeError, nullptr));
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::gil_scoped_acquire gil;
            py::object exc = py::module_::import("odrlkb._core").attr("OdrlError");
            py::object instance = exc(e.what());
            instance.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(exc.ptr(), instance.ptr());
        }
    });

    py::class_<KnowledgeBase>(m, "KnowledgeBase")
        .def_static("from_json", [](const std::string& text) { return io::parse_kb(text, "<kb>"); }, py::arg("text"))
        .def_static("from_file", [](const std::string& path) { return io::parse_kb_file(path); }, py::arg("path"))
        .def_property_readonly("id", &KnowledgeBase::id)
        .def_property_readonly("domain", [](const KnowledgeBase& kb) { return std::string(to_string(kb.domain())); })
        .def_property_readonly("una", &KnowledgeBase::una)
        .def_property_readonly("concepts", &KnowledgeBase::concepts)
        .def("leq", [](const KnowledgeBase& kb, const std::string& x, const std::string& y) { return kb.leq(x, y); })
        .def("disjoint",
             [](const KnowledgeBase& kb, const std::string& x, const std::string& y) { return kb.disjoint(x, y); })
        .def("ground", [](const KnowledgeBase& kb, const std::string& v) { return kb.ground_name(v); })
        .def("to_json", [](const KnowledgeBase& kb) { return io::serialize_kb(kb.to_spec()); })
        .def("__len__", &KnowledgeBase::size)
        .def("__repr__", [](const KnowledgeBase& kb) {
            return "<KnowledgeBase " + kb.id() + " (" + std::to_string(kb.size()) + " concepts)>";
        });

    m.def("validate_kb_file", [](const std::string& path) {
        const auto spec = io::parse_kb_spec_file(path);
        std::vector<std::string> out;
        for (const auto& v : validate_kb(KnowledgeBase::close_unchecked(spec))) out.push_back(v.to_string());
        return out;
    }, py::arg("path"), "Structural axiom violations of a KB file, empty when valid.");

    m.def("denote", [](const KnowledgeBase& kb, const std::string& c) { return names(kb, denote(kb, constraint(c))); },
          py::arg("kb"), py::arg("constraint"), "Closed denotation as concept names, None when indeterminate.");

    m.def("check", [](const KnowledgeBase& kb, const std::string& c1, const std::string& c2, const std::string& mode) {
        return pair(check_pair(kb, constraint(c1), constraint(c2), mode_of(mode)));
    }, py::arg("kb"), py::arg("left"), py::arg("right"), py::arg("mode") = "open");

    m.def("subsumes", [](const KnowledgeBase& kb, const std::string& c1, const std::string& c2, const std::string& mode) {
        return std::string(to_string(subsumes(kb, constraint(c1), constraint(c2), mode_of(mode))));
    }, py::arg("kb"), py::arg("narrow"), py::arg("wide"), py::arg("mode") = "open");

    m.def("check_policy", [](const std::string& kbdir, const std::string& left, const std::string& right,
                             const std::string& mode) {
        const auto dir = io::load_kb_dir(kbdir);
        const Mode md = mode_of(mode);
        const auto r = check_composite(dir.registry, io::parse_composite(left, "<left>"),
                                       io::parse_composite(right, "<right>"), md);
        return io::result_json(r, md);
    }, py::arg("kbdir"), py::arg("left"), py::arg("right"), py::arg("mode") = "open");

    m.def("satisfies", [](const std::string& kbdir, const std::string& context, const std::string& c,
                          const std::string& mode) {
        const auto dir = io::load_kb_dir(kbdir);
        return satisfies(dir.registry, io::parse_context(context, "<context>"), constraint(c), mode_of(mode));
    }, py::arg("kbdir"), py::arg("context"), py::arg("constraint"), py::arg("mode") = "open");

    m.def("validate_alignment", [](const std::string& alignment, const KnowledgeBase& source,
                                   const KnowledgeBase& target) {
        std::vector<std::string> out;
        for (const auto& v : validate_alignment(io::parse_alignment(alignment, "<alignment>"), source, target)) {
            out.push_back(v.to_string());
        }
        return out;
    }, py::arg("alignment"), py::arg("source"), py::arg("target"));

    m.def("aligned_check", [](const std::string& alignment, const KnowledgeBase& source, const KnowledgeBase& target,
                              const std::string& c1, const std::string& c2, const std::string& mode) {
        const auto r = aligned_verdict(io::parse_alignment(alignment, "<alignment>"), source, target, constraint(c1),
                                       constraint(c2), mode_of(mode));
        return py::make_tuple(pair(r.source), pair(r.aligned));
    }, py::arg("alignment"), py::arg("source"), py::arg("target"), py::arg("left"), py::arg("right"),
       py::arg("mode") = "open");

    m.def("encode", [](const KnowledgeBase& kb, const std::string& c1, const std::string& c2,
                       const std::string& polarity, const std::string& id, bool allow_indeterminate) {
        EmitOptions options;
        options.allow_indeterminate = allow_indeterminate;
        const auto p = emit_problem(kb, constraint(c1), constraint(c2), polarity_of(polarity), id, options);
        py::dict out;
        out["id"] = p.id;
        out["expected"] = std::string(to_string(p.expected));
        out["engine_verdict"] = std::string(to_string(p.engine_verdict));
        out["tptp"] = p.tptp_text;
        out["smt2"] = p.smtlib_text;
        return out;
    }, py::arg("kb"), py::arg("left"), py::arg("right"), py::arg("polarity") = "compat", py::arg("id") = "p",
       py::arg("allow_indeterminate") = false);

    m.def("interpret_result", [](const std::string& token, const std::string& polarity) {
        return std::string(to_string(interpret_result(token, polarity_of(polarity))));
    }, py::arg("token"), py::arg("polarity"));

    m.def("run_bench", [](const std::string& mode, bool emit, std::optional<std::string> suite_dir) {
        const bench::Suite suite = suite_dir ? bench::load_suite(*suite_dir) : bench::build_builtin_suite();
        bench::SuiteReport r;
        {
            py::gil_scoped_release release;
            r = bench::run_suite(suite, mode_of(mode), emit);
        }
        return bench::report_json(r);
    }, py::arg("mode") = "open", py::arg("emit") = false, py::arg("suite_dir") = py::none());
}
