#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "afkit/af.hpp"
#include "afkit/charlogic.hpp"
#include "afkit/error.hpp"
#include "afkit/io.hpp"
#include "afkit/kernels.hpp"
#include "afkit/realizability.hpp"
#include "afkit/semantics.hpp"
#include "afkit/verifiability.hpp"

namespace py = pybind11;
using namespace afkit;

PYBIND11_MODULE(_afkit, m) {
    m.doc() = "Abstract argumentation frameworks: semantics, kernels, realizability";

    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<Unsupported>(m, "Unsupported", PyExc_NotImplementedError);
    py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);

    py::class_<AF>(m, "AF")
        .def(py::init<std::vector<std::string>, const std::vector<Attack>&>(), py::arg("args"),
             py::arg("attacks") = std::vector<Attack>{})
        .def_property_readonly("arguments", &AF::names)
        .def_property_readonly("attacks", &AF::attack_list)
        .def("__len__", &AF::size)
        .def("__eq__", [](const AF& a, const AF& b) { return a == b; })
        .def("__repr__", [](const AF& f) { return "AF(" + std::to_string(f.size()) + " arguments)"; });

    m.def("parse_apx", [](const std::string& s) { return parse_apx(s); });
    m.def("emit_apx", &emit_apx);
    m.def("parse_tgf", [](const std::string& s) { return parse_tgf(s); });
    m.def("emit_tgf", &emit_tgf);

    m.def("extensions", [](const AF& f, const std::string& sigma) {
        return named(f, extensions(f, parse_semantics(sigma)));
    });
    m.def("kernel", [](const AF& f, const std::string& k) { return kernel(f, parse_kernel(k)); });
    m.def(
        "equivalent",
        [](const AF& f, const AF& g, const std::string& notion, const std::string& sigma) {
            Verdict v = decide_equivalence(f, g, parse_notion(notion), parse_semantics(sigma));
            py::dict d;
            d["answer"] = to_string(v.answer);
            d["method"] = to_string(v.method);
            d["kernel"] = v.kernel ? py::object(py::str(to_string(*v.kernel))) : py::object(py::none());
            return d;
        },
        py::arg("f"), py::arg("g"), py::arg("notion"), py::arg("semantics"));

    m.def(
        "realizable",
        [](const SetFamily& s, const std::string& sigma) {
            return decide_signature(s, parse_semantics(sigma)).holds;
        },
        py::arg("sets"), py::arg("semantics"));
    m.def("realize", [](const SetFamily& s, const std::string& sigma) { return realize(s, parse_semantics(sigma)); });
    m.def("defense_formula_cnf", &defense_formula_cnf);

    m.def("exact_class", [](const std::string& sigma) { return to_string(exact_class(parse_semantics(sigma))); });
    m.def("reconstruct", [](const AF& f, const std::string& sigma, const std::string& cls) {
        auto s = parse_semantics(sigma);
        return named(f, verify(s, verification_class(f, parse_neighborhood(cls)), f.all()));
    });

    m.def("rho_logic_holds", [](const std::vector<std::string>& universe, const std::string& sigma) {
        auto r = rho_logic(universe, parse_semantics(sigma));
        return py::make_tuple(rho_characterization_holds(r), rho_intersection_holds(r));
    });
    m.def("characterization_check", [](const std::string& logic_text) {
        auto logic = parse_logic(logic_text);
        return is_characterization(canonical_characterization(logic), logic);
    });
}
