#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "imult/examples.hpp"
#include "imult/fulton.hpp"
#include "imult/parser.hpp"
#include "imult/report.hpp"

namespace py = pybind11;
using namespace imult;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

Rational coord(const py::object& o) {
    return Rational::from_string(py::str(o).cast<std::string>());
}

RatPoint point_from(const py::object& o) {
    auto t = o.cast<py::sequence>();
    if (py::len(t) != 2) throw usage_error("point must be a pair");
    return {coord(t[0]), coord(t[1])};
}

BiPoly as_poly(const py::object& o) {
    if (py::isinstance<BiPoly>(o)) return o.cast<BiPoly>();
    return parse_poly(py::str(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_imult, m) {
    m.doc() = "exact local intersection multiplicity of plane algebraic curves";

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
    py::register_exception<math_error>(m, "MathError", PyExc_ArithmeticError);
    py::register_exception<internal_error>(m, "InternalError", PyExc_RuntimeError);

    py::class_<BiPoly>(m, "Poly")
        .def(py::init([](const std::string& text) { return parse_poly(text); }))
        .def("__str__", [](const BiPoly& p) { return render_poly(p); })
        .def("__repr__", [](const BiPoly& p) { return "Poly(\"" + render_poly(p) + "\")"; })
        .def("__eq__", [](const BiPoly& a, const BiPoly& b) { return a == b; })
        .def("__add__", [](const BiPoly& a, const BiPoly& b) { return a + b; })
        .def("__sub__", [](const BiPoly& a, const BiPoly& b) { return a - b; })
        .def("__mul__", [](const BiPoly& a, const BiPoly& b) { return a * b; })
        .def("__neg__", [](const BiPoly& a) { return -a; })
        .def_property_readonly("degree", &BiPoly::total_degree)
        .def("multiplicity_at", [](const BiPoly& p, const py::object& pt) {
            return multiplicity_at(p, point_from(pt));
        });

    m.def("parse", [](const std::string& text) { return parse_poly(text); },
          py::arg("text"), "parse a curve expression over Q");

    m.def(
        "intersection_multiplicity",
        [](const py::object& f, const py::object& g, const py::object& point) {
            IMReport r = intersection_multiplicity(as_poly(f), as_poly(g), point_from(point));
            return json_to_py(report_to_json(r));
        },
        py::arg("f"), py::arg("g"), py::arg("point") = py::make_tuple(0, 0),
        "blowup-based intersection multiplicity; returns {value, tree, stats}");

    m.def(
        "fulton_im",
        [](const py::object& f, const py::object& g, const py::object& point,
           std::uint64_t budget) -> py::object {
            FultonOutcome o = fulton_im(as_poly(f), as_poly(g), point_from(point), budget);
            if (o.kind == FultonOutcome::Kind::Exhausted) return py::none();
            if (o.kind == FultonOutcome::Kind::Infinite) return py::str("infinity");
            return py::int_(o.value);
        },
        py::arg("f"), py::arg("g"), py::arg("point") = py::make_tuple(0, 0),
        py::arg("budget") = std::uint64_t(100000000),
        "axioms-based oracle; None when the step budget runs out");

    m.def(
        "common_component_through",
        [](const py::object& f, const py::object& g, const py::object& point) {
            return common_component_through(as_poly(f), as_poly(g), point_from(point));
        },
        py::arg("f"), py::arg("g"), py::arg("point") = py::make_tuple(0, 0));

    m.def(
        "resultant_order",
        [](const py::object& f, const py::object& g) {
            ResultantDiagnostic d = resultant_order_diagnostic(as_poly(f), as_poly(g));
            return py::make_tuple(d.order, d.applicable);
        },
        py::arg("f"), py::arg("g"),
        "(order of x=0 in Res_y(f,g), guards-satisfied flag)");

    m.def(
        "random_curve",
        [](int degree, int multiplicity, int bound, std::uint64_t seed) {
            return random_curve(RandomCurveSpec{degree, multiplicity, bound, seed});
        },
        py::arg("degree"), py::arg("multiplicity") = 1, py::arg("bound") = 10,
        py::arg("seed") = 0);

    m.def("golden_examples", [] {
        py::list out;
        for (const GoldenExample& ex : golden_examples()) {
            py::dict d;
            d["name"] = ex.name;
            d["f"] = ex.f;
            d["g"] = ex.g;
            d["expected"] = ex.expected;
            out.append(d);
        }
        return out;
    });
}
