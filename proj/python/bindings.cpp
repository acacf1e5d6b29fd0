#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclecalc/binomial.hpp"
#include "cyclecalc/dsl/eval.hpp"
#include "cyclecalc/dsl/lexer.hpp"
#include "cyclecalc/dsl/parser.hpp"
#include "cyclecalc/errors.hpp"
#include "cyclecalc/gonal.hpp"
#include "cyclecalc/graded.hpp"
#include "cyclecalc/report.hpp"
#include "cyclecalc/ring.hpp"
#include "cyclecalc/surfaces.hpp"
#include "cyclecalc/verify.hpp"

namespace py = pybind11;
using namespace cyclecalc;

namespace {

py::object to_py(const BigInt& n) { return py::module_::import("builtins").attr("int")(n.get_str()); }

py::object to_py(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(to_py(r.numerator()), to_py(r.denominator()));
}

py::list to_py(const Vector& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

// Accepts int, Fraction or "p/q".
Rational from_py(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
    const py::object f = py::module_::import("fractions").attr("Fraction")(h);
    const std::string num = py::str(f.attr("numerator"));
    const std::string den = py::str(f.attr("denominator"));
    return Rational(BigInt(num), BigInt(den));
}

EquivalenceLevel level_of(const std::string& name, std::optional<int> gonality) { return EquivalenceLevel::parse(name, gonality); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact correspondence calculus on Jacobians";

    py::register_exception<dsl::SyntaxError>(m, "DslError", PyExc_ValueError);
    py::register_exception<IdentityViolation>(m, "IdentityViolation", PyExc_ArithmeticError);
    py::register_exception<SingularSystem>(m, "SingularSystem", PyExc_ArithmeticError);

    m.def("binom", [](long n, long k) { return to_py(binom(n, k)); }, py::arg("n"), py::arg("k"));

    py::class_<RingElement>(m, "RingElement")
        .def_property_readonly("genus", &RingElement::genus)
        .def("pi_coeffs", [](const RingElement& a) { return to_py(a.pi_coeffs()); })
        .def("shifted_coeffs", [](const RingElement& a) { return to_py(a.shifted_coeffs()); })
        .def("gamma_basis_coeffs", [](const RingElement& a) { return to_py(a.gamma_basis_coeffs()); })
        .def("is_zero", &RingElement::is_zero)
        .def("__add__", [](const RingElement& a, const RingElement& b) { return a + b; })
        .def("__sub__", [](const RingElement& a, const RingElement& b) { return a - b; })
        .def("__neg__", [](const RingElement& a) { return -a; })
        .def("__mul__", [](const RingElement& a, const RingElement& b) { return pontryagin(a, b); })
        .def("__mul__", [](const RingElement& a, const py::object& s) { return from_py(s) * a; })
        .def("__rmul__", [](const RingElement& a, const py::object& s) { return from_py(s) * a; })
        .def("__pow__", [](const RingElement& a, unsigned k) { return pontryagin_power(a, k); })
        .def("compose", [](const RingElement& a, const RingElement& b) { return compose(a, b); })
        .def("transpose", [](const RingElement& a) { return transpose(a); })
        .def("__eq__", [](const RingElement& a, const RingElement& b) { return a == b; })
        .def("__str__", &RingElement::str)
        .def("__repr__", [](const RingElement& a) { return "RingElement(g=" + std::to_string(a.genus()) + ", " + a.str() + ")"; });

    m.def("gamma", &cyclecalc::gamma, py::arg("genus"), py::arg("n"));
    m.def("pi", &cyclecalc::pi, py::arg("genus"), py::arg("i"));
    m.def("log_gamma1", &log_gamma1, py::arg("genus"));

    py::class_<CurveClass>(m, "CurveClass")
        .def_property_readonly("genus", &CurveClass::genus)
        .def("coeffs", [](const CurveClass& c) { return to_py(c.coeffs()); })
        .def("coeff", [](const CurveClass& c, int w) { return to_py(c.coeff(w)); })
        .def("is_zero", &CurveClass::is_zero)
        .def("__add__", [](const CurveClass& a, const CurveClass& b) { return a + b; })
        .def("__sub__", [](const CurveClass& a, const CurveClass& b) { return a - b; })
        .def("__neg__", [](const CurveClass& a) { return -a; })
        .def("__rmul__", [](const CurveClass& a, const py::object& s) { return from_py(s) * a; })
        .def("__mul__", [](const CurveClass& a, const py::object& s) { return from_py(s) * a; })
        .def("__eq__", [](const CurveClass& a, const CurveClass& b) { return a == b; })
        .def("__str__", &CurveClass::str)
        .def("__repr__", [](const CurveClass& c) { return "CurveClass(g=" + std::to_string(c.genus()) + ", " + c.str() + ")"; });

    m.def("unit_curve", &unit_curve, py::arg("genus"));
    m.def("gross_schoen", &gross_schoen, py::arg("genus"));
    m.def("ceresa", &ceresa, py::arg("genus"));
    m.def("push_forward", py::overload_cast<long, const CurveClass&>(&push_forward), py::arg("n"), py::arg("cycle"));
    m.def("apply_operator", py::overload_cast<const RingElement&, const CurveClass&>(&apply_operator), py::arg("op"),
          py::arg("cycle"));
    m.def(
        "quotient",
        [](const CurveClass& c, const std::string& level, std::optional<int> gonality) { return quotient(c, level_of(level, gonality)); },
        py::arg("cycle"), py::arg("level"), py::arg("gonality") = py::none());

    m.def(
        "evaluate",
        [](const std::string& source, int genus, std::optional<int> gonality, const std::string& level) {
            return dsl::render(dsl::evaluate(source, dsl::EvalContext::make(genus, gonality, level)));
        },
        py::arg("expr"), py::arg("genus"), py::arg("gonality") = py::none(), py::arg("level") = "chow");
    m.def("parse_tree", [](const std::string& source) { return dsl::tree(*dsl::parse(source)); }, py::arg("expr"));
    m.def("pretty", [](const std::string& source) { return dsl::pretty(*dsl::parse(source)); }, py::arg("expr"));

    m.def(
        "closed_forms",
        [](int genus, int gonality) {
            const ClosedForms f = closed_forms(GonalContext(genus, gonality));
            py::dict comps;
            for (const auto& [w, v] : f.components) comps[py::int_(w)] = to_py(v);
            return py::make_tuple(f.labels, comps);
        },
        py::arg("genus"), py::arg("gonality"));
    m.def(
        "pi_combination",
        [](int genus, int gonality) {
            const PiCombinationResult r = pi_combination(GonalContext(genus, gonality));
            py::dict d;
            d["c"] = to_py(r.c);
            d["c1"] = to_py(r.c1);
            d["verified"] = r.verified;
            d["kills_weight_one"] = r.kills_weight_one;
            return d;
        },
        py::arg("genus"), py::arg("gonality"));
    m.def(
        "solve_hn",
        [](int genus, int gonality, int n) {
            const NSRelation r = solve_hn(SurfaceContext(genus, gonality, n));
            return py::make_tuple(to_py(r.a), to_py(r.b), to_py(r.c));
        },
        py::arg("genus"), py::arg("gonality"), py::arg("n"));

    m.def(
        "verify_json",
        [](int genus_max, int gonality_max, bool inject_fault) {
            VerifyOptions o;
            o.genus_max = genus_max;
            o.gonality_max = gonality_max;
            o.inject_fault = inject_fault;
            py::gil_scoped_release release;
            return to_json(verify_all(o));
        },
        py::arg("genus_max") = 5, py::arg("gonality_max") = 7, py::arg("inject_fault") = false);
    m.def("normalize_report", [](const std::string& text) { return to_json(report_from_json(text)); }, py::arg("text"));
}
