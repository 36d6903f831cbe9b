#include <sstream>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <punctured/json_io.hpp>
#include <punctured/parse.hpp>
#include <punctured/suites.hpp>

#include "cli.hpp"

namespace py = pybind11;
using namespace punctured;

namespace {

std::string dump(const json_io::json &j) { return j.dump(); }

TruncatedSeries series_arg(const Field &F, const py::object &s, const std::string &var, int precision)
{
    if (py::isinstance<TruncatedSeries>(s)) return s.cast<TruncatedSeries>();
    return parse_truncated_series(F, s.cast<std::string>(), var, precision);
}

RationalFunction rf_arg(const Field &F, const py::object &f)
{
    if (py::isinstance<RationalFunction>(f)) return f.cast<RationalFunction>();
    return parse_rational_function(F, f.cast<std::string>());
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact computations at the formal punctured neighborhood of infinity";

    PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
    error_type.call_once_and_store_result([&]() { return py::object(py::exception<Error>(m, "Error", PyExc_ValueError)); });
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error &e) {
            py::object type = error_type.get_stored();
            py::object err = type(e.what());
            err.attr("kind") = error_kind_name(e.kind());
            err.attr("message") = e.message();
            if (const auto *pe = dynamic_cast<const ParseError *>(&e)) err.attr("offset") = pe->offset();
            PyErr_SetObject(type.ptr(), err.ptr());
        }
    });

    py::class_<Field>(m, "Field")
        .def_static("rationals", &Field::rationals)
        .def_static("prime", &Field::prime, py::arg("p"))
        .def_static("extension", &Field::extension, py::arg("p"), py::arg("modulus"))
        .def_static("parse", &parse_field, py::arg("descriptor"))
        .def_property_readonly("descriptor", &Field::descriptor)
        .def_property_readonly("characteristic", &Field::characteristic)
        .def_property_readonly("degree", &Field::degree)
        .def_property_readonly("order", [](const Field &F) { return py::int_(py::str(F.order().get_str())); })
        .def("value", [](const Field &F, const py::object &v) {
            if (py::isinstance<py::int_>(v)) return F.from_mpz(mpz_class(py::str(v).cast<std::string>()));
            return parse_value(F, v.cast<std::string>());
        }, py::arg("value"))
        .def("generator", &Field::generator)
        .def("elements", [](const Field &F) { return F.elements(); })
        .def(py::self == py::self)
        .def("__repr__", [](const Field &F) { return "Field('" + F.descriptor() + "')"; });

    py::class_<FieldValue>(m, "FieldValue")
        .def_property_readonly("field", &FieldValue::field)
        .def("is_zero", &FieldValue::is_zero)
        .def("inverse", &FieldValue::inverse)
        .def("frobenius", &FieldValue::frobenius)
        .def("norm", &norm_to_base)
        .def("trace", &trace_to_base)
        .def("__pow__", [](const FieldValue &a, long long e) { return a.pow(e); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &FieldValue::to_string)
        .def("__repr__", [](const FieldValue &a) { return "FieldValue('" + a.to_string() + "')"; });

    py::class_<TruncatedSeries>(m, "TruncatedSeries")
        .def_static("parse", &parse_truncated_series, py::arg("field"), py::arg("text"), py::arg("var") = "t", py::arg("precision") = 20)
        .def_property_readonly("field", &TruncatedSeries::field)
        .def_property_readonly("variable", &TruncatedSeries::variable)
        .def_property_readonly("precision", &TruncatedSeries::precision)
        .def_property_readonly("degree", &TruncatedSeries::degree)
        .def("coeff", &TruncatedSeries::coeff, py::arg("exponent"))
        .def("terms", [](const TruncatedSeries &s) {
            std::vector<std::pair<int, std::string>> out;
            for (const auto &[e, c] : s.terms()) out.emplace_back(e, c.to_string());
            return out;
        })
        .def("inverse", &TruncatedSeries::inverse)
        .def("truncated", &TruncatedSeries::truncated, py::arg("precision"))
        .def("agrees_with", &TruncatedSeries::agrees_with)
        .def("to_json", [](const TruncatedSeries &s) { return dump(json_io::encode(s)); })
        .def_static("from_json", [](const std::string &s) { return json_io::decode_truncated_series(json_io::json::parse(s)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &TruncatedSeries::to_string)
        .def("__repr__", [](const TruncatedSeries &s) { return "TruncatedSeries('" + s.to_string() + "')"; });

    py::class_<Polynomial>(m, "Polynomial")
        .def_static("parse", &parse_polynomial, py::arg("field"), py::arg("text"), py::arg("variables") = std::vector<std::string>{})
        .def_property_readonly("variables", &Polynomial::variables)
        .def("degree", &Polynomial::degree, py::arg("var"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial &p) { return "Polynomial('" + p.to_string() + "')"; });

    py::class_<RationalFunction>(m, "RationalFunction")
        .def_static("parse", &parse_rational_function, py::arg("field"), py::arg("text"), py::arg("var") = "t")
        .def("derivative", &RationalFunction::derivative)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(py::self == py::self)
        .def("__str__", &RationalFunction::to_string)
        .def("__repr__", [](const RationalFunction &f) { return "RationalFunction('" + f.to_string() + "')"; });

    // Reports come back as JSON text; the package wrapper decodes them.
    m.def("_phi_of_series", [](const Field &F, const py::object &f, int window, bool known_terms, int precision) {
        const TruncatedSeries s = series_arg(F, f, "t", precision);
        const CalkinClass1D c = phi_of_series(s, window, known_terms ? TruncationPolicy::KnownTerms : TruncationPolicy::Strict);
        return dump({{"operator", json_io::encode(c.op)}, {"membership", json_io::encode(c.membership)}});
    });
    m.def("_verify_homomorphism", [](const Field &F, const py::object &f, const py::object &g, int window) {
        const HomomorphismReport r = verify_homomorphism(series_arg(F, f, "t", window), series_arg(F, g, "t", window), window);
        return dump({{"verdict", calkin_verdict_name(r.verdict.kind)}, {"rank", r.verdict.rank}, {"defect_bound", r.defect_bound},
                     {"product", json_io::encode(r.product)}, {"certificate", json_io::encode(r.verdict.certificate)}});
    });
    m.def("_verify_ses", [](const Field &F, const py::object &h, int window) {
        return dump(json_io::encode(verify_ses(series_arg(F, h, "y", window + 8), window)));
    });
    m.def("_factor_cocycle", [](const Field &F, const std::string &text, int order) {
        const ChartUnit c(parse_chart_series(F, Chart::G12, text, order));
        return dump(json_io::encode(factor_cocycle(c, order)));
    });
    m.def("_laurent_roots", [](const Field &F, const std::string &text, int precision) {
        const Polynomial P = parse_polynomial(F, text, {"x", "y"});
        const auto coeffs = P.coefficients_in(0);
        const bool monic = !coeffs.empty() && coeffs.back().degree() == 0;
        return dump(json_io::encode(monic ? laurent_roots(P, precision) : laurent_roots_any(P, precision)));
    });
    m.def("_algebraicity_witness", [](const Field &F, const py::object &h, int dx, int dy, int precision) {
        const auto w = algebraicity_witness(series_arg(F, h, "y", precision), dx, dy);
        return w ? dump(json_io::encode(*w)) : std::string("null");
    });
    m.def("_residues", [](const Field &F, const py::object &f, const py::object &g) {
        return dump(json_io::encode(residue_theorem_check(rf_arg(F, f), rf_arg(F, g))));
    });
    m.def("_weil", [](const Field &F, const py::object &f, const py::object &g) {
        return dump(json_io::encode(weil_reciprocity_check(rf_arg(F, f), rf_arg(F, g))));
    });
    m.def("_prop71", [](const Field &F, int precision) { return dump(json_io::encode(prop71_check(precision, F))); });
    m.def("_suite", [](const std::string &name, std::uint64_t seed, int order) {
        SuiteOptions o;
        o.seed = seed;
        o.order = order;
        const SuiteReport r = run_suite(name, o);
        json_io::json checks = json_io::json::array();
        for (const auto &c : r.checks) checks.push_back({{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
        return dump({{"name", r.name}, {"seed", r.seed}, {"passed", r.passed()}, {"total", r.checks.size()}, {"checks", checks}});
    });
    m.attr("DEFAULT_SEED") = SuiteOptions{}.seed;

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
