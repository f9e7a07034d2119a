// Python bindings for the trace engines. Exact values come back as int, fractions.Fraction,
// or a dict {"m": m, "coeffs": [Fraction, ...]} for numbers outside Q.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hecke/atkin_lehner.hpp"
#include "hecke/characters.hpp"
#include "hecke/class_numbers.hpp"
#include "hecke/gamma0_trace.hpp"
#include "hecke/gamma1_trace.hpp"
#include "hecke/level4.hpp"
#include "hecke/oracles.hpp"
#include "hecke/version.hpp"

namespace py = pybind11;
using namespace hecke;

namespace {

py::object to_py(const BigInt& z)
{
    return py::module_::import("builtins").attr("int")(z.get_str());
}

py::object to_py(const Rational& q)
{
    if (q.get_den() == 1) return to_py(q.get_num());
    return py::module_::import("fractions").attr("Fraction")(to_string(q));
}

py::object to_py(const CyclotomicNumber& x)
{
    if (x.is_rational()) return to_py(x.rational_value());
    py::list coeffs;
    for (const auto& c : x.coefficients()) coeffs.append(to_py(c));
    py::dict d;
    d["m"] = x.field();
    d["coeffs"] = coeffs;
    return d;
}

template <class R>
py::dict breakdown(const R& r)
{
    py::dict d;
    d["value"] = to_py(r.value);
    d["elliptic"] = to_py(r.elliptic);
    d["boundary"] = to_py(r.boundary);
    d["cusp"] = to_py(r.cusp);
    d["delta"] = to_py(r.delta);
    return d;
}

DirichletCharacter character(std::int64_t level, std::int64_t chi)
{
    return chi == 0 ? DirichletCharacter(level) : character_by_index(level, chi);
}

} // namespace

PYBIND11_MODULE(_hecke, m) {
    m.doc() = "Exact traces of Hecke operators";
    m.attr("__version__") = library_version;
    m.attr("engine_version") = engine_version;

    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<integrality_error>(m, "IntegralityError", PyExc_ArithmeticError);

    m.def("trace", [](std::int64_t level, int weight, std::int64_t n, std::int64_t chi, bool full) -> py::object {
        const auto r = trace_S(TraceQuery(level, weight, character(level, chi), n));
        return full ? py::object(breakdown(r)) : to_py(r.value);
    }, py::arg("level"), py::arg("weight"), py::arg("n"), py::arg("chi") = 0, py::arg("breakdown") = false,
       "tr(T_n) on S_k(Gamma_0(N), chi); chi is an index into characters(level).");

    m.def("trace_m_plus_s", [](std::int64_t level, int weight, std::int64_t n, std::int64_t chi) {
        return to_py(trace_M_plus_S(TraceQuery(level, weight, character(level, chi), n)).value);
    }, py::arg("level"), py::arg("weight"), py::arg("n"), py::arg("chi") = 0);

    m.def("trace_al", [](std::int64_t level, std::int64_t ell, int weight, std::int64_t n) {
        return to_py(trace_Tn_Wl(ALQuery(level, ell, weight, n)).value);
    }, py::arg("level"), py::arg("ell"), py::arg("weight"), py::arg("n"));

    m.def("trace_gamma1", [](std::int64_t level, int weight, std::int64_t n, const std::string& space, bool full) -> py::object {
        if (space != "S" && space != "MS") throw precondition_error("space must be 'S' or 'MS'");
        const Gamma1Query q(level, weight, n);
        const auto r = space == "S" ? trace_gamma1_S(q) : trace_gamma1_MS(q);
        return full ? py::object(breakdown(r)) : to_py(r.value);
    }, py::arg("level"), py::arg("weight"), py::arg("n"), py::arg("space") = "S", py::arg("breakdown") = false);

    m.def("trace_form", [](std::int64_t level, int weight, std::int64_t precision, const std::string& group,
                           std::int64_t chi, const std::string& parity) {
        GroupSpec g;
        g.level = level;
        if (group == "gamma1") g.kind = GroupSpec::Kind::gamma1;
        else if (group == "gamma0") g.chi_index = chi;
        else throw precondition_error("group must be 'gamma0' or 'gamma1'");
        ParityFilter pf = ParityFilter::all;
        if (parity == "odd") pf = ParityFilter::odd;
        else if (parity == "even") pf = ParityFilter::even;
        else if (parity != "all") throw precondition_error("parity must be 'all', 'odd' or 'even'");
        const auto f = trace_form(g, weight, precision, pf);
        py::list out;
        for (std::int64_t j = 0; j <= f.precision(); ++j) out.append(to_py(f[j]));
        return out;
    }, py::arg("level"), py::arg("weight"), py::arg("precision"), py::arg("group") = "gamma0", py::arg("chi") = 0,
       py::arg("parity") = "all", "Coefficients a_0..a_P of sum tr(T_n) q^n.");

    m.def("hurwitz", [](std::int64_t D) { return to_py(hurwitz_H(D)); }, py::arg("D"));
    m.def("h0", [](std::int64_t D) { return to_py(h0(D)); }, py::arg("D"));
    m.def("genus_x0", &genus_X0, py::arg("N"));

    m.def("characters", [](std::int64_t level) {
        py::list out;
        for (const auto& chi : enumerate_characters(level)) {
            py::dict d;
            d["index"] = chi.index();
            d["exponents"] = std::vector<std::int64_t>(chi.exponents().begin(), chi.exponents().end());
            d["order"] = chi.order();
            d["conductor"] = chi.conductor();
            d["parity"] = chi.parity();
            out.append(d);
        }
        return out;
    }, py::arg("level"));

    m.def("selfcheck", [](const std::string& suite) {
        OracleReport r;
        {
            py::gil_scoped_release release;
            r = consistency_suite(suite);
        }
        py::dict d;
        d["suite"] = r.suite;
        d["cases"] = r.cases;
        py::list failures;
        for (const auto& f : r.failures) failures.append(py::make_tuple(f.key, f.expected, f.actual));
        d["failures"] = failures;
        return d;
    }, py::arg("suite") = "all");
}
