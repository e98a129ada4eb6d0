#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modunits/delta.hpp"
#include "modunits/dims.hpp"
#include "modunits/forms.hpp"

namespace py = pybind11;
using namespace modunits;

namespace {

py::object py_bigint(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

std::vector<std::string> series_strings(const QSeries& s) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(s.prec()));
    for (const auto& c : s.coeffs()) out.push_back(to_string(c));
    return out;
}

EtaQuotient make_quotient(std::int64_t level,
                          const std::map<std::int64_t, std::int64_t>& exponents) {
    return EtaQuotient(level, exponents);
}

py::dict quotient_dict(const EtaQuotient& f) {
    py::dict exps;
    for (const auto& [m, a] : f.exponents()) exps[py::int_(m)] = a;
    py::dict d;
    d["level"] = f.level();
    d["exponents"] = exps;
    d["text"] = to_string(f);
    return d;
}

py::dict basis_dict(const TriangularBasis& b) {
    py::list elements;
    for (const auto& e : b.elements) {
        py::dict el;
        el["label"] = e.label;
        el["valuation"] = e.series.valuation() ? py::object(py::int_(*e.series.valuation()))
                                               : py::object(py::none());
        el["coefficients"] = series_strings(e.series);
        elements.append(el);
    }
    py::dict d;
    d["level"] = b.level;
    d["weight"] = b.weight;
    d["prec"] = b.prec;
    d["elements"] = elements;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic strong modular units, dimensions and triangular bases "
              "for M_2k(Gamma_0(N))";

    py::register_exception<RankDeficient>(m, "RankDeficientError");

    // arith
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("factorize", [](std::int64_t n) {
        std::vector<std::pair<std::int64_t, int>> out;
        for (const auto& pp : factorize(n)) out.emplace_back(pp.prime, pp.exponent);
        return out;
    }, py::arg("n"));
    m.def("divisors", &divisors, py::arg("n"));
    m.def("sigma", [](int k, std::int64_t n) { return py_bigint(sigma(k, n)); },
          py::arg("k"), py::arg("n"));
    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def("bernoulli", [](int n) { return to_string(bernoulli(n)); }, py::arg("n"));
    m.def("kronecker_minus4", &kronecker_minus4, py::arg("p"));
    m.def("kronecker_minus3", &kronecker_minus3, py::arg("p"));

    // eta quotients
    m.def("eta_text", [](std::int64_t level, const std::map<std::int64_t, std::int64_t>& e) {
        return to_string(make_quotient(level, e));
    }, py::arg("level"), py::arg("exponents"));
    m.def("eta_weight", [](std::int64_t level, const std::map<std::int64_t, std::int64_t>& e) {
        return weight_times_two(make_quotient(level, e));
    }, py::arg("level"), py::arg("exponents"));
    m.def("eta_valuation", [](std::int64_t level, const std::map<std::int64_t, std::int64_t>& e) {
        return to_string(valuation(make_quotient(level, e)));
    }, py::arg("level"), py::arg("exponents"));
    m.def("cusp_order", [](std::int64_t level, const std::map<std::int64_t, std::int64_t>& e,
                           std::int64_t c) {
        return to_string(cusp_order(make_quotient(level, e), c));
    }, py::arg("level"), py::arg("exponents"), py::arg("c"));
    m.def("is_strong_unit", [](std::int64_t level, const std::map<std::int64_t, std::int64_t>& e) {
        const StrongUnitReport r = is_strong_unit(make_quotient(level, e));
        py::dict d;
        d["square_condition"] = r.square_condition;
        d["valuation_positive_integer"] = r.valuation_positive_integer;
        d["interior_cusps_nonvanishing"] = r.interior_cusps_nonvanishing;
        d["infinite_cusp_vanishing"] = r.infinite_cusp_vanishing;
        d["passed"] = r.passed();
        return d;
    }, py::arg("level"), py::arg("exponents"));
    m.def("is_weakly_modular", [](std::int64_t level,
                                  const std::map<std::int64_t, std::int64_t>& e) {
        const WeakModularityReport r = is_weakly_modular(make_quotient(level, e));
        py::dict d;
        d["square_condition"] = r.square_condition;
        d["valuation_integral"] = r.valuation_integral;
        d["dual_valuation_integral"] = r.dual_valuation_integral;
        d["passed"] = r.passed();
        return d;
    }, py::arg("level"), py::arg("exponents"));
    m.def("eta_expand", [](std::int64_t level, const std::map<std::int64_t, std::int64_t>& e,
                           int prec) {
        return series_strings(expand(make_quotient(level, e), prec));
    }, py::arg("level"), py::arg("exponents"), py::arg("prec"));
    m.def("search_eta_units", [](std::int64_t N, std::int64_t max_weight, std::int64_t bound) {
        py::list out;
        for (const auto& f : search_eta_units(N, max_weight, bound))
            out.append(quotient_dict(f));
        return out;
    }, py::arg("N"), py::arg("max_weight"), py::arg("exp_bound"));

    // delta
    m.def("delta_unit", [](std::int64_t N) {
        const DeltaUnit u = delta_unit(N);
        py::dict d = quotient_dict(u.quotient);
        d["core_level"] = u.core.level();
        d["dilation"] = u.dilation;
        d["rho"] = u.rho;
        d["nu"] = u.nu;
        return d;
    }, py::arg("N"));
    m.def("rho", &rho, py::arg("N"));
    m.def("nu", &nu, py::arg("N"));

    // dims
    m.def("profile", [](std::int64_t N) {
        const DimensionProfile p = profile(N);
        py::dict d;
        d["level"] = p.level;
        d["mu0"] = p.mu0;
        d["mu0_2"] = p.mu0_2;
        d["mu0_3"] = p.mu0_3;
        d["c0"] = p.c0;
        d["g0"] = p.g0;
        return d;
    }, py::arg("N"));
    m.def("dim_m", &dim_M, py::arg("N"), py::arg("k"));
    m.def("dim_s", &dim_S, py::arg("N"), py::arg("k"));
    m.def("dim_e", &dim_E, py::arg("N"), py::arg("k"));
    m.def("dim_recurrence_check", &dim_recurrence_check, py::arg("N"), py::arg("k_max"));

    // forms
    m.def("eisenstein_series", [](int k2, int prec) {
        return series_strings(eisenstein_series(k2, prec));
    }, py::arg("k2"), py::arg("prec"));
    m.def("h2n", [](std::int64_t N, int prec) { return series_strings(h2n(N, prec)); },
          py::arg("N"), py::arg("prec"));
    m.def("weight4_val1", [](std::int64_t N, int prec) {
        return series_strings(weight4_val1(N, prec));
    }, py::arg("N"), py::arg("prec"));
    m.def("policy_prec", &policy_prec, py::arg("N"), py::arg("k"));
    m.def("set_precision_slack", &set_precision_slack, py::arg("slack"));
    m.def("structured_basis", [](std::int64_t N, int k, int prec) {
        return basis_dict(structured_basis(N, k, prec));
    }, py::arg("N"), py::arg("k"), py::arg("prec") = 0);
}
