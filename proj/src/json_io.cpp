#include "modunits/json_io.hpp"

namespace modunits {

Json quotient_json(const EtaQuotient& f) {
    Json exps = Json::object();
    for (const auto& [m, a] : f.exponents()) exps[std::to_string(m)] = a;
    return Json{{"level", f.level()}, {"exponents", std::move(exps)}};
}

Json delta_json(const DeltaUnit& unit, std::optional<int> expand_prec) {
    Json j{{"schema", 1}, {"N", unit.level}};
    j["exponents"] = quotient_json(unit.quotient)["exponents"];
    j["rho"] = unit.rho;
    j["nu"] = unit.nu;
    j["core_level"] = unit.core.level();
    j["dilation"] = unit.dilation;
    if (expand_prec) j["expansion"] = to_string(expand(unit.quotient, *expand_prec));
    return j;
}

Json profile_json(const DimensionProfile& profile) {
    return Json{{"level", profile.level}, {"mu0", profile.mu0},
                {"mu0_2", profile.mu0_2}, {"mu0_3", profile.mu0_3},
                {"c0", profile.c0},       {"g0", profile.g0}};
}

Json dim_json(std::int64_t N, int k) {
    return Json{{"schema", 1},
                {"N", N},
                {"k", k},
                {"dim_M", dim_M(N, k)},
                {"dim_S", dim_S(N, k)},
                {"dim_E", dim_E(N, k)},
                {"profile", profile_json(profile(N))}};
}

Json dim_table_json(std::int64_t N, int k_max) {
    Json rows = Json::array();
    for (int k = 1; k <= k_max; ++k) {
        rows.push_back(Json{{"k", k},
                            {"dim_M", dim_M(N, k)},
                            {"dim_S", dim_S(N, k)},
                            {"dim_E", dim_E(N, k)}});
    }
    return Json{{"schema", 1}, {"N", N}, {"rows", std::move(rows)},
                {"profile", profile_json(profile(N))}};
}

Json basis_json(const TriangularBasis& basis) {
    Json elements = Json::array();
    for (const auto& e : basis.elements) {
        Json coeffs = Json::array();
        for (const auto& c : e.series.coeffs()) coeffs.push_back(to_string(c));
        elements.push_back(Json{{"label", e.label},
                                {"valuation", e.series.valuation().value_or(-1)},
                                {"coefficients", std::move(coeffs)}});
    }
    return Json{{"schema", 1},
                {"level", basis.level},
                {"weight", basis.weight},
                {"prec", basis.prec},
                {"elements", std::move(elements)}};
}

Json check_unit_json(const EtaQuotient& f) {
    const StrongUnitReport strong = is_strong_unit(f);
    const WeakModularityReport weak = is_weakly_modular(f);
    Json orders = Json::array();
    for (const auto& entry : cusp_orders(f).entries) {
        orders.push_back(Json{{"c", entry.c}, {"order", to_string(entry.order)}});
    }
    Json j{{"schema", 1}, {"quotient", quotient_json(f)}};
    std::int64_t exponent_sum = 0;
    for (const auto& [m, a] : f.exponents()) exponent_sum += a;
    if (exponent_sum % 2 == 0) j["weight"] = weight_times_two(f);
    j["valuation"] = to_string(valuation(f));
    j["weakly_modular"] = Json{{"square_condition", weak.square_condition},
                               {"valuation_integral", weak.valuation_integral},
                               {"dual_valuation_integral", weak.dual_valuation_integral},
                               {"passed", weak.passed()}};
    j["strong_unit"] = Json{{"square_condition", strong.square_condition},
                            {"valuation_positive_integer", strong.valuation_positive_integer},
                            {"interior_cusps_nonvanishing", strong.interior_cusps_nonvanishing},
                            {"infinite_cusp_vanishing", strong.infinite_cusp_vanishing},
                            {"passed", strong.passed()}};
    j["cusp_orders"] = std::move(orders);
    return j;
}

Json search_units_json(std::int64_t N, std::int64_t max_weight, std::int64_t exp_bound) {
    Json hits = Json::array();
    for (const auto& f : search_eta_units(N, max_weight, exp_bound)) {
        hits.push_back(Json{{"quotient", quotient_json(f)},
                            {"weight", weight_times_two(f)},
                            {"valuation", to_string(valuation(f))},
                            {"text", to_string(f)}});
    }
    return Json{{"schema", 1}, {"N", N}, {"max_weight", max_weight},
                {"exp_bound", exp_bound}, {"units", std::move(hits)}};
}

} // namespace modunits
