// Acceptance suite: every criterion is exact-arithmetic; one line per
// criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "modunits/delta.hpp"
#include "modunits/dims.hpp"
#include "modunits/forms.hpp"

using namespace modunits;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && seconds > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("[%s] criterion %d (%.2fs): %s%s%s\n", ok ? "PASS" : "FAIL", number,
                seconds, what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

struct TableRow {
    std::int64_t N;
    std::map<std::int64_t, std::int64_t> exponents;
    std::int64_t rho;
    std::int64_t nu;
};

const std::vector<TableRow> kDeltaTable = {
    {2, {{1, -8}, {2, 16}}, 4, 1},
    {3, {{1, -6}, {3, 18}}, 6, 2},
    {4, {{2, -4}, {4, 8}}, 2, 1},
    {5, {{1, -2}, {5, 10}}, 4, 2},
    {6, {{1, 2}, {2, -4}, {3, -6}, {6, 12}}, 2, 2},
    {7, {{1, -2}, {7, 14}}, 6, 4},
    {8, {{4, -4}, {8, 8}}, 2, 2},
    {9, {{3, -2}, {9, 6}}, 2, 2},
    {10, {{1, 2}, {2, -4}, {5, -10}, {10, 20}}, 4, 6},
    {15, {{1, 1}, {3, -3}, {5, -5}, {15, 15}}, 4, 8},
    {35, {{1, 1}, {5, -5}, {7, -7}, {35, 35}}, 12, 48},
    {36, {{6, 2}, {12, -4}, {18, -6}, {36, 12}}, 2, 12},
    {60, {{2, -1}, {4, 2}, {6, 3}, {10, 5}, {12, -6}, {20, -10}, {30, -15}, {60, 30}}, 4, 48},
    {210,
     {{1, 1},     {2, -2},   {3, -3},   {5, -5},   {6, 6},    {7, -7},
      {10, 10},   {14, 14},  {15, 15},  {21, 21},  {30, -30}, {35, 35},
      {42, -42},  {70, -70}, {105, -105}, {210, 210}},
     24, 1152},
};

bool delta_table(std::string& detail) {
    for (const auto& row : kDeltaTable) {
        const DeltaUnit unit = delta_unit(row.N);
        if (unit.quotient != EtaQuotient(row.N, row.exponents) || unit.rho != row.rho ||
            unit.nu != row.nu) {
            detail = "mismatch at N = " + std::to_string(row.N);
            return false;
        }
    }
    return true;
}

bool strong_unit_certification(std::string& detail) {
    for (std::int64_t N = 1; N <= 300; ++N) {
        const DeltaUnit unit = delta_unit(N);
        const StrongUnitReport r = is_strong_unit(unit.quotient);
        if (!r.square_condition || !r.valuation_positive_integer ||
            !r.interior_cusps_nonvanishing || !r.infinite_cusp_vanishing) {
            detail = "condition failed at N = " + std::to_string(N);
            return false;
        }
    }
    return true;
}

bool golden_expansions(std::string& detail) {
    const QSeries delta1 = expand(delta_unit(1).quotient, 4);
    if (delta1 != QSeries({Rational(0), Rational(1), Rational(-24), Rational(252)})) {
        detail = "Delta_1 expansion";
        return false;
    }
    const QSeries h3 = h2n(3, 2);
    if (h3.coeff(0) != 1 || h3.coeff(1) != 12) {
        detail = "h2n(3)";
        return false;
    }
    const QSeries e4 = eisenstein_series(4, 2);
    if (e4.coeff(0) != 1 || e4.coeff(1) != 240) {
        detail = "E4";
        return false;
    }
    return true;
}

bool dimension_recurrence(std::string& detail) {
    for (std::int64_t N = 1; N <= 100; ++N) {
        if (!dim_recurrence_check(N, 24)) {
            detail = "recurrence failed at N = " + std::to_string(N);
            return false;
        }
    }
    return true;
}

bool dimension_anchors(std::string& detail) {
    if (dim_M(2, 1) != 1 || dim_M(3, 2) != 2 || dim_M(3, 3) != 3) {
        detail = "quoted anchor";
        return false;
    }
    for (int k = 1; k <= 20; ++k) {
        if (dim_M(2, k) != 1 + k / 2) {
            detail = "closed form at k = " + std::to_string(k);
            return false;
        }
    }
    return true;
}

bool structured_bases(std::string& detail) {
    for (std::int64_t N = 1; N <= 10; ++N) {
        const std::int64_t half_rho = rho(N) / 2;
        const std::int64_t nu_n = nu(N);
        for (int k = 1; k <= 12; ++k) {
            TriangularBasis basis{0, 0, 0, {}};
            try {
                basis = structured_basis(N, k);
            } catch (const RankDeficient& e) {
                detail = "rank deficiency at (N,k) = (" + std::to_string(N) + "," +
                         std::to_string(k) + "): " + e.what();
                return false;
            }
            if (static_cast<std::int64_t>(basis.elements.size()) != dim_M(N, k)) {
                detail = "wrong dimension at (" + std::to_string(N) + "," +
                         std::to_string(k) + ")";
                return false;
            }
            int prev = -1;
            for (const auto& e : basis.elements) {
                const auto v = e.series.valuation();
                if (!v || *v <= prev) {
                    detail = "valuations not strictly increasing at (" +
                             std::to_string(N) + "," + std::to_string(k) + ")";
                    return false;
                }
                prev = *v;
            }
            if (k >= half_rho + 1) {
                const std::int64_t count = std::min<std::int64_t>(
                    nu_n, static_cast<std::int64_t>(basis.elements.size()));
                for (std::int64_t r = 0; r < count; ++r) {
                    if (basis.elements[static_cast<std::size_t>(r)].series.valuation() !=
                        static_cast<int>(r)) {
                        detail = "staircase broken at (" + std::to_string(N) + "," +
                                 std::to_string(k) + ")";
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

bool structure_round_trip(std::string& detail) {
    for (std::int64_t N = 1; N <= 10; ++N) {
        const std::int64_t half_rho = rho(N) / 2;
        const std::int64_t nu_n = nu(N);
        for (int k = 1; k <= 12; ++k) {
            if (k - half_rho < 1) continue;
            const TriangularBasis basis = structured_basis(N, k);
            const QSeries delta_exp = expand(delta_unit(N).quotient, basis.prec);
            std::vector<FormExpansion> quotients;
            for (const auto& e : basis.elements) {
                if (*e.series.valuation() < nu_n) continue;
                quotients.push_back(FormExpansion{
                    N, 2 * (k - static_cast<int>(half_rho)), div(e.series, delta_exp),
                    e.label});
            }
            const TriangularBasis lower =
                structured_basis(N, k - static_cast<int>(half_rho));
            if (quotients.size() != lower.elements.size()) {
                detail = "quotient count mismatch at (" + std::to_string(N) + "," +
                         std::to_string(k) + ")";
                return false;
            }
            if (quotients.empty()) continue;
            const TriangularBasis reduced =
                echelonize(std::move(quotients), static_cast<int>(lower.elements.size()));
            for (std::size_t i = 0; i < lower.elements.size(); ++i) {
                if (reduced.elements[i].series.valuation() !=
                    lower.elements[i].series.valuation()) {
                    detail = "valuation sequence mismatch at (" + std::to_string(N) + "," +
                             std::to_string(k) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

bool minimality_searches(std::string& detail) {
    if (!search_eta_units(2, 2, 24).empty()) {
        detail = "found a weight-2 unit at level 2";
        return false;
    }
    if (!search_eta_units(3, 5, 24).empty()) {
        detail = "found a unit of weight < 6 at level 3";
        return false;
    }
    return true;
}

bool uniqueness_closure(std::string& detail) {
    for (std::int64_t N = 1; N <= 20; ++N) {
        const EtaQuotient f = delta_unit(N).quotient;
        std::map<std::int64_t, std::int64_t> doubled;
        for (const auto& [m, a] : f.exponents()) doubled[m] = 2 * a;
        const EtaQuotient square(N, doubled);
        if (!is_strong_unit(square).passed()) {
            detail = "doubled exponents fail at N = " + std::to_string(N);
            return false;
        }
        const int prec = 2 * static_cast<int>(nu(N)) + 6;
        const QSeries f_exp = expand(f, prec);
        if (expand(square, prec) != mul(f_exp, f_exp)) {
            detail = "expansion square mismatch at N = " + std::to_string(N);
            return false;
        }
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "Delta-table reproduction for N in {2..10,15,35,36,60,210}", 1.0,
              delta_table);
    criterion(2, "strong-unit certification for N <= 300", 10.0, strong_unit_certification);
    criterion(3, "golden q-expansions (Delta_1, h2n(3), E4)", 0, golden_expansions);
    criterion(4, "dimension recurrence for N <= 100, k <= 24", 5.0, dimension_recurrence);
    criterion(5, "quoted dimension anchors and the Gamma_0(2) closed form", 0,
              dimension_anchors);
    criterion(6, "structured bases for N <= 10, k <= 12 (dim + staircase)", 120.0,
              structured_bases);
    criterion(7, "structure round-trip through division by Delta_N", 0,
              structure_round_trip);
    criterion(8, "minimality searches at levels 2 and 3 (bound 24)", 60.0,
              minimality_searches);
    criterion(9, "uniqueness-theorem closure: squared Delta_N for N <= 20", 0,
              uniqueness_closure);
    if (g_failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    }
    return g_failures;
}
