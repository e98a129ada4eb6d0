#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modunits/json_io.hpp"

namespace {

using namespace modunits;

// Runtime configuration; the defaults reproduce the acceptance-suite outputs.
struct Config {
    int precision_slack = 2;
    enum class Format { text, json } output_format = Format::text;
    int parallelism = 1;
};

void print_quotient_report(const EtaQuotient& f) {
    const StrongUnitReport r = is_strong_unit(f);
    std::cout << "eta-quotient at level " << f.level() << ": " << to_string(f) << "\n";
    std::int64_t exponent_sum = 0;
    for (const auto& [m, a] : f.exponents()) exponent_sum += a;
    if (exponent_sum % 2 == 0)
        std::cout << "  weight 2k = " << weight_times_two(f) << "\n";
    else
        std::cout << "  weight 2k = undefined (odd exponent sum)\n";
    std::cout << "  valuation nu = " << to_string(valuation(f)) << "\n";
    std::cout << "  (i)   product (N/m)^a_m is a rational square : "
              << (r.square_condition ? "PASS" : "FAIL") << "\n";
    std::cout << "  (ii)  valuation a positive integer           : "
              << (r.valuation_positive_integer ? "PASS" : "FAIL") << "\n";
    std::cout << "  (iii) order zero at every cusp c < N         : "
              << (r.interior_cusps_nonvanishing ? "PASS" : "FAIL") << "\n";
    std::cout << "        order positive at the infinite cusp    : "
              << (r.infinite_cusp_vanishing ? "PASS" : "FAIL") << "\n";
    for (const auto& entry : cusp_orders(f).entries)
        std::cout << "        ord(1/" << entry.c << ") = " << to_string(entry.order) << "\n";
    std::cout << (r.passed() ? "PASS" : "FAIL") << ": "
              << (r.passed() ? "strong modular unit" : "not a strong modular unit")
              << " at level " << f.level() << "\n";
}

EtaQuotient parse_quotient(std::int64_t level, const std::vector<std::string>& terms) {
    std::map<std::int64_t, std::int64_t> exps;
    for (const std::string& t : terms) {
        const auto colon = t.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("exponents", "expected m:a, got '" + t + "'");
        try {
            const std::int64_t m = std::stoll(t.substr(0, colon));
            const std::int64_t a = std::stoll(t.substr(colon + 1));
            exps[m] += a;
        } catch (const std::exception&) {
            throw CLI::ValidationError("exponents", "expected m:a, got '" + t + "'");
        }
    }
    return EtaQuotient(level, std::move(exps));
}

int run(int argc, char** argv) {
    CLI::App app{"Strong modular units, dimension formulas and triangular bases "
                 "for M_2k(Gamma_0(N)), in exact rational arithmetic"};
    app.require_subcommand(1);
    Config config;
    bool json = false;

    if (const char* slack = std::getenv("MODUNITS_PREC_SLACK")) {
        try {
            config.precision_slack = std::stoi(slack);
        } catch (const std::exception&) {
            std::cerr << "invalid MODUNITS_PREC_SLACK value '" << slack << "'\n";
            return 1;
        }
    }
    if (config.parallelism < 1) {
        std::cerr << "parallelism must be >= 1\n";
        return 1;
    }
    try {
        set_precision_slack(config.precision_slack);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::int64_t level = 0;
    int k = 1, k_max = 8;
    std::optional<int> expand_prec;
    int basis_prec = 0;
    std::int64_t max_weight = 4, exp_bound = 8;
    std::vector<std::string> exponent_terms;

    auto* delta_cmd = app.add_subcommand("delta", "Synthesize Delta_N with rho and nu");
    delta_cmd->add_option("N", level, "level")->required()->check(CLI::PositiveNumber);
    auto* expand_opt = delta_cmd->add_option("--expand", "also print the q-expansion to this precision");
    expand_opt->check(CLI::PositiveNumber);
    delta_cmd->add_flag("--json", json, "JSON output");

    auto* dim_cmd = app.add_subcommand("dim", "Dimensions of M_2k, S_2k, E_2k");
    dim_cmd->add_option("N", level, "level")->required()->check(CLI::PositiveNumber);
    dim_cmd->add_option("k", k, "half-weight k (weight 2k)")->required()->check(CLI::PositiveNumber);
    dim_cmd->add_flag("--json", json, "JSON output");

    auto* table_cmd = app.add_subcommand("dim-table", "Dimension table for k = 1..kmax");
    table_cmd->add_option("N", level, "level")->required()->check(CLI::PositiveNumber);
    table_cmd->add_option("--kmax", k_max, "largest half-weight")->check(CLI::PositiveNumber);
    table_cmd->add_flag("--json", json, "JSON output");

    auto* basis_cmd = app.add_subcommand("basis", "Unitary upper triangular basis of M_2k");
    basis_cmd->add_option("N", level, "level")->required()->check(CLI::PositiveNumber);
    basis_cmd->add_option("k", k, "half-weight k (weight 2k)")->required()->check(CLI::PositiveNumber);
    basis_cmd->add_option("--prec", basis_prec, "working precision (default: policy bound)")
        ->check(CLI::PositiveNumber);
    basis_cmd->add_flag("--json", json, "JSON output");

    auto* check_cmd = app.add_subcommand("check-unit", "Strong-unit conditions for an eta-quotient");
    check_cmd->add_option("--level", level, "level N")->required()->check(CLI::PositiveNumber);
    check_cmd->add_option("exponents", exponent_terms,
                          "terms m:a (e.g. 1:-8 2:16); empty checks Delta_N itself");
    check_cmd->add_flag("--json", json, "JSON output");

    auto* search_cmd = app.add_subcommand("search-units", "Exhaustive strong-unit search in an exponent box");
    search_cmd->add_option("N", level, "level")->required()->check(CLI::Range(std::int64_t{2}, std::numeric_limits<std::int64_t>::max()));
    search_cmd->add_option("--max-weight", max_weight, "largest weight 2k to keep")->check(CLI::PositiveNumber);
    search_cmd->add_option("--bound", exp_bound, "exponent box |a_m| <= bound")->check(CLI::PositiveNumber);
    search_cmd->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    config.output_format = json ? Config::Format::json : Config::Format::text;
    const bool as_json = config.output_format == Config::Format::json;

    try {
        if (delta_cmd->parsed()) {
            if (expand_opt->count() > 0) expand_prec = expand_opt->as<int>();
            const DeltaUnit unit = delta_unit(level);
            if (as_json) {
                std::cout << delta_json(unit, expand_prec).dump(2) << "\n";
            } else {
                std::cout << "Delta_" << unit.level << " = " << to_string(unit.quotient) << "\n";
                std::cout << "  weight rho = " << unit.rho << "\n";
                std::cout << "  valuation nu = " << unit.nu << "\n";
                if (unit.dilation > 1)
                    std::cout << "  built from level " << unit.core.level()
                              << " core dilated by " << unit.dilation << "\n";
                if (expand_prec)
                    std::cout << "  expansion: " << to_string(expand(unit.quotient, *expand_prec))
                              << "\n";
            }
        } else if (dim_cmd->parsed()) {
            if (as_json) {
                std::cout << dim_json(level, k).dump(2) << "\n";
            } else {
                std::cout << "N = " << level << ", k = " << k << " (weight " << 2 * k << ")\n";
                std::cout << "  dim M = " << dim_M(level, k) << "\n";
                std::cout << "  dim S = " << dim_S(level, k) << "\n";
                std::cout << "  dim E = " << dim_E(level, k) << "\n";
            }
        } else if (table_cmd->parsed()) {
            if (as_json) {
                std::cout << dim_table_json(level, k_max).dump(2) << "\n";
            } else {
                std::cout << "N = " << level << " (rho = " << rho(level)
                          << ", nu = " << nu(level) << ")\n";
                std::cout << "   k  dim M  dim S  dim E\n";
                for (int kk = 1; kk <= k_max; ++kk) {
                    std::printf("%4d  %5lld  %5lld  %5lld\n", kk,
                                static_cast<long long>(dim_M(level, kk)),
                                static_cast<long long>(dim_S(level, kk)),
                                static_cast<long long>(dim_E(level, kk)));
                }
            }
        } else if (basis_cmd->parsed()) {
            const TriangularBasis basis = structured_basis(level, k, basis_prec);
            if (as_json) {
                std::cout << basis_json(basis).dump(2) << "\n";
            } else {
                std::cout << "basis of M_" << basis.weight << "(Gamma_0(" << basis.level
                          << ")), dim " << basis.elements.size() << ", prec " << basis.prec
                          << "\n";
                for (std::size_t i = 0; i < basis.elements.size(); ++i) {
                    const auto& e = basis.elements[i];
                    std::cout << "  [" << i << "] nu=" << e.series.valuation().value_or(-1)
                              << "  " << to_string(e.series) << "\n";
                    std::cout << "      from " << e.label << "\n";
                }
            }
        } else if (check_cmd->parsed()) {
            const EtaQuotient f = exponent_terms.empty()
                                      ? delta_unit(level).quotient
                                      : parse_quotient(level, exponent_terms);
            if (as_json)
                std::cout << check_unit_json(f).dump(2) << "\n";
            else
                print_quotient_report(f);
        } else if (search_cmd->parsed()) {
            if (as_json) {
                std::cout << search_units_json(level, max_weight, exp_bound).dump(2) << "\n";
            } else {
                const auto hits = search_eta_units(level, max_weight, exp_bound);
                std::cout << hits.size() << " strong unit(s) at level " << level
                          << " with weight <= " << max_weight << ", |a_m| <= " << exp_bound
                          << "\n";
                for (const auto& f : hits) {
                    std::cout << "  weight " << weight_times_two(f) << ", nu "
                              << to_string(valuation(f)) << ": " << to_string(f) << "\n";
                }
            }
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const PrecisionInsufficient& e) {
        std::cerr << "error: " << e.what() << " (raise --prec or the slack)\n";
        return 1;
    } catch (const RankDeficient& e) {
        std::cerr << "error: " << e.what()
                  << " (spanning set does not generate the space at this level)\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
