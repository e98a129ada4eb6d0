#include "modunits/etaquot.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace modunits {

EtaQuotient::EtaQuotient(std::int64_t level, std::map<std::int64_t, std::int64_t> exponents)
    : level_(level) {
    if (level < 1) throw DomainError("EtaQuotient: level must be >= 1");
    for (const auto& [m, a] : exponents) {
        if (m < 1 || level % m != 0)
            throw DomainError("EtaQuotient: exponent key " + std::to_string(m) +
                              " does not divide level " + std::to_string(level));
        if (a != 0) exponents_.emplace(m, a);
    }
}

std::int64_t EtaQuotient::exponent(std::int64_t m) const {
    auto it = exponents_.find(m);
    return it == exponents_.end() ? 0 : it->second;
}

std::int64_t weight_times_two(const EtaQuotient& f) {
    std::int64_t s = 0;
    for (const auto& [m, a] : f.exponents()) s += a;
    if (s % 2 != 0) throw DomainError("weight_times_two: odd exponent sum");
    return s / 2;
}

Rational valuation(const EtaQuotient& f) {
    Int s = 0;
    for (const auto& [m, a] : f.exponents()) s += Int(m) * a;
    return Rational(s, 24);
}

Rational cusp_order(const EtaQuotient& f, std::int64_t c) {
    if (c < 1 || c > f.level())
        throw DomainError("cusp_order: c must lie in 1..N");
    Rational s = 0;
    for (const auto& [m, a] : f.exponents()) {
        const std::int64_t g = std::gcd(c, m);
        s += Rational(Int(g) * g * a, m);
    }
    return Rational(f.level(), 24) * s;
}

CuspOrderReport cusp_orders(const EtaQuotient& f) {
    CuspOrderReport report{f.level(), {}};
    for (std::int64_t c : divisors(f.level()))
        report.entries.push_back({c, cusp_order(f, c)});
    return report;
}

namespace {

// prod_{m|N} (N/m)^{a_m} is a rational square iff every prime exponent in its
// factorization is even; decided exactly, never numerically.
bool square_condition(const EtaQuotient& f) {
    for (const auto& [p, unused] : factorize(f.level())) {
        Int exp_p = 0;
        for (const auto& [m, a] : f.exponents()) {
            std::int64_t mp = f.level() / m;
            while (mp % p == 0) {
                exp_p += a;
                mp /= p;
            }
        }
        if (exp_p % 2 != 0) return false;
    }
    return true;
}

Rational dual_valuation(const EtaQuotient& f) {
    Int s = 0;
    for (const auto& [m, a] : f.exponents()) s += Int(f.level() / m) * a;
    return Rational(s, 24);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

} // namespace

WeakModularityReport is_weakly_modular(const EtaQuotient& f) {
    WeakModularityReport report;
    report.valuation = valuation(f);
    report.dual_valuation = dual_valuation(f);
    report.square_condition = square_condition(f);
    report.valuation_integral = is_integer(report.valuation);
    report.dual_valuation_integral = is_integer(report.dual_valuation);
    return report;
}

StrongUnitReport is_strong_unit(const EtaQuotient& f) {
    StrongUnitReport report;
    report.valuation = valuation(f);
    report.square_condition = square_condition(f);
    report.valuation_positive_integer = is_integer(report.valuation) && report.valuation > 0;
    report.interior_cusps_nonvanishing = true;
    for (std::int64_t c : divisors(f.level())) {
        if (c == f.level()) continue;
        if (cusp_order(f, c) != 0) {
            report.interior_cusps_nonvanishing = false;
            break;
        }
    }
    report.infinite_cusp_vanishing = cusp_order(f, f.level()) > 0;
    return report;
}

QSeries expand(const EtaQuotient& f, int prec) {
    if (prec < 1) throw DomainError("expand: precision must be >= 1");
    const Rational nu = valuation(f);
    if (!is_integer(nu)) throw DomainError("expand: fractional valuation");
    if (nu < 0) throw DomainError("expand: negative valuation");
    const Int nu_int = numerator(nu);
    if (nu_int >= prec) return QSeries(prec); // zero up to this precision
    const int v = static_cast<int>(nu_int);
    QSeries body = QSeries::one(prec - v);
    for (const auto& [m, a] : f.exponents()) body = mul(body, euler_factor(m, a, prec - v));
    std::vector<Rational> out(static_cast<std::size_t>(prec), Rational(0));
    for (int i = 0; i + v < prec; ++i) out[static_cast<std::size_t>(i + v)] = body.coeff(i);
    return QSeries(std::move(out));
}

EtaQuotient dilate_quotient(const EtaQuotient& f, std::int64_t n) {
    if (n < 1) throw DomainError("dilate_quotient: factor must be >= 1");
    std::map<std::int64_t, std::int64_t> exps;
    for (const auto& [m, a] : f.exponents()) exps.emplace(m * n, a);
    return EtaQuotient(f.level() * n, std::move(exps));
}

std::vector<EtaQuotient> search_eta_units(std::int64_t N, std::int64_t max_weight,
                                          std::int64_t exp_bound) {
    if (N < 2) throw DomainError("search_eta_units: level must be >= 2");
    if (max_weight < 1 || exp_bound < 1)
        throw DomainError("search_eta_units: bounds must be >= 1");
    const auto ds = divisors(N);
    std::vector<std::int64_t> vec(ds.size(), -exp_bound);
    std::vector<EtaQuotient> hits;
    bool done = false;
    while (!done) {
        std::int64_t sum = std::accumulate(vec.begin(), vec.end(), std::int64_t{0});
        if (sum % 2 == 0 && sum / 2 <= max_weight) {
            std::map<std::int64_t, std::int64_t> exps;
            for (std::size_t i = 0; i < ds.size(); ++i) exps.emplace(ds[i], vec[i]);
            EtaQuotient f(N, std::move(exps));
            if (is_strong_unit(f).passed()) hits.push_back(std::move(f));
        }
        // odometer
        done = true;
        for (std::size_t i = 0; i < vec.size(); ++i) {
            if (vec[i] < exp_bound) {
                ++vec[i];
                std::fill(vec.begin(), vec.begin() + static_cast<std::ptrdiff_t>(i),
                          -exp_bound);
                done = false;
                break;
            }
        }
    }
    std::sort(hits.begin(), hits.end(), [](const EtaQuotient& a, const EtaQuotient& b) {
        const auto wa = weight_times_two(a), wb = weight_times_two(b);
        if (wa != wb) return wa < wb;
        const auto va = valuation(a), vb = valuation(b);
        if (va != vb) return va < vb;
        return a.exponents() < b.exponents();
    });
    return hits;
}

std::string to_string(const EtaQuotient& f) {
    if (f.exponents().empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, a] : f.exponents()) {
        if (!first) os << " * ";
        first = false;
        os << "eta(";
        if (m > 1) os << m << "*";
        os << "tau)";
        if (a != 1) os << "^" << a;
    }
    return os.str();
}

} // namespace modunits
