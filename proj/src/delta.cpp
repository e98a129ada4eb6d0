#include "modunits/delta.hpp"

#include <limits>
#include <utility>

namespace modunits {

namespace {

std::int64_t checked_int64(const Int& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw DomainError(std::string(what) + ": level too large for 64-bit result");
    return static_cast<std::int64_t>(v);
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct Core {
    std::int64_t level;
    std::map<std::int64_t, std::int64_t> exponents;
    std::int64_t dilation;
};

Core core_for(std::int64_t N) {
    const Factorization f = factorize(N);
    if (N == 1) return {1, {{1, 24}}, 1};
    if (f.size() == 1) {
        const auto [p, r] = f[0];
        if (p == 2)
            return r == 1 ? Core{2, {{1, -8}, {2, 16}}, 1}
                          : Core{4, {{2, -4}, {4, 8}}, ipow(2, r - 2)};
        if (p == 3)
            return r == 1 ? Core{3, {{1, -6}, {3, 18}}, 1}
                          : Core{9, {{3, -2}, {9, 6}}, ipow(3, r - 2)};
        return {p, {{1, -2}, {p, 2 * p}}, ipow(p, r - 1)};
    }
    if (f.size() == 2) {
        const auto [p1, r1] = f[0];
        const auto [p2, r2] = f[1];
        if (p1 == 2) {
            const std::int64_t p = p2;
            return {2 * p, {{1, 2}, {2, -4}, {p, -2 * p}, {2 * p, 4 * p}},
                    ipow(2, r1 - 1) * ipow(p, r2 - 1)};
        }
        return {p1 * p2, {{1, 1}, {p1, -p1}, {p2, -p2}, {p1 * p2, p1 * p2}},
                ipow(p1, r1 - 1) * ipow(p2, r2 - 1)};
    }
    // n >= 3 prime factors: exponent alpha(eps) * m on each divisor m of the
    // radical, alpha(eps) = (-1)^{n - sum eps_i}.
    std::int64_t radical = 1;
    for (const auto& [p, unused] : f) radical *= p;
    const int n = static_cast<int>(f.size());
    std::map<std::int64_t, std::int64_t> exps;
    for (std::int64_t m : divisors(radical)) {
        const int omega = static_cast<int>(factorize(m).size());
        const int sign = ((n - omega) % 2 == 0) ? 1 : -1;
        exps.emplace(m, sign * m);
    }
    return {radical, std::move(exps), N / radical};
}

} // namespace

std::int64_t rho(std::int64_t N) {
    if (N < 1) throw DomainError("rho: level must be >= 1");
    const Factorization f = factorize(N);
    if (N == 1) return 12;
    if (f.size() == 1) {
        const auto [p, r] = f[0];
        if (p == 2) return r == 1 ? 4 : 2;
        if (p == 3) return r == 1 ? 6 : 2;
        return p - 1;
    }
    Int w = 1;
    for (const auto& [p, unused] : f) w *= (p - 1);
    if (f[0].prime == 2 && f.size() == 2) w *= 2; // the 2p family keeps weight p-1
    return checked_int64(w / 2, "rho");
}

std::int64_t nu(std::int64_t N) {
    if (N < 1) throw DomainError("nu: level must be >= 1");
    const Factorization f = factorize(N);
    if (N == 1) return 1;
    if (f.size() == 1) {
        const auto [p, r] = f[0];
        if (p == 2) return r == 1 ? 1 : ipow(2, r - 2);
        if (p == 3) return r == 1 ? 2 : 2 * ipow(3, r - 2);
        return checked_int64(Int(ipow(p, r - 1)) * (Int(p) * p - 1) / 12, "nu");
    }
    if (f.size() == 2 && f[0].prime == 2) {
        const auto [p2, r2] = f[1];
        const int r1 = f[0].exponent;
        // 2^{r1-3} p^{r2-1} (p^2-1), always integral since 8 | p^2-1.
        Int v = Int(ipow(2, r1)) * ipow(p2, r2 - 1) * (Int(p2) * p2 - 1) / 8;
        return checked_int64(v, "nu");
    }
    Int v = 1;
    for (const auto& [p, r] : f) v *= Int(ipow(p, r - 1)) * (Int(p) * p - 1);
    return checked_int64(v / 24, "nu");
}

DeltaUnit delta_unit(std::int64_t N) {
    if (N < 1) throw DomainError("delta_unit: level must be >= 1");
    Core c = core_for(N);
    EtaQuotient core(c.level, c.exponents);
    EtaQuotient quotient = dilate_quotient(core, c.dilation);
    DeltaUnit unit{N, std::move(core), c.dilation, std::move(quotient), rho(N), nu(N)};
    if (unit.quotient.level() != N)
        throw InternalError("delta_unit: dilated level mismatch");
    if (weight_times_two(unit.quotient) != unit.rho)
        throw InternalError("delta_unit: weight disagrees with closed form");
    if (valuation(unit.quotient) != unit.nu)
        throw InternalError("delta_unit: valuation disagrees with closed form");
    if (!is_strong_unit(unit.quotient).passed())
        throw InternalError("delta_unit: synthesized quotient fails the strong-unit criteria");
    return unit;
}

} // namespace modunits
