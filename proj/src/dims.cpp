#include "modunits/dims.hpp"

#include <numeric>

#include "modunits/delta.hpp"

namespace modunits {

DimensionProfile profile(std::int64_t N) {
    if (N < 1) throw DomainError("profile: level must be >= 1");
    const Factorization f = factorize(N);
    std::int64_t mu0 = 1;
    for (const auto& [p, e] : f) {
        std::int64_t pe1 = 1;
        for (int i = 0; i < e - 1; ++i) pe1 *= p;
        mu0 *= pe1 * p + pe1;
    }
    std::int64_t mu0_2 = 1;
    if (N % 4 == 0) {
        mu0_2 = 0;
    } else {
        for (const auto& [p, e] : f) mu0_2 *= 1 + kronecker_minus4(p);
    }
    std::int64_t mu0_3 = 1;
    if (N % 2 == 0 || N % 9 == 0) {
        mu0_3 = 0;
    } else {
        for (const auto& [p, e] : f) mu0_3 *= 1 + kronecker_minus3(p);
    }
    std::int64_t c0 = 0;
    for (std::int64_t d : divisors(N)) c0 += euler_phi(std::gcd(d, N / d));
    // The genus must come out a nonnegative integer; anything else is a bug,
    // never truncated away.
    const Rational g0 = Rational(1) + Rational(mu0, 12) - Rational(mu0_2, 4) -
                        Rational(mu0_3, 3) - Rational(c0, 2);
    if (denominator(g0) != 1 || g0 < 0)
        throw InternalError("profile: non-integral or negative genus at level " +
                            std::to_string(N));
    return {N, mu0, mu0_2, mu0_3, c0, static_cast<std::int64_t>(numerator(g0))};
}

std::int64_t dim_M(std::int64_t N, int k) {
    if (k < 1) throw DomainError("dim_M: k must be >= 1");
    const DimensionProfile pr = profile(N);
    return (2 * std::int64_t{k} - 1) * (pr.g0 - 1) + std::int64_t{k} * pr.c0 +
           pr.mu0_2 * (k / 2) + pr.mu0_3 * (2 * k / 3);
}

std::int64_t dim_S(std::int64_t N, int k) {
    if (k < 1) throw DomainError("dim_S: k must be >= 1");
    const DimensionProfile pr = profile(N);
    if (k == 1) return pr.g0;
    return (2 * std::int64_t{k} - 1) * (pr.g0 - 1) + (std::int64_t{k} - 1) * pr.c0 +
           pr.mu0_2 * (k / 2) + pr.mu0_3 * (2 * k / 3);
}

std::int64_t dim_E(std::int64_t N, int k) {
    if (k < 1) throw DomainError("dim_E: k must be >= 1");
    const std::int64_t c0 = profile(N).c0;
    return k == 1 ? c0 - 1 : c0;
}

bool dim_recurrence_check(std::int64_t N, int k_max) {
    if (k_max < 1) throw DomainError("dim_recurrence_check: k_max must be >= 1");
    const std::int64_t stride = rho(N) / 2;
    const std::int64_t expected = nu(N);
    for (int k = 1; k <= k_max; ++k) {
        if (dim_M(N, k + static_cast<int>(stride)) - dim_M(N, k) != expected)
            return false;
    }
    return true;
}

} // namespace modunits
