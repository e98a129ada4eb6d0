#ifndef MODUNITS_DIMS_HPP
#define MODUNITS_DIMS_HPP

#include <cstdint>

#include "modunits/arith.hpp"

namespace modunits {

// Level invariants entering the dimension formulas: the index mu0 of
// Gamma_0(N), the elliptic-point counts mu0_2 / mu0_3, the cusp count c0 and
// the genus g0 of X_0(N).
struct DimensionProfile {
    std::int64_t level;
    std::int64_t mu0;
    std::int64_t mu0_2;
    std::int64_t mu0_3;
    std::int64_t c0;
    std::int64_t g0;
    friend bool operator==(const DimensionProfile&, const DimensionProfile&) = default;
};

DimensionProfile profile(std::int64_t N);

// dim M_{2k}(Gamma_0(N)) = (2k-1)(g0-1) + k c0 + mu0_2 floor(k/2) + mu0_3 floor(2k/3).
std::int64_t dim_M(std::int64_t N, int k);

// Cusp-form dimension: g0 at k = 1, the usual closed form for k >= 2.
std::int64_t dim_S(std::int64_t N, int k);

// Eisenstein dimension: c0 - 1 at k = 1, c0 otherwise.
std::int64_t dim_E(std::int64_t N, int k);

// Verifies dim M_{2k+rho_N} - dim M_{2k} = nu(Delta_N) for 1 <= k <= k_max.
bool dim_recurrence_check(std::int64_t N, int k_max);

} // namespace modunits

#endif
