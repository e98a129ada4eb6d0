#ifndef MODUNITS_DELTA_HPP
#define MODUNITS_DELTA_HPP

#include <cstdint>

#include "modunits/etaquot.hpp"

namespace modunits {

// The synthesized strong modular unit Delta_N. `core` is the unit at the base
// level of the construction (the squarefree radical, except 4 and 9 for the
// 2^r / 3^r towers) and `quotient` = dilate_quotient(core, dilation) is the
// final object at level N.
struct DeltaUnit {
    std::int64_t level;
    EtaQuotient core;
    std::int64_t dilation;
    EtaQuotient quotient;
    std::int64_t rho; // weight of Delta_N
    std::int64_t nu;  // q-valuation of Delta_N
};

DeltaUnit delta_unit(std::int64_t N);

// Closed-form weight of Delta_N.
std::int64_t rho(std::int64_t N);

// Closed-form valuation of Delta_N.
std::int64_t nu(std::int64_t N);

} // namespace modunits

#endif
