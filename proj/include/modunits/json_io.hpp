#ifndef MODUNITS_JSON_IO_HPP
#define MODUNITS_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "modunits/delta.hpp"
#include "modunits/dims.hpp"
#include "modunits/etaquot.hpp"
#include "modunits/forms.hpp"

namespace modunits {

// All CLI-facing documents carry a top-level "schema": 1. Rationals are
// rendered as exact "a/b" strings; integers stay JSON numbers.
using Json = nlohmann::ordered_json;

Json quotient_json(const EtaQuotient& f);
Json delta_json(const DeltaUnit& unit, std::optional<int> expand_prec);
Json profile_json(const DimensionProfile& profile);
Json dim_json(std::int64_t N, int k);
Json dim_table_json(std::int64_t N, int k_max);
Json basis_json(const TriangularBasis& basis);
Json check_unit_json(const EtaQuotient& f);
Json search_units_json(std::int64_t N, std::int64_t max_weight, std::int64_t exp_bound);

} // namespace modunits

#endif
