#include <doctest.h>

#include "modunits/json_io.hpp"

using namespace modunits;

TEST_CASE("delta document") {
    const Json j = delta_json(delta_unit(15), std::nullopt);
    CHECK(j["schema"] == 1);
    CHECK(j["N"] == 15);
    CHECK(j["rho"] == 4);
    CHECK(j["nu"] == 8);
    CHECK(j["exponents"] == Json({{"1", 1}, {"3", -3}, {"5", -5}, {"15", 15}}));
    CHECK_FALSE(j.contains("expansion"));

    const Json with_exp = delta_json(delta_unit(1), 4);
    CHECK(with_exp["expansion"] == "q - 24*q^2 + 252*q^3 + O(q^4)");
}

TEST_CASE("dim documents") {
    const Json j = dim_json(3, 3);
    CHECK(j["schema"] == 1);
    CHECK(j["dim_M"] == 3);
    CHECK(j["dim_S"] == 1);
    CHECK(j["dim_E"] == 2);
    CHECK(j["profile"]["c0"] == 2);

    const Json table = dim_table_json(5, 8);
    REQUIRE(table["rows"].size() == 8);
    // constant column difference at stride rho/2 = ν(Delta_5) = 2
    for (int k = 1; k + 2 <= 8; ++k) {
        const auto lo = table["rows"][k - 1]["dim_M"].get<std::int64_t>();
        const auto hi = table["rows"][k + 1]["dim_M"].get<std::int64_t>();
        CHECK(hi - lo == 2);
    }
}

TEST_CASE("basis document round-trips through its schema") {
    const Json j = basis_json(structured_basis(3, 1));
    CHECK(j["schema"] == 1);
    CHECK(j["level"] == 3);
    CHECK(j["weight"] == 2);
    REQUIRE(j["elements"].size() == 1);
    CHECK(j["elements"][0]["valuation"] == 0);
    const auto coeffs = j["elements"][0]["coefficients"];
    CHECK(coeffs[0] == "1");
    CHECK(coeffs[1] == "12");
    CHECK(coeffs[2] == "36");
    // parse back and check structural integrity
    const Json parsed = Json::parse(j.dump());
    CHECK(parsed == j);
    CHECK(parsed["elements"].size() ==
          static_cast<std::size_t>(dim_M(parsed["level"].get<std::int64_t>(),
                                         parsed["weight"].get<int>() / 2)));
}

TEST_CASE("check-unit document") {
    const Json pass = check_unit_json(EtaQuotient(2, {{1, -8}, {2, 16}}));
    CHECK(pass["schema"] == 1);
    CHECK(pass["strong_unit"]["passed"] == true);
    CHECK(pass["weight"] == 4);
    CHECK(pass["valuation"] == "1");

    const Json fail = check_unit_json(EtaQuotient(2, {{1, 24}}));
    CHECK(fail["strong_unit"]["passed"] == false);
    CHECK(fail["strong_unit"]["interior_cusps_nonvanishing"] == false);
    CHECK(fail["cusp_orders"][0]["order"] == "2");
}

TEST_CASE("search document") {
    const Json j = search_units_json(2, 4, 16);
    CHECK(j["schema"] == 1);
    REQUIRE(j["units"].size() == 1);
    CHECK(j["units"][0]["weight"] == 4);
    CHECK(j["units"][0]["quotient"]["exponents"] == Json({{"1", -8}, {"2", 16}}));
}
