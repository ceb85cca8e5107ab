#pragma once

#include <map>
#include <string>
#include <vector>

#include "nrbs/money.hpp"
#include "nrbs/units.hpp"

namespace nrbs {

struct InvalidParams : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingComponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeClosingStock : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Income capitalization inputs: annual rent P (yuan per hm2 per year),
/// interest rate R (fraction per year), earning period N (years).
struct IcaParams {
    double annual_rent = 0.0;
    double interest_rate = 0.05;  // "average of interest rate is 5%"
    int earning_years = 30;       // statutory earning period
};

/// Present value of N years of rent discounted at R, per hm2:
/// P/R * (1 - (1+R)^-N); the R = 0 limit is P*N.
double income_capitalization(const IcaParams& params);

/// quantity x unit price with exact unit/scale cancellation.
Money market_value(const Quantity& q, const UnitPrice& price);
/// Same kernel as market_value; the method tag on the line item differs.
Money replacement_cost(const Quantity& q, const UnitPrice& unit_cost);
Money imputed_abatement_cost(const Quantity& emission, const UnitPrice& unit_cost);

/// Per-hm2 external costs of crop production, by damage pathway.
struct ExternalCostSchedule {
    std::map<std::string, Decimal> components;  // water, soil, air, biodiversity, human_health

    static const std::vector<std::string>& required_components();
};

/// Sum of the five components, yuan per hm2.
Decimal agricultural_external_cost_rate(const ExternalCostSchedule& schedule);

struct WaterFlows {
    Quantity opening;
    Quantity rainfall;
    Quantity inflows;
    Quantity socio_economic_return;
    Quantity other_increases;
    Quantity water_utility;
    Quantity outflows;
    Quantity other_decreases;
};

/// closing = opening + sum(increases) - sum(decreases), in the opening unit.
Quantity water_closing_stock(const WaterFlows& flows);

}  // namespace nrbs
