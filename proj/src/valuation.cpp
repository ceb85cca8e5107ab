#include "nrbs/valuation.hpp"

#include <cmath>

namespace nrbs {

double income_capitalization(const IcaParams& params) {
    if (params.earning_years < 1)
        throw InvalidParams("ICA: earning period must be >= 1 year");
    if (params.interest_rate < 0.0) throw InvalidParams("ICA: negative interest rate");
    if (params.annual_rent < 0.0) throw InvalidParams("ICA: negative rent");
    if (params.interest_rate == 0.0)
        return params.annual_rent * params.earning_years;
    double r = params.interest_rate;
    // -expm1(-N*log1p(r)) == 1 - (1+r)^-N, stable as r -> 0
    return params.annual_rent / r * -std::expm1(-params.earning_years * std::log1p(r));
}

Money market_value(const Quantity& q, const UnitPrice& price) {
    Quantity in_price_units = normalize(q, price.per);
    return Money{in_price_units.magnitude * price.yuan};
}

Money replacement_cost(const Quantity& q, const UnitPrice& unit_cost) {
    return market_value(q, unit_cost);
}

Money imputed_abatement_cost(const Quantity& emission, const UnitPrice& unit_cost) {
    return market_value(emission, unit_cost);
}

const std::vector<std::string>& ExternalCostSchedule::required_components() {
    static const std::vector<std::string> names = {"water", "soil", "air", "biodiversity",
                                                   "human_health"};
    return names;
}

Decimal agricultural_external_cost_rate(const ExternalCostSchedule& schedule) {
    Decimal sum;
    for (const auto& name : ExternalCostSchedule::required_components()) {
        auto it = schedule.components.find(name);
        if (it == schedule.components.end())
            throw MissingComponent("external cost component missing: " + name);
        if (it->second.sign() < 0)
            throw InvalidParams("external cost component negative: " + name);
        sum += it->second;
    }
    return sum;
}

Quantity water_closing_stock(const WaterFlows& flows) {
    Quantity closing = flows.opening;
    for (const Quantity* inc :
         {&flows.rainfall, &flows.inflows, &flows.socio_economic_return, &flows.other_increases})
        closing = quantity_add(closing, *inc);
    for (const Quantity* dec : {&flows.water_utility, &flows.outflows, &flows.other_decreases})
        closing = quantity_sub(closing, *dec);
    if (closing.magnitude.sign() < 0)
        throw NegativeClosingStock("water stock-flow reconciliation went negative");
    return closing;
}

}  // namespace nrbs
