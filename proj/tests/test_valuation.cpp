#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "nrbs/valuation.hpp"

using namespace nrbs;

namespace {

// Independent oracle: the discounted-rent sum, term by term.
double ica_oracle(double rent, double rate, int years) {
    double sum = 0.0;
    for (int t = 1; t <= years; ++t) sum += rent / std::pow(1.0 + rate, t);
    return sum;
}

Quantity tonnes(const char* mag, int scale = 0) {
    return Quantity{Decimal::parse(mag), Unit::make("t", scale)};
}

UnitPrice per_tonne(const char* yuan) {
    return UnitPrice{Decimal::parse(yuan), Unit::make("t")};
}

}  // namespace

TEST_CASE("income capitalization: examples against the brute-force sum") {
    CHECK(income_capitalization({0.0, 0.05, 30}) == 0.0);
    CHECK(income_capitalization({10.0, 0.0, 5}) == doctest::Approx(50.0));
    // frozen from the oracle: sum of 100/1.05^t for t=1..30
    CHECK(income_capitalization({100.0, 0.05, 30}) == doctest::Approx(1537.2451).epsilon(1e-6));
    CHECK(income_capitalization({100.0, 0.05, 30}) ==
          doctest::Approx(ica_oracle(100.0, 0.05, 30)).epsilon(1e-12));
}

TEST_CASE("income capitalization: invalid parameters") {
    CHECK_THROWS_AS(income_capitalization({100.0, 0.05, 0}), InvalidParams);
    CHECK_THROWS_AS(income_capitalization({100.0, -0.01, 30}), InvalidParams);
    CHECK_THROWS_AS(income_capitalization({-1.0, 0.05, 30}), InvalidParams);
}

TEST_CASE("income capitalization: closed form equals the oracle over random inputs") {
    std::mt19937_64 rng(20180101);
    std::uniform_real_distribution<double> rent(1e-3, 1e6);
    std::uniform_real_distribution<double> rate(1e-6, 0.5);
    std::uniform_int_distribution<int> years(1, 100);
    for (int i = 0; i < 1000; ++i) {
        double p = rent(rng), r = rate(rng);
        int n = years(rng);
        double closed = income_capitalization({p, r, n});
        double brute = ica_oracle(p, r, n);
        CHECK(std::fabs(closed - brute) <= 1e-9 * std::fabs(brute));
    }
}

TEST_CASE("income capitalization: monotone in rent and years, decreasing in rate") {
    double base = income_capitalization({100.0, 0.05, 30});
    CHECK(income_capitalization({101.0, 0.05, 30}) > base);
    CHECK(income_capitalization({100.0, 0.05, 31}) > base);
    CHECK(income_capitalization({100.0, 0.06, 30}) < base);
}

TEST_CASE("income capitalization: continuity at the zero-rate limit") {
    for (double p : {1.0, 100.0, 9999.5}) {
        for (int n : {1, 30, 100}) {
            double near_zero = income_capitalization({p, 1e-12, n});
            CHECK(std::fabs(near_zero - p * n) / (p * n) < 1e-6);
        }
    }
}

TEST_CASE("market value: quantity x price with unit cancellation") {
    CHECK(market_value(tonnes("0"), per_tonne("1.45")).is_zero());
    CHECK(market_value(tonnes("100"), per_tonne("1.45")).yuan.str() == "145");
    CHECK(market_value(tonnes("1", 9), per_tonne("1.20")).yuan.str() == "1200000000");
    Quantity volume{Decimal(1), Unit::make("m3")};
    CHECK_THROWS_AS(market_value(volume, per_tonne("1.45")), DimensionMismatch);
}

TEST_CASE("replacement cost and abatement cost share the kernel") {
    CHECK(replacement_cost(tonnes("0"), per_tonne("586.32")).is_zero());
    CHECK(replacement_cost(tonnes("1", 7), per_tonne("586.32")).billions_str() == "5.8632");
    Quantity gas{Decimal(1), Unit::make("m3")};
    CHECK(replacement_cost(gas, UnitPrice{Decimal::parse("1.95"), Unit::make("m3")}).yuan.str() ==
          "1.95");
    CHECK(imputed_abatement_cost(tonnes("0"), per_tonne("1264")).is_zero());
    CHECK(imputed_abatement_cost(tonnes("1", 4), per_tonne("1264")).yuan.str() == "12640000");
    CHECK(imputed_abatement_cost(tonnes("1", 6), per_tonne("27")).yuan.str() == "27000000");
}

TEST_CASE("valuation is exactly linear in quantity") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> mag(0, 1'000'000'000LL);
    for (int i = 0; i < 200; ++i) {
        Quantity q = tonnes("1");
        q.magnitude = Decimal(mag(rng)).shifted(-3);
        Decimal factor = Decimal(mag(rng)).shifted(-2);
        UnitPrice price = per_tonne("5061.64");
        Quantity scaled{factor * q.magnitude, q.unit};
        CHECK(market_value(scaled, price).yuan == factor * market_value(q, price).yuan);
    }
}

TEST_CASE("agricultural external cost rate") {
    ExternalCostSchedule schedule;
    schedule.components = {{"water", Decimal::parse("11.50")},
                           {"soil", Decimal::parse("85.86")},
                           {"air", Decimal::parse("10.85")},
                           {"biodiversity", Decimal::parse("43.35")},
                           {"human_health", Decimal::parse("38.64")}};
    CHECK(agricultural_external_cost_rate(schedule).str() == "190.2");

    for (auto& [name, value] : schedule.components) value = Decimal(1);
    CHECK(agricultural_external_cost_rate(schedule).str() == "5");
    for (auto& [name, value] : schedule.components) value = Decimal(0);
    CHECK(agricultural_external_cost_rate(schedule).is_zero());

    schedule.components.erase("soil");
    CHECK_THROWS_AS(agricultural_external_cost_rate(schedule), MissingComponent);
}

namespace {

WaterFlows flows_of(const char* opening, std::array<const char*, 4> inc,
                    std::array<const char*, 3> dec) {
    Unit m3 = Unit::make("m3");
    auto q = [&](const char* v) { return Quantity{Decimal::parse(v), m3}; };
    WaterFlows f;
    f.opening = q(opening);
    f.rainfall = q(inc[0]);
    f.inflows = q(inc[1]);
    f.socio_economic_return = q(inc[2]);
    f.other_increases = q(inc[3]);
    f.water_utility = q(dec[0]);
    f.outflows = q(dec[1]);
    f.other_decreases = q(dec[2]);
    return f;
}

}  // namespace

TEST_CASE("water stock-flow reconciliation") {
    auto zero = flows_of("100", {"0", "0", "0", "0"}, {"0", "0", "0"});
    CHECK(water_closing_stock(zero).magnitude.str() == "100");

    auto mixed = flows_of("100", {"10", "5", "2", "1"}, {"12", "3", "1"});
    CHECK(water_closing_stock(mixed).magnitude.str() == "102");

    auto balanced = flows_of("55.5", {"4", "3", "2", "1"}, {"6", "3", "1"});
    CHECK(water_closing_stock(balanced).magnitude.str() == "55.5");

    auto drained = flows_of("1", {"0", "0", "0", "0"}, {"5", "0", "0"});
    CHECK_THROWS_AS(water_closing_stock(drained), NegativeClosingStock);
}

TEST_CASE("water stock-flow conserves volume exactly over random flows") {
    std::mt19937_64 rng(2013);
    std::uniform_int_distribution<long long> mag(0, 1'000'000LL);
    for (int i = 0; i < 300; ++i) {
        auto v = [&] { return std::to_string(mag(rng)); };
        std::string opening = std::to_string(mag(rng) + 10'000'000LL);
        std::array<std::string, 7> parts = {v(), v(), v(), v(), v(), v(), v()};
        auto f = flows_of(opening.c_str(),
                          {parts[0].c_str(), parts[1].c_str(), parts[2].c_str(),
                           parts[3].c_str()},
                          {parts[4].c_str(), parts[5].c_str(), parts[6].c_str()});
        Decimal net = Decimal::parse(parts[0]) + Decimal::parse(parts[1]) +
                      Decimal::parse(parts[2]) + Decimal::parse(parts[3]) -
                      Decimal::parse(parts[4]) - Decimal::parse(parts[5]) -
                      Decimal::parse(parts[6]);
        Decimal closing = water_closing_stock(f).magnitude;
        CHECK(closing - f.opening.magnitude == net);
    }
}
