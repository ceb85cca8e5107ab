#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "nrbs/compiler.hpp"
#include "nrbs/model.hpp"
#include "nrbs/units.hpp"

using namespace nrbs;

namespace {

LineItem item(Side side, Category cat, std::string name, const char* billions) {
    LineItem li;
    li.side = side;
    li.category = cat;
    li.item = std::move(name);
    li.value = Money::from_billions(Decimal::parse(billions));
    return li;
}

}  // namespace

TEST_CASE("normalize: metric identities") {
    Quantity km{Decimal(1), Unit::make("km2")};
    CHECK(normalize(km, Unit::make("hm2")).magnitude.str() == "100");
    CHECK(normalize(normalize(km, Unit::make("hm2")), Unit::make("km2")) == km);

    Quantity scaled{Decimal::parse("39.92"), Unit::make("km2", 3)};
    CHECK(normalize(scaled, Unit::make("km2")).magnitude.str() == "39920");

    Quantity zero{Decimal(0), Unit::make("t", 7)};
    CHECK(normalize(zero, Unit::make("t")).magnitude.is_zero());
}

TEST_CASE("normalize: dimension mismatch") {
    Quantity mass{Decimal(1), Unit::make("t")};
    CHECK_THROWS_AS(normalize(mass, Unit::make("m3")), DimensionMismatch);
}

TEST_CASE("normalize round-trips across random scales") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> scale(0, 12);
    std::uniform_int_distribution<long long> mag(0, 1'000'000'000LL);
    const char* symbols[] = {"t", "m3", "km2", "hm2"};
    for (int i = 0; i < 300; ++i) {
        const char* sym = symbols[i % 4];
        Quantity q{Decimal(mag(rng)).shifted(-2), Unit::make(sym, scale(rng))};
        Unit target = Unit::make(sym == std::string("km2") ? "hm2"
                                 : sym == std::string("hm2") ? "km2"
                                                             : sym,
                                 scale(rng));
        CHECK(normalize(normalize(q, target), q.unit) == q);
    }
}

TEST_CASE("money addition") {
    Money a = Money::from_billions(Decimal::parse("1054.70"));
    Money b = Money::from_billions(Decimal::parse("2892.94"));
    CHECK((a + b).billions_str() == "3947.64");
    CHECK(money_add(a, Money{}) == a);
}

TEST_CASE("unit scale bounds") {
    CHECK_THROWS(Unit::make("t", 13));
    CHECK_THROWS(Unit::make("t", -1));
    CHECK_THROWS(Unit::make("kg"));
}

TEST_CASE("totals are permutation-invariant and net worth holds by construction") {
    std::vector<LineItem> assets = {
        item(Side::Asset, Category::Land, "a", "1054.70"),
        item(Side::Asset, Category::Energy, "b", "1393.73"),
        item(Side::Asset, Category::Water, "c", "155.46"),
        item(Side::Asset, Category::Forests, "d", "1.79"),
    };
    std::vector<LineItem> liabilities = {
        item(Side::Liability, Category::EnvironmentalPollution, "e", "1.02"),
        item(Side::Liability, Category::EcologicalDegradation, "f", "12.47"),
    };
    Date date = Date::parse("2013-12-31");
    auto base = compile_sheet("Shaanxi", date, assets, liabilities);
    CHECK(base.totals.asset_total.billions_str() == "2605.68");
    CHECK(base.totals.net_worth ==
          base.totals.asset_total - base.totals.liability_total);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(assets.begin(), assets.end(), rng);
        std::shuffle(liabilities.begin(), liabilities.end(), rng);
        auto shuffled = compile_sheet("Shaanxi", date, assets, liabilities);
        CHECK(shuffled.totals == base.totals);
    }
}
