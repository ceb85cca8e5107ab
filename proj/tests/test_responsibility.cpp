#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nrbs/compiler.hpp"
#include "nrbs/responsibility.hpp"

using namespace nrbs;

namespace {

LineItem liability(Category cat, std::string name, const char* billions) {
    LineItem li;
    li.side = Side::Liability;
    li.category = cat;
    li.item = std::move(name);
    li.value = Money::from_billions(Decimal::parse(billions));
    return li;
}

}  // namespace

TEST_CASE("right kinds: grouping and token round-trip") {
    CHECK(group_of(RightKind::UseDirect) == RightGroup::Use);
    CHECK(group_of(RightKind::UseIndirect) == RightGroup::Use);
    CHECK(group_of(RightKind::Management) == RightGroup::Control);
    CHECK(group_of(RightKind::Exclusion) == RightGroup::Control);
    CHECK(group_of(RightKind::Transaction) == RightGroup::Control);
    CHECK(group_of(RightKind::Monitoring) == RightGroup::Control);
    CHECK(group_of(RightKind::Definition) == RightGroup::Authoritative);
    CHECK(group_of(RightKind::Allocation) == RightGroup::Authoritative);

    CHECK(all_rights().size() == 8);
    for (RightKind r : all_rights()) CHECK(parse_right(to_string(r)) == r);
    CHECK_THROWS(parse_right("squatting"));
}

TEST_CASE("creditor assignment covers every liability category with the two agencies") {
    CHECK(assign_creditor(Category::ResourceOverexploitation) == Actor::mnr());
    CHECK(assign_creditor(Category::EnvironmentalPollution) == Actor::mee());
    CHECK(assign_creditor(Category::EcologicalDegradation) == Actor::mee());
    for (Category c : categories_of(Side::Liability)) {
        Actor creditor = assign_creditor(c);
        CHECK((creditor == Actor::mnr() || creditor == Actor::mee()));
    }
    CHECK_THROWS_AS(assign_creditor(Category::Land), IllegalCategory);
}

TEST_CASE("rights matrix requires monitoring for each category present") {
    RightsMatrix::Builder complete;
    complete.add(Category::ResourceOverexploitation, RightKind::UseDirect,
                 {ActorKind::Company, "Mining co."});
    complete.add(Category::ResourceOverexploitation, RightKind::Monitoring,
                 {ActorKind::Government, "Provincial government"});
    auto matrix = complete.build();
    CHECK(matrix.categories() ==
          std::vector<Category>{Category::ResourceOverexploitation});
    CHECK(matrix.actors(Category::ResourceOverexploitation, RightKind::Monitoring).size() == 1);
    CHECK(matrix.actors(Category::ResourceOverexploitation, RightKind::Transaction).empty());

    RightsMatrix::Builder unmonitored;
    unmonitored.add(Category::EnvironmentalPollution, RightKind::UseDirect,
                    {ActorKind::Company, "Factory"});
    CHECK_THROWS_AS(unmonitored.build(), MissingMonitoring);

    CHECK(RightsMatrix::Builder{}.build().empty());
}

TEST_CASE("records: one per recorded liability line, creditors by category") {
    auto sheet = compile_sheet(
        "Shaanxi", Date::parse("2013-12-31"), {},
        {liability(Category::ResourceOverexploitation, "Coal", "102.13"),
         liability(Category::EnvironmentalPollution, "SO2", "1.02"),
         liability(Category::EcologicalDegradation, "Soil erosion", "71.00")});
    auto records = build_records(sheet);
    REQUIRE(records.size() == 3);
    Money sum;
    for (const auto& rec : records) {
        sum += rec.expenditure;
        CHECK(rec.debtor.kind == ActorKind::Company);
        CHECK(rec.creditor == assign_creditor(rec.category));
        CHECK_FALSE(rec.repayment_period.has_value());
    }
    CHECK(sum == sheet.totals.liability_total);
    CHECK(sum.billions_str() == "174.15");
}

TEST_CASE("records: structural coverage-gap rows are skipped, sum still matches") {
    LineItem gap = liability(Category::EcologicalDegradation, "Biodiversity loss", "0");
    gap.method = ValuationMethod::Aggregate;
    REQUIRE(gap.is_coverage_gap());
    auto sheet = compile_sheet(
        "Shaanxi", Date::parse("2013-12-31"), {},
        {liability(Category::ResourceOverexploitation, "Groundwater", "5.10"), gap});
    auto records = build_records(sheet);
    REQUIRE(records.size() == 1);
    CHECK(records[0].item == "Groundwater");
    CHECK(records[0].expenditure == sheet.totals.liability_total);
}

TEST_CASE("records: the debtor map can name specific debtors") {
    auto sheet = compile_sheet(
        "Shaanxi", Date::parse("2013-12-31"), {},
        {liability(Category::ResourceOverexploitation, "Coal", "102.13"),
         liability(Category::EnvironmentalPollution, "SO2", "1.02")});
    DebtorMap map = [](Category, const std::string& item) -> std::optional<Actor> {
        if (item == "Coal") return Actor{ActorKind::Organization, "Coal mining association"};
        return std::nullopt;
    };
    auto records = build_records(sheet, map);
    REQUIRE(records.size() == 2);
    for (const auto& rec : records) {
        if (rec.item == "Coal")
            CHECK(rec.debtor.name == "Coal mining association");
        else
            CHECK(rec.debtor.kind == ActorKind::Company);
    }
}

TEST_CASE("rights report is deterministic and names the actors") {
    RightsMatrix::Builder builder;
    builder.add(Category::EnvironmentalPollution, RightKind::UseIndirect,
                {ActorKind::Company, "Emitter"});
    builder.add(Category::EnvironmentalPollution, RightKind::Monitoring, Actor::mee());
    auto matrix = builder.build();
    std::string report = rights_report(matrix);
    CHECK(report == rights_report(matrix));
    CHECK(report.find("Emitter") != std::string::npos);
    CHECK(report.find("MEE") != std::string::npos);
}
