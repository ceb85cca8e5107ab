#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrbs/money.hpp"
#include "nrbs/units.hpp"

namespace nrbs {

struct IllegalCategory : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DuplicateItem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Side { Asset, Liability };

enum class Category {
    // asset side
    Land,
    Energy,
    Minerals,
    Water,
    Forests,
    // liability side
    ResourceOverexploitation,
    EnvironmentalPollution,
    EcologicalDegradation,
};

enum class ValuationMethod { Ica, Market, Replacement, Abatement, Aggregate };

std::string to_string(Side s);
std::string to_string(Category c);
std::string to_string(ValuationMethod m);
Side parse_side(const std::string& token);
Category parse_category(const std::string& token);
ValuationMethod parse_method(const std::string& token);

/// True when the category belongs to the side's legal set.
bool category_legal(Side side, Category category);
const std::vector<Category>& categories_of(Side side);

struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    static Date parse(const std::string& iso);  // YYYY-MM-DD
    std::string str() const;
    bool operator==(const Date& rhs) const = default;
    auto operator<=>(const Date& rhs) const = default;
};

/// One row of an account side. Quantity and price may be absent (printed "--"
/// in the source tables); the monetary value is always present.
struct LineItem {
    Side side;
    Category category;
    std::string item;
    std::optional<Quantity> quantity;
    std::optional<UnitPrice> price;
    ValuationMethod method = ValuationMethod::Aggregate;
    Money value;

    bool operator==(const LineItem& rhs) const = default;

    /// A structural placeholder: no quantity, no price, zero value.
    bool is_coverage_gap() const {
        return !quantity && !price && value.is_zero();
    }
};

struct Totals {
    Money asset_total;
    Money liability_total;
    Money net_worth;

    bool operator==(const Totals& rhs) const = default;
};

struct BalanceSheet {
    std::string region;
    Date date;
    std::vector<LineItem> assets;
    std::vector<LineItem> liabilities;
    Totals totals;

    bool operator==(const BalanceSheet& rhs) const = default;
};

}  // namespace nrbs
