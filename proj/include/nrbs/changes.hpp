#pragma once

#include <optional>
#include <vector>

#include "nrbs/model.hpp"

namespace nrbs {

struct RegionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A signed monetary change plus its percentage of the opening level.
/// pct is absent when the opening level is zero (flagged, not thrown).
struct ValueChange {
    Money level;
    std::optional<Fraction> pct;
};

/// Quantity effect at the opening period's unit price. pct depends only on
/// the quantities, not on the price.
ValueChange constant_price_change(const Quantity& q_open, const Quantity& q_close,
                                  const UnitPrice& p_base);

/// Combined quantity and price effect: closing minus opening monetary value.
ValueChange current_price_change(const Money& v_open, const Money& v_close);

struct ChangeRecord {
    Side side = Side::Asset;
    Category category = Category::Land;
    std::string item;
    std::optional<Quantity> q_open;
    std::optional<Quantity> q_close;
    std::optional<UnitPrice> p_open;
    std::optional<UnitPrice> p_close;
    /// q_close - q_open in the opening unit; absent when either quantity is.
    std::optional<Quantity> level_change;
    std::optional<ValueChange> const_price;  // needs both quantities and p_open
    ValueChange curr_price;
};

struct ItemChangeReport {
    std::vector<ChangeRecord> matched;
    std::vector<LineItem> additions;  // only in the closing sheet
    std::vector<LineItem> removals;   // only in the opening sheet
};

/// Per-item deltas between two sheets, matched by side+category+item.
ItemChangeReport item_change_report(const BalanceSheet& opening, const BalanceSheet& closing);

struct SheetChangeSummary {
    ValueChange asset_change;
    ValueChange liability_change;
    ValueChange net_worth_change;
    Money gdp_open;
    Money gdp_close;
    Fraction liability_to_gdp_open;
    Fraction liability_to_gdp_close;
};

/// Sheet-level totals differenced against the opening sheet, plus
/// liability/GDP ratios for both dates. GDP is external input.
SheetChangeSummary sheet_change(const BalanceSheet& opening, const BalanceSheet& closing,
                                const Money& gdp_open, const Money& gdp_close);

}  // namespace nrbs
