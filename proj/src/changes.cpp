#include "nrbs/changes.hpp"

#include <map>
#include <tuple>

#include "nrbs/valuation.hpp"

namespace nrbs {

ValueChange constant_price_change(const Quantity& q_open, const Quantity& q_close,
                                  const UnitPrice& p_base) {
    Quantity delta = quantity_sub(normalize(q_close, q_open.unit), q_open);
    ValueChange change;
    change.level = market_value(delta, p_base);
    if (q_open.magnitude.sign() > 0)
        change.pct = Fraction(delta.magnitude, q_open.magnitude);
    return change;
}

ValueChange current_price_change(const Money& v_open, const Money& v_close) {
    ValueChange change;
    change.level = v_close - v_open;
    if (!v_open.is_zero()) change.pct = Fraction(change.level.yuan, v_open.yuan);
    return change;
}

ItemChangeReport item_change_report(const BalanceSheet& opening, const BalanceSheet& closing) {
    if (opening.region != closing.region)
        throw RegionMismatch("sheets are for different regions: " + opening.region + " vs " +
                             closing.region);
    ItemChangeReport report;
    using Key = std::tuple<Side, Category, std::string>;

    std::map<Key, const LineItem*> open_index;
    auto index_side = [&](const std::vector<LineItem>& items) {
        for (const auto& item : items) open_index[{item.side, item.category, item.item}] = &item;
    };
    index_side(opening.assets);
    index_side(opening.liabilities);

    std::map<Key, bool> matched_open;
    auto match_side = [&](const std::vector<LineItem>& items) {
        for (const auto& close_item : items) {
            Key key{close_item.side, close_item.category, close_item.item};
            auto it = open_index.find(key);
            if (it == open_index.end()) {
                report.additions.push_back(close_item);
                continue;
            }
            matched_open[key] = true;
            const LineItem& open_item = *it->second;

            ChangeRecord rec;
            rec.side = close_item.side;
            rec.category = close_item.category;
            rec.item = close_item.item;
            rec.q_open = open_item.quantity;
            rec.q_close = close_item.quantity;
            rec.p_open = open_item.price;
            rec.p_close = close_item.price;
            if (open_item.quantity && close_item.quantity) {
                rec.level_change =
                    quantity_sub(normalize(*close_item.quantity, open_item.quantity->unit),
                                 *open_item.quantity);
                if (open_item.price)
                    rec.const_price = constant_price_change(*open_item.quantity,
                                                            *close_item.quantity,
                                                            *open_item.price);
            }
            rec.curr_price = current_price_change(open_item.value, close_item.value);
            report.matched.push_back(std::move(rec));
        }
    };
    match_side(closing.assets);
    match_side(closing.liabilities);

    auto collect_removals = [&](const std::vector<LineItem>& items) {
        for (const auto& item : items)
            if (!matched_open.count({item.side, item.category, item.item}))
                report.removals.push_back(item);
    };
    collect_removals(opening.assets);
    collect_removals(opening.liabilities);
    return report;
}

SheetChangeSummary sheet_change(const BalanceSheet& opening, const BalanceSheet& closing,
                                const Money& gdp_open, const Money& gdp_close) {
    if (opening.region != closing.region)
        throw RegionMismatch("sheets are for different regions: " + opening.region + " vs " +
                             closing.region);
    SheetChangeSummary summary;
    summary.asset_change =
        current_price_change(opening.totals.asset_total, closing.totals.asset_total);
    summary.liability_change =
        current_price_change(opening.totals.liability_total, closing.totals.liability_total);
    summary.net_worth_change =
        current_price_change(opening.totals.net_worth, closing.totals.net_worth);
    summary.gdp_open = gdp_open;
    summary.gdp_close = gdp_close;
    summary.liability_to_gdp_open = Fraction(opening.totals.liability_total.yuan, gdp_open.yuan);
    summary.liability_to_gdp_close = Fraction(closing.totals.liability_total.yuan, gdp_close.yuan);
    return summary;
}

}  // namespace nrbs
