#include "nrbs/compiler.hpp"

#include <cmath>
#include <set>
#include <tuple>

#include "nrbs/valuation.hpp"

namespace nrbs {

namespace {

void check_side(const std::vector<LineItem>& items, Side side) {
    std::set<std::tuple<Category, std::string>> seen;
    for (const auto& item : items) {
        if (item.side != side)
            throw IllegalCategory("item '" + item.item + "' is on the wrong side");
        if (!category_legal(side, item.category))
            throw IllegalCategory("category " + to_string(item.category) +
                                  " is not legal on the " + to_string(side) + " side");
        if (!seen.insert({item.category, item.item}).second)
            throw DuplicateItem("duplicate item: " + to_string(item.category) + "/" + item.item);
    }
}

Money sum_values(const std::vector<LineItem>& items) {
    Money total;
    for (const auto& item : items) total += item.value;
    return total;
}

}  // namespace

BalanceSheet compile_sheet(const std::string& region, const Date& date,
                           std::vector<LineItem> assets, std::vector<LineItem> liabilities) {
    check_side(assets, Side::Asset);
    check_side(liabilities, Side::Liability);
    BalanceSheet sheet;
    sheet.region = region;
    sheet.date = date;
    sheet.assets = std::move(assets);
    sheet.liabilities = std::move(liabilities);
    sheet.totals.asset_total = sum_values(sheet.assets);
    sheet.totals.liability_total = sum_values(sheet.liabilities);
    sheet.totals.net_worth = sheet.totals.asset_total - sheet.totals.liability_total;
    return sheet;
}

Money category_subtotal(const BalanceSheet& sheet, Side side, Category category) {
    if (!category_legal(side, category))
        throw IllegalCategory("category " + to_string(category) + " is not legal on the " +
                              to_string(side) + " side");
    Money total;
    const auto& items = side == Side::Asset ? sheet.assets : sheet.liabilities;
    for (const auto& item : items)
        if (item.category == category) total += item.value;
    return total;
}

namespace {

void check_item_value(const LineItem& item, double rel_tol, std::vector<Discrepancy>& out) {
    if (!item.quantity || !item.price) return;  // aggregate-expenditure rows are legitimate
    Money computed = market_value(*item.quantity, *item.price);

    auto within = [rel_tol](double a, double b) {
        if (b == 0.0) return a == 0.0;
        return std::fabs(a / b - 1.0) <= rel_tol;
    };

    Discrepancy d;
    d.kind = DiscrepancyKind::ValueMismatch;
    d.side = item.side;
    d.category = item.category;
    d.item = item.item;
    d.computed = computed;
    d.stored = item.value;

    if (item.value.is_zero()) {
        if (computed.is_zero()) return;
        d.note = "stored value is zero but quantity x price is not";
        out.push_back(std::move(d));
        return;
    }

    double ratio = computed.yuan.to_double() / item.value.yuan.to_double();
    if (within(ratio, 1.0)) return;
    d.ratio = ratio;
    if (ratio > 0.0) {
        int k = static_cast<int>(std::lround(std::log10(ratio)));
        if (k != 0 && within(ratio, std::pow(10.0, k))) d.suggested_pow10 = k;
    }
    d.note = d.suggested_pow10
                 ? "row appears off by 10^" + std::to_string(*d.suggested_pow10)
                 : "quantity x price disagrees with the stored value";
    out.push_back(std::move(d));
}

}  // namespace

std::vector<Discrepancy> validate_consistency(const BalanceSheet& sheet, double rel_tol) {
    if (rel_tol <= 0.0) throw InvalidParams("rel_tol must be > 0");
    std::vector<Discrepancy> report;

    for (const auto& item : sheet.assets) check_item_value(item, rel_tol, report);
    for (const auto& item : sheet.liabilities) check_item_value(item, rel_tol, report);

    Money residual =
        sheet.totals.asset_total - sheet.totals.liability_total - sheet.totals.net_worth;
    if (!residual.is_zero()) {
        Discrepancy d;
        d.kind = DiscrepancyKind::NetWorthIdentity;
        d.item = "net worth";
        d.note = "assets - liabilities - net worth = " + residual.billions_str() +
                 " billion yuan (should be 0)";
        report.push_back(std::move(d));
    }

    auto check_legal = [&](const std::vector<LineItem>& items, Side side) {
        for (const auto& item : items) {
            if (item.side == side && category_legal(side, item.category)) continue;
            Discrepancy d;
            d.kind = DiscrepancyKind::IllegalCategory;
            d.side = item.side;
            d.category = item.category;
            d.item = item.item;
            d.note = "category not legal for side";
            report.push_back(std::move(d));
        }
    };
    check_legal(sheet.assets, Side::Asset);
    check_legal(sheet.liabilities, Side::Liability);
    return report;
}

}  // namespace nrbs
