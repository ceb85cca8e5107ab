#pragma once

#include <optional>
#include <vector>

#include "nrbs/model.hpp"

namespace nrbs {

/// Assemble a validated sheet: checks side/category legality and duplicate
/// rows, then computes totals over the stored item values. Item order is
/// preserved for rendering.
BalanceSheet compile_sheet(const std::string& region, const Date& date,
                           std::vector<LineItem> assets, std::vector<LineItem> liabilities);

/// Exact sum of the values of items in (side, category); 0 when empty.
Money category_subtotal(const BalanceSheet& sheet, Side side, Category category);

enum class DiscrepancyKind {
    ValueMismatch,     // quantity x price disagrees with the stored value
    NetWorthIdentity,  // totals do not satisfy assets - liabilities = net worth
    IllegalCategory,
};

struct Discrepancy {
    DiscrepancyKind kind = DiscrepancyKind::ValueMismatch;
    Side side = Side::Asset;
    std::optional<Category> category;
    std::string item;
    std::optional<Money> computed;
    std::optional<Money> stored;
    std::optional<double> ratio;  // computed / stored
    /// k such that computed/10^k matches the stored value within tolerance
    /// (k != 0): the row looks off by exactly a power of ten.
    std::optional<int> suggested_pow10;
    std::string note;
};

/// Recompute quantity x price for every item that carries both, compare with
/// the stored value at rel_tol, and re-assert the net-worth identity and
/// category legality. Reporting only: never throws on bad data.
std::vector<Discrepancy> validate_consistency(const BalanceSheet& sheet, double rel_tol = 0.01);

}  // namespace nrbs
