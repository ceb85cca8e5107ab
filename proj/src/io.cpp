#include "nrbs/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace nrbs {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(field);
    return fields;
}

bool absent(const std::string& field) { return field == "-" || field.empty(); }

}  // namespace

Unit parse_unit(const std::string& token) {
    std::string symbol = token;
    int scale = 0;
    if (token.starts_with("10^")) {
        size_t space = token.find(' ');
        if (space == std::string::npos)
            throw MalformedScale("unit token missing symbol after scale: " + token);
        std::string digits = token.substr(3, space - 3);
        auto res = std::from_chars(digits.data(), digits.data() + digits.size(), scale);
        if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size())
            throw MalformedScale("malformed power-of-ten scale: " + token);
        symbol = token.substr(space + 1);
    }
    if (symbol != "t" && symbol != "m3" && symbol != "km2" && symbol != "hm2")
        throw UnknownUnit("unknown unit symbol: " + symbol);
    if (scale < 0 || scale > 12) throw MalformedScale("unit scale out of range [0,12]: " + token);
    return Unit::make(symbol, scale);
}

std::string render_unit(const Unit& unit) {
    if (unit.scale == 0) return unit.symbol;
    return "10^" + std::to_string(unit.scale) + " " + unit.symbol;
}

Format parse_format(const std::string& token) {
    if (token == "text") return Format::Text;
    if (token == "csv") return Format::Csv;
    if (token == "json-lines" || token == "jsonl") return Format::JsonLines;
    throw UnknownFormat("unknown format: " + token);
}

const char* const kSheetCsvHeader =
    "region,date,side,category,item,quantity,quantity_unit,unit_price_yuan,price_per_unit,"
    "valuation_method,value_billion_yuan";

BalanceSheet load_sheet(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty input: missing CSV header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSheetCsvHeader)
        throw ParseError("unexpected CSV header: " + line);

    std::string region;
    std::optional<Date> date;
    std::vector<LineItem> assets, liabilities;
    size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv(line);
        if (fields.size() != 11)
            throw ParseError("row " + std::to_string(row) + ": expected 11 fields, got " +
                             std::to_string(fields.size()));
        try {
            std::string row_region = fields[0];
            Date row_date = Date::parse(fields[1]);
            if (region.empty()) {
                region = row_region;
                date = row_date;
            } else if (row_region != region || row_date != *date) {
                throw MixedPeriod("row " + std::to_string(row) +
                                  ": mixed region/date in one file");
            }

            LineItem item;
            item.side = parse_side(fields[2]);
            item.category = parse_category(fields[3]);
            item.item = fields[4];
            if (!absent(fields[5]) || !absent(fields[6])) {
                if (absent(fields[5]) || absent(fields[6]))
                    throw ParseError("quantity and quantity_unit must both be present");
                item.quantity = Quantity{Decimal::parse(fields[5]), parse_unit(fields[6])};
                if (item.quantity->magnitude.sign() < 0)
                    throw ParseError("negative stock quantity");
            }
            if (!absent(fields[7]) || !absent(fields[8])) {
                if (absent(fields[7]) || absent(fields[8]))
                    throw ParseError("unit_price_yuan and price_per_unit must both be present");
                item.price = UnitPrice{Decimal::parse(fields[7]), parse_unit(fields[8])};
                if (item.price->yuan.sign() <= 0) throw ParseError("unit price must be > 0");
            }
            item.method = parse_method(fields[9]);
            item.value = Money::from_billions(Decimal::parse(fields[10]));
            (item.side == Side::Asset ? assets : liabilities).push_back(std::move(item));
        } catch (const MixedPeriod&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError("row " + std::to_string(row) + ": " + e.what());
        }
    }
    if (region.empty()) return compile_sheet("", Date{}, {}, {});
    return compile_sheet(region, *date, std::move(assets), std::move(liabilities));
}

BalanceSheet load_sheet_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return load_sheet(in);
    } catch (const MixedPeriod&) {
        throw;
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace {

std::string csv_row(const LineItem& item, const std::string& region, const Date& date) {
    std::ostringstream out;
    out << region << ',' << date.str() << ',' << to_string(item.side) << ','
        << to_string(item.category) << ',' << item.item << ',';
    if (item.quantity)
        out << item.quantity->magnitude.str() << ',' << render_unit(item.quantity->unit);
    else
        out << "-,-";
    out << ',';
    if (item.price)
        out << item.price->yuan.str() << ',' << render_unit(item.price->per);
    else
        out << "-,-";
    out << ',' << to_string(item.method) << ',' << item.value.billions_str();
    return out.str();
}

std::string sheet_csv(const BalanceSheet& sheet) {
    std::ostringstream out;
    out << kSheetCsvHeader << '\n';
    for (const auto& item : sheet.assets) out << csv_row(item, sheet.region, sheet.date) << '\n';
    for (const auto& item : sheet.liabilities)
        out << csv_row(item, sheet.region, sheet.date) << '\n';
    return out.str();
}

std::string item_cell(const LineItem& item) {
    std::ostringstream out;
    out << to_string(item.category) << "  " << item.item << "  ";
    if (item.quantity)
        out << item.quantity->magnitude.str() << ' ' << render_unit(item.quantity->unit);
    else
        out << "--";
    out << "  " << item.value.billions_str();
    return out.str();
}

std::string sheet_text(const BalanceSheet& sheet) {
    std::vector<std::string> left, right;
    for (const auto& item : sheet.assets) left.push_back(item_cell(item));
    for (const auto& item : sheet.liabilities) right.push_back(item_cell(item));
    size_t width = 0;
    for (const auto& cell : left) width = std::max(width, cell.size());
    width = std::max(width, std::string("Assets").size());

    std::ostringstream out;
    out << sheet.region << " natural resource balance sheet, " << sheet.date.str()
        << " (values in billion yuan)\n";
    out << std::left << std::setw(static_cast<int>(width)) << "Assets" << " | Liabilities\n";
    size_t rows = std::max(left.size(), right.size());
    for (size_t i = 0; i < rows; ++i) {
        out << std::left << std::setw(static_cast<int>(width))
            << (i < left.size() ? left[i] : "");
        out << " | " << (i < right.size() ? right[i] : "") << '\n';
    }
    out << "Total Assets: " << sheet.totals.asset_total.billions_str()
        << " | Total Liabilities: " << sheet.totals.liability_total.billions_str() << '\n';
    out << "Net Worth: " << sheet.totals.net_worth.billions_str() << '\n';
    return out.str();
}

std::string sheet_jsonl(const BalanceSheet& sheet) {
    std::ostringstream out;
    auto emit = [&](const LineItem& item) {
        nlohmann::ordered_json j;
        j["record"] = "item";
        j["region"] = sheet.region;
        j["date"] = sheet.date.str();
        j["side"] = to_string(item.side);
        j["category"] = to_string(item.category);
        j["item"] = item.item;
        if (item.quantity) {
            j["quantity"] = item.quantity->magnitude.str();
            j["quantity_unit"] = render_unit(item.quantity->unit);
        } else {
            j["quantity"] = nullptr;
            j["quantity_unit"] = nullptr;
        }
        if (item.price) {
            j["unit_price_yuan"] = item.price->yuan.str();
            j["price_per_unit"] = render_unit(item.price->per);
        } else {
            j["unit_price_yuan"] = nullptr;
            j["price_per_unit"] = nullptr;
        }
        j["valuation_method"] = to_string(item.method);
        j["value_billion_yuan"] = item.value.billions_str();
        out << j.dump() << '\n';
    };
    for (const auto& item : sheet.assets) emit(item);
    for (const auto& item : sheet.liabilities) emit(item);
    nlohmann::ordered_json totals;
    totals["record"] = "totals";
    totals["region"] = sheet.region;
    totals["date"] = sheet.date.str();
    totals["asset_total_billion_yuan"] = sheet.totals.asset_total.billions_str();
    totals["liability_total_billion_yuan"] = sheet.totals.liability_total.billions_str();
    totals["net_worth_billion_yuan"] = sheet.totals.net_worth.billions_str();
    out << totals.dump() << '\n';
    return out.str();
}

}  // namespace

std::string render_sheet(const BalanceSheet& sheet, Format format) {
    switch (format) {
        case Format::Csv: return sheet_csv(sheet);
        case Format::Text: return sheet_text(sheet);
        case Format::JsonLines: return sheet_jsonl(sheet);
    }
    throw UnknownFormat("unknown format");
}

namespace {

std::string kind_token(DiscrepancyKind kind) {
    switch (kind) {
        case DiscrepancyKind::ValueMismatch: return "value_mismatch";
        case DiscrepancyKind::NetWorthIdentity: return "net_worth_identity";
        case DiscrepancyKind::IllegalCategory: return "illegal_category";
    }
    return "?";
}

}  // namespace

std::string render_discrepancies(const std::vector<Discrepancy>& report, Format format) {
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "kind,side,category,item,computed_billion_yuan,stored_billion_yuan,ratio,"
               "suggested_pow10,note\n";
        for (const auto& d : report) {
            out << kind_token(d.kind) << ',' << to_string(d.side) << ','
                << (d.category ? to_string(*d.category) : "-") << ',' << d.item << ','
                << (d.computed ? d.computed->billions_str() : "-") << ','
                << (d.stored ? d.stored->billions_str() : "-") << ',';
            if (d.ratio)
                out << std::fixed << std::setprecision(4) << *d.ratio;
            else
                out << '-';
            out << ',' << (d.suggested_pow10 ? std::to_string(*d.suggested_pow10) : "-") << ','
                << d.note << '\n';
        }
        return out.str();
    }
    if (format != Format::Text) throw UnknownFormat("discrepancy report supports text and csv");
    if (report.empty()) return "no discrepancies\n";
    for (const auto& d : report) {
        out << kind_token(d.kind) << "  ";
        if (d.category) out << to_string(d.side) << '/' << to_string(*d.category) << '/';
        out << d.item;
        if (d.computed && d.stored)
            out << "  computed " << d.computed->billions_str() << " vs stored "
                << d.stored->billions_str() << " billion yuan";
        if (d.ratio) out << "  ratio " << std::fixed << std::setprecision(4) << *d.ratio;
        out << "  " << d.note << '\n';
    }
    return out.str();
}

namespace {

std::string change_cell(const std::optional<ValueChange>& change, bool arrows) {
    if (!change) return arrows ? "-" : "-,-";
    std::ostringstream out;
    Decimal level = change->level.billions();
    if (arrows) {
        out << level.abs().fixed_min(2) << (level.sign() < 0 ? "↓" : "↑");
    } else {
        out << level.fixed_min(2);
    }
    out << (arrows ? " " : ",");
    out << (change->pct ? change->pct->percent_fixed(2) + "%" : "-");
    return out.str();
}

}  // namespace

std::string render_changes(const ItemChangeReport& report, Side side, Format format) {
    if (format == Format::JsonLines)
        throw UnknownFormat("change tables support text and csv");
    bool text = format == Format::Text;
    std::ostringstream out;
    if (!text)
        out << "category,item,level_change,quantity_unit,const_price_level,const_price_pct,"
               "curr_price_level,curr_price_pct\n";
    else
        out << (side == Side::Asset ? "Asset" : "Liability")
            << " changes (levels in billion yuan)\n";
    const char* sep = text ? "  " : ",";
    for (const auto& rec : report.matched) {
        if (rec.side != side) continue;
        out << to_string(rec.category) << sep << rec.item << sep;
        if (rec.level_change)
            out << rec.level_change->magnitude.str() << (text ? " " : ",")
                << render_unit(rec.level_change->unit);
        else
            out << "-" << (text ? " " : ",") << "-";
        out << sep << change_cell(rec.const_price, text) << sep
            << change_cell(rec.curr_price, text) << '\n';
    }
    for (const auto& item : report.additions)
        if (item.side == side)
            out << to_string(item.category) << sep << item.item << sep << "added" << sep << "-"
                << sep << "-,-" << sep << item.value.billions_str() << ",-\n";
    for (const auto& item : report.removals)
        if (item.side == side)
            out << to_string(item.category) << sep << item.item << sep << "removed" << sep << "-"
                << sep << "-,-" << sep << (-item.value).billions_str() << ",-\n";
    return out.str();
}

std::string render_summary(const SheetChangeSummary& summary, Format format) {
    std::ostringstream out;
    auto pct = [](const std::optional<Fraction>& f) {
        return f ? f->percent_fixed(2) + "%" : "-";
    };
    if (format == Format::Csv) {
        out << "content,level_change_billion_yuan,percent_change\n";
        out << "assets," << summary.asset_change.level.billions_str() << ','
            << pct(summary.asset_change.pct) << '\n';
        out << "liabilities," << summary.liability_change.level.billions_str() << ','
            << pct(summary.liability_change.pct) << '\n';
        out << "net_worth," << summary.net_worth_change.level.billions_str() << ','
            << pct(summary.net_worth_change.pct) << '\n';
        out << "gdp," << (summary.gdp_close - summary.gdp_open).billions_str() << ','
            << pct(Fraction((summary.gdp_close - summary.gdp_open).yuan, summary.gdp_open.yuan))
            << '\n';
        out << "liability_to_gdp_open," << summary.gdp_open.billions_str() << ','
            << summary.liability_to_gdp_open.percent_fixed(2) << "%\n";
        out << "liability_to_gdp_close," << summary.gdp_close.billions_str() << ','
            << summary.liability_to_gdp_close.percent_fixed(2) << "%\n";
        return out.str();
    }
    if (format != Format::Text) throw UnknownFormat("summary supports text and csv");
    out << "Changes in the balance sheet (billion yuan)\n";
    out << "  Assets:      " << summary.asset_change.level.billions_str() << " ("
        << pct(summary.asset_change.pct) << ")\n";
    out << "  Liabilities: " << summary.liability_change.level.billions_str() << " ("
        << pct(summary.liability_change.pct) << ")\n";
    out << "  Net worth:   " << summary.net_worth_change.level.billions_str() << " ("
        << pct(summary.net_worth_change.pct) << ")\n";
    out << "  Liability/GDP: " << summary.liability_to_gdp_open.percent_fixed(2) << "% -> "
        << summary.liability_to_gdp_close.percent_fixed(2) << "%\n";
    return out.str();
}

std::string render_records(const std::vector<LiabilityRecord>& records, Format format) {
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "category,item,debtor_kind,debtor_name,creditor,repayment_period,"
               "expenditure_billion_yuan\n";
        for (const auto& rec : records) {
            out << to_string(rec.category) << ',' << rec.item << ','
                << to_string(rec.debtor.kind) << ',' << rec.debtor.name << ','
                << to_string(rec.creditor.kind) << ',';
            if (rec.repayment_period)
                out << rec.repayment_period->first.str() << ".."
                    << rec.repayment_period->second.str();
            else
                out << '-';
            out << ',' << rec.expenditure.billions_str() << '\n';
        }
        return out.str();
    }
    if (format != Format::Text) throw UnknownFormat("records support text and csv");
    Money total;
    for (const auto& rec : records) {
        out << to_string(rec.category) << "/" << rec.item << ": debtor "
            << to_string(rec.debtor.kind) << ", creditor " << to_string(rec.creditor.kind)
            << ", expenditure " << rec.expenditure.billions_str() << " billion yuan\n";
        total += rec.expenditure;
    }
    out << "Total expenditure: " << total.billions_str() << " billion yuan\n";
    return out.str();
}

RightsMatrix load_rights_matrix(std::istream& in) {
    RightsMatrix::Builder builder;
    std::string line;
    size_t row = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "category,right,actor_kind,actor_name")
                throw ParseError("rights matrix: unexpected header: " + line);
            header_seen = true;
            continue;
        }
        auto fields = split_csv(line);
        if (fields.size() != 4)
            throw ParseError("rights matrix row " + std::to_string(row) + ": expected 4 fields");
        try {
            builder.add(parse_category(fields[0]), parse_right(fields[1]),
                        Actor{parse_actor_kind(fields[2]), fields[3]});
        } catch (const std::exception& e) {
            throw ParseError("rights matrix row " + std::to_string(row) + ": " + e.what());
        }
    }
    return builder.build();
}

RightsMatrix load_rights_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return load_rights_matrix(in);
}

}  // namespace nrbs
