#include "nrbs/model.hpp"

#include <array>
#include <charconv>

namespace nrbs {

std::string to_string(Side s) { return s == Side::Asset ? "Asset" : "Liability"; }

std::string to_string(Category c) {
    switch (c) {
        case Category::Land: return "Land";
        case Category::Energy: return "Energy";
        case Category::Minerals: return "Minerals";
        case Category::Water: return "Water";
        case Category::Forests: return "Forests";
        case Category::ResourceOverexploitation: return "ResourceOverexploitation";
        case Category::EnvironmentalPollution: return "EnvironmentalPollution";
        case Category::EcologicalDegradation: return "EcologicalDegradation";
    }
    return "?";
}

std::string to_string(ValuationMethod m) {
    switch (m) {
        case ValuationMethod::Ica: return "ICA";
        case ValuationMethod::Market: return "MARKET";
        case ValuationMethod::Replacement: return "REPLACEMENT";
        case ValuationMethod::Abatement: return "ABATEMENT";
        case ValuationMethod::Aggregate: return "AGGREGATE";
    }
    return "?";
}

Side parse_side(const std::string& token) {
    if (token == "Asset") return Side::Asset;
    if (token == "Liability") return Side::Liability;
    throw ParseError("unknown side: " + token);
}

Category parse_category(const std::string& token) {
    static const std::array<Category, 8> all = {
        Category::Land,
        Category::Energy,
        Category::Minerals,
        Category::Water,
        Category::Forests,
        Category::ResourceOverexploitation,
        Category::EnvironmentalPollution,
        Category::EcologicalDegradation,
    };
    for (Category c : all)
        if (to_string(c) == token) return c;
    throw ParseError("unknown category: " + token);
}

ValuationMethod parse_method(const std::string& token) {
    static const std::array<ValuationMethod, 5> all = {
        ValuationMethod::Ica,         ValuationMethod::Market,
        ValuationMethod::Replacement, ValuationMethod::Abatement,
        ValuationMethod::Aggregate,
    };
    for (ValuationMethod m : all)
        if (to_string(m) == token) return m;
    throw ParseError("unknown valuation method: " + token);
}

const std::vector<Category>& categories_of(Side side) {
    static const std::vector<Category> assets = {
        Category::Land, Category::Energy, Category::Minerals,
        Category::Water, Category::Forests,
    };
    static const std::vector<Category> liabilities = {
        Category::ResourceOverexploitation,
        Category::EnvironmentalPollution,
        Category::EcologicalDegradation,
    };
    return side == Side::Asset ? assets : liabilities;
}

bool category_legal(Side side, Category category) {
    for (Category c : categories_of(side))
        if (c == category) return true;
    return false;
}

Date Date::parse(const std::string& iso) {
    Date d;
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
        throw ParseError("malformed date (want YYYY-MM-DD): " + iso);
    auto num = [&](size_t pos, size_t len, int& out) {
        auto res = std::from_chars(iso.data() + pos, iso.data() + pos + len, out);
        if (res.ec != std::errc{} || res.ptr != iso.data() + pos + len)
            throw ParseError("malformed date: " + iso);
    };
    num(0, 4, d.year);
    num(5, 2, d.month);
    num(8, 2, d.day);
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31)
        throw ParseError("date out of range: " + iso);
    return d;
}

std::string Date::str() const {
    char buf[11];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

}  // namespace nrbs
