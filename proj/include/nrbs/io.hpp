#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nrbs/changes.hpp"
#include "nrbs/compiler.hpp"
#include "nrbs/model.hpp"
#include "nrbs/responsibility.hpp"

namespace nrbs {

struct UnknownUnit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedScale : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MixedPeriod : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownFormat : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "10^3 km2" -> area scale 3; "t" -> mass scale 0.
Unit parse_unit(const std::string& token);
std::string render_unit(const Unit& unit);

enum class Format { Text, Csv, JsonLines };
Format parse_format(const std::string& token);

/// Fixture CSV column order; "-" marks absent quantity/price fields.
extern const char* const kSheetCsvHeader;

/// Parse one fixture CSV stream into a compiled sheet. All rows must share
/// one region and date.
BalanceSheet load_sheet(std::istream& in);
BalanceSheet load_sheet_file(const std::string& path);

std::string render_sheet(const BalanceSheet& sheet, Format format);

std::string render_discrepancies(const std::vector<Discrepancy>& report, Format format);

/// Tables of per-item changes for one side (assets or liabilities).
std::string render_changes(const ItemChangeReport& report, Side side, Format format);
std::string render_summary(const SheetChangeSummary& summary, Format format);

std::string render_records(const std::vector<LiabilityRecord>& records, Format format);

/// Rights-matrix config: CSV columns category,right,actor_kind,actor_name;
/// '#' lines are comments.
RightsMatrix load_rights_matrix(std::istream& in);
RightsMatrix load_rights_matrix_file(const std::string& path);

}  // namespace nrbs
