#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nrbs/changes.hpp"
#include "nrbs/compiler.hpp"
#include "nrbs/io.hpp"
#include "nrbs/responsibility.hpp"

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

nrbs::Money parse_billions(const std::string& text) {
    return nrbs::Money::from_billions(nrbs::Decimal::parse(text));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regional natural resource balance sheet compiler"};
    app.require_subcommand(1);

    std::string input, opening, closing, out_dir, regime, format_token = "text";
    std::string gdp_open_text, gdp_close_text;
    double rel_tol = 0.01;

    auto* compile = app.add_subcommand("compile", "Compile a balance sheet from a fixture CSV");
    compile->add_option("--input", input, "fixture CSV")->required();
    compile->add_option("--out", out_dir, "output directory (sheet.csv, totals.txt)");
    compile->add_option("--format", format_token, "stdout format: text|csv|json-lines");

    auto* validate = app.add_subcommand("validate", "Report internal inconsistencies");
    validate->add_option("--input", input, "fixture CSV")->required();
    validate->add_option("--rel-tol", rel_tol, "relative tolerance (default 0.01)");
    validate->add_option("--out", out_dir, "output directory (discrepancies.csv)");

    auto* changes = app.add_subcommand("changes", "Inter-period change reports");
    changes->add_option("--opening", opening, "opening fixture CSV")->required();
    changes->add_option("--closing", closing, "closing fixture CSV")->required();
    changes->add_option("--gdp-open", gdp_open_text, "opening GDP, billion yuan")->required();
    changes->add_option("--gdp-close", gdp_close_text, "closing GDP, billion yuan")->required();
    changes->add_option("--out", out_dir,
                        "output directory (asset_changes.csv, liability_changes.csv, summary.csv)");

    auto* assign = app.add_subcommand("assign", "Build liability responsibility records");
    assign->add_option("--input", input, "fixture CSV")->required();
    assign->add_option("--regime", regime, "rights-matrix config CSV")->required();
    assign->add_option("--out", out_dir, "output directory (records.csv, rights_matrix.txt)");

    auto* render = app.add_subcommand("render", "Render a sheet in a given format");
    render->add_option("--input", input, "fixture CSV")->required();
    render->add_option("--format", format_token, "text|csv|json-lines");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << '\n';
        return 1;
    }

    try {
        if (*compile || *render) {
            auto sheet = nrbs::load_sheet_file(input);
            std::cout << nrbs::render_sheet(sheet, nrbs::parse_format(format_token));
            if (*compile && !out_dir.empty()) {
                write_file(fs::path(out_dir) / "sheet.csv",
                           nrbs::render_sheet(sheet, nrbs::Format::Csv));
                std::string totals = "Total Assets: " + sheet.totals.asset_total.billions_str() +
                                     "\nTotal Liabilities: " +
                                     sheet.totals.liability_total.billions_str() +
                                     "\nNet Worth: " + sheet.totals.net_worth.billions_str() +
                                     "\n";
                write_file(fs::path(out_dir) / "totals.txt", totals);
            }
        } else if (*validate) {
            auto sheet = nrbs::load_sheet_file(input);
            auto report = nrbs::validate_consistency(sheet, rel_tol);
            std::cout << nrbs::render_discrepancies(report, nrbs::Format::Text);
            if (!out_dir.empty())
                write_file(fs::path(out_dir) / "discrepancies.csv",
                           nrbs::render_discrepancies(report, nrbs::Format::Csv));
        } else if (*changes) {
            auto open_sheet = nrbs::load_sheet_file(opening);
            auto close_sheet = nrbs::load_sheet_file(closing);
            auto gdp_open = parse_billions(gdp_open_text);
            auto gdp_close = parse_billions(gdp_close_text);
            auto items = nrbs::item_change_report(open_sheet, close_sheet);
            auto summary = nrbs::sheet_change(open_sheet, close_sheet, gdp_open, gdp_close);
            std::cout << nrbs::render_summary(summary, nrbs::Format::Text);
            if (!out_dir.empty()) {
                write_file(fs::path(out_dir) / "asset_changes.csv",
                           nrbs::render_changes(items, nrbs::Side::Asset, nrbs::Format::Csv));
                write_file(fs::path(out_dir) / "liability_changes.csv",
                           nrbs::render_changes(items, nrbs::Side::Liability, nrbs::Format::Csv));
                write_file(fs::path(out_dir) / "summary.csv",
                           nrbs::render_summary(summary, nrbs::Format::Csv));
            }
        } else if (*assign) {
            auto sheet = nrbs::load_sheet_file(input);
            auto matrix = nrbs::load_rights_matrix_file(regime);
            auto records = nrbs::build_records(sheet);
            std::cout << nrbs::render_records(records, nrbs::Format::Text);
            if (!out_dir.empty()) {
                write_file(fs::path(out_dir) / "records.csv",
                           nrbs::render_records(records, nrbs::Format::Csv));
                write_file(fs::path(out_dir) / "rights_matrix.txt", nrbs::rights_report(matrix));
            }
        }
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
