#pragma once
// File formats in, reports out. Two inputs: a flat reliability CSV for
// single-label nominal data, and a JSON project file for span-based coding
// data. One output: a Report rendered as JSON or markdown, byte-stable for
// identical input.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ica/alpha_engine.hpp"
#include "ica/classic.hpp"
#include "ica/core_model.hpp"
#include "ica/metrics.hpp"

namespace ica {

// CSV layout: first row "coder,<item ids...>", one row per coder, cells hold
// a category token or nothing. Categories are inferred from the distinct
// tokens in row-major first-seen order.
NominalRatings parse_reliability_csv(const std::string& text);

struct ParsedProject {
    CodingProject project;
    std::optional<LabelMetric> metric;
};

// Schema check only: shapes, types, field names. Throws ParseError.
ParsedProject parse_project_text(const std::string& text);

// Structural validation of a parsed project (codebook rules + coding rules +
// metric axioms when a metric is present).
ValidationReport validate_project(const ParsedProject& parsed);

// parse + validate; throws ParseError listing every violation when invalid.
ParsedProject parse_project(const std::string& text);

enum class ReportFormat { json, markdown };

struct RenderOptions {
    int precision = 3; // printed decimals in markdown; stored values unaffected
};

struct CoefficientEntry {
    std::string kind;   // "percent_agreement", "alpha_binary", ...
    std::string domain; // empty for global/flat coefficients
    std::optional<double> value;
    std::string na_reason; // set iff value is empty
    std::optional<double> d_o, d_e;
    std::optional<double> p_o, p_e;
    std::optional<std::int64_t> n_paired_items;
    std::optional<std::int64_t> items_used, items_excluded;
    std::string verdict;
    std::string band; // Landis-Koch, kappa entries only
    std::vector<std::string> warnings;
};

struct MatrixBlock {
    std::string title;
    std::vector<std::string> labels;
    SquareMatrix values;
};

struct CoverageRow {
    std::string coder;
    std::string code;
    std::int64_t units = 0;
    double fraction = 0.0; // units / corpus length
};

struct Report {
    std::string source;
    std::vector<CoefficientEntry> coefficients;
    std::vector<MatrixBlock> matrices;
    std::vector<CoverageRow> coverage;
    std::vector<std::string> warnings;
    std::int64_t total_units = 0; // corpus length; 0 for flat CSV inputs

    bool has_not_available() const;
};

CoefficientEntry coefficient_entry(std::string kind, std::string domain,
                                   const AgreementResult& result);
CoefficientEntry coefficient_entry(std::string kind, const ClassicResult& result);

// Deterministic rendering: same report, same options, same bytes.
std::string render_report(const Report& report, ReportFormat format,
                          const RenderOptions& options = {});

// Fixed-decimal formatting used by the markdown renderer.
std::string format_value(double value, int precision);

} // namespace ica
