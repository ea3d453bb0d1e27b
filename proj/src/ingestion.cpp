#include "ica/ingestion.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "ica/errors.hpp"

namespace ica {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string trim(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && (text[begin] == ' ' || text[begin] == '\t')) ++begin;
    while (end > begin && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
    return text.substr(begin, end - begin);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (const char c : line) {
        if (c == ',') {
            cells.push_back(trim(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    cells.push_back(trim(cell));
    return cells;
}

} // namespace

NominalRatings parse_reliability_csv(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream stream(text);
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw ParseError("reliability CSV is empty");

    const std::vector<std::string> header = split_line(lines[0]);
    if (header.empty() || header[0] != "coder")
        throw ParseError("reliability CSV must start with a 'coder,<item ids...>' header row");
    if (header.size() < 2) throw ParseError("reliability CSV header names no items");

    NominalRatings ratings;
    std::set<std::string> seen_items;
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i].empty())
            throw ParseError("reliability CSV header has an empty item id in column " +
                             std::to_string(i + 1));
        if (!seen_items.insert(header[i]).second)
            throw ParseError("reliability CSV header repeats item id '" + header[i] + "'");
        ratings.items.push_back(header[i]);
    }

    std::map<std::string, std::size_t> category_index;
    std::set<std::string> seen_coders;
    for (std::size_t row = 1; row < lines.size(); ++row) {
        const std::vector<std::string> cells = split_line(lines[row]);
        if (cells.size() != header.size())
            throw ParseError("reliability CSV row " + std::to_string(row + 1) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
        if (cells[0].empty())
            throw ParseError("reliability CSV row " + std::to_string(row + 1) +
                             " has an empty coder id");
        if (!seen_coders.insert(cells[0]).second)
            throw ParseError("reliability CSV repeats coder id '" + cells[0] + "'");

        ratings.coders.push_back(cells[0]);
        std::vector<std::optional<std::size_t>> row_ratings;
        for (std::size_t i = 1; i < cells.size(); ++i) {
            if (cells[i].empty()) {
                row_ratings.push_back(std::nullopt);
                continue;
            }
            const auto [it, inserted] =
                category_index.emplace(cells[i], category_index.size());
            if (inserted) ratings.categories.push_back(cells[i]);
            row_ratings.push_back(it->second);
        }
        ratings.ratings.push_back(std::move(row_ratings));
    }
    if (ratings.coders.empty()) throw ParseError("reliability CSV holds no coder rows");
    return ratings;
}

namespace {

const ordered_json& require_field(const ordered_json& object, const char* key,
                                  const std::string& where) {
    if (!object.is_object()) throw ParseError(where + " must be an object");
    const auto it = object.find(key);
    if (it == object.end()) throw ParseError(where + " is missing field '" + key + "'");
    return *it;
}

std::string require_string(const ordered_json& object, const char* key, const std::string& where) {
    const ordered_json& value = require_field(object, key, where);
    if (!value.is_string()) throw ParseError(where + "." + key + " must be a string");
    return value.get<std::string>();
}

std::string optional_string(const ordered_json& object, const char* key,
                            const std::string& fallback = "") {
    if (!object.is_object()) return fallback;
    const auto it = object.find(key);
    if (it == object.end()) return fallback;
    if (!it->is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
}

std::int64_t require_integer(const ordered_json& object, const char* key,
                             const std::string& where) {
    const ordered_json& value = require_field(object, key, where);
    if (!value.is_number_integer())
        throw ParseError(where + "." + key + " must be an integer");
    return value.get<std::int64_t>();
}

const ordered_json& require_array(const ordered_json& object, const char* key,
                                  const std::string& where) {
    const ordered_json& value = require_field(object, key, where);
    if (!value.is_array()) throw ParseError(where + "." + key + " must be an array");
    return value;
}

LabelMetric parse_metric(const ordered_json& spec) {
    const std::string kind = require_string(spec, "kind", "metric");
    if (kind == "discrete") return LabelMetric::discrete();

    if (kind == "interval") {
        const ordered_json& values = require_field(spec, "values", "metric");
        if (!values.is_object()) throw ParseError("metric.values must map labels to numbers");
        std::map<std::string, std::vector<double>> map;
        for (const auto& [label, value] : values.items()) {
            if (value.is_number()) {
                map.emplace(label, std::vector<double>{value.get<double>()});
            } else if (value.is_array()) {
                std::vector<double> vec;
                for (const auto& component : value) {
                    if (!component.is_number())
                        throw ParseError("metric.values." + label + " must hold numbers");
                    vec.push_back(component.get<double>());
                }
                map.emplace(label, std::move(vec));
            } else {
                throw ParseError("metric.values." + label + " must be a number or number array");
            }
        }
        return LabelMetric::interval(std::move(map));
    }

    if (kind == "angular") {
        const ordered_json& values = require_field(spec, "values", "metric");
        if (!values.is_object()) throw ParseError("metric.values must map labels to angles");
        bool degrees = false;
        if (const auto it = spec.find("degrees"); it != spec.end()) {
            if (!it->is_boolean()) throw ParseError("metric.degrees must be a boolean");
            degrees = it->get<bool>();
        }
        std::map<std::string, double> map;
        for (const auto& [label, value] : values.items()) {
            if (!value.is_number()) throw ParseError("metric.values." + label + " must be a number");
            map.emplace(label, value.get<double>());
        }
        return LabelMetric::angular(std::move(map), degrees);
    }

    if (kind == "custom") {
        const ordered_json& labels_json = require_array(spec, "labels", "metric");
        std::vector<std::string> labels;
        for (const auto& label : labels_json) {
            if (!label.is_string()) throw ParseError("metric.labels must hold strings");
            labels.push_back(label.get<std::string>());
        }
        const ordered_json& matrix_json = require_array(spec, "matrix", "metric");
        if (matrix_json.size() != labels.size())
            throw ParseError("metric.matrix must have one row per label");
        SquareMatrix distances(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            const ordered_json& row = matrix_json[i];
            if (!row.is_array() || row.size() != labels.size())
                throw ParseError("metric.matrix row " + std::to_string(i + 1) +
                                 " must hold one number per label");
            for (std::size_t j = 0; j < labels.size(); ++j) {
                if (!row[j].is_number())
                    throw ParseError("metric.matrix entries must be numbers");
                distances.at(i, j) = row[j].get<double>();
            }
        }
        return LabelMetric::custom_matrix(std::move(labels), std::move(distances));
    }

    throw ParseError("metric.kind must be one of discrete, interval, angular, custom");
}

} // namespace

ParsedProject parse_project_text(const std::string& text) {
    ordered_json root;
    try {
        root = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("project file is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("project file must hold a JSON object");

    ParsedProject parsed;
    CodingProject& project = parsed.project;

    const ordered_json& codebook = require_field(root, "codebook", "project");
    project.codebook.version = optional_string(codebook, "version");
    project.codebook.description = optional_string(codebook, "description");
    for (const ordered_json& domain_json : require_array(codebook, "domains", "codebook")) {
        SemanticDomain domain;
        domain.id = require_string(domain_json, "id", "domain");
        domain.name = optional_string(domain_json, "name", domain.id);
        for (const ordered_json& code_json : require_array(domain_json, "codes", "domain")) {
            Code code;
            code.id = require_string(code_json, "id", "code");
            code.name = optional_string(code_json, "name", code.id);
            domain.codes.push_back(std::move(code));
        }
        project.codebook.domains.push_back(std::move(domain));
    }

    for (const ordered_json& coder_json : require_array(root, "coders", "project")) {
        Coder coder;
        coder.id = require_string(coder_json, "id", "coder");
        coder.display_name = optional_string(coder_json, "display_name", coder.id);
        project.coders.push_back(std::move(coder));
    }

    for (const ordered_json& document_json : require_array(root, "documents", "project")) {
        Document document;
        document.id = require_string(document_json, "id", "document");
        document.length = require_integer(document_json, "length", "document");
        project.documents.push_back(std::move(document));
    }

    for (const ordered_json& quotation_json : require_array(root, "quotations", "project")) {
        Quotation quotation;
        quotation.id = require_string(quotation_json, "id", "quotation");
        quotation.document_id = require_string(quotation_json, "document_id", "quotation");
        quotation.span.start = require_integer(quotation_json, "start", "quotation");
        quotation.span.end = require_integer(quotation_json, "end", "quotation");
        project.quotations.push_back(std::move(quotation));
    }

    for (const ordered_json& application_json : require_array(root, "applications", "project")) {
        CodeApplication application;
        application.coder_id = require_string(application_json, "coder_id", "application");
        application.quotation_id = require_string(application_json, "quotation_id", "application");
        application.code_id = require_string(application_json, "code_id", "application");
        project.applications.push_back(std::move(application));
    }

    if (const auto it = root.find("metric"); it != root.end() && !it->is_null())
        parsed.metric = parse_metric(*it);
    return parsed;
}

ValidationReport validate_project(const ParsedProject& parsed) {
    ValidationReport report = validate_codebook(parsed.project.codebook);
    ValidationReport coding = validate_coding(parsed.project);
    report.violations.insert(report.violations.end(), coding.violations.begin(),
                             coding.violations.end());
    if (parsed.metric && parsed.metric->kind() != MetricKind::discrete) {
        const ValidationReport metric_report =
            validate_metric(*parsed.metric, parsed.metric->declared_labels());
        report.violations.insert(report.violations.end(), metric_report.violations.begin(),
                                 metric_report.violations.end());
    }
    return report;
}

ParsedProject parse_project(const std::string& text) {
    ParsedProject parsed = parse_project_text(text);
    const ValidationReport report = validate_project(parsed);
    if (!report.valid()) {
        std::string message = "project file is structurally invalid:";
        for (const Violation& violation : report.violations)
            message += "\n  [" + violation.rule + "] " + violation.message;
        throw ParseError(message);
    }
    return parsed;
}

bool Report::has_not_available() const {
    for (const auto& entry : coefficients)
        if (!entry.value) return true;
    return false;
}

CoefficientEntry coefficient_entry(std::string kind, std::string domain,
                                   const AgreementResult& result) {
    CoefficientEntry entry;
    entry.kind = std::move(kind);
    entry.domain = std::move(domain);
    entry.value = result.value;
    if (!result.value) entry.na_reason = na_reason_text(result.na_reason);
    entry.d_o = result.observed_disagreement;
    entry.d_e = result.expected_disagreement;
    entry.p_o = result.p_observed;
    entry.p_e = result.p_expected;
    entry.n_paired_items = result.n_paired_items;
    entry.verdict = verdict_text(result.value ? result.verdict : Verdict::not_available);
    return entry;
}

CoefficientEntry coefficient_entry(std::string kind, const ClassicResult& result) {
    CoefficientEntry entry;
    entry.kind = std::move(kind);
    entry.value = result.value;
    if (!result.value) entry.na_reason = result.na_reason;
    entry.p_o = result.p_observed;
    entry.p_e = result.p_chance;
    entry.band = result.band;
    if (result.items_used > 0 || result.items_excluded > 0) {
        entry.items_used = result.items_used;
        entry.items_excluded = result.items_excluded;
    }
    entry.verdict =
        result.value ? verdict_text(verdict_for(*result.value)) : verdict_text(Verdict::not_available);
    return entry;
}

std::string format_value(double value, int precision) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*f", precision, value);
    return buffer;
}

namespace {

// Counts render as integers, everything else at the configured precision.
std::string format_cell(double value, int precision) {
    if (value == std::floor(value) && std::abs(value) < 1e15) {
        char buffer[64];
        std::snprintf(buffer, sizeof(buffer), "%.0f", value);
        return buffer;
    }
    return format_value(value, precision);
}

} // namespace

namespace {

ordered_json entry_to_json(const CoefficientEntry& entry) {
    ordered_json json;
    json["kind"] = entry.kind;
    if (!entry.domain.empty()) json["domain"] = entry.domain;
    if (entry.value) {
        json["value"] = *entry.value;
    } else {
        json["na_reason"] = entry.na_reason;
    }
    if (entry.d_o) json["d_o"] = *entry.d_o;
    if (entry.d_e) json["d_e"] = *entry.d_e;
    if (entry.p_o) json["p_o"] = *entry.p_o;
    if (entry.p_e) json["p_e"] = *entry.p_e;
    if (entry.n_paired_items) json["n_paired_items"] = *entry.n_paired_items;
    if (entry.items_used) json["items_used"] = *entry.items_used;
    if (entry.items_excluded) json["items_excluded"] = *entry.items_excluded;
    json["verdict"] = entry.verdict;
    if (!entry.band.empty()) json["band"] = entry.band;
    json["warnings"] = entry.warnings;
    return json;
}

std::string render_json(const Report& report) {
    ordered_json json;
    json["source"] = report.source;
    json["total_units"] = report.total_units;
    json["coefficients"] = ordered_json::array();
    for (const auto& entry : report.coefficients)
        json["coefficients"].push_back(entry_to_json(entry));
    json["matrices"] = ordered_json::array();
    for (const auto& block : report.matrices) {
        ordered_json matrix;
        matrix["title"] = block.title;
        matrix["labels"] = block.labels;
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < block.values.size(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < block.values.size(); ++j)
                row.push_back(block.values.at(i, j));
            rows.push_back(std::move(row));
        }
        matrix["values"] = std::move(rows);
        json["matrices"].push_back(std::move(matrix));
    }
    json["coverage"] = ordered_json::array();
    for (const auto& row : report.coverage) {
        ordered_json coverage;
        coverage["coder"] = row.coder;
        coverage["code"] = row.code;
        coverage["units"] = row.units;
        coverage["fraction"] = row.fraction;
        json["coverage"].push_back(std::move(coverage));
    }
    json["warnings"] = report.warnings;
    return json.dump(2) + "\n";
}

std::string render_markdown(const Report& report, const RenderOptions& options) {
    std::ostringstream out;
    out << "# Inter-coder agreement report\n\n";
    out << "source: " << report.source << "\n";
    if (report.total_units > 0) out << "total units: " << report.total_units << "\n";
    out << "\n";

    if (!report.warnings.empty()) {
        out << "## Warnings\n\n";
        for (const auto& warning : report.warnings) out << "- " << warning << "\n";
        out << "\n";
    }

    out << "## Coefficients\n\n";
    out << "| coefficient | domain | value | verdict | details |\n";
    out << "|---|---|---|---|---|\n";
    for (const auto& entry : report.coefficients) {
        out << "| " << entry.kind << " | " << (entry.domain.empty() ? "-" : entry.domain)
            << " | ";
        if (entry.value) {
            out << format_value(*entry.value, options.precision);
        } else {
            out << "N/A (" << entry.na_reason << ")";
        }
        out << " | " << entry.verdict << " | ";
        std::vector<std::string> details;
        if (entry.d_o && entry.d_e && *entry.d_e != 0.0) {
            details.push_back("D_o=" + format_value(*entry.d_o, options.precision));
            details.push_back("D_e=" + format_value(*entry.d_e, options.precision));
        }
        if (entry.p_o) details.push_back("P_o=" + format_value(*entry.p_o, options.precision));
        if (entry.p_e) details.push_back("P_e=" + format_value(*entry.p_e, options.precision));
        if (entry.n_paired_items)
            details.push_back("paired items=" + std::to_string(*entry.n_paired_items));
        if (entry.items_excluded && *entry.items_excluded > 0)
            details.push_back("items excluded=" + std::to_string(*entry.items_excluded));
        if (!entry.band.empty()) details.push_back("band=" + entry.band);
        for (const auto& warning : entry.warnings) details.push_back("warning: " + warning);
        for (std::size_t i = 0; i < details.size(); ++i)
            out << (i ? ", " : "") << details[i];
        out << " |\n";
    }
    out << "\n";

    for (const auto& block : report.matrices) {
        out << "### " << block.title << "\n\n";
        out << "| |";
        for (const auto& label : block.labels) out << " " << label << " |";
        out << "\n|---|";
        for (std::size_t j = 0; j < block.labels.size(); ++j) out << "---|";
        out << "\n";
        for (std::size_t i = 0; i < block.values.size(); ++i) {
            out << "| " << block.labels[i] << " |";
            for (std::size_t j = 0; j < block.values.size(); ++j)
                out << " " << format_cell(block.values.at(i, j), options.precision) << " |";
            out << "\n";
        }
        out << "\n";
    }

    if (!report.coverage.empty()) {
        out << "## Coverage\n\n";
        out << "| coder | code | units | share |\n";
        out << "|---|---|---|---|\n";
        for (const auto& row : report.coverage)
            out << "| " << row.coder << " | " << row.code << " | " << row.units << " | "
                << format_value(100.0 * row.fraction, 3) << "% |\n";
        out << "\n";
    }
    return out.str();
}

} // namespace

std::string render_report(const Report& report, ReportFormat format,
                          const RenderOptions& options) {
    return format == ReportFormat::json ? render_json(report) : render_markdown(report, options);
}

} // namespace ica
