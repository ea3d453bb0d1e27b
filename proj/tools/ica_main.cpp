// Command-line front end: parses inputs, selects coefficients, renders
// reports. Exit codes: 0 success, 2 unusable input or configuration,
// 3 a requested coefficient is not available (the report is still emitted).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ica/errors.hpp"
#include "ica/ingestion.hpp"
#include "ica/report_builders.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNotAvailable = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ica::ParseError("cannot read input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& bytes, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(bytes.data(), 1, bytes.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ica::ParseError("cannot write output file '" + out_path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

bool looks_like_project_json(const std::string& text) {
    for (const char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        return c == '{';
    }
    return false;
}

int precision_from_env() {
    const char* raw = std::getenv("ICA_REPORT_PRECISION");
    if (!raw || !*raw) return 3;
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (!end || *end != '\0' || value < 0 || value > 15)
        throw ica::ConfigError("ICA_REPORT_PRECISION must be an integer between 0 and 15");
    return static_cast<int>(value);
}

ica::ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ica::ReportFormat::json;
    if (name == "markdown") return ica::ReportFormat::markdown;
    throw ica::ConfigError("unknown format '" + name + "' (use json or markdown)");
}

int emit(const ica::Report& report, const std::string& format, const std::string& out_path) {
    ica::RenderOptions options;
    options.precision = precision_from_env();
    write_output(ica::render_report(report, parse_format(format), options), out_path);
    return report.has_not_available() ? kExitNotAvailable : kExitOk;
}

// label=value pairs from --values, completed by parsing numeric category
// tokens; a category with no number anywhere is a configuration error.
std::map<std::string, double> numeric_values(const std::vector<std::string>& overrides,
                                             const std::vector<std::string>& categories) {
    std::map<std::string, double> values;
    for (const std::string& pair : overrides) {
        const std::size_t eq = pair.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ica::ConfigError("--values entries look like label=number, got '" + pair + "'");
        char* end = nullptr;
        const std::string number = pair.substr(eq + 1);
        const double value = std::strtod(number.c_str(), &end);
        if (!end || *end != '\0' || number.empty())
            throw ica::ConfigError("--values entry '" + pair + "' has no numeric value");
        values[pair.substr(0, eq)] = value;
    }
    for (const std::string& category : categories) {
        if (values.contains(category)) continue;
        char* end = nullptr;
        const double value = std::strtod(category.c_str(), &end);
        if (!end || *end != '\0' || category.empty())
            throw ica::ConfigError("metric needs a numeric value for category '" + category +
                                   "'; pass --values " + category + "=<number>");
        values[category] = value;
    }
    return values;
}

struct CommonOutput {
    std::string format = "json";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, CommonOutput& output) {
    cmd->add_option("--format", output.format, "Report format: json or markdown")
        ->capture_default_str();
    cmd->add_option("-o,--output", output.out_path, "Write the report to a file");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inter-coder agreement coefficients for qualitative coding data"};
    app.require_subcommand(1);

    // classic
    auto* classic = app.add_subcommand(
        "classic", "Percent agreement, Scott's pi, Cohen's kappa, Fleiss' kappa, Holsti");
    std::string classic_input;
    classic->add_option("input", classic_input, "Reliability CSV (or project JSON for --holsti)")
        ->required();
    bool f_all = false, f_percent = false, f_pi = false, f_kappa = false, f_fleiss = false,
         f_holsti = false;
    classic->add_flag("--all", f_all, "Every coefficient the input supports");
    classic->add_flag("--percent", f_percent, "Percent agreement");
    classic->add_flag("--pi", f_pi, "Scott's pi");
    classic->add_flag("--kappa", f_kappa, "Cohen's kappa");
    classic->add_flag("--fleiss", f_fleiss, "Fleiss' kappa");
    classic->add_flag("--holsti", f_holsti, "Holsti index (span data only)");
    CommonOutput classic_output;
    add_output_options(classic, classic_output);

    // alpha
    auto* alpha = app.add_subcommand("alpha", "Universal Krippendorff alpha over a reliability CSV");
    std::string alpha_input, alpha_metric = "discrete";
    std::vector<std::string> alpha_values;
    bool alpha_degrees = false;
    alpha->add_option("input", alpha_input, "Reliability CSV")->required();
    alpha->add_option("--metric", alpha_metric, "discrete, interval or angular")
        ->capture_default_str();
    alpha->add_option("--values", alpha_values,
                      "label=number assignments for interval/angular metrics");
    alpha->add_flag("--degrees", alpha_degrees, "Angular values are degrees, not radians");
    CommonOutput alpha_output;
    add_output_options(alpha, alpha_output);

    // variants
    auto* variants =
        app.add_subcommand("variants", "Alpha variants over a project file (binary/cu/Cu/global)");
    std::string variants_input;
    std::vector<std::string> variant_domains;
    bool all_domains = false, v_binary = false, v_cu = false, v_Cu = false, v_global = false;
    variants->add_option("input", variants_input, "Project JSON")->required();
    variants->add_option("--domain", variant_domains, "Domain id to analyze (repeatable)");
    variants->add_flag("--all-domains", all_domains, "Analyze every codebook domain");
    variants->add_flag("--binary", v_binary, "Per-domain binary alpha");
    variants->add_flag("--cu", v_cu, "Per-domain code agreement (cu-alpha)");
    variants->add_flag("--Cu", v_Cu, "Global domain-choice agreement (Cu-alpha)");
    variants->add_flag("--global", v_global, "Global relevant-matter alpha");
    CommonOutput variants_output;
    add_output_options(variants, variants_output);

    // report
    auto* full = app.add_subcommand("report", "Full report for a CSV or project file");
    std::string report_input;
    full->add_option("input", report_input, "Reliability CSV or project JSON")->required();
    CommonOutput report_output;
    add_output_options(full, report_output);

    // validate
    auto* validate = app.add_subcommand("validate", "Structural validation of an input file");
    std::string validate_input;
    validate->add_option("input", validate_input, "Reliability CSV or project JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (classic->parsed()) {
            const std::string text = read_file(classic_input);
            if (looks_like_project_json(text)) {
                if (f_percent || f_pi || f_kappa || f_fleiss)
                    throw ica::UnsupportedError(
                        "percent/pi/kappa/fleiss need a reliability CSV; project files support "
                        "--holsti");
                if (!f_holsti && !f_all)
                    throw ica::UnsupportedError("project input: pass --holsti (or --all)");
                const ica::ParsedProject parsed = ica::parse_project(text);
                return emit(ica::build_holsti_report(parsed.project, classic_input),
                            classic_output.format, classic_output.out_path);
            }
            if (f_holsti)
                throw ica::UnsupportedError(
                    "the Holsti index needs span data; provide a project JSON file");
            const ica::NominalRatings ratings = ica::parse_reliability_csv(text);
            ica::ClassicSelection selection{f_percent, f_pi, f_kappa, f_fleiss};
            if (f_all || !selection.any()) selection = ica::ClassicSelection::all();
            return emit(ica::build_classic_report(ratings, selection, classic_input),
                        classic_output.format, classic_output.out_path);
        }

        if (alpha->parsed()) {
            const ica::NominalRatings ratings = ica::parse_reliability_csv(read_file(alpha_input));
            ica::LabelMetric metric = ica::LabelMetric::discrete();
            if (alpha_metric == "discrete") {
                if (alpha_degrees)
                    throw ica::ConfigError("--degrees applies to the angular metric");
            } else if (alpha_metric == "interval") {
                if (alpha_degrees)
                    throw ica::ConfigError("--degrees applies to the angular metric");
                std::map<std::string, std::vector<double>> values;
                for (const auto& [label, value] : numeric_values(alpha_values, ratings.categories))
                    values.emplace(label, std::vector<double>{value});
                metric = ica::LabelMetric::interval(std::move(values));
            } else if (alpha_metric == "angular") {
                metric = ica::LabelMetric::angular(numeric_values(alpha_values, ratings.categories),
                                                   alpha_degrees);
            } else {
                throw ica::ConfigError("unknown metric '" + alpha_metric +
                                       "' (use discrete, interval or angular)");
            }
            return emit(ica::build_alpha_report(ratings, metric, alpha_input),
                        alpha_output.format, alpha_output.out_path);
        }

        if (variants->parsed()) {
            const ica::ParsedProject parsed = ica::parse_project(read_file(variants_input));
            ica::VariantSelection selection;
            if (!all_domains) selection.domains = variant_domains;
            selection.binary = v_binary;
            selection.cu = v_cu;
            selection.Cu = v_Cu;
            selection.global = v_global;
            return emit(ica::build_variants_report(parsed.project, selection, variants_input),
                        variants_output.format, variants_output.out_path);
        }

        if (full->parsed()) {
            const std::string text = read_file(report_input);
            if (looks_like_project_json(text)) {
                const ica::ParsedProject parsed = ica::parse_project(text);
                return emit(ica::build_project_report(parsed.project, report_input),
                            report_output.format, report_output.out_path);
            }
            return emit(ica::build_csv_report(ica::parse_reliability_csv(text), report_input),
                        report_output.format, report_output.out_path);
        }

        if (validate->parsed()) {
            const std::string text = read_file(validate_input);
            if (looks_like_project_json(text)) {
                const ica::ParsedProject parsed = ica::parse_project_text(text);
                const ica::ValidationReport report = ica::validate_project(parsed);
                for (const auto& violation : report.violations)
                    std::cout << "[" << violation.rule << "] " << violation.message << "\n";
                if (report.valid()) {
                    std::cout << "valid\n";
                    return kExitOk;
                }
                std::cout << report.violations.size() << " violation(s)\n";
                return kExitNotAvailable;
            }
            ica::parse_reliability_csv(text);
            std::cout << "valid\n";
            return kExitOk;
        }
    } catch (const ica::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ica::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ica::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
