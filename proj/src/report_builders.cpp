#include "ica/report_builders.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "ica/alpha_variants.hpp"
#include "ica/errors.hpp"

namespace ica {

namespace {

LabelledJudgements judgements_from_ratings(const NominalRatings& ratings) {
    LabelledJudgements judgements(ratings.categories);
    for (std::size_t item = 0; item < ratings.item_count(); ++item) {
        for (std::size_t coder = 0; coder < ratings.coder_count(); ++coder)
            if (const auto& rating = ratings.ratings[coder][item])
                judgements.add_judgement(ratings.coders[coder], ratings.items[item], {*rating});
    }
    return judgements;
}

void append_coincidence_blocks(Report& report, const std::string& prefix,
                               const std::vector<std::string>& labels,
                               const CoincidenceMatrices& matrices, bool expected_valid) {
    report.matrices.push_back({prefix + " observed coincidences", labels, matrices.observed});
    if (expected_valid)
        report.matrices.push_back({prefix + " expected coincidences", labels, matrices.expected});
}

std::int64_t corpus_length(const CodingProject& project) {
    std::int64_t total = 0;
    for (const auto& document : project.documents) total += document.length;
    return total;
}

// Selected ids in codebook order; unknown ids throw ConfigError.
std::vector<std::string> resolve_selection(const Codebook& codebook,
                                           const std::vector<std::string>& requested) {
    if (requested.empty()) {
        std::vector<std::string> all;
        for (const auto& domain : codebook.domains) all.push_back(domain.id);
        return all;
    }
    std::set<std::string> wanted;
    for (const auto& domain_id : requested) {
        if (!codebook.find_domain(domain_id))
            throw ConfigError("unknown domain id '" + domain_id + "'");
        wanted.insert(domain_id);
    }
    std::vector<std::string> ordered;
    for (const auto& domain : codebook.domains)
        if (wanted.contains(domain.id)) ordered.push_back(domain.id);
    return ordered;
}

} // namespace

Report build_classic_report(const NominalRatings& ratings, const ClassicSelection& selection,
                            std::string source) {
    Report report;
    report.source = std::move(source);
    const ClassicSelection wanted = selection.any() ? selection : ClassicSelection::all();

    if (wanted.percent)
        report.coefficients.push_back(
            coefficient_entry("percent_agreement", percent_agreement(ratings)));
    if (wanted.pi) report.coefficients.push_back(coefficient_entry("scott_pi", scott_pi(ratings)));
    if (wanted.kappa)
        report.coefficients.push_back(coefficient_entry("cohen_kappa", cohen_kappa(ratings)));
    if (wanted.fleiss)
        report.coefficients.push_back(coefficient_entry("fleiss_kappa", fleiss_kappa(ratings)));

    if ((wanted.pi || wanted.kappa) && ratings.coder_count() == 2) {
        const ContingencyMatrix contingency = contingency_matrix(ratings);
        report.matrices.push_back(
            {"contingency matrix", contingency.categories, contingency.counts});
    }
    return report;
}

Report build_holsti_report(const CodingProject& project, std::string source) {
    if (project.coders.size() != 2)
        throw UnsupportedError("Holsti index needs exactly two coders, got " +
                               std::to_string(project.coders.size()));
    Report report;
    report.source = std::move(source);
    report.total_units = corpus_length(project);
    report.coefficients.push_back(
        coefficient_entry("holsti", holsti_index(coded_spans(project, project.coders[0].id),
                                                 coded_spans(project, project.coders[1].id))));
    return report;
}

Report build_alpha_report(const NominalRatings& ratings, const LabelMetric& metric,
                          std::string source) {
    Report report;
    report.source = std::move(source);
    const LabelledJudgements judgements = judgements_from_ratings(ratings);
    CoincidenceMatrices matrices;
    const AgreementResult result = universal_alpha(judgements, metric, &matrices);
    report.coefficients.push_back(coefficient_entry("alpha", "", result));
    const bool expected_valid = result.na_reason == NaReason::none ||
                                result.na_reason == NaReason::single_label;
    append_coincidence_blocks(report, "alpha", judgements.labels(), matrices, expected_valid);
    return report;
}

Report build_variants_report(const CodingProject& project, const VariantSelection& selection,
                             std::string source) {
    Report report;
    report.source = std::move(source);
    report.total_units = corpus_length(project);

    const std::vector<std::string> selected =
        resolve_selection(project.codebook, selection.domains);
    const bool subset = selected.size() < project.codebook.domains.size();
    const bool want_all = !selection.any();
    if (subset) report.warnings.push_back(kSubsetWarning);

    for (const auto& domain_id : selected) {
        if (selection.binary || want_all)
            report.coefficients.push_back(coefficient_entry(
                "alpha_binary", domain_id,
                compute_variant(project, VariantSpec::domain_binary(domain_id))));
        if (selection.cu || want_all)
            report.coefficients.push_back(coefficient_entry(
                "cu_alpha", domain_id, compute_variant(project, VariantSpec::cu(domain_id))));
    }

    if (selection.global || selection.Cu || want_all) {
        const CodingProject scoped = subset ? filter_to_domains(project, selected) : project;
        if (selection.global || want_all) {
            CoefficientEntry entry = coefficient_entry(
                "alpha_binary_gl", "", compute_variant(scoped, VariantSpec::global_binary()));
            if (subset) entry.warnings.push_back(kSubsetWarning);
            report.coefficients.push_back(std::move(entry));
        }
        if (selection.Cu || want_all) {
            CoefficientEntry entry =
                coefficient_entry("Cu_alpha", "", compute_variant(scoped, VariantSpec::Cu()));
            if (subset) entry.warnings.push_back(kSubsetWarning);
            report.coefficients.push_back(std::move(entry));
        }
    }
    return report;
}

Report build_project_report(const CodingProject& project, std::string source) {
    Report report;
    report.source = std::move(source);
    report.total_units = corpus_length(project);

    auto add_variant = [&](const std::string& kind, const std::string& domain,
                           const VariantSpec& spec, const std::vector<std::string>& labels) {
        CoincidenceMatrices matrices;
        const AgreementResult result = compute_variant(project, spec, LabelMetric::discrete(),
                                                       &matrices);
        report.coefficients.push_back(coefficient_entry(kind, domain, result));
        const std::string prefix = domain.empty() ? kind : kind + " " + domain;
        const bool expected_valid = result.na_reason == NaReason::none ||
                                    result.na_reason == NaReason::single_label;
        append_coincidence_blocks(report, prefix, labels, matrices, expected_valid);
    };

    const std::vector<std::string> binary_labels{"1", "0"};
    for (const auto& domain : project.codebook.domains) {
        add_variant("alpha_binary", domain.id, VariantSpec::domain_binary(domain.id),
                    binary_labels);
        std::vector<std::string> code_labels;
        for (const auto& code : domain.codes) code_labels.push_back(code.id);
        add_variant("cu_alpha", domain.id, VariantSpec::cu(domain.id), code_labels);
    }
    add_variant("alpha_binary_gl", "", VariantSpec::global_binary(), binary_labels);
    std::vector<std::string> domain_labels;
    for (const auto& domain : project.codebook.domains) domain_labels.push_back(domain.id);
    add_variant("Cu_alpha", "", VariantSpec::Cu(), domain_labels);

    if (project.coders.size() == 2)
        report.coefficients.push_back(
            coefficient_entry("holsti", holsti_index(coded_spans(project, project.coders[0].id),
                                                     coded_spans(project, project.coders[1].id))));

    const double corpus = static_cast<double>(report.total_units);
    for (const auto& coder : project.coders)
        for (const auto& domain : project.codebook.domains)
            for (const auto& code : domain.codes) {
                std::int64_t units = 0;
                for (const auto& application : project.applications) {
                    if (application.coder_id != coder.id || application.code_id != code.id)
                        continue;
                    if (const Quotation* quotation =
                            project.find_quotation(application.quotation_id))
                        units += quotation->span.length();
                }
                if (units > 0)
                    report.coverage.push_back(
                        {coder.id, code.id, units, corpus > 0.0 ? units / corpus : 0.0});
            }
    return report;
}

Report build_csv_report(const NominalRatings& ratings, std::string source) {
    Report report = build_classic_report(ratings, ClassicSelection::all(), source);
    Report alpha = build_alpha_report(ratings, LabelMetric::discrete(), source);
    for (auto& entry : alpha.coefficients) report.coefficients.push_back(std::move(entry));
    for (auto& block : alpha.matrices) report.matrices.push_back(std::move(block));
    return report;
}

} // namespace ica
