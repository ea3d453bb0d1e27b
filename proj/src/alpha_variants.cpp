#include "ica/alpha_variants.hpp"

#include <algorithm>
#include <set>

#include "ica/errors.hpp"

namespace ica {

namespace {

std::string segment_item_id(const SegmentedDocument& document, const Segment& segment) {
    return document.document_id + ":" + std::to_string(segment.span.start) + "-" +
           std::to_string(segment.span.end);
}

const SemanticDomain& require_domain(const Codebook& codebook, const std::string& domain_id) {
    const SemanticDomain* domain = codebook.find_domain(domain_id);
    if (!domain) throw ConfigError("unknown domain id '" + domain_id + "'");
    return *domain;
}

} // namespace

std::string variant_kind_name(VariantSpec::Kind kind) {
    switch (kind) {
    case VariantSpec::Kind::global_binary: return "alpha_binary_gl";
    case VariantSpec::Kind::domain_binary: return "alpha_binary";
    case VariantSpec::Kind::cu: return "cu_alpha";
    case VariantSpec::Kind::Cu: return "Cu_alpha";
    }
    return "";
}

LabelledJudgements relabel_global_binary(const Segmentation& segmentation) {
    LabelledJudgements judgements({"1", "0"});
    for (const auto& document : segmentation.documents)
        for (const auto& segment : document.segments) {
            const std::string item = segment_item_id(document, segment);
            judgements.set_weight(item, static_cast<double>(segment.span.length()));
            for (std::size_t c = 0; c < segmentation.coder_ids.size(); ++c) {
                const std::size_t label = segment.codes_per_coder[c].empty() ? 1u : 0u;
                judgements.add_judgement(segmentation.coder_ids[c], item, {label});
            }
        }
    return judgements;
}

LabelledJudgements relabel_domain_binary(const Segmentation& segmentation,
                                         const Codebook& codebook,
                                         const std::string& domain_id) {
    const SemanticDomain& domain = require_domain(codebook, domain_id);
    std::set<std::string> domain_codes;
    for (const auto& code : domain.codes) domain_codes.insert(code.id);

    LabelledJudgements judgements({"1", "0"});
    for (const auto& document : segmentation.documents)
        for (const auto& segment : document.segments) {
            const std::string item = segment_item_id(document, segment);
            judgements.set_weight(item, static_cast<double>(segment.span.length()));
            for (std::size_t c = 0; c < segmentation.coder_ids.size(); ++c) {
                const bool voted =
                    std::any_of(segment.codes_per_coder[c].begin(),
                                segment.codes_per_coder[c].end(),
                                [&](const std::string& code) { return domain_codes.contains(code); });
                judgements.add_judgement(segmentation.coder_ids[c], item,
                                         {voted ? std::size_t{0} : std::size_t{1}});
            }
        }
    return judgements;
}

LabelledJudgements relabel_cu(const Segmentation& segmentation, const Codebook& codebook,
                              const std::string& domain_id) {
    const SemanticDomain& domain = require_domain(codebook, domain_id);
    std::vector<std::string> labels;
    for (const auto& code : domain.codes) labels.push_back(code.id);

    LabelledJudgements judgements(labels);
    for (const auto& document : segmentation.documents)
        for (const auto& segment : document.segments) {
            const std::string item = segment_item_id(document, segment);
            for (std::size_t c = 0; c < segmentation.coder_ids.size(); ++c) {
                // Mutual exclusivity guarantees at most one code of the domain.
                for (std::size_t l = 0; l < labels.size(); ++l) {
                    const auto& applied = segment.codes_per_coder[c];
                    if (std::find(applied.begin(), applied.end(), labels[l]) != applied.end()) {
                        judgements.set_weight(item, static_cast<double>(segment.span.length()));
                        judgements.add_judgement(segmentation.coder_ids[c], item, {l});
                        break;
                    }
                }
            }
        }
    return judgements;
}

LabelledJudgements relabel_Cu(const Segmentation& segmentation, const Codebook& codebook) {
    std::vector<std::string> labels;
    for (const auto& domain : codebook.domains) labels.push_back(domain.id);

    LabelledJudgements judgements(labels);
    for (const auto& document : segmentation.documents)
        for (const auto& segment : document.segments) {
            const std::string item = segment_item_id(document, segment);
            for (std::size_t c = 0; c < segmentation.coder_ids.size(); ++c) {
                std::vector<std::size_t> chosen;
                for (const auto& code_id : segment.codes_per_coder[c]) {
                    const SemanticDomain* domain = codebook.domain_of_code(code_id);
                    if (!domain) continue;
                    for (std::size_t l = 0; l < labels.size(); ++l)
                        if (labels[l] == domain->id) {
                            chosen.push_back(l);
                            break;
                        }
                }
                if (!chosen.empty()) {
                    judgements.set_weight(item, static_cast<double>(segment.span.length()));
                    judgements.add_judgement(segmentation.coder_ids[c], item, std::move(chosen));
                }
            }
        }
    return judgements;
}

AgreementResult compute_variant(const CodingProject& project, const VariantSpec& spec,
                                const LabelMetric& metric, CoincidenceMatrices* out_matrices) {
    const Segmentation segmentation = unitize(project);
    LabelledJudgements judgements = [&] {
        switch (spec.kind) {
        case VariantSpec::Kind::global_binary: return relabel_global_binary(segmentation);
        case VariantSpec::Kind::domain_binary:
            return relabel_domain_binary(segmentation, project.codebook, spec.domain_id);
        case VariantSpec::Kind::cu:
            return relabel_cu(segmentation, project.codebook, spec.domain_id);
        case VariantSpec::Kind::Cu: return relabel_Cu(segmentation, project.codebook);
        }
        throw ConfigError("unknown variant kind");
    }();
    return universal_alpha(judgements, metric, out_matrices);
}

CodingProject filter_to_domains(const CodingProject& project,
                                const std::vector<std::string>& domain_ids) {
    std::set<std::string> keep;
    for (const auto& domain_id : domain_ids) {
        require_domain(project.codebook, domain_id);
        keep.insert(domain_id);
    }

    CodingProject filtered;
    filtered.codebook.version = project.codebook.version;
    filtered.codebook.description = project.codebook.description;
    std::set<std::string> kept_codes;
    for (const auto& domain : project.codebook.domains)
        if (keep.contains(domain.id)) {
            filtered.codebook.domains.push_back(domain);
            for (const auto& code : domain.codes) kept_codes.insert(code.id);
        }

    filtered.coders = project.coders;
    filtered.documents = project.documents;
    filtered.quotations = project.quotations;
    for (const auto& application : project.applications)
        if (kept_codes.contains(application.code_id)) filtered.applications.push_back(application);
    return filtered;
}

} // namespace ica
