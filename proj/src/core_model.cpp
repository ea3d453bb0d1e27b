#include "ica/core_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace ica {

const SemanticDomain* Codebook::find_domain(const std::string& domain_id) const {
    for (const auto& domain : domains)
        if (domain.id == domain_id) return &domain;
    return nullptr;
}

const SemanticDomain* Codebook::domain_of_code(const std::string& code_id) const {
    for (const auto& domain : domains)
        for (const auto& code : domain.codes)
            if (code.id == code_id) return &domain;
    return nullptr;
}

const Code* Codebook::find_code(const std::string& code_id) const {
    for (const auto& domain : domains)
        for (const auto& code : domain.codes)
            if (code.id == code_id) return &code;
    return nullptr;
}

const Coder* CodingProject::find_coder(const std::string& coder_id) const {
    for (const auto& coder : coders)
        if (coder.id == coder_id) return &coder;
    return nullptr;
}

const Document* CodingProject::find_document(const std::string& document_id) const {
    for (const auto& document : documents)
        if (document.id == document_id) return &document;
    return nullptr;
}

const Quotation* CodingProject::find_quotation(const std::string& quotation_id) const {
    for (const auto& quotation : quotations)
        if (quotation.id == quotation_id) return &quotation;
    return nullptr;
}

ValidationReport validate_codebook(const Codebook& codebook) {
    ValidationReport report;
    std::set<std::string> domain_ids;
    std::map<std::string, std::string> code_owner; // code id -> first domain id

    for (const auto& domain : codebook.domains) {
        if (!domain_ids.insert(domain.id).second)
            report.add("duplicate-domain-id", "domain id '" + domain.id + "' appears twice");
        if (domain.codes.empty())
            report.add("empty-domain", "domain '" + domain.id + "' holds no codes");

        std::set<std::string> local;
        for (const auto& code : domain.codes) {
            if (!local.insert(code.id).second)
                report.add("duplicate-code-id", "code id '" + code.id +
                                                    "' appears twice in domain '" + domain.id +
                                                    "'");
            const auto [it, inserted] = code_owner.emplace(code.id, domain.id);
            if (!inserted && it->second != domain.id)
                report.add("shared-code", "code '" + code.id + "' belongs to both domain '" +
                                              it->second + "' and domain '" + domain.id + "'");
        }
    }
    return report;
}

ValidationReport validate_coding(const CodingProject& project) {
    ValidationReport report;

    std::set<std::string> coder_ids, document_ids, quotation_ids;
    for (const auto& coder : project.coders)
        if (!coder_ids.insert(coder.id).second)
            report.add("duplicate-coder-id", "coder id '" + coder.id + "' appears twice");
    for (const auto& document : project.documents) {
        if (!document_ids.insert(document.id).second)
            report.add("duplicate-document-id", "document id '" + document.id + "' appears twice");
        if (document.length < 0)
            report.add("negative-length", "document '" + document.id + "' has negative length");
    }

    for (const auto& quotation : project.quotations) {
        if (!quotation_ids.insert(quotation.id).second)
            report.add("duplicate-quotation-id",
                       "quotation id '" + quotation.id + "' appears twice");
        const Document* document = project.find_document(quotation.document_id);
        if (!document) {
            report.add("dangling-reference", "quotation '" + quotation.id +
                                                 "' references unknown document '" +
                                                 quotation.document_id + "'");
            continue;
        }
        if (quotation.span.start < 0 || quotation.span.start >= quotation.span.end ||
            quotation.span.end > document->length)
            report.add("span-out-of-bounds",
                       "quotation '" + quotation.id + "' span [" +
                           std::to_string(quotation.span.start) + ", " +
                           std::to_string(quotation.span.end) + ") does not fit document '" +
                           document->id + "' of length " + std::to_string(document->length));
    }

    // (coder, quotation) -> domains used there; detects the mutual-exclusivity
    // breaks and duplicate applications.
    std::map<std::pair<std::string, std::string>, std::set<std::string>> domains_used;
    std::set<std::tuple<std::string, std::string, std::string>> seen_applications;
    // coder -> document -> judged quotations, for the per-coder overlap rule.
    std::map<std::string, std::map<std::string, std::vector<const Quotation*>>> judged;

    for (const auto& application : project.applications) {
        bool dangling = false;
        if (!coder_ids.contains(application.coder_id)) {
            report.add("dangling-reference", "application references unknown coder '" +
                                                 application.coder_id + "'");
            dangling = true;
        }
        const Quotation* quotation = project.find_quotation(application.quotation_id);
        if (!quotation) {
            report.add("dangling-reference", "application references unknown quotation '" +
                                                 application.quotation_id + "'");
            dangling = true;
        }
        const SemanticDomain* domain = project.codebook.domain_of_code(application.code_id);
        if (!domain) {
            report.add("dangling-reference", "application references unknown code '" +
                                                 application.code_id + "'");
            dangling = true;
        }
        if (dangling) continue;

        if (!seen_applications.insert({application.coder_id, application.quotation_id,
                                       application.code_id}).second) {
            report.add("duplicate-application",
                       "coder '" + application.coder_id + "' applies code '" +
                           application.code_id + "' to quotation '" + application.quotation_id +
                           "' more than once");
            continue;
        }

        auto& used = domains_used[{application.coder_id, application.quotation_id}];
        if (!used.insert(domain->id).second)
            report.add("mutual-exclusivity",
                       "coder '" + application.coder_id + "' applies two codes of domain '" +
                           domain->id + "' to quotation '" + application.quotation_id + "'");

        auto& per_document = judged[application.coder_id][quotation->document_id];
        if (std::find(per_document.begin(), per_document.end(), quotation) == per_document.end())
            per_document.push_back(quotation);
    }

    // A coder's own quotations must be pairwise disjoint; overlapping spans
    // from one segmentation have no defined judgement semantics.
    for (const auto& [coder_id, by_document] : judged)
        for (const auto& [document_id, list] : by_document)
            for (std::size_t a = 0; a < list.size(); ++a)
                for (std::size_t b = a + 1; b < list.size(); ++b)
                    if (list[a]->span.overlaps(list[b]->span))
                        report.add("overlapping-quotations",
                                   "coder '" + coder_id + "' judged overlapping quotations '" +
                                       list[a]->id + "' and '" + list[b]->id +
                                       "' in document '" + document_id + "'");
    return report;
}

namespace {

// All codes coder applied to quotations covering [bound, next) in document.
std::vector<std::string> codes_over_interval(
    const CodingProject& project, const std::string& coder_id,
    const std::vector<const Quotation*>& doc_quotations, const Span& interval) {
    std::vector<std::string> codes;
    for (const Quotation* quotation : doc_quotations) {
        if (!quotation->span.contains(interval)) continue;
        for (const auto& application : project.applications)
            if (application.coder_id == coder_id && application.quotation_id == quotation->id)
                codes.push_back(application.code_id);
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

} // namespace

Segmentation unitize(const CodingProject& project) {
    Segmentation segmentation;
    for (const auto& coder : project.coders) segmentation.coder_ids.push_back(coder.id);

    for (const auto& document : project.documents) {
        SegmentedDocument segmented{document.id, document.length, {}};

        std::vector<const Quotation*> doc_quotations;
        std::vector<std::int64_t> bounds{0, document.length};
        for (const auto& quotation : project.quotations) {
            if (quotation.document_id != document.id) continue;
            doc_quotations.push_back(&quotation);
            bounds.push_back(quotation.span.start);
            bounds.push_back(quotation.span.end);
        }
        std::sort(bounds.begin(), bounds.end());
        bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

        for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
            const Span interval{bounds[b], bounds[b + 1]};
            if (interval.empty()) continue;
            Segment segment{interval, {}};
            segment.codes_per_coder.reserve(project.coders.size());
            for (const auto& coder : project.coders)
                segment.codes_per_coder.push_back(
                    codes_over_interval(project, coder.id, doc_quotations, interval));

            if (!segmented.segments.empty() &&
                segmented.segments.back().codes_per_coder == segment.codes_per_coder &&
                segmented.segments.back().span.end == segment.span.start) {
                segmented.segments.back().span.end = segment.span.end; // maximal intervals
            } else {
                segmented.segments.push_back(std::move(segment));
            }
        }
        segmentation.documents.push_back(std::move(segmented));
    }
    return segmentation;
}

CodingProject segmentation_to_project(const Segmentation& segmentation, const Codebook& codebook) {
    CodingProject project;
    project.codebook = codebook;
    for (const auto& coder_id : segmentation.coder_ids)
        project.coders.push_back({coder_id, coder_id});

    for (const auto& document : segmentation.documents) {
        project.documents.push_back({document.document_id, document.length});
        for (const auto& segment : document.segments) {
            if (!segment.coded()) continue;
            const std::string quotation_id = document.document_id + ":" +
                                             std::to_string(segment.span.start) + "-" +
                                             std::to_string(segment.span.end);
            project.quotations.push_back({quotation_id, document.document_id, segment.span});
            for (std::size_t c = 0; c < segmentation.coder_ids.size(); ++c)
                for (const auto& code_id : segment.codes_per_coder[c])
                    project.applications.push_back(
                        {segmentation.coder_ids[c], quotation_id, code_id});
        }
    }
    return project;
}

} // namespace ica
