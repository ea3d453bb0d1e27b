#pragma once
// Two-layer codebook (semantic domains holding mutually exclusive codes),
// span-based coding data, structural validation, and the reduction of a
// coded corpus to weighted items ("unitize").

#include <cstdint>
#include <string>
#include <vector>

#include "ica/span.hpp"
#include "ica/validation.hpp"

namespace ica {

struct Code {
    std::string id;
    std::string name;
};

// A group of mutually exclusive codes sharing one meaning space. A coder may
// apply at most one of its codes to any given quotation.
struct SemanticDomain {
    std::string id;
    std::string name;
    std::vector<Code> codes;
};

struct Codebook {
    std::vector<SemanticDomain> domains;
    std::string version;
    std::string description;

    const SemanticDomain* find_domain(const std::string& domain_id) const;
    // Domain owning the code, or nullptr for unknown codes. Assumes the
    // codebook passed validate_codebook (no shared codes across domains).
    const SemanticDomain* domain_of_code(const std::string& code_id) const;
    const Code* find_code(const std::string& code_id) const;
};

struct Coder {
    std::string id;
    std::string display_name;
};

// Carrier of a continuum of matter; length counts atomic units.
struct Document {
    std::string id;
    std::int64_t length = 0;
};

struct Quotation {
    std::string id;
    std::string document_id;
    Span span; // half-open, within [0, document.length]
};

struct CodeApplication {
    std::string coder_id;
    std::string quotation_id;
    std::string code_id;
};

struct CodingProject {
    Codebook codebook;
    std::vector<Coder> coders;
    std::vector<Document> documents;
    std::vector<Quotation> quotations;
    std::vector<CodeApplication> applications;

    const Coder* find_coder(const std::string& coder_id) const;
    const Document* find_document(const std::string& document_id) const;
    const Quotation* find_quotation(const std::string& quotation_id) const;
};

// Uniqueness of domain ids, uniqueness of code ids within a domain, no code
// shared between domains, at least one code per domain.
ValidationReport validate_codebook(const Codebook& codebook);

// Assumes a valid codebook. Flags dangling coder/quotation/code references,
// spans outside their document, duplicate ids, two codes of one domain on one
// (coder, quotation), duplicate applications, and overlaps between quotations
// judged by the same coder. Quotations shared by different coders may overlap
// freely; a single coder's own quotations may not.
ValidationReport validate_coding(const CodingProject& project);

// One maximal interval over which every coder's code assignment is constant.
struct Segment {
    Span span;
    // Indexed like Segmentation::coder_ids; each entry sorted and unique.
    std::vector<std::vector<std::string>> codes_per_coder;

    bool coded() const {
        for (const auto& codes : codes_per_coder)
            if (!codes.empty()) return true;
        return false;
    }
};

struct SegmentedDocument {
    std::string document_id;
    std::int64_t length = 0;
    std::vector<Segment> segments; // in span order, covering [0, length) exactly
};

struct Segmentation {
    std::vector<std::string> coder_ids; // project coder order
    std::vector<SegmentedDocument> documents;
};

// Sweeps quotation boundaries per document and merges adjacent intervals with
// identical assignments. Every document is covered exactly once, so segment
// lengths sum to the document length; re-unitizing the output is a no-op.
// Requires a project that passed validate_coding.
Segmentation unitize(const CodingProject& project);

// Rebuilds a shared-quotation project from a segmentation: every coded
// segment becomes a pre-defined quotation carrying its applications.
CodingProject segmentation_to_project(const Segmentation& segmentation, const Codebook& codebook);

} // namespace ica
